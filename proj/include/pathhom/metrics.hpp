#pragma once

#include "pathhom/digraph.hpp"
#include "pathhom/homology.hpp"

#include <string>
#include <vector>

namespace pathhom {

/// Cyclomatic complexity: |arcs| - |vertices| + number of weak components.
/// Antiparallel arcs count as two (the multigraph reading).
long cyclomatic(const Digraph& d);

struct MetricReport {
    long cyclomatic_number = 0;
    BettiProfile betti;
    long divergence = 0;  // cyclomatic - reduced beta_1
    std::string graph_id;
};

MetricReport compare(const Digraph& d, int p_max, const std::string& graph_id = "",
                     std::size_t cap = kDefaultPathCap);

struct HistogramRow {
    long nu = 0;
    long beta1 = 0;
    long count = 0;
};

/// Counts of (nu, reduced beta_1) pairs, sorted by (nu, beta1).
std::vector<HistogramRow> corpus_histogram(const std::vector<MetricReport>& reports);

/// CSV rows "nu,beta1,count" with a header line.
std::string histogram_csv(const std::vector<HistogramRow>& rows);

}  // namespace pathhom
