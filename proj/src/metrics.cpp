#include "pathhom/metrics.hpp"

#include <map>
#include <sstream>
#include <stdexcept>

namespace pathhom {

long cyclomatic(const Digraph& d) {
    if (d.empty()) throw std::invalid_argument("cyclomatic: empty digraph");
    long c = static_cast<long>(weak_components(d).size());
    return d.num_arcs() - d.num_vertices() + c;
}

MetricReport compare(const Digraph& d, int p_max, const std::string& graph_id, std::size_t cap) {
    MetricReport report;
    report.graph_id = graph_id;
    report.cyclomatic_number = cyclomatic(d);
    report.betti = betti(d, p_max, cap);
    report.divergence = report.cyclomatic_number - report.betti.reduced[1];
    return report;
}

std::vector<HistogramRow> corpus_histogram(const std::vector<MetricReport>& reports) {
    std::map<std::pair<long, long>, long> counts;
    for (const auto& r : reports) {
        ++counts[{r.cyclomatic_number, r.betti.reduced.size() > 1 ? r.betti.reduced[1] : 0}];
    }
    std::vector<HistogramRow> rows;
    rows.reserve(counts.size());
    for (const auto& [key, count] : counts) rows.push_back({key.first, key.second, count});
    return rows;
}

std::string histogram_csv(const std::vector<HistogramRow>& rows) {
    std::ostringstream os;
    os << "nu,beta1,count\n";
    for (const auto& r : rows) os << r.nu << ',' << r.beta1 << ',' << r.count << '\n';
    return os.str();
}

}  // namespace pathhom
