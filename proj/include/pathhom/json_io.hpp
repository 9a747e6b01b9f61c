#pragma once

#include "pathhom/homology.hpp"
#include "pathhom/metrics.hpp"
#include "pathhom/skeleton.hpp"

#include <json.hpp>

namespace pathhom {

/// Rational coefficients serialize as explicit "num/den" strings.
std::string coeff_string(const Rational& q);

/// {"vertices", "arcs", "betti", "reduced_betti", "p_max", "complete",
///  "h1_generators"}; pass nullptr to omit generators.
nlohmann::json homology_result_json(const Digraph& d, const BettiProfile& profile,
                                    const GeneratorSet* gens);

/// Homology schema plus "cyclomatic", "divergence" and "graph_id".
nlohmann::json metric_report_json(const Digraph& d, const MetricReport& report,
                                  const GeneratorSet* gens);

/// One JSON-lines manifest row for a generated skeleton.
nlohmann::json skeleton_manifest_row(const Skeleton& sk, const MetricReport& report);

}  // namespace pathhom
