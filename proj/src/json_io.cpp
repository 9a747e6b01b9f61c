#include "pathhom/json_io.hpp"

#include <boost/multiprecision/cpp_int.hpp>

namespace pathhom {

std::string coeff_string(const Rational& q) {
    return boost::multiprecision::numerator(q).str() + "/" +
           boost::multiprecision::denominator(q).str();
}

nlohmann::json homology_result_json(const Digraph& d, const BettiProfile& profile,
                                    const GeneratorSet* gens) {
    nlohmann::json out;
    out["vertices"] = d.num_vertices();
    out["arcs"] = d.num_arcs();
    out["betti"] = profile.values;
    out["reduced_betti"] = profile.reduced;
    out["p_max"] = profile.p_max;
    out["complete"] = profile.complete;
    if (gens != nullptr) {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& cycle : gens->cycles) {
            nlohmann::json terms = nlohmann::json::array();
            for (const auto& [j, coef] : cycle) {
                const Path& arc = gens->arcs[static_cast<size_t>(j)];
                terms.push_back(nlohmann::json::array(
                    {nlohmann::json::array({d.label(arc[0]), d.label(arc[1])}),
                     coeff_string(coef)}));
            }
            arr.push_back(terms);
        }
        out["h1_generators"] = arr;
    }
    return out;
}

nlohmann::json metric_report_json(const Digraph& d, const MetricReport& report,
                                  const GeneratorSet* gens) {
    nlohmann::json out = homology_result_json(d, report.betti, gens);
    out["cyclomatic"] = report.cyclomatic_number;
    out["divergence"] = report.divergence;
    out["graph_id"] = report.graph_id;
    return out;
}

nlohmann::json skeleton_manifest_row(const Skeleton& sk, const MetricReport& report) {
    nlohmann::json out;
    out["seed"] = sk.seed;
    out["predicate_count"] = sk.predicate_count;
    out["lines"] = sk.lines.size();
    out["betti"] = report.betti.reduced;
    out["cyclomatic"] = report.cyclomatic_number;
    return out;
}

}  // namespace pathhom
