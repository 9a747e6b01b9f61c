#include "pathhom/flow_graph.hpp"

#include <stdexcept>

namespace pathhom {

FlowGraphValidation validate_flow_graph(const Digraph& d) {
    if (d.empty()) throw std::invalid_argument("validate_flow_graph: empty digraph");
    FlowGraphValidation result;

    std::vector<int> sources, targets;
    for (int v = 0; v < d.num_vertices(); ++v) {
        if (d.in_degree(v) == 0) sources.push_back(v);
        if (d.out_degree(v) == 0) targets.push_back(v);
    }
    if (sources.empty()) {
        result.violations.push_back("no vertex with indegree 0 (no source)");
    } else if (sources.size() > 1) {
        std::string names;
        for (int v : sources) names += (names.empty() ? "" : ", ") + d.label(v);
        result.violations.push_back("multiple sources: " + names);
    }
    if (targets.empty()) {
        result.violations.push_back("no vertex with outdegree 0 (no target)");
    } else if (targets.size() > 1) {
        std::string names;
        for (int v : targets) names += (names.empty() ? "" : ", ") + d.label(v);
        result.violations.push_back("multiple targets: " + names);
    }

    int source = sources.size() == 1 ? sources[0] : -1;
    int target = targets.size() == 1 ? targets[0] : -1;
    if (source >= 0 && d.out_degree(source) != 1) {
        result.violations.push_back("source '" + d.label(source) + "' has outdegree " +
                                    std::to_string(d.out_degree(source)) + ", need exactly 1");
    }
    if (target >= 0 && d.in_degree(target) != 1) {
        result.violations.push_back("target '" + d.label(target) + "' has indegree " +
                                    std::to_string(d.in_degree(target)) + ", need exactly 1");
    }

    if (source >= 0 && target >= 0) {
        // Identify target with source, then test strong connectivity.
        Digraph merged;
        for (const auto& l : d.labels()) merged.add_vertex(l);
        for (const auto& [u, v] : d.arcs()) {
            int uu = (u == target) ? source : u;
            int vv = (v == target) ? source : v;
            if (uu != vv) merged.add_arc(uu, vv);
        }
        // Drop the now-absorbed target vertex by checking connectivity over
        // a rebuilt graph without it (a lone extra vertex would fail SC).
        if (d.num_vertices() > 1) {
            Digraph shrunk;
            for (int v = 0; v < d.num_vertices(); ++v)
                if (v != target) shrunk.add_vertex(d.label(v));
            for (const auto& [u, v] : merged.arcs()) {
                if (u == target || v == target) continue;
                shrunk.add_arc(shrunk.index_of(d.label(u)), shrunk.index_of(d.label(v)));
            }
            if (!strongly_connected(shrunk)) {
                result.violations.push_back(
                    "identifying source with target does not give a strongly connected digraph");
            }
        }
    }

    if (!result.violations.empty()) return result;

    FlowGraph fg;
    fg.graph = d;
    fg.source = source;
    fg.target = target;
    fg.entry_arc = {source, d.out_neighbors(source)[0]};
    fg.exit_arc = {d.in_neighbors(target)[0], target};
    result.value = fg;
    return result;
}

FlowGraph series_compose(const FlowGraph& f1, const FlowGraph& f2) {
    const auto [z1, t1] = f1.exit_arc;
    const auto [s2, a2] = f2.entry_arc;

    Digraph glued = f1.graph;
    // Map f2 vertex indices into the glued graph.
    std::vector<int> map2(static_cast<size_t>(f2.graph.num_vertices()), -1);
    map2[static_cast<size_t>(s2)] = z1;
    map2[static_cast<size_t>(a2)] = t1;
    for (int v = 0; v < f2.graph.num_vertices(); ++v) {
        if (map2[static_cast<size_t>(v)] != -1) continue;
        std::string name = f2.graph.label(v);
        while (glued.has_vertex(name)) name = "g2." + name;
        map2[static_cast<size_t>(v)] = glued.add_vertex(name);
    }
    for (const auto& [u, v] : f2.graph.arcs()) {
        glued.add_arc(map2[static_cast<size_t>(u)], map2[static_cast<size_t>(v)]);
    }

    auto validated = validate_flow_graph(glued);
    if (!validated.ok()) {
        std::string why;
        for (const auto& v : validated.violations) why += "; " + v;
        throw std::logic_error("series_compose produced an invalid flow graph" + why);
    }
    return *validated.value;
}

}  // namespace pathhom
