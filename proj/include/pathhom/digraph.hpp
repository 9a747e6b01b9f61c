#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace pathhom {

class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class SelfLoopError : public std::runtime_error {
public:
    explicit SelfLoopError(const std::string& vertex)
        : std::runtime_error("self-loop on vertex '" + vertex + "'"), vertex_(vertex) {}
    const std::string& vertex() const { return vertex_; }

private:
    std::string vertex_;
};

/// Loopless simple digraph. Vertex identity is a string label; indices
/// follow first-mention order and every downstream matrix is indexed by
/// that order, so runs are deterministic.
class Digraph {
public:
    Digraph() = default;

    /// Returns the index of `label`, registering it if new.
    int add_vertex(const std::string& label);
    bool has_vertex(const std::string& label) const { return index_.count(label) > 0; }
    int index_of(const std::string& label) const;

    /// Returns false if the arc already exists. Throws SelfLoopError on u == v.
    bool add_arc(int u, int v);
    bool add_arc(const std::string& u, const std::string& v);

    bool has_arc(int u, int v) const;

    int num_vertices() const { return static_cast<int>(labels_.size()); }
    int num_arcs() const { return num_arcs_; }
    bool empty() const { return labels_.empty(); }

    const std::string& label(int v) const { return labels_.at(static_cast<size_t>(v)); }
    const std::vector<std::string>& labels() const { return labels_; }

    /// Sorted ascending by vertex index.
    const std::vector<int>& out_neighbors(int u) const { return out_.at(static_cast<size_t>(u)); }
    const std::vector<int>& in_neighbors(int u) const { return in_.at(static_cast<size_t>(u)); }
    int out_degree(int u) const { return static_cast<int>(out_[static_cast<size_t>(u)].size()); }
    int in_degree(int u) const { return static_cast<int>(in_[static_cast<size_t>(u)].size()); }

    /// All arcs sorted lexicographically by (tail, head) index.
    std::vector<std::pair<int, int>> arcs() const;

    /// Edge-list serialization, arcs in insertion order, so a parsed
    /// digraph serializes back to its own (comment-free, deduplicated)
    /// source text.
    std::string to_edge_list() const;

private:
    std::vector<std::string> labels_;
    std::unordered_map<std::string, int> index_;
    std::vector<std::vector<int>> out_;
    std::vector<std::vector<int>> in_;
    std::vector<std::pair<int, int>> arc_order_;
    int num_arcs_ = 0;
};

/// Result of a parse: the loopless digraph plus bookkeeping. In permissive
/// mode self-loop occurrences are recorded (with multiplicity) instead of
/// raising; loop_transform consumes them.
struct ParseResult {
    Digraph graph;
    int duplicate_arcs = 0;
    std::vector<int> self_loops;  // vertex indices, one entry per occurrence
};

/// "u v" per line, '#' comments and blank lines ignored.
ParseResult parse_edge_list_ex(std::string_view text, bool permit_loops);
Digraph parse_edge_list(std::string_view text);

/// Restricted DOT: `digraph name { a -> b; ... }`, attributes ignored.
ParseResult parse_dot_ex(std::string_view text, bool permit_loops);
Digraph parse_dot(std::string_view text);

/// Replaces each recorded self-loop (v, v) by a fresh vertex v' and the
/// 2-cycle v -> v' -> v. Fresh labels are "<v>__loop<k>".
Digraph loop_transform(const ParseResult& parsed);

std::vector<std::vector<int>> weak_components(const Digraph& d);
bool strongly_connected(const Digraph& d);

/// k-fold suspension: each step adds two pole vertices receiving an arc
/// from every existing vertex. Pole labels are "pole<i>_N" / "pole<i>_S".
Digraph suspension(const Digraph& d, int k);

/// Complete multipartite "tower": all arcs from layer l to layer l+1.
/// Vertices are labeled "1".."N" across layers in order.
Digraph k_partite_tower(const std::vector<int>& layer_sizes);

/// The directed 2-cycle on vertices "a", "b".
Digraph two_cycle();

/// The 8-vertex flow graph with reduced Betti numbers (0,1,1,0,...),
/// realizable as an assembly-level control flow graph.
Digraph nontrivial_flow_example();

}  // namespace pathhom
