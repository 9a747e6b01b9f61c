#pragma once

#include "pathhom/digraph.hpp"
#include "pathhom/flow_graph.hpp"
#include "pathhom/homology.hpp"

#include <utility>
#include <vector>

namespace pathhom {

/// Canonical-form digraph that becomes strongly connected when an arc is
/// added from the unique outdegree-0 vertex z back to some vertex a.
struct ProgenitorRecord {
    Digraph digraph;  // labels "v1".."vn", z is "vn"
    std::vector<std::pair<int, int>> valid_pairs;  // (a, z)
    BettiProfile betti;
};

/// All isomorphism classes of loopless digraphs on n vertices where every
/// vertex has outdegree exactly 2 (distinct targets) except one vertex of
/// outdegree 0. Canonical form by minimum adjacency encoding; the
/// outdegree-0 vertex is an isomorphism invariant and stays fixed.
/// Guard: 3 <= n <= 7.
std::vector<Digraph> enumerate_outdeg2_family(int n);

/// Members of the family with at least one valid (a, z) pair, with all
/// pairs and the Betti profile (p_max = 3) recorded.
std::vector<ProgenitorRecord> enumerate_2fg_progenitors(int n);

/// Builds a 2-flow graph from a progenitor: fresh source s with arc
/// (s, a); with_target additionally adds fresh t with arc (z, t).
FlowGraph progenitor_to_2fg(const ProgenitorRecord& rec, int pair_index, bool with_target);

/// (n-1)-vertex digraphs obtained from the n-vertex progenitors whose
/// outdegree-0 vertex has a single in-arc, by deleting that vertex and
/// arc. Deduplicated up to isomorphism, in canonical form.
std::vector<Digraph> enumerate_progenitor_cores(int n);

}  // namespace pathhom
