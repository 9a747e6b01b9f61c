#pragma once

#include "pathhom/digraph.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace pathhom {

/// Digraph with a unique source/target and unique entry/exit arcs such
/// that identifying source with target gives a strongly connected digraph.
struct FlowGraph {
    Digraph graph;
    int source = -1;
    int target = -1;
    std::pair<int, int> entry_arc;
    std::pair<int, int> exit_arc;
};

/// Either a FlowGraph or the full list of violated clauses. Rejection is
/// a value, not a fault.
struct FlowGraphValidation {
    std::optional<FlowGraph> value;
    std::vector<std::string> violations;
    bool ok() const { return value.has_value(); }
};

/// Throws std::invalid_argument on an empty digraph.
FlowGraphValidation validate_flow_graph(const Digraph& d);

/// Series composition: the exit arc of f1 and the entry arc of f2 become
/// one arc by identifying their endpoints. Colliding labels from f2 are
/// renamed with a "g2." prefix.
FlowGraph series_compose(const FlowGraph& f1, const FlowGraph& f2);

}  // namespace pathhom
