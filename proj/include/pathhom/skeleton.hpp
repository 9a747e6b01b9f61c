#pragma once

#include "pathhom/digraph.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace pathhom {

enum class LineKind { Stmt, If, Endif, DoWhile, Enddo, Repeat, Until, Goto, Exit };

struct SkeletonLine {
    LineKind kind = LineKind::Stmt;
    int goto_target = -1;  // 0-based line index, Goto only
};

/// A generated program skeleton and its control flow graph: one vertex
/// per line, the final line is the unique exit.
struct Skeleton {
    std::vector<SkeletonLine> lines;
    int predicate_count = 0;  // lines of kind if/dowhile/until/goto
    std::uint64_t seed = 0;
    Digraph cfg;
};

/// Builds the CFG for a line list. Arc conventions: sequence falls
/// through; `if` branches to its body and past its endif; `do while`
/// branches to its body and past its enddo, enddo jumps back; `until`
/// jumps back to its repeat or falls through; `goto` jumps or falls
/// through; exit lines have no out-arcs. Vertices are labeled "L1".."Ln".
Digraph skeleton_to_cfg(const std::vector<SkeletonLine>& lines);

/// n_productions uniformly random grammar productions (sequence, if,
/// do-while, repeat-until) at uniformly random nonterminals, starting
/// from a single nonterminal. Residual nonterminals become one plain
/// statement line; a final exit line is appended.
Skeleton gen_structured_skeleton(std::uint64_t seed, int n_productions);

/// First n_gotos lines are conditional gotos with uniformly random jump
/// targets (excluding self and the fallthrough successor), the last line
/// is the exit, the rest are plain statements.
Skeleton gen_goto_skeleton(std::uint64_t seed, int n_gotos, int n_lines);

/// One statement per line: `stmt`, `if b`, `endif`, `do while b`,
/// `enddo`, `repeat`, `until b`, `goto <k> if b` (1-based k), `exit`.
std::string skeleton_to_text(const std::vector<SkeletonLine>& lines);

}  // namespace pathhom
