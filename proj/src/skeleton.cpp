#include "pathhom/skeleton.hpp"

#include "pathhom/rng.hpp"

#include <sstream>
#include <stdexcept>

namespace pathhom {

namespace {

bool is_predicate(LineKind k) {
    return k == LineKind::If || k == LineKind::DoWhile || k == LineKind::Until ||
           k == LineKind::Goto;
}

int count_predicates(const std::vector<SkeletonLine>& lines) {
    int n = 0;
    for (const auto& l : lines) n += is_predicate(l.kind) ? 1 : 0;
    return n;
}

}  // namespace

Digraph skeleton_to_cfg(const std::vector<SkeletonLine>& lines) {
    int n = static_cast<int>(lines.size());
    // Match construct delimiters.
    std::vector<int> match(static_cast<size_t>(n), -1);
    std::vector<int> stack;
    for (int i = 0; i < n; ++i) {
        LineKind k = lines[static_cast<size_t>(i)].kind;
        if (k == LineKind::If || k == LineKind::DoWhile || k == LineKind::Repeat) {
            stack.push_back(i);
        } else if (k == LineKind::Endif || k == LineKind::Enddo || k == LineKind::Until) {
            LineKind opener = k == LineKind::Endif   ? LineKind::If
                              : k == LineKind::Enddo ? LineKind::DoWhile
                                                     : LineKind::Repeat;
            if (stack.empty() || lines[static_cast<size_t>(stack.back())].kind != opener) {
                throw std::invalid_argument("unmatched delimiter at line " + std::to_string(i + 1));
            }
            match[static_cast<size_t>(stack.back())] = i;
            match[static_cast<size_t>(i)] = stack.back();
            stack.pop_back();
        }
    }
    if (!stack.empty()) {
        throw std::invalid_argument("unclosed construct at line " + std::to_string(stack[0] + 1));
    }

    Digraph cfg;
    for (int i = 0; i < n; ++i) cfg.add_vertex("L" + std::to_string(i + 1));
    auto fallthrough = [&](int i) {
        if (i + 1 < n) cfg.add_arc(i, i + 1);
    };
    for (int i = 0; i < n; ++i) {
        const auto& line = lines[static_cast<size_t>(i)];
        switch (line.kind) {
            case LineKind::Stmt:
            case LineKind::Endif:
            case LineKind::Repeat:
                fallthrough(i);
                break;
            case LineKind::If:
                // Branching to the endif itself would create a filled
                // triangle whenever the body is a single line, collapsing
                // the cycle in homology; the false branch jumps past it.
                fallthrough(i);
                if (match[static_cast<size_t>(i)] + 1 < n) {
                    cfg.add_arc(i, match[static_cast<size_t>(i)] + 1);
                }
                break;
            case LineKind::DoWhile:
                fallthrough(i);
                if (match[static_cast<size_t>(i)] + 1 < n) {
                    cfg.add_arc(i, match[static_cast<size_t>(i)] + 1);
                }
                break;
            case LineKind::Enddo:
                cfg.add_arc(i, match[static_cast<size_t>(i)]);
                break;
            case LineKind::Until:
                cfg.add_arc(i, match[static_cast<size_t>(i)]);
                fallthrough(i);
                break;
            case LineKind::Goto:
                if (line.goto_target < 0 || line.goto_target >= n) {
                    throw std::invalid_argument("goto target out of range at line " +
                                                std::to_string(i + 1));
                }
                if (line.goto_target == i) {
                    throw std::invalid_argument("goto to self at line " + std::to_string(i + 1));
                }
                cfg.add_arc(i, line.goto_target);
                fallthrough(i);
                break;
            case LineKind::Exit:
                break;
        }
    }
    return cfg;
}

Skeleton gen_structured_skeleton(std::uint64_t seed, int n_productions) {
    if (n_productions < 1) throw std::invalid_argument("need at least one production");
    Rng rng(seed);

    // Symbol sequence: terminal lines plus nonterminal markers.
    struct Symbol {
        bool nonterminal;
        SkeletonLine line;
    };
    std::vector<Symbol> symbols{{true, {}}};
    for (int step = 0; step < n_productions; ++step) {
        std::vector<int> nts;
        for (int i = 0; i < static_cast<int>(symbols.size()); ++i) {
            if (symbols[static_cast<size_t>(i)].nonterminal) nts.push_back(i);
        }
        int at = nts[static_cast<size_t>(rng.next_below(nts.size()))];
        std::uint64_t production = rng.next_below(4);
        std::vector<Symbol> expansion;
        switch (production) {
            case 0:  // sequence
                expansion = {{true, {}}, {true, {}}};
                break;
            case 1:
                expansion = {{false, {LineKind::If}}, {true, {}}, {false, {LineKind::Endif}}};
                break;
            case 2:
                expansion = {{false, {LineKind::DoWhile}}, {true, {}}, {false, {LineKind::Enddo}}};
                break;
            default:
                expansion = {{false, {LineKind::Repeat}}, {true, {}}, {false, {LineKind::Until}}};
                break;
        }
        symbols.erase(symbols.begin() + at);
        symbols.insert(symbols.begin() + at, expansion.begin(), expansion.end());
    }

    Skeleton sk;
    sk.seed = seed;
    for (const auto& s : symbols) {
        sk.lines.push_back(s.nonterminal ? SkeletonLine{LineKind::Stmt} : s.line);
    }
    sk.lines.push_back({LineKind::Exit});
    sk.predicate_count = count_predicates(sk.lines);
    sk.cfg = skeleton_to_cfg(sk.lines);
    return sk;
}

Skeleton gen_goto_skeleton(std::uint64_t seed, int n_gotos, int n_lines) {
    if (n_gotos < 0 || n_lines < n_gotos + 1) {
        throw std::invalid_argument("need n_lines >= n_gotos + 1");
    }
    if (n_gotos > 0 && n_lines < 3) {
        throw std::invalid_argument("goto targets need at least 3 lines");
    }
    Rng rng(seed);
    Skeleton sk;
    sk.seed = seed;
    for (int i = 0; i < n_lines; ++i) {
        if (i < n_gotos) {
            // Uniform over {0..n_lines-1} minus self and fallthrough.
            std::uint64_t r = rng.next_below(static_cast<std::uint64_t>(n_lines) - 2);
            int target = static_cast<int>(r);
            if (target >= i) target += 2;
            sk.lines.push_back({LineKind::Goto, target});
        } else if (i + 1 == n_lines) {
            sk.lines.push_back({LineKind::Exit});
        } else {
            sk.lines.push_back({LineKind::Stmt});
        }
    }
    sk.predicate_count = count_predicates(sk.lines);
    sk.cfg = skeleton_to_cfg(sk.lines);
    return sk;
}

std::string skeleton_to_text(const std::vector<SkeletonLine>& lines) {
    std::ostringstream os;
    for (const auto& l : lines) {
        switch (l.kind) {
            case LineKind::Stmt: os << "stmt"; break;
            case LineKind::If: os << "if b"; break;
            case LineKind::Endif: os << "endif"; break;
            case LineKind::DoWhile: os << "do while b"; break;
            case LineKind::Enddo: os << "enddo"; break;
            case LineKind::Repeat: os << "repeat"; break;
            case LineKind::Until: os << "until b"; break;
            case LineKind::Goto: os << "goto " << (l.goto_target + 1) << " if b"; break;
            case LineKind::Exit: os << "exit"; break;
        }
        os << '\n';
    }
    return os.str();
}

}  // namespace pathhom
