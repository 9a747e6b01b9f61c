#include "pathhom/metrics.hpp"
#include "pathhom/skeleton.hpp"

#include <doctest.h>

#include <set>

using namespace pathhom;

namespace {

std::vector<SkeletonLine> lines_of(std::initializer_list<LineKind> kinds) {
    std::vector<SkeletonLine> out;
    for (auto k : kinds) out.push_back({k, -1});
    return out;
}

}  // namespace

TEST_CASE("skeleton_to_cfg straight line") {
    auto cfg = skeleton_to_cfg(lines_of({LineKind::Stmt, LineKind::Stmt, LineKind::Exit}));
    CHECK(cfg.num_vertices() == 3);
    CHECK(cfg.num_arcs() == 2);
    CHECK(cfg.label(0) == "L1");
    CHECK(cyclomatic(cfg) == 0);
}

TEST_CASE("skeleton_to_cfg if block") {
    auto cfg = skeleton_to_cfg(
        lines_of({LineKind::If, LineKind::Stmt, LineKind::Endif, LineKind::Exit}));
    CHECK(cfg.num_vertices() == 4);
    CHECK(cfg.num_arcs() == 4);
    // L1 branches to its body and past the matching endif.
    CHECK(cfg.has_arc(0, 1));
    CHECK(cfg.has_arc(0, 3));
    CHECK(cfg.has_arc(1, 2));
    CHECK(cfg.has_arc(2, 3));
    CHECK(cyclomatic(cfg) == 1);
    // The if-cycle survives in homology; a branch to the endif itself
    // would fill it in.
    CHECK(betti(cfg, 2).reduced == std::vector<long>{0, 1, 0});
}

TEST_CASE("skeleton_to_cfg repeat block") {
    auto cfg = skeleton_to_cfg(
        lines_of({LineKind::Repeat, LineKind::Stmt, LineKind::Until, LineKind::Exit}));
    CHECK(cfg.num_vertices() == 4);
    CHECK(cfg.num_arcs() == 4);
    CHECK(cfg.has_arc(2, 0));  // until jumps back to repeat
    CHECK(cfg.has_arc(2, 3));
    CHECK(cyclomatic(cfg) == 1);
}

TEST_CASE("skeleton_to_cfg do while block") {
    auto cfg = skeleton_to_cfg(
        lines_of({LineKind::DoWhile, LineKind::Stmt, LineKind::Enddo, LineKind::Exit}));
    CHECK(cfg.num_arcs() == 4);
    CHECK(cfg.has_arc(0, 1));  // into the body
    CHECK(cfg.has_arc(0, 3));  // past the enddo
    CHECK(cfg.has_arc(2, 0));  // enddo back to its do while
    CHECK(cyclomatic(cfg) == 1);
}

TEST_CASE("skeleton_to_cfg rejects malformed delimiters") {
    CHECK_THROWS_AS(skeleton_to_cfg(lines_of({LineKind::Endif, LineKind::Exit})),
                    std::invalid_argument);
    CHECK_THROWS_AS(skeleton_to_cfg(lines_of({LineKind::If, LineKind::Stmt})),
                    std::invalid_argument);
    CHECK_THROWS_AS(skeleton_to_cfg(lines_of({LineKind::Repeat, LineKind::Enddo})),
                    std::invalid_argument);

    std::vector<SkeletonLine> self_goto{{LineKind::Goto, 0}, {LineKind::Exit, -1}};
    CHECK_THROWS_AS(skeleton_to_cfg(self_goto), std::invalid_argument);
    std::vector<SkeletonLine> out_of_range{{LineKind::Goto, 9}, {LineKind::Exit, -1}};
    CHECK_THROWS_AS(skeleton_to_cfg(out_of_range), std::invalid_argument);
}

TEST_CASE("gen_structured_skeleton") {
    auto sk = gen_structured_skeleton(7, 20);
    CHECK(sk.lines.back().kind == LineKind::Exit);
    CHECK(sk.predicate_count <= 20);
    CHECK(sk.seed == 7);

    // The arc identity |A| = |V| - 1 + predicates makes nu = predicates.
    for (std::uint64_t seed = 100; seed < 120; ++seed) {
        auto s = gen_structured_skeleton(seed, 15);
        CHECK(s.cfg.num_arcs() == s.cfg.num_vertices() - 1 + s.predicate_count);
        CHECK(cyclomatic(s.cfg) == s.predicate_count);
    }

    // Same seed, byte-identical output.
    auto a = gen_structured_skeleton(42, 20);
    auto b = gen_structured_skeleton(42, 20);
    CHECK(skeleton_to_text(a.lines) == skeleton_to_text(b.lines));
    CHECK(a.cfg.to_edge_list() == b.cfg.to_edge_list());

    // Different seeds disagree somewhere in a small sample.
    std::set<std::string> texts;
    for (std::uint64_t seed = 0; seed < 10; ++seed)
        texts.insert(skeleton_to_text(gen_structured_skeleton(seed, 20).lines));
    CHECK(texts.size() > 1);
}

TEST_CASE("gen_goto_skeleton") {
    auto sk = gen_goto_skeleton(3, 16, 17);
    CHECK(sk.lines.size() == 17);
    CHECK(sk.predicate_count == 16);
    for (int i = 0; i < 16; ++i) {
        CHECK(sk.lines[static_cast<size_t>(i)].kind == LineKind::Goto);
        int t = sk.lines[static_cast<size_t>(i)].goto_target;
        CHECK(t >= 0);
        CHECK(t < 17);
        CHECK(t != i);
        CHECK(t != i + 1);
    }
    CHECK(sk.lines.back().kind == LineKind::Exit);
    CHECK(sk.cfg.num_vertices() == 17);
    CHECK(sk.cfg.num_arcs() == 32);
    CHECK(cyclomatic(sk.cfg) == 16);

    auto chain = gen_goto_skeleton(1, 0, 2);
    CHECK(chain.cfg.num_arcs() == 1);
    CHECK(cyclomatic(chain.cfg) == 0);

    auto a = gen_goto_skeleton(5, 16, 17);
    auto b = gen_goto_skeleton(5, 16, 17);
    CHECK(skeleton_to_text(a.lines) == skeleton_to_text(b.lines));

    CHECK_THROWS_AS(gen_goto_skeleton(0, 2, 2), std::invalid_argument);
    CHECK_THROWS_AS(gen_goto_skeleton(0, 1, 2), std::invalid_argument);
}

TEST_CASE("skeleton_to_text") {
    std::vector<SkeletonLine> lines{{LineKind::If, -1},   {LineKind::Stmt, -1},
                                    {LineKind::Endif, -1}, {LineKind::Goto, 0},
                                    {LineKind::Exit, -1}};
    CHECK(skeleton_to_text(lines) == "if b\nstmt\nendif\ngoto 1 if b\nexit\n");

    std::vector<SkeletonLine> loop{{LineKind::Repeat, -1}, {LineKind::DoWhile, -1},
                                   {LineKind::Stmt, -1},   {LineKind::Enddo, -1},
                                   {LineKind::Until, -1},  {LineKind::Exit, -1}};
    CHECK(skeleton_to_text(loop) ==
          "repeat\ndo while b\nstmt\nenddo\nuntil b\nexit\n");
}
