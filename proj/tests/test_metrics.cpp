#include "pathhom/digraph.hpp"
#include "pathhom/metrics.hpp"
#include "pathhom/skeleton.hpp"

#include <doctest.h>

using namespace pathhom;

TEST_CASE("cyclomatic number") {
    CHECK(cyclomatic(two_cycle()) == 1);
    CHECK(cyclomatic(nontrivial_flow_example()) == 4);

    Digraph point;
    point.add_vertex("a");
    CHECK(cyclomatic(point) == 0);

    // Two components each contribute independently.
    CHECK(cyclomatic(parse_edge_list("a b\nb a\nc d")) == 1);

    CHECK_THROWS_AS(cyclomatic(Digraph{}), std::invalid_argument);
}

TEST_CASE("cyclomatic is invariant under arc reversal") {
    auto d = nontrivial_flow_example();
    Digraph rev;
    for (int v = 0; v < d.num_vertices(); ++v) rev.add_vertex(d.label(v));
    for (auto [u, v] : d.arcs()) rev.add_arc(v, u);
    CHECK(cyclomatic(rev) == cyclomatic(d));
}

TEST_CASE("compare") {
    auto diamond = compare(k_partite_tower({1, 2, 1}), 2, "diamond");
    CHECK(diamond.cyclomatic_number == 1);
    CHECK(diamond.betti.reduced[1] == 0);
    CHECK(diamond.divergence == 1);
    CHECK(diamond.graph_id == "diamond");

    auto cyc = compare(two_cycle(), 2);
    CHECK(cyc.cyclomatic_number == 1);
    CHECK(cyc.betti.reduced[1] == 1);
    CHECK(cyc.divergence == 0);

    auto fig3 = compare(nontrivial_flow_example(), 2);
    CHECK(fig3.cyclomatic_number == 4);
    CHECK(fig3.divergence == 4 - fig3.betti.reduced[1]);
}

TEST_CASE("structured skeletons have zero divergence") {
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        auto sk = gen_structured_skeleton(seed, 12);
        auto report = compare(sk.cfg, 2);
        CHECK(report.cyclomatic_number == sk.predicate_count);
        CHECK(report.divergence == 0);
    }
}

TEST_CASE("corpus histogram") {
    std::vector<MetricReport> reports;
    reports.push_back(compare(two_cycle(), 2));               // (1, 1)
    reports.push_back(compare(two_cycle(), 2));               // (1, 1)
    reports.push_back(compare(k_partite_tower({1, 2, 1}), 2));  // (1, 0)
    reports.push_back(compare(nontrivial_flow_example(), 2)); // (4, 1)

    auto rows = corpus_histogram(reports);
    REQUIRE(rows.size() == 3);
    CHECK(rows[0].nu == 1);
    CHECK(rows[0].beta1 == 0);
    CHECK(rows[0].count == 1);
    CHECK(rows[1].nu == 1);
    CHECK(rows[1].beta1 == 1);
    CHECK(rows[1].count == 2);
    CHECK(rows[2].nu == 4);
    CHECK(rows[2].beta1 == 1);
    CHECK(rows[2].count == 1);

    CHECK(histogram_csv(rows) == "nu,beta1,count\n1,0,1\n1,1,2\n4,1,1\n");
    CHECK(histogram_csv({}) == "nu,beta1,count\n");
}
