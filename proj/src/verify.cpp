#include "pathhom/verify.hpp"

#include "pathhom/digraph.hpp"
#include "pathhom/enumerate.hpp"
#include "pathhom/flow_graph.hpp"
#include "pathhom/homology.hpp"
#include "pathhom/metrics.hpp"
#include "pathhom/rng.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace pathhom {

namespace {

std::string profile_str(const std::vector<long>& v) {
    std::ostringstream os;
    os << '(';
    for (size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    os << ')';
    return os.str();
}

ClaimResult check_reduced(const std::string& name, const Digraph& d, int p_max,
                          const std::vector<long>& expected) {
    auto profile = betti(d, p_max);
    bool ok = profile.reduced == expected;
    return {name, ok,
            "reduced " + profile_str(profile.reduced) + " expected " + profile_str(expected)};
}

/// Seeded random loopless digraph on up to max_n vertices, sparse enough
/// for the dense oracle.
Digraph random_digraph(Rng& rng, int max_n) {
    int n = 2 + static_cast<int>(rng.next_below(static_cast<std::uint64_t>(max_n - 1)));
    Digraph d;
    for (int v = 1; v <= n; ++v) d.add_vertex("v" + std::to_string(v));
    for (int u = 0; u < n; ++u) {
        for (int v = 0; v < n; ++v) {
            if (u != v && rng.next_below(4) == 0) d.add_arc(u, v);
        }
    }
    return d;
}

bool profiles_agree(const BettiProfile& a, const BettiProfile& b) {
    return a.values == b.values && a.reduced == b.reduced && a.complete == b.complete;
}

}  // namespace

std::vector<ClaimResult> verify_paper_suite() {
    std::vector<ClaimResult> results;

    results.push_back(check_reduced("suspension k=1 of 2-cycle has reduced betti (0,0,1,0)",
                                    suspension(two_cycle(), 1), 3, {0, 0, 1, 0}));
    results.push_back(check_reduced("suspension k=2 of 2-cycle has reduced betti (0,0,0,1,0)",
                                    suspension(two_cycle(), 2), 4, {0, 0, 0, 1, 0}));

    {
        Digraph fig3 = nontrivial_flow_example();
        auto report = compare(fig3, 3);
        bool ok = report.betti.reduced == std::vector<long>{0, 1, 1, 0} &&
                  report.cyclomatic_number == 4;
        std::ostringstream os;
        os << "reduced " << profile_str(report.betti.reduced) << ", nu "
           << report.cyclomatic_number;
        results.push_back({"8-vertex flow graph: reduced betti (0,1,1,0) and nu = 4", ok,
                           os.str()});
    }

    {
        // Layered towers: reduced betti must be delta_{p,L-1} * prod(n_l - 1).
        bool ok = true;
        std::string detail = "all layer lists with L <= 4, n_l <= 3";
        for (int L = 1; L <= 4 && ok; ++L) {
            std::vector<int> layers(static_cast<size_t>(L), 1);
            for (;;) {
                long prod = 1;
                for (int nl : layers) prod *= nl - 1;
                int p_max = std::max(L - 1, 1);
                auto profile = betti(k_partite_tower(layers), p_max);
                std::vector<long> expected(static_cast<size_t>(p_max) + 1, 0);
                expected[static_cast<size_t>(L - 1)] = prod;
                if (profile.reduced != expected || !profile.complete) {
                    ok = false;
                    detail = "mismatch at layers " + profile_str({layers.begin(), layers.end()});
                    break;
                }
                int i = L - 1;
                while (i >= 0 && layers[static_cast<size_t>(i)] == 3) {
                    layers[static_cast<size_t>(i)] = 1;
                    --i;
                }
                if (i < 0) break;
                ++layers[static_cast<size_t>(i)];
            }
        }
        results.push_back({"tower reduced betti formula on all layer lists (L<=4, n<=3)", ok,
                           detail});
    }

    {
        const std::map<int, size_t> expected{{3, 1}, {4, 7}, {5, 66}, {6, 916}};
        for (const auto& [n, count] : expected) {
            size_t got = enumerate_outdeg2_family(n).size();
            results.push_back({"outdegree-2 family count for n=" + std::to_string(n) + " is " +
                                   std::to_string(count),
                               got == count, "got " + std::to_string(got)});
        }
    }

    {
        // Deleting the target vertex (single in-arc) from the 5-vertex
        // progenitors leaves exactly one 4-vertex digraph with
        // nontrivial reduced beta_2.
        int beta2pos = 0;
        auto cores = enumerate_progenitor_cores(5);
        for (const auto& core : cores) beta2pos += betti(core, 3).reduced[2] > 0 ? 1 : 0;
        results.push_back({"exactly 1 target-trimmed 4-vertex progenitor with reduced "
                           "beta_2 > 0",
                           beta2pos == 1,
                           "got " + std::to_string(beta2pos) + " of " +
                               std::to_string(cores.size()) + " cores"});
    }
    {
        auto recs5 = enumerate_2fg_progenitors(5);
        std::vector<std::vector<long>> profiles;
        for (const auto& r : recs5) {
            if (r.betti.reduced[2] > 0) {
                profiles.push_back({r.betti.reduced[1], r.betti.reduced[2], r.betti.reduced[3]});
            }
        }
        std::sort(profiles.begin(), profiles.end());
        bool ok = profiles == std::vector<std::vector<long>>{{0, 1, 0}, {1, 1, 0}};
        results.push_back({"5-vertex progenitors with reduced beta_2 > 0: profiles (0,0,1) and "
                           "(0,1,1)",
                           ok, "got " + std::to_string(profiles.size()) + " records"});
    }
    {
        auto recs6 = enumerate_2fg_progenitors(6);
        std::map<long, int> beta1_multiset;
        int count = 0;
        bool all_beta2_one = true;
        for (const auto& r : recs6) {
            if (r.betti.reduced[2] > 0) {
                ++count;
                all_beta2_one = all_beta2_one && r.betti.reduced[2] == 1;
                ++beta1_multiset[r.betti.reduced[1]];
            }
        }
        bool ok = count == 17 && all_beta2_one &&
                  beta1_multiset == std::map<long, int>{{0, 10}, {1, 5}, {2, 2}};
        std::ostringstream os;
        os << "count " << count << ", beta_1 multiset {";
        for (const auto& [b, c] : beta1_multiset) os << b << "x" << c << " ";
        os << "}";
        results.push_back({"6-vertex progenitors with reduced beta_2 > 0: 17 records, all "
                           "beta_2 = 1, beta_1 multiset {0^10,1^5,2^2}",
                           ok, os.str()});
    }

    return results;
}

std::vector<ClaimResult> verify_oracle_suite() {
    std::vector<ClaimResult> results;

    {
        // Exhaustive over loopless digraphs on 1..4 vertices.
        bool ok = true;
        std::string detail;
        long checked = 0;
        for (int n = 1; n <= 4 && ok; ++n) {
            std::vector<std::pair<int, int>> slots;
            for (int u = 0; u < n; ++u)
                for (int v = 0; v < n; ++v)
                    if (u != v) slots.emplace_back(u, v);
            for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << slots.size()); ++mask) {
                Digraph d;
                for (int v = 1; v <= n; ++v) d.add_vertex("v" + std::to_string(v));
                for (size_t i = 0; i < slots.size(); ++i) {
                    if (mask & (std::uint64_t{1} << i)) d.add_arc(slots[i].first, slots[i].second);
                }
                if (!profiles_agree(betti(d, 3), brute_force_oracle(d, 3))) {
                    ok = false;
                    detail = "disagreement on n=" + std::to_string(n) + " mask " +
                             std::to_string(mask);
                    break;
                }
                ++checked;
            }
        }
        if (ok) detail = std::to_string(checked) + " digraphs checked";
        results.push_back({"oracle equivalence, exhaustive on <= 4 vertices", ok, detail});
    }

    {
        Rng rng(0x5eedULL);
        bool ok = true;
        std::string detail = "200 digraphs checked";
        for (int i = 0; i < 200; ++i) {
            Digraph d = random_digraph(rng, 8);
            if (!profiles_agree(betti(d, 3), brute_force_oracle(d, 3))) {
                ok = false;
                detail = "disagreement on sample " + std::to_string(i);
                break;
            }
        }
        results.push_back({"oracle equivalence, 200 seeded random digraphs <= 8 vertices", ok,
                           detail});
    }

    return results;
}

std::vector<ClaimResult> verify_series_suite(int n_pairs) {
    std::vector<ClaimResult> results;
    auto progenitors = enumerate_2fg_progenitors(5);
    Rng rng(0xC0FFEEULL);
    bool ok = true;
    std::string detail = std::to_string(n_pairs) + " pairs checked";
    for (int i = 0; i < n_pairs && ok; ++i) {
        const auto& r1 = progenitors[rng.next_below(progenitors.size())];
        const auto& r2 = progenitors[rng.next_below(progenitors.size())];
        FlowGraph f1 = progenitor_to_2fg(
            r1, static_cast<int>(rng.next_below(r1.valid_pairs.size())), true);
        FlowGraph f2 = progenitor_to_2fg(
            r2, static_cast<int>(rng.next_below(r2.valid_pairs.size())), true);
        FlowGraph composed = series_compose(f1, f2);
        auto b1 = betti(f1.graph, 3);
        auto b2 = betti(f2.graph, 3);
        auto bc = betti(composed.graph, 3);
        for (size_t p = 0; p < bc.reduced.size(); ++p) {
            if (bc.reduced[p] != b1.reduced[p] + b2.reduced[p]) {
                ok = false;
                detail = "additivity failed at pair " + std::to_string(i) + " dimension " +
                         std::to_string(p);
                break;
            }
        }
    }
    results.push_back({"series composition: reduced betti numbers add on seeded 2FG pairs", ok,
                       detail});
    return results;
}

bool all_passed(const std::vector<ClaimResult>& results) {
    for (const auto& r : results) {
        if (!r.passed) return false;
    }
    return true;
}

}  // namespace pathhom
