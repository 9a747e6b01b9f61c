#include "pathhom/enumerate.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <unordered_set>

namespace pathhom {

namespace {

using Code = std::uint64_t;  // adjacency bitmatrix, bit u*n+v

Code encode_permuted(const std::vector<std::pair<int, int>>& arcs, const std::vector<int>& perm,
                     int n) {
    Code code = 0;
    for (const auto& [u, v] : arcs) {
        code |= Code{1} << (perm[static_cast<size_t>(u)] * n + perm[static_cast<size_t>(v)]);
    }
    return code;
}

Code canonical_code(const std::vector<std::pair<int, int>>& arcs,
                    const std::vector<std::vector<int>>& perms, int n) {
    Code best = ~Code{0};
    for (const auto& perm : perms) {
        best = std::min(best, encode_permuted(arcs, perm, n));
    }
    return best;
}

Digraph decode(Code code, int n) {
    Digraph d;
    for (int v = 1; v <= n; ++v) d.add_vertex("v" + std::to_string(v));
    for (int u = 0; u < n; ++u) {
        for (int v = 0; v < n; ++v) {
            if (code & (Code{1} << (u * n + v))) d.add_arc(u, v);
        }
    }
    return d;
}

}  // namespace

std::vector<Digraph> enumerate_outdeg2_family(int n) {
    if (n < 3 || n > 7) {
        throw std::invalid_argument("enumerate_outdeg2_family: guard is 3 <= n <= 7");
    }
    // Vertex n-1 is the outdegree-0 vertex; permutations fix it.
    std::vector<int> base(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) base[static_cast<size_t>(i)] = i;
    std::vector<std::vector<int>> perms;
    {
        std::vector<int> head(base.begin(), base.end() - 1);
        do {
            std::vector<int> perm = head;
            perm.push_back(n - 1);
            perms.push_back(std::move(perm));
        } while (std::next_permutation(head.begin(), head.end()));
    }

    // Target pairs available to each outdegree-2 vertex.
    std::vector<std::vector<std::pair<int, int>>> choices(static_cast<size_t>(n - 1));
    for (int v = 0; v + 1 < n; ++v) {
        for (int a = 0; a < n; ++a) {
            if (a == v) continue;
            for (int b = a + 1; b < n; ++b) {
                if (b == v) continue;
                choices[static_cast<size_t>(v)].emplace_back(a, b);
            }
        }
    }

    std::unordered_set<Code> seen;
    std::vector<std::pair<int, int>> arcs;
    arcs.reserve(2 * static_cast<size_t>(n - 1));
    auto recurse = [&](auto&& self, int v) -> void {
        if (v == n - 1) {
            seen.insert(canonical_code(arcs, perms, n));
            return;
        }
        for (const auto& [a, b] : choices[static_cast<size_t>(v)]) {
            arcs.emplace_back(v, a);
            arcs.emplace_back(v, b);
            self(self, v + 1);
            arcs.pop_back();
            arcs.pop_back();
        }
    };
    recurse(recurse, 0);

    std::vector<Code> codes(seen.begin(), seen.end());
    std::sort(codes.begin(), codes.end());
    std::vector<Digraph> result;
    result.reserve(codes.size());
    for (Code c : codes) result.push_back(decode(c, n));
    return result;
}

std::vector<ProgenitorRecord> enumerate_2fg_progenitors(int n) {
    std::vector<ProgenitorRecord> records;
    for (auto& d : enumerate_outdeg2_family(n)) {
        int z = n - 1;
        std::vector<std::pair<int, int>> pairs;
        for (int a = 0; a + 1 < n; ++a) {
            Digraph with_back = d;
            with_back.add_arc(z, a);
            if (strongly_connected(with_back)) pairs.emplace_back(a, z);
        }
        if (pairs.empty()) continue;
        ProgenitorRecord rec;
        rec.betti = betti(d, 3);
        rec.digraph = std::move(d);
        rec.valid_pairs = std::move(pairs);
        records.push_back(std::move(rec));
    }
    return records;
}

std::vector<Digraph> enumerate_progenitor_cores(int n) {
    int m = n - 1;
    std::vector<std::vector<int>> perms;
    {
        std::vector<int> perm(static_cast<size_t>(m));
        for (int i = 0; i < m; ++i) perm[static_cast<size_t>(i)] = i;
        do {
            perms.push_back(perm);
        } while (std::next_permutation(perm.begin(), perm.end()));
    }

    std::unordered_set<Code> seen;
    for (const auto& rec : enumerate_2fg_progenitors(n)) {
        int z = n - 1;
        std::vector<std::pair<int, int>> core_arcs;
        int into_z = 0;
        for (const auto& [u, v] : rec.digraph.arcs()) {
            if (v == z) {
                ++into_z;
            } else {
                core_arcs.emplace_back(u, v);
            }
        }
        if (into_z != 1) continue;
        seen.insert(canonical_code(core_arcs, perms, m));
    }

    std::vector<Code> codes(seen.begin(), seen.end());
    std::sort(codes.begin(), codes.end());
    std::vector<Digraph> result;
    result.reserve(codes.size());
    for (Code c : codes) result.push_back(decode(c, m));
    return result;
}

FlowGraph progenitor_to_2fg(const ProgenitorRecord& rec, int pair_index, bool with_target) {
    if (pair_index < 0 || pair_index >= static_cast<int>(rec.valid_pairs.size())) {
        throw std::out_of_range("progenitor_to_2fg: pair index out of range");
    }
    const auto [a, z] = rec.valid_pairs[static_cast<size_t>(pair_index)];
    Digraph g = rec.digraph;
    int s = g.add_vertex("s");
    g.add_arc(s, a);
    if (with_target) {
        int t = g.add_vertex("t");
        g.add_arc(z, t);
    }
    auto validated = validate_flow_graph(g);
    if (!validated.ok()) {
        std::string why;
        for (const auto& v : validated.violations) why += "; " + v;
        throw std::runtime_error("progenitor_to_2fg: not a valid flow graph" + why);
    }
    return *validated.value;
}

}  // namespace pathhom
