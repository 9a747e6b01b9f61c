#pragma once

#include "pathhom/digraph.hpp"
#include "pathhom/field.hpp"
#include "pathhom/path_complex.hpp"

#include <cstdint>
#include <vector>

namespace pathhom {

/// Betti numbers of the path complex up to p_max, plain and reduced.
/// `complete` is true when the invariant space one dimension higher is
/// zero, so all higher Betti numbers vanish.
struct BettiProfile {
    std::vector<long> values;   // beta_0 .. beta_{p_max}
    std::vector<long> reduced;  // reduced variant (beta~_0 = beta_0 - 1)
    int p_max = 0;
    bool complete = false;
};

template <class F>
BettiProfile betti_over(const Digraph& d, int p_max, const F& like,
                        std::size_t cap = kDefaultPathCap) {
    if (d.empty()) throw std::invalid_argument("betti: empty digraph");
    if (p_max < 1) throw std::invalid_argument("betti: p_max must be >= 1");

    std::vector<OmegaBasis<F>> omega;
    omega.reserve(static_cast<size_t>(p_max) + 2);
    for (int p = 0; p <= p_max + 1; ++p) omega.push_back(omega_basis(d, p, like, cap));

    std::vector<int> rank(static_cast<size_t>(p_max) + 2, 0);  // rank[p] = rank of boundary_p
    for (int p = 1; p <= p_max + 1; ++p) {
        auto cols = restricted_boundary(d, p, omega[static_cast<size_t>(p - 1)],
                                        omega[static_cast<size_t>(p)]);
        rank[static_cast<size_t>(p)] = sparse_rank(cols);
    }

    BettiProfile profile;
    profile.p_max = p_max;
    profile.complete = omega[static_cast<size_t>(p_max) + 1].dim() == 0;
    long n = d.num_vertices();
    profile.values.push_back(n - rank[1]);
    profile.reduced.push_back(n - 1 - rank[1]);
    for (int p = 1; p <= p_max; ++p) {
        long b = omega[static_cast<size_t>(p)].dim() - rank[static_cast<size_t>(p)] -
                 rank[static_cast<size_t>(p) + 1];
        profile.values.push_back(b);
        profile.reduced.push_back(b);
    }
    return profile;
}

/// Exact Betti numbers over the rationals.
BettiProfile betti(const Digraph& d, int p_max, std::size_t cap = kDefaultPathCap);

/// Betti numbers over Z/prime. Faster, but an unlucky prime can misreport
/// ranks; results are probabilistic.
BettiProfile betti_mod_p(const Digraph& d, int p_max, std::uint64_t prime,
                         std::size_t cap = kDefaultPathCap);

/// Representatives of a basis of reduced 1-homology: cycles in ker of the
/// dimension-1 boundary extending a basis of the dimension-2 image.
struct GeneratorSet {
    std::vector<Path> arcs;                         // ambient 1-paths, lex order
    std::vector<SparseVec<Rational>> cycles;        // coordinates over `arcs`
    std::vector<std::pair<int, int>> support_arcs;  // union of arcs in any cycle
};

GeneratorSet h1_generators(const Digraph& d, std::size_t cap = kDefaultPathCap);

/// Independent verification path: recomputes the profile with dense exact
/// rational matrices built directly from the definitions, with no sparsity
/// and no row filtering. Guard rails: |V| <= 10, p_max <= 5.
BettiProfile brute_force_oracle(const Digraph& d, int p_max);

}  // namespace pathhom
