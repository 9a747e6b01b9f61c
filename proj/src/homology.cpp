#include "pathhom/homology.hpp"

#include <algorithm>
#include <set>

namespace pathhom {

BettiProfile betti(const Digraph& d, int p_max, std::size_t cap) {
    return betti_over(d, p_max, Rational(0), cap);
}

BettiProfile betti_mod_p(const Digraph& d, int p_max, std::uint64_t prime, std::size_t cap) {
    return betti_over(d, p_max, PrimeFieldElem(0, prime), cap);
}

GeneratorSet h1_generators(const Digraph& d, std::size_t cap) {
    if (d.empty()) throw std::invalid_argument("h1_generators: empty digraph");
    GeneratorSet result;
    result.arcs = allowed_paths(d, 1, cap);
    int narcs = static_cast<int>(result.arcs.size());

    // ker of the dimension-1 boundary: constraint rows indexed by vertices.
    std::vector<SparseVec<Rational>> vertex_rows(static_cast<size_t>(d.num_vertices()));
    for (int j = 0; j < narcs; ++j) {
        const Path& arc = result.arcs[static_cast<size_t>(j)];
        vertex_rows[static_cast<size_t>(arc[0])].emplace_back(j, Rational(-1));
        vertex_rows[static_cast<size_t>(arc[1])].emplace_back(j, Rational(1));
    }
    auto cycle_basis = sparse_kernel(vertex_rows, narcs, Rational(0));

    // Image of the dimension-2 boundary, then extend it to ker by exact
    // elimination in lexicographic column order.
    auto om1 = omega_basis(d, 1, Rational(0), cap);
    auto om2 = omega_basis(d, 2, Rational(0), cap);
    RowReducer<Rational> reducer;
    for (const auto& col : restricted_boundary(d, 2, om1, om2)) reducer.add_row(col);
    std::set<std::pair<int, int>> support;
    for (const auto& z : cycle_basis) {
        if (!reducer.add_row(z)) continue;
        for (const auto& [j, coef] : z) {
            const Path& arc = result.arcs[static_cast<size_t>(j)];
            support.emplace(arc[0], arc[1]);
        }
        result.cycles.push_back(z);
    }
    result.support_arcs.assign(support.begin(), support.end());
    return result;
}

namespace {

// Naive dense routines, deliberately separate from the sparse pipeline.

using DenseMatrix = std::vector<std::vector<Rational>>;

int dense_rank(DenseMatrix m) {
    if (m.empty()) return 0;
    size_t rows = m.size(), cols = m[0].size();
    int rank = 0;
    size_t pr = 0;
    for (size_t c = 0; c < cols && pr < rows; ++c) {
        size_t pivot = pr;
        while (pivot < rows && m[pivot][c] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(m[pr], m[pivot]);
        for (size_t r = 0; r < rows; ++r) {
            if (r == pr || m[r][c] == 0) continue;
            Rational f = m[r][c] / m[pr][c];
            for (size_t k = c; k < cols; ++k) m[r][k] -= f * m[pr][k];
        }
        ++pr;
        ++rank;
    }
    return rank;
}

// Columns of a basis of the null space of m.
DenseMatrix dense_kernel(DenseMatrix m, size_t cols) {
    size_t rows = m.size();
    std::vector<int> pivot_of_col(cols, -1);
    size_t pr = 0;
    for (size_t c = 0; c < cols && pr < rows; ++c) {
        size_t pivot = pr;
        while (pivot < rows && m[pivot][c] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(m[pr], m[pivot]);
        Rational lead = m[pr][c];
        for (size_t k = 0; k < cols; ++k) m[pr][k] /= lead;
        for (size_t r = 0; r < rows; ++r) {
            if (r == pr || m[r][c] == 0) continue;
            Rational f = m[r][c];
            for (size_t k = 0; k < cols; ++k) m[r][k] -= f * m[pr][k];
        }
        pivot_of_col[c] = static_cast<int>(pr);
        ++pr;
    }
    DenseMatrix kernel;
    for (size_t f = 0; f < cols; ++f) {
        if (pivot_of_col[f] >= 0) continue;
        std::vector<Rational> x(cols, Rational(0));
        x[f] = 1;
        for (size_t c = 0; c < cols; ++c) {
            if (pivot_of_col[c] >= 0) x[c] = -m[static_cast<size_t>(pivot_of_col[c])][f];
        }
        kernel.push_back(std::move(x));
    }
    return kernel;
}

std::vector<Path> all_tuples(int n, int len) {
    std::vector<Path> tuples{{}};
    for (int step = 0; step < len; ++step) {
        std::vector<Path> next;
        next.reserve(tuples.size() * static_cast<size_t>(n));
        for (const auto& t : tuples) {
            for (int v = 0; v < n; ++v) {
                next.push_back(t);
                next.back().push_back(v);
            }
        }
        tuples = std::move(next);
    }
    return tuples;
}

bool tuple_allowed(const Digraph& d, const Path& t) {
    for (size_t i = 1; i < t.size(); ++i) {
        if (!d.has_arc(t[i - 1], t[i])) return false;
    }
    return true;
}

size_t tuple_rank(const Path& t, int n) {
    size_t r = 0;
    for (int v : t) r = r * static_cast<size_t>(n) + static_cast<size_t>(v);
    return r;
}

}  // namespace

BettiProfile brute_force_oracle(const Digraph& d, int p_max) {
    if (d.num_vertices() > 10 || p_max > 5) {
        throw std::invalid_argument("brute_force_oracle: guard rails are |V| <= 10, p_max <= 5");
    }
    if (d.empty()) throw std::invalid_argument("brute_force_oracle: empty digraph");
    if (p_max < 1) throw std::invalid_argument("brute_force_oracle: p_max must be >= 1");
    int n = d.num_vertices();

    // Allowed paths per dimension, by filtering every tuple.
    std::vector<std::vector<Path>> allowed(static_cast<size_t>(p_max) + 2);
    for (int p = 0; p <= p_max + 1; ++p) {
        for (auto& t : all_tuples(n, p + 1)) {
            if (tuple_allowed(d, t)) allowed[static_cast<size_t>(p)].push_back(std::move(t));
        }
    }

    // Full dense boundary matrix in dimension p: all n^p tuples as rows,
    // allowed p-paths as columns.
    auto full_boundary = [&](int p) {
        size_t rows = 1;
        for (int i = 0; i < p; ++i) rows *= static_cast<size_t>(n);
        const auto& cols = allowed[static_cast<size_t>(p)];
        DenseMatrix m(rows, std::vector<Rational>(cols.size(), Rational(0)));
        for (size_t j = 0; j < cols.size(); ++j) {
            const Path& path = cols[j];
            for (size_t del = 0; del < path.size(); ++del) {
                Path face;
                for (size_t i = 0; i < path.size(); ++i) {
                    if (i != del) face.push_back(path[i]);
                }
                m[tuple_rank(face, n)][j] += (del % 2 == 0) ? 1 : -1;
            }
        }
        return m;
    };

    // Invariant-space bases per dimension, as dense coordinate columns.
    std::vector<DenseMatrix> omega(static_cast<size_t>(p_max) + 2);
    for (int p = 0; p <= p_max + 1; ++p) {
        size_t na = allowed[static_cast<size_t>(p)].size();
        if (p <= 1) {
            DenseMatrix id;
            for (size_t i = 0; i < na; ++i) {
                std::vector<Rational> e(na, Rational(0));
                e[i] = 1;
                id.push_back(std::move(e));
            }
            omega[static_cast<size_t>(p)] = id;
            continue;
        }
        DenseMatrix constraint = full_boundary(p);
        // Zero out rows corresponding to allowed (p-1)-paths: the boundary
        // is unconstrained there.
        for (const auto& face : allowed[static_cast<size_t>(p - 1)]) {
            auto& row = constraint[tuple_rank(face, n)];
            std::fill(row.begin(), row.end(), Rational(0));
        }
        omega[static_cast<size_t>(p)] = dense_kernel(std::move(constraint), na);
    }

    // rank of the boundary restricted to the invariant space.
    std::vector<int> rank(static_cast<size_t>(p_max) + 2, 0);
    for (int p = 1; p <= p_max + 1; ++p) {
        const auto& basis = omega[static_cast<size_t>(p)];  // kernel vectors (columns)
        if (basis.empty()) continue;
        DenseMatrix full = full_boundary(p);
        size_t rows = full.size();
        DenseMatrix image(rows, std::vector<Rational>(basis.size(), Rational(0)));
        for (size_t b = 0; b < basis.size(); ++b) {
            for (size_t j = 0; j < basis[b].size(); ++j) {
                if (basis[b][j] == 0) continue;
                for (size_t r = 0; r < rows; ++r) {
                    if (full[r][j] != 0) image[r][b] += basis[b][j] * full[r][j];
                }
            }
        }
        rank[static_cast<size_t>(p)] = dense_rank(std::move(image));
    }

    BettiProfile profile;
    profile.p_max = p_max;
    profile.complete = omega[static_cast<size_t>(p_max) + 1].empty();
    profile.values.push_back(n - rank[1]);
    profile.reduced.push_back(n - 1 - rank[1]);
    for (int p = 1; p <= p_max; ++p) {
        long b = static_cast<long>(omega[static_cast<size_t>(p)].size()) -
                 rank[static_cast<size_t>(p)] - rank[static_cast<size_t>(p) + 1];
        profile.values.push_back(b);
        profile.reduced.push_back(b);
    }
    return profile;
}

}  // namespace pathhom
