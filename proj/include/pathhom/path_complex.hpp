#pragma once

#include "pathhom/digraph.hpp"
#include "pathhom/field.hpp"
#include "pathhom/linalg.hpp"

#include <cstddef>
#include <map>
#include <stdexcept>
#include <vector>

namespace pathhom {

/// Allowed p-path: vertex index tuple of length p+1 with every consecutive
/// pair an arc. A 0-path is a single vertex.
using Path = std::vector<int>;

inline constexpr std::size_t kDefaultPathCap = 5'000'000;

/// Raised when the allowed-path count exceeds the configured cap.
class PathCapExceeded : public std::runtime_error {
public:
    PathCapExceeded(int dimension, std::size_t cap)
        : std::runtime_error("allowed-path enumeration exceeded cap " + std::to_string(cap) +
                             " in dimension " + std::to_string(dimension)),
          dimension_(dimension),
          cap_(cap) {}
    int dimension() const { return dimension_; }

private:
    int dimension_;
    std::size_t cap_;
};

/// All allowed p-paths in lexicographic order by vertex storage index.
/// p = 0 returns the vertex list.
inline std::vector<Path> allowed_paths(const Digraph& d, int p,
                                       std::size_t cap = kDefaultPathCap) {
    if (p < 0) throw std::invalid_argument("allowed_paths: p must be >= 0");
    std::vector<Path> paths;
    for (int v = 0; v < d.num_vertices(); ++v) paths.push_back({v});
    for (int step = 0; step < p; ++step) {
        std::vector<Path> extended;
        for (const auto& path : paths) {
            for (int w : d.out_neighbors(path.back())) {
                extended.push_back(path);
                extended.back().push_back(w);
                if (extended.size() > cap) throw PathCapExceeded(p, cap);
            }
        }
        paths = std::move(extended);
    }
    return paths;
}

/// Non-regular boundary of a single p-path: alternating sum over the p+1
/// deletions, like tuples combined. Coefficients are plain integers; the
/// result may include non-allowed tuples.
inline std::vector<std::pair<Path, int>> raw_boundary_column(const Path& path) {
    std::map<Path, int> acc;
    for (std::size_t j = 0; j < path.size(); ++j) {
        Path face;
        face.reserve(path.size() - 1);
        for (std::size_t i = 0; i < path.size(); ++i) {
            if (i != j) face.push_back(path[i]);
        }
        acc[face] += (j % 2 == 0) ? 1 : -1;
    }
    std::vector<std::pair<Path, int>> out;
    for (const auto& [face, c] : acc) {
        if (c != 0) out.emplace_back(face, c);
    }
    return out;
}

/// Basis of the invariant space: combinations of allowed p-paths whose
/// boundary is supported on allowed (p-1)-paths.
template <class F>
struct OmegaBasis {
    int dimension = 0;
    std::vector<Path> ambient;            // allowed p-paths, lex order
    std::vector<SparseVec<F>> basis;      // RREF w.r.t. ambient order
    int dim() const { return static_cast<int>(basis.size()); }
};

template <class F>
OmegaBasis<F> omega_basis(const Digraph& d, int p, const F& like,
                          std::size_t cap = kDefaultPathCap) {
    OmegaBasis<F> result;
    result.dimension = p;
    result.ambient = allowed_paths(d, p, cap);
    int ncols = static_cast<int>(result.ambient.size());
    const F one = FieldOps<F>::one(like);
    if (p <= 1) {
        // Faces of vertices and arcs are always allowed, so the invariant
        // space is the full allowed span.
        for (int j = 0; j < ncols; ++j) result.basis.push_back({{j, one}});
        return result;
    }
    // Constraint rows: non-allowed faces of allowed p-paths. Only interior
    // deletions can be non-allowed.
    std::map<Path, std::map<int, int>> rows;  // face tuple -> col -> coeff
    for (int j = 0; j < ncols; ++j) {
        const Path& path = result.ambient[static_cast<size_t>(j)];
        for (int i = 1; i < p; ++i) {
            if (d.has_arc(path[static_cast<size_t>(i - 1)], path[static_cast<size_t>(i + 1)]))
                continue;
            Path face;
            face.reserve(path.size() - 1);
            for (int t = 0; t <= p; ++t) {
                if (t != i) face.push_back(path[static_cast<size_t>(t)]);
            }
            rows[face][j] += (i % 2 == 0) ? 1 : -1;
        }
    }
    std::vector<SparseVec<F>> constraint;
    constraint.reserve(rows.size());
    for (const auto& [face, entries] : rows) {
        SparseVec<F> row;
        for (const auto& [col, c] : entries) {
            if (c != 0) row.emplace_back(col, FieldOps<F>::from_int(c, like));
        }
        if (!row.empty()) constraint.push_back(std::move(row));
    }
    result.basis = sparse_kernel(constraint, ncols, like);
    return result;
}

/// Matrix of the boundary restricted to the invariant space, expressed in
/// allowed-(p-1)-path coordinates: one sparse column per basis vector of
/// `upper`, rows indexed into `lower.ambient`.
template <class F>
std::vector<SparseVec<F>> restricted_boundary(const Digraph& d, int p,
                                              const OmegaBasis<F>& lower,
                                              const OmegaBasis<F>& upper) {
    if (lower.dimension != p - 1 || upper.dimension != p) {
        throw std::invalid_argument("restricted_boundary: basis dimensions do not match p");
    }
    std::map<Path, int> row_index;
    for (int i = 0; i < static_cast<int>(lower.ambient.size()); ++i) {
        row_index.emplace(lower.ambient[static_cast<size_t>(i)], i);
    }
    std::vector<SparseVec<F>> cols;
    cols.reserve(upper.basis.size());
    for (const auto& omega : upper.basis) {
        std::map<Path, F> acc;
        for (const auto& [j, coef] : omega) {
            for (const auto& [face, c] :
                 raw_boundary_column(upper.ambient[static_cast<size_t>(j)])) {
                F term = coef * FieldOps<F>::from_int(c, coef);
                auto it = acc.find(face);
                if (it == acc.end()) {
                    acc.emplace(face, term);
                } else {
                    it->second = it->second + term;
                }
            }
        }
        SparseVec<F> col;
        for (const auto& [face, v] : acc) {
            if (FieldOps<F>::is_zero(v)) continue;
            auto it = row_index.find(face);
            if (it == row_index.end()) {
                throw std::logic_error(
                    "restricted_boundary: boundary escaped the allowed span");
            }
            col.emplace_back(it->second, v);
        }
        cols.push_back(std::move(col));
    }
    return cols;
}

}  // namespace pathhom
