#pragma once

#include "pathhom/field.hpp"

#include <algorithm>
#include <map>
#include <utility>
#include <vector>

namespace pathhom {

/// Sparse vector: (index, value) pairs sorted by index, values nonzero.
template <class F>
using SparseVec = std::vector<std::pair<int, F>>;

template <class F>
SparseVec<F> sparse_axpy(const SparseVec<F>& x, const F& coef, const SparseVec<F>& y) {
    // x + coef * y, merging sorted supports and dropping cancellations.
    SparseVec<F> out;
    out.reserve(x.size() + y.size());
    size_t i = 0, j = 0;
    while (i < x.size() || j < y.size()) {
        if (j >= y.size() || (i < x.size() && x[i].first < y[j].first)) {
            out.push_back(x[i++]);
        } else if (i >= x.size() || y[j].first < x[i].first) {
            F v = coef * y[j].second;
            if (!FieldOps<F>::is_zero(v)) out.emplace_back(y[j].first, v);
            ++j;
        } else {
            F v = x[i].second + coef * y[j].second;
            if (!FieldOps<F>::is_zero(v)) out.emplace_back(x[i].first, v);
            ++i;
            ++j;
        }
    }
    return out;
}

/// Incremental exact row reduction. Pivot rows are kept normalized
/// (leading coefficient 1) and indexed by pivot column.
template <class F>
class RowReducer {
public:
    /// Reduces `row` against the current pivot rows. Returns the residue
    /// (empty if `row` is in the current row span).
    SparseVec<F> reduce(SparseVec<F> row) const {
        while (!row.empty()) {
            auto it = pivots_.find(row.front().first);
            if (it == pivots_.end()) break;
            row = sparse_axpy(row, F(-row.front().second), it->second);
        }
        return row;
    }

    /// Adds a row; returns true if it increased the rank.
    bool add_row(SparseVec<F> row) {
        row = reduce(std::move(row));
        if (row.empty()) return false;
        F lead = row.front().second;
        if (!(lead == FieldOps<F>::one(lead))) {
            for (auto& [c, v] : row) v = v / lead;
        }
        pivots_.emplace(row.front().first, std::move(row));
        return true;
    }

    int rank() const { return static_cast<int>(pivots_.size()); }

    /// Back-substitutes so the pivot rows form the (unique) RREF.
    void back_substitute() {
        for (auto it = pivots_.rbegin(); it != pivots_.rend(); ++it) {
            int col = it->first;
            for (auto jt = pivots_.begin(); jt != pivots_.end(); ++jt) {
                if (jt->first >= col) break;
                auto& row = jt->second;
                for (const auto& [c, v] : row) {
                    if (c == col) {
                        row = sparse_axpy(row, F(-v), it->second);
                        break;
                    }
                    if (c > col) break;
                }
            }
        }
    }

    const std::map<int, SparseVec<F>>& pivot_rows() const { return pivots_; }

private:
    std::map<int, SparseVec<F>> pivots_;  // pivot column -> normalized row
};

template <class F>
int sparse_rank(const std::vector<SparseVec<F>>& rows) {
    RowReducer<F> red;
    for (const auto& r : rows) red.add_row(r);
    return red.rank();
}

/// RREF of a list of row vectors; the result is canonical for the row span.
template <class F>
std::vector<SparseVec<F>> sparse_rref(const std::vector<SparseVec<F>>& rows) {
    RowReducer<F> red;
    for (const auto& r : rows) red.add_row(r);
    red.back_substitute();
    std::vector<SparseVec<F>> out;
    out.reserve(red.pivot_rows().size());
    for (const auto& [col, row] : red.pivot_rows()) out.push_back(row);
    return out;
}

/// Basis of { x : M x = 0 } for M given by rows over `ncols` columns.
/// Returned in reduced echelon form w.r.t. ascending column order.
template <class F>
std::vector<SparseVec<F>> sparse_kernel(const std::vector<SparseVec<F>>& rows, int ncols,
                                        const F& like) {
    RowReducer<F> red;
    for (const auto& r : rows) red.add_row(r);
    red.back_substitute();
    const auto& pivots = red.pivot_rows();
    std::vector<SparseVec<F>> kernel;
    const F one = FieldOps<F>::one(like);
    for (int free_col = 0; free_col < ncols; ++free_col) {
        if (pivots.count(free_col)) continue;
        SparseVec<F> x;
        for (const auto& [pcol, prow] : pivots) {
            for (const auto& [c, v] : prow) {
                if (c == free_col) {
                    x.emplace_back(pcol, F(-v));
                    break;
                }
                if (c > free_col) break;
            }
        }
        x.emplace_back(free_col, one);
        std::sort(x.begin(), x.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        kernel.push_back(std::move(x));
    }
    return sparse_rref(kernel);
}

}  // namespace pathhom
