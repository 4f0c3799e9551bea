#pragma once

#include <map>
#include <vector>

#include "symladder/groebner.hpp"
#include "symladder/ideal.hpp"
#include "symladder/polynomial.hpp"

namespace symladder {

namespace detail {

template <class F>
Poly<F> laplace(const std::vector<int>& rows, const std::vector<int>& cols, const VarTable& vt,
                const MonomialOrder& o, const F& field,
                std::map<std::pair<std::vector<int>, std::vector<int>>, Poly<F>>& memo) {
    if (rows.size() == 1) return poly_var(vt.id(canonical(Cell{rows[0], cols[0]})), field);
    const auto key = std::make_pair(rows, cols);
    if (const auto it = memo.find(key); it != memo.end()) return it->second;

    const std::vector<int> sub_rows(rows.begin() + 1, rows.end());
    Poly<F> det = poly_zero(field);
    for (std::size_t j = 0; j < cols.size(); ++j) {
        std::vector<int> sub_cols;
        sub_cols.reserve(cols.size() - 1);
        for (std::size_t k = 0; k < cols.size(); ++k)
            if (k != j) sub_cols.push_back(cols[k]);
        Poly<F> entry = poly_var(vt.id(canonical(Cell{rows[0], cols[j]})), field);
        Poly<F> cof = poly_mul(entry, laplace(sub_rows, sub_cols, vt, o, field, memo), o, field);
        if (j % 2 == 1) cof = poly_neg(std::move(cof), field);
        det = poly_add(det, cof, o, field);
    }
    memo.emplace(key, det);
    return det;
}

}  // namespace detail

// Determinant of the symmetric-matrix submatrix the minor selects.  Entry
// (a,b) with a > b reads the canonical variable x[b,a].  Throws
// IndexOutOfRange when a referenced cell has no variable in vt.
template <class F>
Poly<F> expand_minor(const Minor& minor, const VarTable& vt, const MonomialOrder& o,
                     const F& field) {
    if (minor.rows.empty() || minor.rows.size() != minor.cols.size())
        throw IndexOutOfRange("minor row and column lists must be nonempty and equal length");
    for (const auto& idx : {minor.rows, minor.cols})
        for (std::size_t k = 0; k < idx.size(); ++k)
            if (idx[k] < 1 || (k > 0 && idx[k] <= idx[k - 1]))
                throw IndexOutOfRange("minor indices must be strictly increasing and >= 1");
    std::map<std::pair<std::vector<int>, std::vector<int>>, Poly<F>> memo;
    return detail::laplace(minor.rows, minor.cols, vt, o, field, memo);
}

// Same, over the full n x n symmetric grid.
template <class F>
Poly<F> expand_minor(const Minor& minor, int n, const MonomialOrder& o, const F& field) {
    if (!minor.rows.empty() && !minor.cols.empty() &&
        (minor.rows.back() > n || minor.cols.back() > n))
        throw IndexOutOfRange("minor index exceeds grid size " + std::to_string(n));
    return expand_minor(minor, VarTable::full_grid(n), o, field);
}

}  // namespace symladder
