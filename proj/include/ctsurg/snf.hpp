#pragma once

#include <cstddef>
#include <vector>

#include "ctsurg/bigint.hpp"
#include "ctsurg/matrix.hpp"

namespace ctsurg {

// Smith normal form U*M*V = D with U, V unimodular and D diagonal,
// nonnegative, with the divisibility chain d1 | d2 | ...
struct SnfResult {
    IntMat u;
    IntMat d;
    IntMat v;
};

inline SnfResult smith_normal_form(const IntMat& m) {
    const std::size_t nr = m.rows();
    const std::size_t nc = m.cols();
    SnfResult res{IntMat::identity(nr), m, IntMat::identity(nc)};
    IntMat& D = res.d;
    IntMat& U = res.u;
    IntMat& V = res.v;

    const std::size_t steps = nr < nc ? nr : nc;
    for (std::size_t t = 0; t < steps; ++t) {
        for (;;) {
            // smallest nonzero entry of the trailing block becomes the pivot
            std::size_t pi = t, pj = t;
            bool found = false;
            for (std::size_t i = t; i < nr; ++i)
                for (std::size_t j = t; j < nc; ++j) {
                    const BigInt& e = D.at(i, j);
                    if (e.is_zero()) continue;
                    if (!found || e.abs() < D.at(pi, pj).abs()) {
                        pi = i;
                        pj = j;
                        found = true;
                    }
                }
            if (!found) {
                t = steps; // trailing block is zero
                break;
            }
            if (pi != t) {
                D.swap_rows(pi, t);
                U.swap_rows(pi, t);
            }
            if (pj != t) {
                D.swap_cols(pj, t);
                V.swap_cols(pj, t);
            }

            bool dirty = false;
            for (std::size_t i = t + 1; i < nr; ++i) {
                if (D.at(i, t).is_zero()) continue;
                BigInt q = D.at(i, t) / D.at(t, t);
                if (!q.is_zero()) {
                    D.row_sub(i, t, q);
                    U.row_sub(i, t, q);
                }
                if (!D.at(i, t).is_zero()) dirty = true; // remainder smaller than pivot
            }
            for (std::size_t j = t + 1; j < nc; ++j) {
                if (D.at(t, j).is_zero()) continue;
                BigInt q = D.at(t, j) / D.at(t, t);
                if (!q.is_zero()) {
                    D.col_sub(j, t, q);
                    V.col_sub(j, t, q);
                }
                if (!D.at(t, j).is_zero()) dirty = true;
            }
            if (dirty) continue;

            // pivot must divide the whole trailing block
            bool fixed = false;
            for (std::size_t i = t + 1; i < nr && !fixed; ++i)
                for (std::size_t j = t + 1; j < nc && !fixed; ++j)
                    if (!(D.at(i, j) % D.at(t, t)).is_zero()) {
                        // pull the offending row into row t; the next sweep
                        // shrinks the pivot
                        for (std::size_t k = 0; k < nc; ++k) D.at(t, k) += D.at(i, k);
                        for (std::size_t k = 0; k < nr; ++k) U.at(t, k) += U.at(i, k);
                        fixed = true;
                    }
            if (!fixed) break;
        }
        if (t >= steps) break;
    }

    for (std::size_t k = 0; k < steps; ++k)
        if (D.at(k, k).sign() < 0) {
            D.negate_row(k);
            U.negate_row(k);
        }
    return res;
}

// Normalized diagonal (nonnegative, divisibility chain), full length.
inline std::vector<BigInt> smith_diagonal(const IntMat& m) {
    SnfResult s = smith_normal_form(m);
    std::vector<BigInt> d;
    const std::size_t n = m.rows() < m.cols() ? m.rows() : m.cols();
    d.reserve(n);
    for (std::size_t k = 0; k < n; ++k) d.push_back(s.d.at(k, k));
    return d;
}

} // namespace ctsurg
