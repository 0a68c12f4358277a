#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "ctsurg/bigint.hpp"
#include "ctsurg/errors.hpp"
#include "ctsurg/matrix.hpp"
#include "ctsurg/rational.hpp"

namespace ctsurg {

// Exact determinant by fraction-free (Bareiss) elimination.
// The empty matrix has determinant 1.
inline BigInt determinant(const IntMat& m) {
    if (!m.is_square()) throw DimensionMismatch("determinant needs a square matrix");
    const std::size_t n = m.rows();
    if (n == 0) return BigInt(1);
    IntMat a = m;
    BigInt prev(1);
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a.at(k, k).is_zero()) {
            std::size_t p = k + 1;
            while (p < n && a.at(p, k).is_zero()) ++p;
            if (p == n) return BigInt(0);
            a.swap_rows(k, p);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                a.at(i, j) = (a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j)) / prev;
            a.at(i, k) = BigInt(0);
        }
        prev = a.at(k, k);
    }
    BigInt det = a.at(n - 1, n - 1);
    return sign < 0 ? -det : det;
}

// Unique rational solution of M x = b when det(M) != 0, absent otherwise.
inline std::optional<std::vector<Rational>> solve_rational(const IntMat& m,
                                                           const std::vector<BigInt>& b) {
    if (!m.is_square()) throw DimensionMismatch("solve needs a square matrix");
    const std::size_t n = m.rows();
    if (b.size() != n) throw DimensionMismatch("right-hand side length");
    // Gauss-Jordan on the augmented rational matrix
    std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n + 1));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) a[i][j] = Rational(m.at(i, j));
        a[i][n] = Rational(b[i]);
    }
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        while (p < n && a[p][k].is_zero()) ++p;
        if (p == n) return std::nullopt; // singular
        if (p != k) std::swap(a[p], a[k]);
        Rational piv = a[k][k];
        for (std::size_t j = k; j <= n; ++j) a[k][j] /= piv;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == k || a[i][k].is_zero()) continue;
            Rational f = a[i][k];
            for (std::size_t j = k; j <= n; ++j) a[i][j] -= f * a[k][j];
        }
    }
    std::vector<Rational> x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = a[i][n];
    return x;
}

// Signature of a symmetric integer matrix by exact congruence
// diagonalization. Pivot rule: nonzero diagonal entry of minimal absolute
// value, lowest index on ties; if the active diagonal is all zero, an
// off-diagonal entry is folded onto the diagonal by the symmetric two-step
// clearing (row/col l added to row/col k doubles M[k][l] onto the diagonal).
// Null directions are excluded from the count.
inline int signature_symmetric(const IntMat& m) {
    if (!m.is_symmetric()) throw NotSymmetric("signature needs a symmetric matrix");
    const std::size_t n = m.rows();
    std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a[i][j] = Rational(m.at(i, j));
    std::vector<char> done(n, 0);
    int sig = 0;
    std::size_t remaining = n;
    while (remaining > 0) {
        std::size_t k = n;
        for (std::size_t i = 0; i < n; ++i) {
            if (done[i] || a[i][i].is_zero()) continue;
            if (k == n || a[i][i].abs() < a[k][k].abs()) k = i;
        }
        if (k == n) {
            // all active diagonal entries are zero
            std::size_t bi = n, bj = n;
            for (std::size_t i = 0; i < n && bi == n; ++i) {
                if (done[i]) continue;
                for (std::size_t j = i + 1; j < n; ++j) {
                    if (done[j] || a[i][j].is_zero()) continue;
                    bi = i;
                    bj = j;
                    break;
                }
            }
            if (bi == n) break; // active block is zero: null directions only
            for (std::size_t t = 0; t < n; ++t) {
                if (done[t]) continue;
                a[bi][t] += a[bj][t];
            }
            for (std::size_t t = 0; t < n; ++t) {
                if (done[t]) continue;
                a[t][bi] += a[t][bj];
            }
            continue;
        }
        sig += a[k][k].sign();
        Rational piv = a[k][k];
        std::vector<Rational> row = a[k];
        for (std::size_t i = 0; i < n; ++i) {
            if (done[i] || i == k || a[i][k].is_zero()) continue;
            Rational f = a[i][k] / piv;
            for (std::size_t j = 0; j < n; ++j) {
                if (done[j]) continue;
                a[i][j] -= f * row[j];
            }
        }
        for (std::size_t t = 0; t < n; ++t) {
            a[k][t] = Rational(0);
            a[t][k] = Rational(0);
        }
        done[k] = 1;
        --remaining;
    }
    return sig;
}

} // namespace ctsurg
