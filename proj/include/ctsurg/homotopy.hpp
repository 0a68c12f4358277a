#pragma once

#include <cstddef>
#include <vector>

#include "ctsurg/bigint.hpp"
#include "ctsurg/errors.hpp"
#include "ctsurg/linalg.hpp"
#include "ctsurg/matrix.hpp"
#include "ctsurg/rational.hpp"
#include "ctsurg/snf.hpp"
#include "ctsurg/surgery.hpp"

namespace ctsurg {

// ---------------------------------------------------------------------------
// First Chern class
//
// With meridians as generators, H_1 of the surgered manifold is coker(M) for
// the linking matrix M. Smith normal form U M V = D turns x + im(M) into the
// coordinate vector U x read modulo the invariant factors; the Poincare dual
// of c_1 is the class of the rotation vector.
// ---------------------------------------------------------------------------

struct ChernClass {
    std::vector<BigInt> factors;                    // unit-free invariant factors of H_1
    std::vector<BigInt> coordinates;                // class of the rotation vector
    std::vector<std::vector<BigInt>> meridian_classes; // class of each meridian e_i
};

namespace detail {

// reduce a coordinate against its invariant factor: representatives in
// [0, d) for finite d, untouched for free factors
inline BigInt reduce_coordinate(const BigInt& c, const BigInt& d) {
    if (d.is_zero()) return c;
    BigInt r = c % d;
    if (r.sign() < 0) r += d;
    return r;
}

} // namespace detail

inline ChernClass chern_class(const SurgeryPresentation& p) {
    const std::size_t n = p.size();
    IntMat m = linking_matrix(p);
    SnfResult snf = smith_normal_form(m);

    // deterministic generator signs on free factors: first nonzero entry of
    // the corresponding row of U positive
    std::vector<std::size_t> kept;
    for (std::size_t k = 0; k < n; ++k) {
        if (snf.d.at(k, k).is_one()) continue;
        if (snf.d.at(k, k).is_zero()) {
            for (std::size_t j = 0; j < n; ++j) {
                if (snf.u.at(k, j).is_zero()) continue;
                if (snf.u.at(k, j).sign() < 0) snf.u.negate_row(k);
                break;
            }
        }
        kept.push_back(k);
    }

    std::vector<long long> rot = p.rotation_vector();
    auto class_of = [&](const std::vector<BigInt>& x) {
        std::vector<BigInt> out;
        out.reserve(kept.size());
        for (std::size_t k : kept) {
            BigInt c(0);
            for (std::size_t j = 0; j < n; ++j) c += snf.u.at(k, j) * x[j];
            out.push_back(detail::reduce_coordinate(c, snf.d.at(k, k)));
        }
        return out;
    };

    ChernClass cc;
    for (std::size_t k : kept) cc.factors.push_back(snf.d.at(k, k));
    std::vector<BigInt> rotv(n);
    for (std::size_t i = 0; i < n; ++i) rotv[i] = BigInt(rot[i]);
    cc.coordinates = class_of(rotv);
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<BigInt> e(n);
        e[i] = BigInt(1);
        cc.meridian_classes.push_back(class_of(e));
    }
    return cc;
}

// ---------------------------------------------------------------------------
// d3 invariant
//
// d3 = (c^2 - 3 sigma(X) - 2 chi(X)) / 4 + q, where X is the trace of the
// surgery: chi = 1 + #components, sigma is the signature of the linking
// matrix, q counts the (+1)-coefficients, and c^2 = a . rot for the rational
// solution of M a = rot. Defined here only when det(M) != 0.
// ---------------------------------------------------------------------------

struct D3Breakdown {
    std::vector<Rational> solution; // a with M a = rot
    Rational c_squared;
    int signature = 0;
    long long euler = 0;
    long long q = 0;
    Rational value;
};

inline D3Breakdown d3_breakdown(const SurgeryPresentation& p) {
    IntMat m = linking_matrix(p);
    if (determinant(m).is_zero())
        throw DegenerateMatrix("d3 undefined: linking matrix is singular");
    const std::size_t n = p.size();
    std::vector<long long> rot = p.rotation_vector();
    std::vector<BigInt> rhs(n);
    for (std::size_t i = 0; i < n; ++i) rhs[i] = BigInt(rot[i]);

    D3Breakdown out;
    auto sol = solve_rational(m, rhs);
    out.solution = std::move(*sol); // non-null: determinant checked above
    out.c_squared = Rational(0);
    for (std::size_t i = 0; i < n; ++i) out.c_squared += out.solution[i] * Rational(rot[i]);
    out.signature = signature_symmetric(m);
    out.euler = 1 + static_cast<long long>(n);
    out.q = p.plus_one_count();
    out.value = (out.c_squared - Rational(3 * static_cast<long long>(out.signature)) -
                 Rational(2 * out.euler)) /
                    Rational(4) +
                Rational(out.q);
    return out;
}

inline Rational d3(const SurgeryPresentation& p) { return d3_breakdown(p).value; }

// relative d3 of (first, second) = d3(second) - d3(first)
inline Rational relative_d3(const Rational& first, const Rational& second) {
    return second - first;
}

inline Rational connected_sum_d3(const Rational& a, const Rational& b) {
    return a + b + Rational(1, 2);
}

} // namespace ctsurg
