#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "ctsurg/front.hpp"
#include "ctsurg/matrix.hpp"
#include "ctsurg/surgery.hpp"
#include "ctsurg/transverse.hpp"

// Test-side generators and independent oracles. Everything here stays off
// the implementation paths it is used to check.

namespace testutil {

using ctsurg::BigInt;
using ctsurg::FrontDiagram;
using ctsurg::IntMat;

using Rng = std::mt19937;

inline int uniform(Rng& rng, int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng);
}

// --- independent determinant: cofactor expansion -------------------------

inline BigInt det_cofactor(const IntMat& m) {
    const std::size_t n = m.rows();
    if (n == 0) return BigInt(1);
    if (n == 1) return m.at(0, 0);
    BigInt acc(0);
    for (std::size_t j = 0; j < n; ++j) {
        if (m.at(0, j).is_zero()) continue;
        IntMat minor(n - 1, n - 1);
        for (std::size_t i = 1; i < n; ++i) {
            std::size_t cc = 0;
            for (std::size_t k = 0; k < n; ++k) {
                if (k == j) continue;
                minor.at(i - 1, cc++) = m.at(i, k);
            }
        }
        BigInt term = m.at(0, j) * det_cofactor(minor);
        acc += (j % 2 == 0) ? term : -term;
    }
    return acc;
}

// --- independent signature: brute-force Lagrange diagonalization ----------
// rational Gaussian congruence with naive first-nonzero pivoting, then a
// plain sign count of the resulting diagonal

inline int signature_lagrange(const IntMat& m) {
    using ctsurg::Rational;
    const std::size_t n = m.rows();
    std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a[i][j] = Rational(m.at(i, j));
    std::vector<char> done(n, 0);
    for (;;) {
        std::size_t k = n;
        for (std::size_t i = 0; i < n; ++i)
            if (!done[i] && !a[i][i].is_zero()) {
                k = i;
                break;
            }
        if (k == n) {
            std::size_t bi = n, bj = n;
            for (std::size_t i = 0; i < n && bi == n; ++i) {
                if (done[i]) continue;
                for (std::size_t j = i + 1; j < n; ++j)
                    if (!done[j] && !a[i][j].is_zero()) {
                        bi = i;
                        bj = j;
                        break;
                    }
            }
            if (bi == n) break; // remaining block is zero
            for (std::size_t t = 0; t < n; ++t)
                if (!done[t]) a[bi][t] += a[bj][t];
            for (std::size_t t = 0; t < n; ++t)
                if (!done[t]) a[t][bi] += a[t][bj];
            continue;
        }
        const Rational piv = a[k][k];
        const std::vector<Rational> row = a[k];
        for (std::size_t i = 0; i < n; ++i) {
            if (done[i] || i == k || a[i][k].is_zero()) continue;
            const Rational f = a[i][k] / piv;
            for (std::size_t j = 0; j < n; ++j)
                if (!done[j] && j != k) a[i][j] -= f * row[j];
            a[i][k] = Rational(0);
            a[k][i] = Rational(0);
        }
        done[k] = 1;
    }
    int sig = 0;
    for (std::size_t i = 0; i < n; ++i) sig += a[i][i].sign();
    return sig;
}

// --- random matrices -------------------------------------------------------

inline IntMat random_matrix(Rng& rng, std::size_t n, int lo = -9, int hi = 9) {
    IntMat m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m.at(i, j) = BigInt(uniform(rng, lo, hi));
    return m;
}

inline IntMat random_symmetric(Rng& rng, std::size_t n, int lo = -9, int hi = 9) {
    IntMat m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            m.at(i, j) = BigInt(uniform(rng, lo, hi));
            m.at(j, i) = m.at(i, j);
        }
    return m;
}

// product of random elementary row operations: unimodular by construction
inline IntMat random_unimodular(Rng& rng, std::size_t n, int ops = 8) {
    IntMat m = IntMat::identity(n);
    for (int t = 0; t < ops; ++t) {
        std::size_t i = uniform(rng, 0, static_cast<int>(n) - 1);
        std::size_t j = uniform(rng, 0, static_cast<int>(n) - 1);
        if (i == j) {
            if (uniform(rng, 0, 1)) m.negate_row(i);
            continue;
        }
        BigInt f(uniform(rng, -2, 2));
        for (std::size_t k = 0; k < n; ++k) m.at(i, k) += f * m.at(j, k);
    }
    return m;
}

// --- random closed fronts ----------------------------------------------

// Random valid closed front diagram with <= max_events events. Components
// get random orientation flags.
inline FrontDiagram random_front(Rng& rng, int max_events = 40) {
    for (;;) {
        FrontDiagram d;
        int k = 0;
        int budget = uniform(rng, 2, max_events);
        while (static_cast<int>(d.events.size()) < budget) {
            int remaining = budget - static_cast<int>(d.events.size());
            // must be able to close: each open pair needs one right cusp
            if (k / 2 >= remaining) break;
            int choice = k < 2 ? 0 : uniform(rng, 0, 5);
            if (choice <= 1) {
                d.events.push_back(ctsurg::left_cusp(uniform(rng, 1, k + 1)));
                k += 2;
            } else if (choice <= 3) {
                d.events.push_back(ctsurg::crossing(uniform(rng, 1, k - 1)));
            } else {
                d.events.push_back(ctsurg::right_cusp(uniform(rng, 1, k - 1)));
                k -= 2;
            }
        }
        while (k > 0) {
            d.events.push_back(ctsurg::right_cusp(uniform(rng, 1, std::max(1, k - 1))));
            k -= 2;
        }
        ctsurg::ValidationReport v = ctsurg::validate(d);
        if (!v.valid()) continue; // closing may have produced an invalid merge position
        for (int c = 0; c < v.component_count; ++c) d.reversed.push_back(uniform(rng, 0, 1) == 1);
        return d;
    }
}

inline FrontDiagram random_knot_front(Rng& rng, int max_events = 40) {
    for (;;) {
        FrontDiagram d = random_front(rng, max_events);
        if (ctsurg::validate(d).component_count == 1) return d;
    }
}

// Random valid positively transverse front by rejection: random closed words
// over cups/caps and over/under crossings until every tangency points up and
// no crossing is of the impossible kind.
inline ctsurg::TransverseFront random_tfront(Rng& rng, int max_events = 16) {
    using namespace ctsurg;
    for (;;) {
        TransverseFront t;
        int k = 0;
        int budget = uniform(rng, 2, max_events);
        while (static_cast<int>(t.events.size()) < budget) {
            int remaining = budget - static_cast<int>(t.events.size());
            if (k / 2 >= remaining) break;
            int choice = k < 2 ? 0 : uniform(rng, 0, 7);
            if (choice <= 1) {
                t.events.push_back(cup(uniform(rng, 1, k + 1)));
                k += 2;
            } else if (choice <= 3) {
                t.events.push_back(crossing_over(uniform(rng, 1, k - 1)));
            } else if (choice <= 5) {
                t.events.push_back(crossing_under(uniform(rng, 1, k - 1)));
            } else {
                t.events.push_back(cap(uniform(rng, 1, k - 1)));
                k -= 2;
            }
        }
        while (k > 0) {
            t.events.push_back(cap(uniform(rng, 1, std::max(1, k - 1))));
            k -= 2;
        }
        if (ctsurg::validate_transverse(t).valid()) return t;
    }
}

// front with prescribed (tb, rot) = (t, r), t + r odd: an odd coil of m
// self-crossings (tb = m - 2, rot = 0) stabilized down to the target
inline FrontDiagram front_with_invariants(long long t, long long r) {
    using namespace ctsurg;
    if (((t + r) % 2 + 2) % 2 != 1) throw Error("tb + rot must be odd for a knot front");
    long long m = t + 2 + std::llabs(r);
    if (m < 1) m = 1;
    if (m % 2 == 0) ++m;
    long long total = m - 2 - t; // number of stabilizations; total ≡ r (mod 2)
    long long d = (total + r) / 2;
    long long u = total - d;
    FrontDiagram f;
    f.events.push_back(left_cusp(1));
    f.events.push_back(left_cusp(3));
    for (long long i = 0; i < m; ++i) f.events.push_back(crossing(2));
    f.events.push_back(right_cusp(3));
    f.events.push_back(right_cusp(1));
    for (long long i = 0; i < u; ++i) f = stabilize(f, 0, ZigzagDir::up);
    for (long long i = 0; i < d; ++i) f = stabilize(f, 0, ZigzagDir::down);
    return f;
}

// --- random abstract presentations ----------------------------------------

inline ctsurg::SurgeryPresentation random_presentation(Rng& rng, std::size_t n,
                                                       bool require_nonsingular) {
    using namespace ctsurg;
    for (;;) {
        std::vector<SurgeryComponent> comps(n);
        std::vector<std::vector<long long>> lk(n, std::vector<long long>(n, 0));
        for (std::size_t i = 0; i < n; ++i) {
            comps[i].coefficient = uniform(rng, 0, 1) ? 1 : -1;
            comps[i].tb = uniform(rng, -9, 8);
            comps[i].rot = uniform(rng, -4, 4);
            lk[i][i] = comps[i].framing();
            for (std::size_t j = 0; j < i; ++j) {
                lk[i][j] = uniform(rng, -9, 9);
                lk[j][i] = lk[i][j];
            }
        }
        SurgeryPresentation p(std::move(comps), std::move(lk));
        if (!require_nonsingular || !determinant(linking_matrix(p)).is_zero()) return p;
    }
}

} // namespace testutil
