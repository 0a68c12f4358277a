#include "doctest.h"

#include "ctsurg/bigint.hpp"
#include "ctsurg/linalg.hpp"
#include "ctsurg/matrix.hpp"
#include "ctsurg/rational.hpp"
#include "ctsurg/snf.hpp"

#include "helpers.hpp"

using namespace ctsurg;

TEST_CASE("bigint arithmetic basics") {
    BigInt a(123456789012345LL), b(-987654321LL);
    CHECK((a + b).to_string() == "123455801358024");
    CHECK((a * b).to_string() == "-121932631124827861592745");
    CHECK((a - a).is_zero());
    CHECK(BigInt(-7) / BigInt(2) == BigInt(-3)); // truncated division
    CHECK(BigInt(-7) % BigInt(2) == BigInt(-1));
    CHECK(gcd(BigInt(48), BigInt(-18)) == BigInt(6));
    CHECK(BigInt(0).to_string() == "0");
    CHECK(BigInt(-1) < BigInt(0));
    CHECK(BigInt(1LL << 40).to_long_long() == (1LL << 40));

    // multiplication against a grade-school witness on big operands
    BigInt big(1);
    for (int i = 0; i < 30; ++i) big *= BigInt(1000000007LL);
    CHECK((big / BigInt(1000000007LL) * BigInt(1000000007LL)) == big);
    CHECK((big % BigInt(1000000007LL)).is_zero());
}

TEST_CASE("rational normalization and rendering") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(-2, -4) == Rational(1, 2));
    CHECK(Rational(3, -6).to_string() == "-1/2");
    CHECK(Rational(8, 4).to_string() == "2");
    CHECK((Rational(1, 2) + Rational(1, 3)) == Rational(5, 6));
    CHECK((Rational(1, 2) * Rational(2, 3)) == Rational(1, 3));
    CHECK(Rational(1, 2) < Rational(2, 3));
    CHECK((Rational(-7, 4)).to_string() == "-7/4");
}

TEST_CASE("determinant: frozen values and cofactor oracle") {
    // [[t+1, t], [t, t-1]] has determinant -1 for every t
    for (long long t = -5; t <= 5; ++t) {
        IntMat m = IntMat::from_rows({{t + 1, t}, {t, t - 1}});
        CHECK(determinant(m) == BigInt(-1));
    }
    CHECK(determinant(IntMat::identity(4)) == BigInt(1));
    CHECK(determinant(IntMat::from_rows({{0, 1, 1}, {1, 0, -1}, {1, -1, -2}})) == BigInt(0));
    CHECK(determinant(IntMat()) == BigInt(1)); // empty product

    testutil::Rng rng(12345);
    for (int it = 0; it < 60; ++it) {
        std::size_t n = testutil::uniform(rng, 0, 5);
        IntMat m = testutil::random_matrix(rng, n);
        CHECK(determinant(m) == testutil::det_cofactor(m));
    }
}

TEST_CASE("solve_rational: displayed system and plug-back") {
    // at (t, r) = (-1, 0): a = r - 2t = 2, b = 2 - r + 2t = 0
    IntMat m = IntMat::from_rows({{0, -1}, {-1, -2}});
    auto x = solve_rational(m, {BigInt(0), BigInt(-2)});
    REQUIRE(x.has_value());
    CHECK((*x)[0] == Rational(2));
    CHECK((*x)[1] == Rational(0));

    auto id = solve_rational(IntMat::identity(3), {BigInt(4), BigInt(-5), BigInt(6)});
    REQUIRE(id.has_value());
    CHECK((*id)[1] == Rational(-5));

    CHECK_FALSE(solve_rational(IntMat::from_rows({{1, 1}, {1, 1}}), {BigInt(1), BigInt(0)})
                    .has_value());
    CHECK_THROWS_AS(solve_rational(IntMat::from_rows({{1, 1}}), {BigInt(1)}), DimensionMismatch);

    testutil::Rng rng(777);
    for (int it = 0; it < 40; ++it) {
        std::size_t n = testutil::uniform(rng, 1, 5);
        IntMat a = testutil::random_matrix(rng, n);
        std::vector<BigInt> b(n);
        for (auto& v : b) v = BigInt(testutil::uniform(rng, -9, 9));
        auto sol = solve_rational(a, b);
        if (determinant(a).is_zero()) {
            CHECK_FALSE(sol.has_value());
            continue;
        }
        REQUIRE(sol.has_value());
        for (std::size_t i = 0; i < n; ++i) {
            Rational acc(0);
            for (std::size_t j = 0; j < n; ++j) acc += Rational(a.at(i, j)) * (*sol)[j];
            CHECK(acc == Rational(b[i]));
        }
    }
}

TEST_CASE("signature: frozen values, oracle, congruence invariance") {
    for (long long t = -5; t <= 5; ++t)
        CHECK(signature_symmetric(IntMat::from_rows({{t + 1, t}, {t, t - 1}})) == 0);
    CHECK(signature_symmetric(IntMat::from_rows({{1, 0}, {0, -1}})) == 0);
    CHECK(signature_symmetric(IntMat::from_rows({{2, 1}, {1, 2}})) == 2);
    CHECK(signature_symmetric(IntMat::from_rows({{0, 1}, {1, 0}})) == 0);
    CHECK(signature_symmetric(IntMat(0, 0)) == 0);
    CHECK_THROWS_AS(signature_symmetric(IntMat::from_rows({{1, 2}, {3, 4}})), NotSymmetric);

    testutil::Rng rng(2024);
    for (int it = 0; it < 80; ++it) {
        std::size_t n = testutil::uniform(rng, 1, 5);
        IntMat m = testutil::random_symmetric(rng, n);
        int sig = signature_symmetric(m);
        CHECK(sig == testutil::signature_lagrange(m));
        IntMat p = testutil::random_unimodular(rng, n);
        IntMat conj = p.transpose() * m * p;
        CHECK(signature_symmetric(conj) == sig);
    }
}

TEST_CASE("smith normal form: frozen diagonals") {
    CHECK(smith_diagonal(IntMat::from_rows({{0}})) == std::vector<BigInt>{BigInt(0)});
    CHECK(smith_diagonal(IntMat::from_rows({{0, -1}, {-1, -2}})) ==
          std::vector<BigInt>{BigInt(1), BigInt(1)});
    CHECK(smith_diagonal(IntMat::from_rows({{0, 1, 1}, {1, 0, -1}, {1, -1, -2}})) ==
          std::vector<BigInt>{BigInt(1), BigInt(1), BigInt(0)});
    // torsion example: 2x2 with determinant 4 and content 2
    CHECK(smith_diagonal(IntMat::from_rows({{2, 0}, {0, 2}})) ==
          std::vector<BigInt>{BigInt(2), BigInt(2)});
    CHECK(smith_diagonal(IntMat::from_rows({{2, 1}, {0, 2}})) ==
          std::vector<BigInt>{BigInt(1), BigInt(4)});
}

TEST_CASE("smith normal form: U*M*V = D, unimodularity, divisibility chain") {
    testutil::Rng rng(99);
    for (int it = 0; it < 100; ++it) {
        std::size_t n = testutil::uniform(rng, 1, 5);
        std::size_t c = testutil::uniform(rng, 1, 5);
        IntMat m(n, c);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < c; ++j) m.at(i, j) = BigInt(testutil::uniform(rng, -9, 9));
        SnfResult s = smith_normal_form(m);
        CHECK(s.u * m * s.v == s.d);
        CHECK(determinant(s.u).abs() == BigInt(1));
        CHECK(determinant(s.v).abs() == BigInt(1));
        BigInt prev;
        bool prev_set = false;
        BigInt diag_prod(1);
        for (std::size_t k = 0; k < std::min(n, c); ++k) {
            const BigInt& d = s.d.at(k, k);
            CHECK(d.sign() >= 0);
            if (prev_set && !prev.is_zero()) CHECK((d % prev).is_zero());
            if (prev_set && prev.is_zero()) CHECK(d.is_zero());
            prev = d;
            prev_set = true;
            diag_prod *= d;
            // off-diagonal entries vanish
            for (std::size_t j = 0; j < c; ++j)
                if (j != k) CHECK(s.d.at(k, j).is_zero());
        }
        if (n == c) CHECK(determinant(m).abs() == diag_prod.abs());
    }
}
