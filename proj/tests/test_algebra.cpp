#include <random>

#include "doctest.h"
#include "fgroth/determinant.hpp"
#include "fgroth/errors.hpp"
#include "fgroth/poly.hpp"
#include "fgroth/series.hpp"

using namespace fgroth;

namespace {

const Caps kFree{};

Poly X(int n, int k, Caps c = kFree) { return Poly::x(n, c, k); }
Poly B(int n, Caps c = kFree) { return Poly::beta(n, c); }
Poly C(int n, std::int64_t v, Caps c = kFree) { return Poly::constant(n, c, v); }

Poly random_poly(std::mt19937& rng, int n, Caps caps) {
    std::uniform_int_distribution<int> e(0, 2), c(-3, 3), len(0, 4);
    std::vector<Term> terms;
    for (int t = len(rng); t > 0; --t) {
        Monomial m = Monomial::beta_power(e(rng));
        for (int k = 1; k <= n; ++k) m = m * Monomial::x_power(k, e(rng));
        terms.push_back({m, c(rng)});
    }
    return Poly::from_terms(n, caps, std::move(terms));
}

}  // namespace

TEST_CASE("rational arithmetic") {
    CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
    CHECK(Rational(4, -6) == Rational(-2, 3));
    CHECK(Rational(-2, 3).to_string() == "-2/3");
    CHECK(Rational(7).to_string() == "7");
    CHECK_THROWS_AS(Rational(1, 0), std::domain_error);

    const Rational big = Rational(std::int64_t{1} << 62) * Rational(8);
    CHECK(big.to_string() == "36893488147419103232");
    CHECK_THROWS_AS(big.to_int64(), InvariantViolation);
    CHECK((big / Rational(16)).to_int64() == (std::int64_t{1} << 61));
    CHECK((big - big).is_zero());
}

TEST_CASE("ring operation examples") {
    CHECK((X(1, 1) + B(1)) * (X(1, 1) - B(1)) == X(1, 1) * X(1, 1) - B(1) * B(1));
    CHECK(((C(1, 1) + B(1) * X(1, 1)) * C(1, 0)).is_zero());

    const Caps c1{1, Caps::kUnbounded};
    const Poly lhs = (C(2, 1, c1) + B(2, c1) * X(2, 1, c1)) * (C(2, 1, c1) + B(2, c1) * X(2, 2, c1));
    CHECK(lhs == C(2, 1, c1) + B(2, c1) * X(2, 1, c1) + B(2, c1) * X(2, 2, c1));

    CHECK_THROWS_AS(X(1, 1) + X(2, 1), UsageError);
}

TEST_CASE("text rendering") {
    CHECK((X(2, 1) + X(2, 2) + B(2) * X(2, 1) * X(2, 2)).to_text() == "x1 + x2 + b*x1*x2");
    CHECK((C(2, 2) * B(2) * X(2, 1)).to_text() == "2*b*x1");
    CHECK(C(0, 0).to_text() == "0");
    CHECK((-X(2, 2) * X(2, 2)).to_text() == "-x2^2");
}

TEST_CASE("result caps are the componentwise minimum") {
    const Poly a = X(1, 1, {2, 5}), b = X(1, 1, {4, 3});
    CHECK((a * b).caps() == Caps{2, 3});
    const Poly cube = (a * b) * X(1, 1, {9, 9}) * X(1, 1, {9, 9});
    CHECK(cube.is_zero());
}

TEST_CASE("ring laws on random polynomials") {
    std::mt19937 rng(17);
    const Caps caps{3, 5};
    for (int trial = 0; trial < 200; ++trial) {
        const Poly a = random_poly(rng, 3, caps), b = random_poly(rng, 3, caps), c = random_poly(rng, 3, caps);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * b == b * a);
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a + b) - b == a);
    }
}

TEST_CASE("truncation is a ring homomorphism") {
    std::mt19937 rng(29);
    const Caps small{1, 3};
    for (int trial = 0; trial < 200; ++trial) {
        const Poly a = random_poly(rng, 2, kFree), b = random_poly(rng, 2, kFree);
        CHECK((a * b).truncated(small) == (a.truncated(small) * b.truncated(small)).truncated(small));
        CHECK((a + b).truncated(small) == a.truncated(small) + b.truncated(small));
        CHECK_FALSE(a.truncated(small).exceeds(small));
    }
}

TEST_CASE("generalized binomial") {
    CHECK(gen_binomial(2, 1) == 2);
    CHECK(gen_binomial(-2, 3) == -4);
    for (int s = 0; s < 8; ++s) CHECK(gen_binomial(-1, s) == (s % 2 ? -1 : 1));

    // Coefficients of (1 + t)^a, built by repeated multiplication by (1 + t) or 1/(1 + t).
    const int S = 8;
    for (int a = -5; a <= 5; ++a) {
        std::vector<std::int64_t> c(S + 1, 0);
        c[0] = 1;
        for (int k = 0; k < std::abs(a); ++k) {
            if (a > 0)
                for (int s = S; s >= 1; --s) c[s] += c[s - 1];
            else
                for (int s = 1; s <= S; ++s) c[s] -= c[s - 1];
        }
        for (int s = 0; s <= S; ++s) CHECK_MESSAGE(gen_binomial(a, s) == c[s], "a=" << a << " s=" << s);
    }
}

TEST_CASE("determinant examples") {
    CHECK(determinant({{X(1, 1)}}) == X(1, 1));
    CHECK(determinant({{C(1, 1), C(1, 0)}, {C(1, 0), C(1, 1)}}) == C(1, 1));
    const Poly x = X(1, 1);
    CHECK(determinant({{x, -B(1)}, {x * x, x}}) == x * x + B(1) * x * x);
    CHECK_THROWS_AS(determinant({{x, x}}), UsageError);
}

TEST_CASE("3x3 determinant against the permutation expansion") {
    std::mt19937 rng(5);
    const Caps caps{2, 4};
    std::vector<Poly> pool = {C(2, 0, caps), C(2, 1, caps), C(2, -2, caps), X(2, 1, caps),
                              X(2, 2, caps), B(2, caps),    B(2, caps) * X(2, 2, caps), -X(2, 1, caps) * X(2, 2, caps)};
    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
    const int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
    const int signs[6] = {1, -1, -1, 1, 1, -1};
    for (int trial = 0; trial < 300; ++trial) {
        PolyMatrix m(3, std::vector<Poly>(3));
        for (auto& row : m)
            for (auto& e : row) e = pool[pick(rng)];
        Poly expect(2, caps);
        for (int p = 0; p < 6; ++p)
            expect += Rational(signs[p]) * (m[0][perms[p][0]] * m[1][perms[p][1]] * m[2][perms[p][2]]);
        CHECK(determinant(m) == expect);
    }
}

TEST_CASE("series windows") {
    const Caps caps{3, 4};
    SUBCASE("product of two finite series") {
        const auto a = SeriesWindow::finite(2, caps, 0, {C(2, 1, caps), X(2, 1, caps)});
        const auto b = SeriesWindow::finite(2, caps, 0, {C(2, 1, caps), X(2, 2, caps)});
        const auto p = a * b;
        CHECK(p.coeff(0) == C(2, 1, caps));
        CHECK(p.coeff(1) == X(2, 1, caps) + X(2, 2, caps));
        CHECK(p.coeff(2) == X(2, 1, caps) * X(2, 2, caps));
        CHECK(p.coeff(5).is_zero());
    }
    SUBCASE("geometric factor times one") {
        const auto g = geometric_factor(1, caps, -5);
        const auto one = SeriesWindow::finite(1, caps, 0, {C(1, 1, caps)});
        const auto p = g * one;
        for (int n = -3; n <= 0; ++n) CHECK(p.coeff(n) == g.coeff(n));
        Poly mb = C(1, 1, caps);
        for (int s = 0; s <= 3; ++s, mb *= -B(1, caps)) CHECK(g.coeff(-s) == mb);
    }
    SUBCASE("beta terms telescope in the one-variable series") {
        const auto g = geometric_factor(1, caps, -8) * flag_factor(1, caps, 1, 8);
        CHECK(g.coeff(1) == X(1, 1, caps));
        CHECK(g.coeff(0) == C(1, 1, caps));
    }
    SUBCASE("unknown coefficients are refused") {
        const auto w = SeriesWindow(1, {}, 0, 3, false, false);
        CHECK_THROWS_AS(w.coeff(7), WindowError);
        CHECK_THROWS_AS(w.coeff(-1), WindowError);
    }
}
