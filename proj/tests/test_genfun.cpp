#include "doctest.h"
#include "fgroth/errors.hpp"
#include "fgroth/genfun.hpp"

using namespace fgroth;

namespace {

// Complete homogeneous / elementary symmetric polynomials in x_lo..x_hi by monomial enumeration.
void h_rec(int k, int hi, int left, Poly acc, Poly& out) {
    if (left == 0) {
        out += acc;
        return;
    }
    if (k > hi) return;
    h_rec(k, hi, left - 1, acc * Poly::x(acc.n_vars(), acc.caps(), k), out);
    h_rec(k + 1, hi, left, acc, out);
}

Poly h(int n, int lo, int hi, int nv, Caps c) {
    Poly out(nv, c);
    if (n < 0) return out;
    h_rec(lo, hi, n, Poly::constant(nv, c, 1), out);
    return out;
}

Poly e(int n, int lo, int hi, int nv, Caps c) {
    Poly out(nv, c);
    if (n < 0) return out;
    if (n == 0) return Poly::constant(nv, c, 1);
    for (int k = lo; k <= hi; ++k) out += Poly::x(nv, c, k) * e(n - 1, k + 1, hi, nv, c);
    return out;
}

Poly power(const Poly& p, int k) {
    Poly r = Poly::constant(p.n_vars(), p.caps(), 1);
    while (k-- > 0) r *= p;
    return r;
}

// G_n^{[[p/q]]} assembled from closed forms: with P = prod (1 + b x_k),
//   p >= q:     P * sum_s (-b)^s h_{n+s}(x_q..x_p)
//   p = q - 1:  (-b)^{-n} for n <= 0
//   p < q - 1:  prod 1/(1 + b x_k) * sum_s (-b)^s (-1)^{n+s} e_{n+s}(x_{p+1}..x_{q-1})
Poly oracle(int n, int p, int q, int nv, Caps c) {
    const Poly one = Poly::constant(nv, c, 1);
    const Poly mb = -Poly::beta(nv, c);
    Poly out(nv, c);
    if (p >= q) {
        Poly prod = one;
        for (int k = q; k <= p; ++k) prod *= one + Poly::beta(nv, c) * Poly::x(nv, c, k);
        for (int s = 0; s <= c.beta; ++s) out += power(mb, s) * h(n + s, q, p, nv, c);
        return prod * out;
    }
    if (p == q - 1) return n <= 0 ? power(mb, -n) : out;
    Poly inv = one;
    for (int k = p + 1; k <= q - 1; ++k) {
        Poly geo(nv, c);
        for (int j = 0; j <= c.beta; ++j) geo += power(mb * Poly::x(nv, c, k), j);
        inv *= geo;
    }
    for (int s = 0; s <= c.beta; ++s) {
        const int m = n + s;
        out += Rational(m % 2 ? -1 : 1) * (power(mb, s) * e(m, p + 1, q - 1, nv, c));
    }
    return inv * out;
}

}  // namespace

TEST_CASE("one-row series against closed forms") {
    const int nv = 4;
    const Caps c{3, 7};
    for (int p = 0; p <= 4; ++p)
        for (int q = 1; q <= 4; ++q) {
            const auto s = g_series(p, q, GVariant::double_bracket, -4, 5, nv, c);
            for (int n = -4; n <= 5; ++n) CHECK_MESSAGE(s.coeff(n) == oracle(n, p, q, nv, c), "n=" << n << " p=" << p << " q=" << q);
        }
}

TEST_CASE("variants agree for p >= q - 1 and differ below") {
    const Caps c{3, 6};
    for (int p = 0; p <= 3; ++p)
        for (int q = 1; q <= 4; ++q) {
            const auto a = g_series(p, q, GVariant::double_bracket, -3, 4, 3, c);
            const auto b = g_series(p, q, GVariant::matsumura, -3, 4, 3, c);
            bool same = true;
            for (int n = -3; n <= 4; ++n) same = same && a.coeff(n) == b.coeff(n);
            CHECK_MESSAGE(same == (p >= q - 1), "p=" << p << " q=" << q);
        }
}

TEST_CASE("b = 0 gives complete homogeneous polynomials") {
    const Caps c{0, Caps::kUnbounded};
    for (int q = 1; q <= 3; ++q)
        for (int p = q; p <= 3; ++p) {
            const auto s = g_series(p, q, GVariant::double_bracket, 0, 5, 3, c);
            for (int n = 0; n <= 5; ++n) CHECK(s.coeff(n) == h(n, q, p, 3, c));
        }
}

TEST_CASE("small values of the one-row coefficients") {
    const Caps c{2, 4};
    const auto s = g_series(1, 1, GVariant::double_bracket, -2, 2, 1, c);
    CHECK(s.coeff(1) == Poly::x(1, c, 1));
    CHECK(s.coeff(0) == Poly::constant(1, c, 1));
    CHECK(s.coeff(-1) == -Poly::beta(1, c));
    const auto empty = g_series(1, 2, GVariant::double_bracket, -2, 1, 1, c);
    CHECK(empty.coeff(0) == Poly::constant(1, c, 1));
    CHECK(empty.coeff(-1) == -Poly::beta(1, c));
    CHECK(empty.coeff(1).is_zero());
    CHECK_THROWS_AS(g_series(1, 0, GVariant::double_bracket, 0, 1, 1, c), UsageError);
}

TEST_CASE("determinant examples") {
    const auto one_cell = SkewFlagged::make(Partition{1}, Partition{}, {2}, {1}, 2);
    CHECK(jt_determinant(one_cell, GVariant::double_bracket).to_text() == "x1 + x2 + b*x1*x2");
    const auto column = SkewFlagged::make(Partition{1, 1}, Partition{}, {1, 2}, {1, 1}, 2);
    CHECK(jt_determinant(column, GVariant::double_bracket).to_text() == "x1*x2");
    for (auto f : {std::vector<int>{1, 1}, {2, 3}, {3, 1}}) {
        const auto empty = SkewFlagged::make(Partition{2, 1}, Partition{2, 1}, f, {1, 1}, 3);
        CHECK(jt_determinant(empty, GVariant::double_bracket) == Poly::constant(3, empty.caps, 1));
    }
}

TEST_CASE("entries and equal rows") {
    const auto inst = SkewFlagged::make(Partition{2, 2, 1}, Partition{1}, {2, 3, 3}, {1, 2, 1}, 3, 3, 8);
    JacobiTrudi jt(inst, GVariant::double_bracket);
    auto m = jt.matrix();
    CHECK(m[0][1] == jt_entry(1, 2, inst, GVariant::double_bracket));
    m[2] = m[0];
    CHECK(determinant(m).is_zero());
    std::swap(m[0], m[1]);
    CHECK(determinant(jt.matrix()) == jt.determinant());
}

TEST_CASE("entries above the diagonal need a b-cap") {
    auto inst = SkewFlagged::make(Partition{1, 1}, Partition{}, {1, 2}, {1, 1}, 2);
    inst.caps.beta = Caps::kUnbounded;
    CHECK_THROWS_AS(jt_determinant(inst, GVariant::double_bracket), WindowError);
}

TEST_CASE("raising the caps leaves g = 1 determinants unchanged") {
    for (auto f : {std::vector<int>{1, 2}, {2, 2}, {2, 3}, {3, 3}}) {
        const auto inst = SkewFlagged::make(Partition{3, 2}, Partition{1}, f, {1, 1}, 3);
        const Poly base = jt_determinant(inst, GVariant::double_bracket);
        for (int extra = 1; extra <= 3; ++extra) {
            const Caps up = inst.caps.raised(extra);
            const auto big = SkewFlagged::make(inst.lambda, inst.mu, f, {1, 1}, 3, up.beta, up.x);
            CHECK(jt_determinant(big, GVariant::double_bracket) == base);
        }
    }
}
