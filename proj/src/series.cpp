#include "fgroth/series.hpp"

#include <algorithm>
#include <climits>
#include <string>

#include "fgroth/errors.hpp"

namespace fgroth {

SeriesWindow::SeriesWindow(int n_vars, Caps caps, int lo, int hi, bool zero_below, bool zero_above)
    : n_vars_(n_vars), caps_(caps), lo_(lo), hi_(hi), zero_below_(zero_below), zero_above_(zero_above) {
    if (hi_ >= lo_) coeffs_.assign(static_cast<std::size_t>(hi_ - lo_ + 1), Poly(n_vars, caps));
}

SeriesWindow SeriesWindow::finite(int n_vars, Caps caps, int lo, std::vector<Poly> coeffs) {
    SeriesWindow s(n_vars, caps, lo, lo + static_cast<int>(coeffs.size()) - 1, true, true);
    for (std::size_t i = 0; i < coeffs.size(); ++i) s.coeffs_[i] = coeffs[i].truncated(caps);
    return s;
}

bool SeriesWindow::known(int n) const {
    if (n >= lo_ && n <= hi_) return true;
    if (n < lo_) return zero_below_;
    return zero_above_;
}

Poly SeriesWindow::coeff(int n) const {
    if (n >= lo_ && n <= hi_) return coeffs_[static_cast<std::size_t>(n - lo_)];
    if ((n < lo_ && zero_below_) || (n > hi_ && zero_above_)) return Poly(n_vars_, caps_);
    throw WindowError("series coefficient z^" + std::to_string(n) + " is outside the exact window [" +
                      std::to_string(lo_) + ", " + std::to_string(hi_) + "]");
}

void SeriesWindow::set(int n, Poly p) {
    if (n < lo_ || n > hi_) throw WindowError("set outside window");
    coeffs_[static_cast<std::size_t>(n - lo_)] = std::move(p).truncated(caps_);
}

SeriesWindow operator*(const SeriesWindow& a, const SeriesWindow& b) {
    if (a.n_vars_ != b.n_vars_) throw UsageError("series over different variable counts");
    const Caps caps = common_caps(a.caps_, b.caps_);
    if (a.empty() || b.empty()) return SeriesWindow(a.n_vars_, caps, 0, -1, false, false);

    // c_n = sum_k a_k b_{n-k}. Each unknown side of one factor must meet only
    // known zeros of the other factor.
    long lo = long(a.lo_) + b.lo_;
    long hi = long(a.hi_) + b.hi_;
    auto need = [&](bool ok, bool other_zero, long bound, bool lower) {
        if (ok) return;
        if (!other_zero) {
            lo = LONG_MAX;
            hi = LONG_MIN;
        } else if (lower) {
            lo = std::max(lo, bound);
        } else {
            hi = std::min(hi, bound);
        }
    };
    need(a.zero_below_, b.zero_above_, long(a.lo_) + b.hi_, true);
    need(a.zero_above_, b.zero_below_, long(a.hi_) + b.lo_, false);
    need(b.zero_below_, a.zero_above_, long(b.lo_) + a.hi_, true);
    need(b.zero_above_, a.zero_below_, long(b.hi_) + a.lo_, false);

    if (hi < lo) return SeriesWindow(a.n_vars_, caps, 0, -1, false, false);
    SeriesWindow out(a.n_vars_, caps, int(lo), int(hi), a.zero_below_ && b.zero_below_, a.zero_above_ && b.zero_above_);
    for (int n = out.lo_; n <= out.hi_; ++n) {
        Poly acc(a.n_vars_, caps);
        const int k_lo = std::max(a.lo_, n - b.hi_);
        const int k_hi = std::min(a.hi_, n - b.lo_);
        for (int k = k_lo; k <= k_hi; ++k) {
            const Poly& x = a.coeffs_[static_cast<std::size_t>(k - a.lo_)];
            const Poly& y = b.coeffs_[static_cast<std::size_t>(n - k - b.lo_)];
            if (!x.is_zero() && !y.is_zero()) acc += x * y;
        }
        out.coeffs_[static_cast<std::size_t>(n - out.lo_)] = std::move(acc);
    }
    return out;
}

SeriesWindow SeriesWindow::restricted(int lo, int hi) const {
    SeriesWindow out(n_vars_, caps_, lo, hi, false, false);
    for (int n = lo; n <= hi; ++n) out.coeffs_[static_cast<std::size_t>(n - lo)] = coeff(n);
    return out;
}

SeriesWindow geometric_factor(int n_vars, Caps caps, int lo) {
    const bool complete = caps.beta_bounded();
    const int bottom = complete ? -caps.beta : std::min(lo, 0);
    SeriesWindow s(n_vars, caps, bottom, 0, complete, true);
    for (int e = 0; e <= -bottom; ++e) {
        if (e > Monomial::kMaxExponent) throw WindowError("geometric factor window exceeds exponent range");
        s.set(-e, Poly::monomial(n_vars, caps, Monomial::beta_power(e), e % 2 ? -1 : 1));
    }
    return s;
}

SeriesWindow flag_factor(int n_vars, Caps caps, int k, int hi) {
    const bool complete = caps.x_bounded();
    const int top = complete ? caps.x : std::max(hi, 0);
    if (top > Monomial::kMaxExponent) throw WindowError("flag factor window exceeds exponent range");
    SeriesWindow s(n_vars, caps, 0, top, true, complete);
    const Poly numerator = Poly::constant(n_vars, caps, 1) + Poly::beta(n_vars, caps) * Poly::x(n_vars, caps, k);
    for (int m = 0; m <= top; ++m) s.set(m, Poly::x(n_vars, caps, k, m) * numerator);
    return s;
}

SeriesWindow inverse_flag_factor(int n_vars, Caps caps, int k) {
    if (!caps.beta_bounded() && !caps.x_bounded())
        throw WindowError("1/(1 + b x" + std::to_string(k) + ") has no finite expansion without a b- or x-cap");
    const int top = std::min(caps.beta, caps.x);
    if (top > Monomial::kMaxExponent) throw WindowError("inverse factor exceeds exponent range");
    Poly inv(n_vars, caps);
    const Poly bx = Poly::beta(n_vars, caps) * Poly::x(n_vars, caps, k);
    Poly power = Poly::constant(n_vars, caps, 1);
    for (int t = 0; t <= top; ++t) {
        inv.add_scaled(power, t % 2 ? -1 : 1);
        power = power * bx;
    }
    return SeriesWindow::finite(n_vars, caps, 0, {inv, -(Poly::x(n_vars, caps, k) * inv)});
}

}  // namespace fgroth
