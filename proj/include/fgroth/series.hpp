#pragma once

#include <vector>

#include "fgroth/poly.hpp"

namespace fgroth {

/// A Laurent series sum_n c_n z^n over capped polynomials, known exactly on the
/// window [lo, hi]. Outside the window a side is either known to vanish
/// (`zero_below` / `zero_above`) or unknown; reading an unknown coefficient
/// throws WindowError rather than returning a partial value.
class SeriesWindow {
public:
    SeriesWindow(int n_vars, Caps caps, int lo, int hi, bool zero_below, bool zero_above);

    // A finite Laurent polynomial, zero outside [lo, hi].
    static SeriesWindow finite(int n_vars, Caps caps, int lo, std::vector<Poly> coeffs);

    int lo() const { return lo_; }
    int hi() const { return hi_; }
    bool zero_below() const { return zero_below_; }
    bool zero_above() const { return zero_above_; }
    bool empty() const { return hi_ < lo_; }
    int n_vars() const { return n_vars_; }
    const Caps& caps() const { return caps_; }

    bool known(int n) const;
    // Coefficient of z^n; WindowError if it is not known exactly.
    Poly coeff(int n) const;
    void set(int n, Poly p);

    // Product with the validity window shrunk to the n whose convolution sum
    // only touches known or known-zero coefficients of both factors.
    friend SeriesWindow operator*(const SeriesWindow& a, const SeriesWindow& b);

    // Restriction to [lo, hi] (must lie within the known window).
    SeriesWindow restricted(int lo, int hi) const;

private:
    int n_vars_;
    Caps caps_;
    int lo_, hi_;
    bool zero_below_, zero_above_;
    std::vector<Poly> coeffs_;
};

/// 1 / (1 + b z^-1) = sum_{s>=0} (-b)^s z^-s.
/// Complete (zero below -B) when the b-cap B is finite; otherwise expanded down
/// to z^`lo` and unknown below.
SeriesWindow geometric_factor(int n_vars, Caps caps, int lo);

/// (1 + b x_k) / (1 - x_k z). Complete up to z^D when the x-cap D is finite,
/// otherwise expanded up to z^`hi` and unknown above.
SeriesWindow flag_factor(int n_vars, Caps caps, int k, int hi);

/// (1 - x_k z) / (1 + b x_k). Needs a finite b- or x-cap to expand 1/(1 + b x_k).
SeriesWindow inverse_flag_factor(int n_vars, Caps caps, int k);

}  // namespace fgroth
