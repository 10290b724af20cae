#pragma once

#include <map>
#include <string_view>
#include <tuple>

#include "fgroth/determinant.hpp"
#include "fgroth/series.hpp"
#include "fgroth/shapes.hpp"

namespace fgroth {

/// Which one-row generating function feeds the determinant.
///  - double_bracket: for p < q - 1 the factors (1 - x_k z)/(1 + b x_k), k = p+1..q-1, are kept.
///  - matsumura: for p < q only the geometric factor 1/(1 + b z^-1) remains.
/// Both use (1 + b z^-1)^-1 prod_{k=q..p} (1 + b x_k)/(1 - x_k z) when p >= q.
enum class GVariant { double_bracket, matsumura };

std::string_view to_string(GVariant v);
GVariant parse_variant(std::string_view s);

/// Coefficients G_n^{p/q}(x) of z^n for n in [lo, hi], exact in the quotient
/// ring given by `caps`. Throws WindowError when the caps cannot make the
/// requested coefficients exact (both caps unbounded).
SeriesWindow g_series(int p, int q, GVariant variant, int lo, int hi, int n_vars, Caps caps);

/// Jacobi-Trudi matrix of an instance. Entry (i, j) (1-based) is
///   sum_{s >= 0} C(i - j, s) b^s G^{f_i/g_j}_{lambda_i - mu_j - i + j + s},
/// whose s-sum is finite for i >= j and is cut at s = beta cap otherwise
/// (every summand carries b^s, so the cut is exact in the quotient ring).
/// One series window per distinct (f_i, g_j) is shared by all entries.
class JacobiTrudi {
public:
    JacobiTrudi(const SkewFlagged& inst, GVariant variant);

    Poly entry(int i, int j);
    PolyMatrix matrix();
    Poly determinant();

private:
    const SeriesWindow& series_for(int p, int q);
    int sum_length(int i, int j) const;

    SkewFlagged inst_;
    GVariant variant_;
    std::map<std::pair<int, int>, std::pair<int, int>> ranges_;  // (p, q) -> needed [lo, hi]
    std::map<std::pair<int, int>, SeriesWindow> series_;
    std::map<std::tuple<int, int, int, int>, Poly> entries_;  // (p, q, degree, i - j)
};

Poly jt_entry(int i, int j, const SkewFlagged& inst, GVariant variant);
Poly jt_determinant(const SkewFlagged& inst, GVariant variant);

}  // namespace fgroth
