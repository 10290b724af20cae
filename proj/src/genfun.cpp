#include "fgroth/genfun.hpp"

#include <algorithm>
#include <string>

#include "fgroth/errors.hpp"

namespace fgroth {

std::string_view to_string(GVariant v) { return v == GVariant::double_bracket ? "double_bracket" : "matsumura"; }

GVariant parse_variant(std::string_view s) {
    if (s == "double_bracket") return GVariant::double_bracket;
    if (s == "matsumura") return GVariant::matsumura;
    throw UsageError("unknown variant '" + std::string(s) + "' (expected double_bracket or matsumura)");
}

SeriesWindow g_series(int p, int q, GVariant variant, int lo, int hi, int n_vars, Caps caps) {
    if (q < 1 || p < 0) throw UsageError("g_series needs p >= 0 and q >= 1");
    if (hi < lo) throw UsageError("g_series: empty coefficient range");

    int flags = 0, inverses = 0;
    if (p >= q) {
        if (p > n_vars) throw UsageError("g_series: x" + std::to_string(p) + " exceeds n_vars");
        flags = p - q + 1;
    } else if (variant == GVariant::double_bracket && p < q - 1) {
        if (q - 1 > n_vars) throw UsageError("g_series: x" + std::to_string(q - 1) + " exceeds n_vars");
        inverses = q - 1 - p;
    }

    // Every z^m (m > 0) from a flag factor carries x-degree m and every z^-s from
    // the geometric factor carries b^s, so with finite caps all factors are
    // finite Laurent polynomials in the quotient ring. With one cap unbounded
    // the corresponding factor is expanded far enough to cover [lo, hi].
    const int beta_reach = caps.beta_bounded() ? caps.beta : 0;
    const int flag_top = hi + beta_reach;
    const int rest_top = flags * (caps.x_bounded() ? caps.x : std::max(flag_top, 0)) + inverses;

    SeriesWindow acc = geometric_factor(n_vars, caps, lo - rest_top - 1);
    for (int k = q; k <= p; ++k) acc = acc * flag_factor(n_vars, caps, k, flag_top);
    for (int k = p + 1; k <= q - 1 && inverses > 0; ++k) acc = acc * inverse_flag_factor(n_vars, caps, k);
    return acc.restricted(lo, hi);
}

JacobiTrudi::JacobiTrudi(const SkewFlagged& inst, GVariant variant) : inst_(inst), variant_(variant) {
    inst_.validate();
    const int r = inst_.rows();
    for (int i = 1; i <= r; ++i) {
        for (int j = 1; j <= r; ++j) {
            const int p = inst_.f[static_cast<std::size_t>(i - 1)];
            const int q = inst_.g[static_cast<std::size_t>(j - 1)];
            const int base = inst_.lambda(i) - inst_.mu(j) - i + j;
            const int top = base + sum_length(i, j);
            auto [it, fresh] = ranges_.try_emplace({p, q}, base, top);
            if (!fresh) {
                it->second.first = std::min(it->second.first, base);
                it->second.second = std::max(it->second.second, top);
            }
        }
    }
}

int JacobiTrudi::sum_length(int i, int j) const {
    if (i >= j) return i - j;
    if (!inst_.caps.beta_bounded())
        throw WindowError("Jacobi-Trudi entry above the diagonal is an infinite b-series; a finite b-cap is required");
    return inst_.caps.beta;
}

const SeriesWindow& JacobiTrudi::series_for(int p, int q) {
    auto it = series_.find({p, q});
    if (it != series_.end()) return it->second;
    const auto [lo, hi] = ranges_.at({p, q});
    return series_.emplace(std::make_pair(p, q), g_series(p, q, variant_, lo, hi, inst_.n_vars, inst_.caps))
        .first->second;
}

Poly JacobiTrudi::entry(int i, int j) {
    const int r = inst_.rows();
    if (i < 1 || j < 1 || i > r || j > r) throw UsageError("Jacobi-Trudi entry index out of range");
    const int p = inst_.f[static_cast<std::size_t>(i - 1)];
    const int q = inst_.g[static_cast<std::size_t>(j - 1)];
    const int base = inst_.lambda(i) - inst_.mu(j) - i + j;
    const auto key = std::make_tuple(p, q, base, i - j);
    if (auto it = entries_.find(key); it != entries_.end()) return it->second;

    const SeriesWindow& g = series_for(p, q);
    Poly acc(inst_.n_vars, inst_.caps);
    const int len = sum_length(i, j);
    for (int s = 0; s <= len; ++s) {
        const std::int64_t c = gen_binomial(i - j, s);
        if (c == 0) continue;
        const Poly term = g.coeff(base + s);
        if (term.is_zero()) continue;
        acc.add_scaled(s == 0 ? term : Poly::beta(inst_.n_vars, inst_.caps, s) * term, Rational(c));
    }
    return entries_.emplace(key, std::move(acc)).first->second;
}

PolyMatrix JacobiTrudi::matrix() {
    const int r = inst_.rows();
    PolyMatrix m(static_cast<std::size_t>(r));
    for (int i = 1; i <= r; ++i)
        for (int j = 1; j <= r; ++j) m[static_cast<std::size_t>(i - 1)].push_back(entry(i, j));
    return m;
}

Poly JacobiTrudi::determinant() {
    if (inst_.rows() == 0) return Poly::constant(inst_.n_vars, inst_.caps, 1);
    return fgroth::determinant(matrix()).require_integral("Jacobi-Trudi determinant");
}

Poly jt_entry(int i, int j, const SkewFlagged& inst, GVariant variant) { return JacobiTrudi(inst, variant).entry(i, j); }

Poly jt_determinant(const SkewFlagged& inst, GVariant variant) { return JacobiTrudi(inst, variant).determinant(); }

}  // namespace fgroth
