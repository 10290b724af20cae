#include "fgroth/tableaux.hpp"

#include <bit>
#include <map>

#include "fgroth/errors.hpp"

namespace fgroth {

namespace {

int low_entry(std::uint32_t s) { return std::countr_zero(s) + 1; }
int high_entry(std::uint32_t s) { return 32 - std::countl_zero(s); }

struct Layout {
    std::vector<Cell> cells;
    std::vector<int> left;  // index of the left neighbour or -1
    std::vector<int> up;    // index of the upper neighbour or -1
};

Layout layout(const Partition& lambda, const Partition& mu) {
    Layout l;
    l.cells = skew_cells(lambda, mu);
    auto index_of = [&](int row, int col) -> int {
        for (std::size_t k = 0; k < l.cells.size(); ++k)
            if (l.cells[k].row == row && l.cells[k].col == col) return static_cast<int>(k);
        return -1;
    };
    for (const auto& c : l.cells) {
        l.left.push_back(index_of(c.row, c.col - 1));
        l.up.push_back(index_of(c.row - 1, c.col));
    }
    return l;
}

// Backtracking over cells in reading order. `singletons` restricts to one entry per cell.
template <typename Visit>
void fill(const Layout& l, const std::vector<int>& lower, const std::vector<int>& upper, bool singletons,
          std::vector<std::uint32_t>& sets, std::size_t k, Visit&& visit) {
    if (k == l.cells.size()) {
        visit(sets);
        return;
    }
    const int row = l.cells[k].row;
    int min_allowed = lower[static_cast<std::size_t>(row - 1)];
    if (l.left[k] >= 0) min_allowed = std::max(min_allowed, high_entry(sets[static_cast<std::size_t>(l.left[k])]));
    if (l.up[k] >= 0) min_allowed = std::max(min_allowed, high_entry(sets[static_cast<std::size_t>(l.up[k])]) + 1);
    const int max_allowed = upper[static_cast<std::size_t>(row - 1)];
    if (min_allowed > max_allowed) return;
    if (singletons) {
        for (int e = min_allowed; e <= max_allowed; ++e) {
            sets[k] = 1u << (e - 1);
            fill(l, lower, upper, singletons, sets, k + 1, visit);
        }
        return;
    }
    const std::uint32_t limit = 1u << max_allowed;
    for (std::uint32_t s = 1; s < limit; ++s) {
        if (low_entry(s) < min_allowed) continue;
        sets[k] = s;
        fill(l, lower, upper, singletons, sets, k + 1, visit);
    }
}

void require_g_one(const SkewFlagged& inst) {
    inst.validate();
    if (!inst.g_is_one()) throw UsageError("set-valued tableau model requires g = (1, ..., 1)");
    for (int f : inst.f)
        if (f > inst.n_vars) throw UsageError("flag exceeds n_vars");
    if (inst.n_vars > 31) throw UsageError("tableau entries are limited to 31");
}

Poly collect(const SkewFlagged& inst, const std::map<Monomial, std::int64_t>& counts, Caps caps) {
    std::vector<Term> terms;
    terms.reserve(counts.size());
    for (const auto& [m, c] : counts) terms.push_back({m, Rational(c)});
    return Poly::from_terms(inst.n_vars, caps, std::move(terms));
}

Monomial weight(const std::vector<std::uint32_t>& sets, int cells, bool with_beta) {
    Monomial m;
    int total = 0;
    for (std::uint32_t s : sets) {
        total += std::popcount(s);
        for (std::uint32_t t = s; t; t &= t - 1) m = m * Monomial::x_power(std::countr_zero(t) + 1, 1);
    }
    if (with_beta && total > cells) m = m * Monomial::beta_power(total - cells);
    return m;
}

}  // namespace

int SetValuedTableau::entry_count() const {
    int n = 0;
    for (auto s : sets) n += std::popcount(s);
    return n;
}

std::vector<int> SetValuedTableau::entries(std::size_t cell) const {
    std::vector<int> out;
    for (std::uint32_t t = sets.at(cell); t; t &= t - 1) out.push_back(std::countr_zero(t) + 1);
    return out;
}

std::vector<Cell> skew_cells(const Partition& lambda, const Partition& mu) {
    std::vector<Cell> cells;
    for (int i = 1; i <= lambda.length(); ++i)
        for (int j = mu(i) + 1; j <= lambda(i); ++j) cells.push_back({i, j});
    return cells;
}

void for_each_fsvt(const SkewFlagged& inst, const std::function<void(const SetValuedTableau&)>& visit) {
    require_g_one(inst);
    const Layout l = layout(inst.lambda, inst.mu);
    std::vector<int> lower(inst.f.size(), 1);
    std::vector<std::uint32_t> sets(l.cells.size());
    SetValuedTableau t;
    t.cells = l.cells;
    fill(l, lower, inst.f, false, sets, 0, [&](const std::vector<std::uint32_t>& s) {
        t.sets = s;
        visit(t);
    });
}

std::vector<SetValuedTableau> enumerate_fsvt(const SkewFlagged& inst) {
    std::vector<SetValuedTableau> out;
    for_each_fsvt(inst, [&](const SetValuedTableau& t) { out.push_back(t); });
    return out;
}

Poly tableaux_polynomial(const SkewFlagged& inst) {
    require_g_one(inst);
    const Layout l = layout(inst.lambda, inst.mu);
    const int cells = static_cast<int>(l.cells.size());
    std::vector<int> lower(inst.f.size(), 1);
    std::vector<std::uint32_t> sets(l.cells.size());
    std::map<Monomial, std::int64_t> counts;
    fill(l, lower, inst.f, false, sets, 0, [&](const std::vector<std::uint32_t>& s) { ++counts[weight(s, cells, true)]; });
    return collect(inst, counts, {});
}

Poly ssyt_polynomial(const SkewFlagged& inst) {
    inst.validate();
    for (int f : inst.f)
        if (f > inst.n_vars || f > 31) throw UsageError("flag exceeds n_vars");
    const Layout l = layout(inst.lambda, inst.mu);
    const int cells = static_cast<int>(l.cells.size());
    std::vector<std::uint32_t> sets(l.cells.size());
    std::map<Monomial, std::int64_t> counts;
    fill(l, inst.g, inst.f, true, sets, 0, [&](const std::vector<std::uint32_t>& s) { ++counts[weight(s, cells, false)]; });
    return collect(inst, counts, {0, Caps::kUnbounded});
}

}  // namespace fgroth
