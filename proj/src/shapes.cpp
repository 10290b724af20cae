#include "fgroth/shapes.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "fgroth/errors.hpp"

namespace fgroth {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 0) throw UsageError("partition has a negative part");
        if (i > 0 && parts_[i] > parts_[i - 1]) throw UsageError("partition parts must be weakly decreasing");
    }
}

int Partition::weight() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

Partition Partition::padded(int r) const {
    std::vector<int> p = parts_;
    if (static_cast<int>(p.size()) < r) p.resize(static_cast<std::size_t>(r), 0);
    return Partition(std::move(p));
}

bool Partition::contains(const Partition& mu) const {
    const int r = std::max(length(), mu.length());
    for (int i = 1; i <= r; ++i)
        if (mu(i) > (*this)(i)) return false;
    return true;
}

bool SkewFlagged::g_is_one() const {
    return std::all_of(g.begin(), g.end(), [](int v) { return v == 1; });
}

void SkewFlagged::validate() const {
    const int r = rows();
    if (mu.length() > r) throw UsageError("mu has more parts than lambda");
    if (!lambda.contains(mu)) throw UsageError("mu is not contained in lambda");
    if (static_cast<int>(f.size()) != r || static_cast<int>(g.size()) != r)
        throw UsageError("f and g must both have length " + std::to_string(r) + " (the length of lambda)");
    for (int v : f)
        if (v < 1) throw UsageError("flags f must be positive");
    for (int v : g)
        if (v < 1) throw UsageError("flags g must be positive");
    if (n_vars < 1 || n_vars > Monomial::kMaxVars)
        throw UsageError("n_vars must be in [1, " + std::to_string(Monomial::kMaxVars) + "]");
    const int need = std::max(r ? *std::max_element(f.begin(), f.end()) : 0, r ? *std::max_element(g.begin(), g.end()) - 1 : 0);
    if (n_vars < need) throw UsageError("n_vars must be at least " + std::to_string(need) + " for these flags");
    if (caps.beta < 0 || caps.x < 0) throw UsageError("caps must be nonnegative");
}

SkewFlagged SkewFlagged::make(Partition lambda, Partition mu, std::vector<int> f, std::vector<int> g, int n_vars,
                              std::optional<int> beta_cap, std::optional<int> x_cap) {
    SkewFlagged inst;
    const int r = lambda.length();
    if (mu.length() > r) throw UsageError("mu has more parts than lambda");
    inst.mu = mu.padded(r);
    inst.lambda = std::move(lambda);
    inst.f = std::move(f);
    inst.g = std::move(g);
    inst.n_vars = n_vars;
    inst.validate();
    Caps d = default_caps(inst.lambda, inst.mu, inst.f);
    inst.caps.beta = beta_cap.value_or(d.beta);
    inst.caps.x = x_cap.value_or(inst.skew_size() + inst.caps.beta);
    inst.validate();
    return inst;
}

Caps default_caps(const Partition& lambda, const Partition& mu, const std::vector<int>& f) {
    int beta = 0;
    for (int i = 1; i <= lambda.length(); ++i)
        if (lambda(i) > mu(i) && i <= static_cast<int>(f.size())) beta += std::max(f[static_cast<std::size_t>(i - 1)] - 1, 0);
    return {beta, lambda.weight() - mu.weight() + beta};
}

bool coincidence_condition(const SkewFlagged& inst) {
    const int r = inst.rows();
    for (int i = 1; i <= r; ++i) {
        for (int j = 1; j <= r; ++j) {
            const int fi = inst.f[static_cast<std::size_t>(i - 1)];
            const int gj = inst.g[static_cast<std::size_t>(j - 1)];
            if (fi < gj - 1 && fi + inst.lambda(i) - i < gj + inst.mu(j) - j) return false;
        }
    }
    return true;
}

Permutation::Permutation(std::vector<int> one_line) : w_(std::move(one_line)) {
    std::vector<int> sorted = w_;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < sorted.size(); ++i)
        if (sorted[i] != static_cast<int>(i) + 1) throw UsageError("not a permutation of 1..n");
}

std::vector<InversionSet> inversion_sets(const Permutation& w) {
    std::vector<InversionSet> sets(static_cast<std::size_t>(w.size()));
    for (int i = 1; i <= w.size(); ++i)
        for (int j = i + 1; j <= w.size(); ++j)
            if (w(i) > w(j)) sets[static_cast<std::size_t>(i - 1)].insert(j);
    return sets;
}

bool is_vexillary(const Permutation& w) {
    auto sets = inversion_sets(w);
    std::sort(sets.begin(), sets.end(), [](const auto& a, const auto& b) { return a.size() < b.size(); });
    for (std::size_t i = 1; i < sets.size(); ++i)
        if (!std::includes(sets[i].begin(), sets[i].end(), sets[i - 1].begin(), sets[i - 1].end())) return false;
    return true;
}

bool contains_2143(const Permutation& w) {
    const int n = w.size();
    for (int a = 1; a <= n; ++a)
        for (int b = a + 1; b <= n; ++b)
            for (int c = b + 1; c <= n; ++c)
                for (int d = c + 1; d <= n; ++d)
                    if (w(b) < w(a) && w(a) < w(d) && w(d) < w(c)) return true;
    return false;
}

ShapeAndFlag shape_and_flag(const Permutation& w) {
    if (!is_vexillary(w)) throw UsageError("permutation is not vexillary");
    std::vector<int> sizes, flag;
    for (const auto& s : inversion_sets(w)) {
        if (s.empty()) continue;
        sizes.push_back(static_cast<int>(s.size()));
        flag.push_back(*s.begin() - 1);
    }
    std::sort(sizes.rbegin(), sizes.rend());
    std::sort(flag.begin(), flag.end());
    return {Partition(std::move(sizes)), std::move(flag)};
}

}  // namespace fgroth
