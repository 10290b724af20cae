#pragma once

#include <initializer_list>
#include <optional>
#include <set>
#include <vector>

#include "fgroth/poly.hpp"

namespace fgroth {

/// Weakly decreasing sequence of nonnegative parts. Trailing zeros are kept:
/// the length of lambda fixes the determinant size r.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);
    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    const std::vector<int>& parts() const { return parts_; }
    int length() const { return static_cast<int>(parts_.size()); }
    // 1-based part, 0 beyond the stored length.
    int operator()(int i) const { return i >= 1 && i <= length() ? parts_[static_cast<std::size_t>(i - 1)] : 0; }
    int weight() const;
    Partition padded(int r) const;  // pad with zeros to length r (never truncates)
    bool contains(const Partition& mu) const;

    friend bool operator==(const Partition&, const Partition&) = default;

private:
    std::vector<int> parts_;
};

/// A flagged skew instance lambda/mu with flags f (upper) and g (lower) over
/// x1..xN, together with the caps of the quotient ring it is evaluated in.
struct SkewFlagged {
    Partition lambda;
    Partition mu;  // padded to lambda's length
    std::vector<int> f;
    std::vector<int> g;
    int n_vars = 0;
    Caps caps;

    int rows() const { return lambda.length(); }
    int skew_size() const { return lambda.weight() - mu.weight(); }
    bool g_is_one() const;

    // Validates the invariants; caps default to default_caps() when not given.
    static SkewFlagged make(Partition lambda, Partition mu, std::vector<int> f, std::vector<int> g, int n_vars,
                            std::optional<int> beta_cap = {}, std::optional<int> x_cap = {});
    // Throws UsageError on the first violated invariant.
    void validate() const;
};

/// Caps from the set-valued tableau degree bounds: a row of a flagged
/// set-valued tableau with entries <= f_i carries at most f_i - 1 surplus
/// entries, so beta_cap = sum over nonempty rows of (f_i - 1) and
/// x_cap = |lambda/mu| + beta_cap.
Caps default_caps(const Partition& lambda, const Partition& mu, const std::vector<int>& f);

/// For every pair with f_i < g_j - 1, require f_i + lambda_i - i >= g_j + mu_j - j.
/// When this holds the two determinant conventions agree.
bool coincidence_condition(const SkewFlagged& inst);

/// Permutation in one-line notation w(1) ... w(n).
class Permutation {
public:
    explicit Permutation(std::vector<int> one_line);
    int size() const { return static_cast<int>(w_.size()); }
    int operator()(int i) const { return w_[static_cast<std::size_t>(i - 1)]; }
    const std::vector<int>& one_line() const { return w_; }

private:
    std::vector<int> w_;
};

using InversionSet = std::set<int>;

/// I_i(w) = { j : i < j and w(i) > w(j) }, for i = 1..n.
std::vector<InversionSet> inversion_sets(const Permutation& w);
/// True iff the inversion sets form a chain under inclusion.
bool is_vexillary(const Permutation& w);
/// True iff w contains the pattern 2143.
bool contains_2143(const Permutation& w);

struct ShapeAndFlag {
    Partition lambda;
    std::vector<int> flag;
};

/// Shape = nonzero inversion-set sizes in decreasing order; flag = min I_i - 1
/// over nonempty I_i in increasing order. Rejects non-vexillary w.
ShapeAndFlag shape_and_flag(const Permutation& w);

}  // namespace fgroth
