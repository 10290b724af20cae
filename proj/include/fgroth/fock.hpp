#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fgroth/poly.hpp"

namespace fgroth {

/// A free-fermion mode: psi_n (kind psi) or psi*_n (kind psi_star).
struct Mode {
    enum class Kind { psi, psi_star };
    Kind kind;
    int index;

    static Mode psi(int n) { return {Kind::psi, n}; }
    static Mode psi_star(int n) { return {Kind::psi_star, n}; }
    // psi_m (m < 0) and psi*_n (n >= 0) annihilate the vacuum |0>.
    bool annihilates_vacuum() const { return kind == Kind::psi ? index < 0 : index >= 0; }

    friend bool operator==(const Mode&, const Mode&) = default;
};

/// Semi-infinite wedge basis state. The occupied set is
///   S = ({..., m-2, m-1} \ removed) u added
/// with m the charge, added a subset of [m, inf), removed a subset of (-inf, m),
/// and |added| = |removed|. Both lists are kept ascending.
/// The canonical wedge is written with indices decreasing; psi_n / psi*_n carry
/// the sign (-1)^#{s in S : s > n}.
class FockState {
public:
    static FockState vacuum(int charge);

    int charge() const { return charge_; }
    const std::vector<int>& added() const { return added_; }
    const std::vector<int>& removed() const { return removed_; }

    bool occupied(int k) const;
    int count_above(int n) const;  // #{s in S : s > n}
    int energy() const;            // size of the associated partition
    int max_occupied() const;
    int min_vacant() const;

    // psi_n / psi*_n on this state: nullopt when the result is zero.
    std::optional<std::pair<int, FockState>> apply(const Mode& mode) const;

    // The partition read off the Maya diagram, largest part first.
    std::vector<int> partition() const;
    static FockState from_partition(int charge, const std::vector<int>& parts);

    std::string to_string() const;

    friend bool operator==(const FockState&, const FockState&) = default;
    friend auto operator<=>(const FockState&, const FockState&) = default;

private:
    int charge_ = 0;
    std::vector<int> added_;
    std::vector<int> removed_;
};

/// Finite linear combination of basis states with capped-polynomial coefficients.
class FockVector {
public:
    FockVector(int n_vars, Caps caps) : n_vars_(n_vars), caps_(caps) {}
    static FockVector basis(int n_vars, Caps caps, const FockState& s);

    int n_vars() const { return n_vars_; }
    const Caps& caps() const { return caps_; }
    const std::map<FockState, Poly>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    int max_energy() const;
    Poly coefficient(const FockState& s) const;

    void add(const FockState& s, const Poly& c, const Rational& scale = 1);
    FockVector& operator+=(const FockVector& o);
    FockVector& operator-=(const FockVector& o);
    friend FockVector operator*(const Poly& c, const FockVector& v);

    friend bool operator==(const FockVector& a, const FockVector& b);

private:
    int n_vars_;
    Caps caps_;
    std::map<FockState, Poly> terms_;
};

/// Signed formal sum of variable lists entering a Hamiltonian: each part is
/// +-(x_lo, ..., x_hi) or +-(-b). An empty block contributes nothing.
class Alphabet {
public:
    enum class Kind { x_block, beta_point };
    struct Part {
        int sign;
        Kind kind;
        int lo = 0, hi = -1;  // x_block only
        friend bool operator==(const Part&, const Part&) = default;
    };

    Alphabet() = default;
    static Alphabet x_range(int lo, int hi, int sign = 1);
    static Alphabet prefix(int f) { return x_range(1, f); }  // x^[f] = (x_1..x_f)
    // x^[f/g]: H(x^[f/g]) = H(x^[f]) - H(x^[g-1]).
    static Alphabet flagged(int f, int g);
    static Alphabet minus_beta();  // the single value -b

    Alphabet& operator+=(const Alphabet& o);
    const std::vector<Part>& parts() const { return parts_; }

    // Net multiplicity of each variable: index 0 is the (-b) point, k is x_k.
    std::vector<int> multiplicities(int n_vars) const;
    bool is_zero(int n_vars) const;
    bool has_x(int n_vars) const;
    bool has_beta(int n_vars) const;
    int max_x_index() const;

    // p_n(X) = sum of n-th powers with multiplicity.
    Poly power_sum(int n, int n_vars, Caps caps) const;

    std::string to_string() const;

private:
    std::vector<Part> parts_;
};

/// :a b: for a two-mode monomial: if a annihilates the vacuum and b does not,
/// the pair is swapped with a sign -1; otherwise it is left as is.
struct OrderedPair {
    int sign;
    Mode first, second;
};
OrderedPair normal_order_pair(const Mode& a, const Mode& b);

FockVector apply_fermion(const Mode& mode, const FockVector& v);

/// Basis-level current a_m = sum_k :psi_k psi*_{k+m}:, m != 0.
std::vector<std::pair<int, FockState>> current_terms(int m, const FockState& s);
/// a_0 on a basis state evaluated from the normal-ordered sum; equals the charge.
int current_zero_eigenvalue(const FockState& s);
FockVector apply_current(int m, const FockVector& v);

enum class HDirection { H, H_star };

struct ExpResult {
    FockVector value;
    int order;  // highest power of H that contributed
};

/// exp(sign * H(X)) v with H(X) = sum_{n>0} p_n(X)/n a_n, or the dual H*(X)
/// with a_{-n}. The series is summed until it vanishes: a_n lowers the energy
/// so the H direction is nilpotent on any vector, while H*(-b) raises the
/// energy and multiplies by b^n, so it dies at the b-cap. H* with an x-block
/// is rejected, as is H*(-b) without a b-cap.
ExpResult apply_exp_H(HDirection dir, const Alphabet& alph, int sign, const FockVector& v);

/// <-r| v : the coefficient of the shifted vacuum |-r>.
Poly pair_with_bra(int r, const FockVector& v);

/// <-r| psi*_n psi_m |-r> = [m == n] [m >= -r].
int two_point(int r, int m, int n);

/// <psi_{m1} ... psi_{mk} psi*_{nk} ... psi*_{n1}> by Wick's determinant of
/// <psi_{m_i} psi*_{n_j}> = [m_i == n_j][m_i < 0].
std::int64_t wick_expectation(const std::vector<int>& creators, const std::vector<int>& annihilators);
/// The same expectation by applying the modes one by one to |0>.
std::int64_t direct_expectation(const std::vector<int>& creators, const std::vector<int>& annihilators);

/// All basis states of the given charge and energy <= max_energy.
std::vector<FockState> basis_states(int charge, int max_energy);

}  // namespace fgroth
