#pragma once

#include <compare>
#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "fgroth/rational.hpp"

namespace fgroth {

/// Degree caps defining the quotient ring Q[b, x1..xN] / (b^(B+1), (x)^(D+1)).
/// Monomials with b-degree above `beta` or total x-degree above `x` vanish.
struct Caps {
    static constexpr int kUnbounded = std::numeric_limits<int>::max();

    int beta = kUnbounded;
    int x = kUnbounded;

    bool beta_bounded() const { return beta != kUnbounded; }
    bool x_bounded() const { return x != kUnbounded; }
    Caps raised(int by = 1) const;

    friend bool operator==(const Caps&, const Caps&) = default;
};

Caps common_caps(const Caps& a, const Caps& b);

/// Exponent vector b^e0 x1^e1 ... x15^e15, packed one byte per variable so that
/// integer comparison of the key is lexicographic order on (e0, e1, ...).
class Monomial {
public:
    static constexpr int kMaxVars = 15;
    static constexpr int kMaxExponent = 127;

    Monomial() = default;
    static Monomial beta_power(int e);
    static Monomial x_power(int k, int e);  // k is 1-based

    int beta() const { return static_cast<int>(key_ >> 120); }
    int x(int k) const { return static_cast<int>((key_ >> (8 * (kMaxVars - k))) & 0xFF); }
    int x_degree() const;
    int total_degree() const { return beta() + x_degree(); }
    bool fits(const Caps& caps) const { return beta() <= caps.beta && x_degree() <= caps.x; }

    // Throws InvariantViolation if any exponent would exceed kMaxExponent.
    friend Monomial operator*(const Monomial& a, const Monomial& b);

    Monomial without_beta() const;
    unsigned __int128 key() const { return key_; }

    friend bool operator==(const Monomial&, const Monomial&) = default;
    friend auto operator<=>(const Monomial& a, const Monomial& b) { return a.key_ <=> b.key_; }

private:
    unsigned __int128 key_ = 0;
};

// Serialization order: ascending total degree, then lexicographically
// descending on (b, x1, x2, ...). Returns true if a precedes b.
bool graded_lex_before(const Monomial& a, const Monomial& b);

struct Term {
    Monomial mono;
    Rational coeff;
};

/// Sparse polynomial in b and x1..xN with exact rational coefficients, reduced
/// modulo the monomial ideal above its caps. Terms are kept sorted by monomial
/// key with no zero coefficients.
class Poly {
public:
    Poly() = default;
    explicit Poly(int n_vars, Caps caps = {});

    static Poly constant(int n_vars, Caps caps, const Rational& c);
    static Poly x(int n_vars, Caps caps, int k, int power = 1);
    static Poly beta(int n_vars, Caps caps, int power = 1);
    static Poly monomial(int n_vars, Caps caps, const Monomial& m, const Rational& c);
    // Terms may be unsorted and contain duplicates; they are combined.
    static Poly from_terms(int n_vars, Caps caps, std::vector<Term> terms);

    int n_vars() const { return n_vars_; }
    const Caps& caps() const { return caps_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    Rational coefficient(const Monomial& m) const;
    int beta_degree() const;  // -1 for the zero polynomial
    int x_degree() const;
    bool is_integral() const;
    // Throws InvariantViolation naming `what` unless every coefficient is an integer.
    const Poly& require_integral(const std::string& what) const;

    Poly truncated(const Caps& caps) const;
    Poly beta_zero() const;  // substitute b = 0
    // True if some term lies above `caps` (used to spot monomials beyond a cap).
    bool exceeds(const Caps& caps) const;

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const Poly& o) { return *this = *this * o; }
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(const Rational& s, const Poly& p);
    // this += s * o, without materializing s * o.
    Poly& add_scaled(const Poly& o, const Rational& s);

    // Exact equality of terms; caps are metadata and are not compared.
    friend bool operator==(const Poly& a, const Poly& b);
    // Equality in the common quotient ring of both operands.
    bool equal_in_common_ring(const Poly& o) const;

    // Terms in serialization (graded-lex) order.
    std::vector<Term> sorted_terms() const;
    // e.g. "x1 + x2 + b*x1*x2"
    std::string to_text() const;

private:
    void check_compatible(const Poly& o) const;

    int n_vars_ = 0;
    Caps caps_;
    std::vector<Term> terms_;
};

/// Generalized binomial coefficient a(a-1)...(a-s+1)/s! for any integer a.
std::int64_t gen_binomial(std::int64_t a, int s);

}  // namespace fgroth
