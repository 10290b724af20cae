#pragma once

#include <cstdint>
#include <memory>
#include <string>

#include <gmpxx.h>

namespace fgroth {

/// Exact rational number.
///
/// Values whose reduced numerator and denominator fit in 64 bits are stored
/// inline; anything larger is promoted to a shared GMP rational and demoted
/// again as soon as it fits. Almost every coefficient in this library is a
/// small integer, so the inline path carries nearly all of the work.
class Rational {
public:
    Rational() = default;
    Rational(std::int64_t n) : num_(n) {}  // NOLINT: implicit from integers is intended
    Rational(std::int64_t n, std::int64_t d);
    explicit Rational(const mpq_class& q);

    bool is_zero() const { return !big_ && num_ == 0; }
    bool is_integer() const;
    int sign() const;

    mpq_class to_mpq() const;
    // Numerator as a decimal string; only meaningful when is_integer().
    std::string to_string() const;
    // Throws InvariantViolation when the value is not an integer or does not fit.
    std::int64_t to_int64() const;

    Rational operator-() const;
    friend Rational operator+(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a, const Rational& b);
    friend Rational operator*(const Rational& a, const Rational& b);
    friend Rational operator/(const Rational& a, const Rational& b);
    Rational& operator+=(const Rational& b) { return *this = *this + b; }
    Rational& operator-=(const Rational& b) { return *this = *this - b; }
    Rational& operator*=(const Rational& b) { return *this = *this * b; }

    friend bool operator==(const Rational& a, const Rational& b);

private:
    static Rational from_wide(__int128 n, __int128 d);

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
    std::shared_ptr<const mpq_class> big_;
};

}  // namespace fgroth
