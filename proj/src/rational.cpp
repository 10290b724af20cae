#include "fgroth/rational.hpp"

#include <limits>
#include <numeric>

#include "fgroth/errors.hpp"

namespace fgroth {

namespace {

using i128 = __int128;

constexpr i128 kMax = std::numeric_limits<std::int64_t>::max();
constexpr i128 kMin = std::numeric_limits<std::int64_t>::min();

bool fits(i128 v) { return v >= kMin && v <= kMax; }

i128 abs128(i128 v) { return v < 0 ? -v : v; }

i128 gcd128(i128 a, i128 b) {
    a = abs128(a);
    b = abs128(b);
    while (b != 0) {
        i128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

mpz_class to_mpz(i128 v) {
    bool neg = v < 0;
    unsigned __int128 u = neg ? static_cast<unsigned __int128>(-(v + 1)) + 1 : static_cast<unsigned __int128>(v);
    mpz_class hi(static_cast<unsigned long>(u >> 64));
    mpz_class lo(static_cast<unsigned long>(u & 0xFFFFFFFFFFFFFFFFull));
    mpz_class r = (hi << 64) + lo;
    return neg ? mpz_class(-r) : r;
}

}  // namespace

Rational::Rational(std::int64_t n, std::int64_t d) {
    if (d == 0) throw std::domain_error("Rational: zero denominator");
    *this = from_wide(n, d);
}

Rational::Rational(const mpq_class& q) {
    mpq_class c(q);
    c.canonicalize();
    if (c.get_num().fits_slong_p() && c.get_den().fits_slong_p()) {
        num_ = c.get_num().get_si();
        den_ = c.get_den().get_si();
    } else {
        big_ = std::make_shared<const mpq_class>(std::move(c));
    }
}

Rational Rational::from_wide(i128 n, i128 d) {
    if (d < 0) {
        n = -n;
        d = -d;
    }
    i128 g = gcd128(n, d);
    if (g > 1) {
        n /= g;
        d /= g;
    }
    if (n == 0) d = 1;
    if (fits(n) && fits(d)) {
        Rational r;
        r.num_ = static_cast<std::int64_t>(n);
        r.den_ = static_cast<std::int64_t>(d);
        return r;
    }
    return Rational(mpq_class(to_mpz(n), to_mpz(d)));
}

bool Rational::is_integer() const { return big_ ? big_->get_den() == 1 : den_ == 1; }

int Rational::sign() const {
    if (big_) return sgn(*big_);
    return (num_ > 0) - (num_ < 0);
}

mpq_class Rational::to_mpq() const {
    if (big_) return *big_;
    return mpq_class(mpz_class(static_cast<long>(num_)), mpz_class(static_cast<long>(den_)));
}

std::string Rational::to_string() const {
    if (big_) return big_->get_str();
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

std::int64_t Rational::to_int64() const {
    if (big_ || den_ != 1) throw InvariantViolation("coefficient " + to_string() + " is not a 64-bit integer");
    return num_;
}

Rational Rational::operator-() const {
    if (big_ || num_ == std::numeric_limits<std::int64_t>::min()) return Rational(mpq_class(-to_mpq()));
    Rational r = *this;
    r.num_ = -r.num_;
    return r;
}

Rational operator+(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) {
        if (a.den_ == 1 && b.den_ == 1) {
            std::int64_t s;
            if (!__builtin_add_overflow(a.num_, b.num_, &s)) return Rational(s);
        }
        return Rational::from_wide(i128(a.num_) * b.den_ + i128(b.num_) * a.den_, i128(a.den_) * b.den_);
    }
    return Rational(mpq_class(a.to_mpq() + b.to_mpq()));
}

Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

Rational operator*(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) {
        if (a.den_ == 1 && b.den_ == 1) {
            std::int64_t p;
            if (!__builtin_mul_overflow(a.num_, b.num_, &p)) return Rational(p);
        }
        return Rational::from_wide(i128(a.num_) * b.num_, i128(a.den_) * b.den_);
    }
    return Rational(mpq_class(a.to_mpq() * b.to_mpq()));
}

Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw std::domain_error("Rational: division by zero");
    if (!a.big_ && !b.big_) return Rational::from_wide(i128(a.num_) * b.den_, i128(a.den_) * b.num_);
    return Rational(mpq_class(a.to_mpq() / b.to_mpq()));
}

bool operator==(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) return a.num_ == b.num_ && a.den_ == b.den_;
    return a.to_mpq() == b.to_mpq();
}

}  // namespace fgroth
