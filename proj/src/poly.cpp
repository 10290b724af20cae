#include "fgroth/poly.hpp"

#include <algorithm>
#include <sstream>

#include "fgroth/errors.hpp"

namespace fgroth {

namespace {

using u128 = unsigned __int128;

// 0x80 in every byte of the 128-bit key.
const u128 kHighBits = (u128(0x8080808080808080ull) << 64) | u128(0x8080808080808080ull);

int byte_sum(std::uint64_t v) {
    std::uint64_t s = (v & 0x00FF00FF00FF00FFull) + ((v >> 8) & 0x00FF00FF00FF00FFull);
    return static_cast<int>((s * 0x0001000100010001ull) >> 48);
}

}  // namespace

Caps Caps::raised(int by) const {
    Caps c = *this;
    if (c.beta_bounded()) c.beta += by;
    if (c.x_bounded()) c.x += by;
    return c;
}

Caps common_caps(const Caps& a, const Caps& b) { return {std::min(a.beta, b.beta), std::min(a.x, b.x)}; }

Monomial Monomial::beta_power(int e) {
    if (e < 0 || e > kMaxExponent) throw InvariantViolation("beta exponent out of range");
    Monomial m;
    m.key_ = u128(e) << 120;
    return m;
}

Monomial Monomial::x_power(int k, int e) {
    if (k < 1 || k > kMaxVars) throw UsageError("variable index out of range: x" + std::to_string(k));
    if (e < 0 || e > kMaxExponent) throw InvariantViolation("x exponent out of range");
    Monomial m;
    m.key_ = u128(e) << (8 * (kMaxVars - k));
    return m;
}

int Monomial::x_degree() const {
    auto hi = static_cast<std::uint64_t>(key_ >> 64) & 0x00FFFFFFFFFFFFFFull;
    auto lo = static_cast<std::uint64_t>(key_);
    return byte_sum(hi) + byte_sum(lo);
}

Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial m;
    m.key_ = a.key_ + b.key_;
    if (m.key_ & kHighBits) throw InvariantViolation("monomial exponent overflow (degree > 127)");
    return m;
}

Monomial Monomial::without_beta() const {
    Monomial m;
    m.key_ = key_ & ~(u128(0xFF) << 120);
    return m;
}

bool graded_lex_before(const Monomial& a, const Monomial& b) {
    int da = a.total_degree(), db = b.total_degree();
    if (da != db) return da < db;
    return a.key() > b.key();
}

Poly::Poly(int n_vars, Caps caps) : n_vars_(n_vars), caps_(caps) {
    if (n_vars < 0 || n_vars > Monomial::kMaxVars)
        throw UsageError("number of variables must be in [0, " + std::to_string(Monomial::kMaxVars) + "]");
}

Poly Poly::monomial(int n_vars, Caps caps, const Monomial& m, const Rational& c) {
    Poly p(n_vars, caps);
    if (!c.is_zero() && m.fits(caps)) p.terms_.push_back({m, c});
    return p;
}

Poly Poly::constant(int n_vars, Caps caps, const Rational& c) { return monomial(n_vars, caps, Monomial{}, c); }

Poly Poly::x(int n_vars, Caps caps, int k, int power) {
    if (k < 1 || k > n_vars) throw UsageError("variable x" + std::to_string(k) + " outside x1..x" + std::to_string(n_vars));
    return monomial(n_vars, caps, Monomial::x_power(k, power), 1);
}

Poly Poly::beta(int n_vars, Caps caps, int power) { return monomial(n_vars, caps, Monomial::beta_power(power), 1); }

Poly Poly::from_terms(int n_vars, Caps caps, std::vector<Term> terms) {
    Poly p(n_vars, caps);
    std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.mono < b.mono; });
    for (auto& t : terms) {
        if (!t.mono.fits(caps)) continue;
        if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
            p.terms_.back().coeff += t.coeff;
            if (p.terms_.back().coeff.is_zero()) p.terms_.pop_back();
        } else if (!t.coeff.is_zero()) {
            p.terms_.push_back(std::move(t));
        }
    }
    return p;
}

Rational Poly::coefficient(const Monomial& m) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), m, [](const Term& t, const Monomial& k) { return t.mono < k; });
    if (it != terms_.end() && it->mono == m) return it->coeff;
    return 0;
}

int Poly::beta_degree() const {
    int d = -1;
    for (const auto& t : terms_) d = std::max(d, t.mono.beta());
    return d;
}

int Poly::x_degree() const {
    int d = -1;
    for (const auto& t : terms_) d = std::max(d, t.mono.x_degree());
    return d;
}

bool Poly::is_integral() const {
    return std::all_of(terms_.begin(), terms_.end(), [](const Term& t) { return t.coeff.is_integer(); });
}

const Poly& Poly::require_integral(const std::string& what) const {
    for (const auto& t : terms_)
        if (!t.coeff.is_integer())
            throw InvariantViolation(what + ": non-integer coefficient " + t.coeff.to_string());
    return *this;
}

Poly Poly::truncated(const Caps& caps) const {
    Poly p(n_vars_, common_caps(caps_, caps));
    for (const auto& t : terms_)
        if (t.mono.fits(p.caps_)) p.terms_.push_back(t);
    return p;
}

Poly Poly::beta_zero() const {
    Poly p(n_vars_, caps_);
    for (const auto& t : terms_)
        if (t.mono.beta() == 0) p.terms_.push_back(t);
    return p;
}

bool Poly::exceeds(const Caps& caps) const {
    return std::any_of(terms_.begin(), terms_.end(), [&](const Term& t) { return !t.mono.fits(caps); });
}

void Poly::check_compatible(const Poly& o) const {
    if (n_vars_ != o.n_vars_)
        throw UsageError("polynomials over different variable counts (" + std::to_string(n_vars_) + " vs " +
                         std::to_string(o.n_vars_) + ")");
}

Poly Poly::operator-() const {
    Poly p = *this;
    for (auto& t : p.terms_) t.coeff = -t.coeff;
    return p;
}

Poly& Poly::add_scaled(const Poly& o, const Rational& s) {
    check_compatible(o);
    Caps caps = common_caps(caps_, o.caps_);
    if (s.is_zero() || o.terms_.empty()) {
        if (!(caps == caps_)) *this = truncated(caps);
        return *this;
    }
    std::vector<Term> out;
    out.reserve(terms_.size() + o.terms_.size());
    auto a = terms_.begin(), ae = terms_.end();
    auto b = o.terms_.begin(), be = o.terms_.end();
    while (a != ae || b != be) {
        if (b == be || (a != ae && a->mono < b->mono)) {
            if (a->mono.fits(caps)) out.push_back(std::move(*a));
            ++a;
        } else if (a == ae || b->mono < a->mono) {
            if (b->mono.fits(caps)) out.push_back({b->mono, b->coeff * s});
            ++b;
        } else {
            Rational c = a->coeff + b->coeff * s;
            if (!c.is_zero() && a->mono.fits(caps)) out.push_back({a->mono, std::move(c)});
            ++a;
            ++b;
        }
    }
    terms_ = std::move(out);
    caps_ = caps;
    return *this;
}

Poly& Poly::operator+=(const Poly& o) { return add_scaled(o, 1); }
Poly& Poly::operator-=(const Poly& o) { return add_scaled(o, -1); }

Poly operator*(const Poly& a, const Poly& b) {
    a.check_compatible(b);
    Caps caps = common_caps(a.caps_, b.caps_);
    Poly p(a.n_vars_, caps);
    if (a.terms_.empty() || b.terms_.empty()) return p;
    const Poly& small = a.size() <= b.size() ? a : b;
    const Poly& large = a.size() <= b.size() ? b : a;
    if (small.size() == 1) {
        // Multiplying by a monomial preserves the key order.
        const Term& s = small.terms_.front();
        p.terms_.reserve(large.size());
        for (const auto& t : large.terms_) {
            Monomial m = s.mono * t.mono;
            if (m.fits(caps)) p.terms_.push_back({m, s.coeff * t.coeff});
        }
        return p;
    }
    std::vector<Term> raw;
    raw.reserve(small.size() * large.size());
    for (const auto& s : small.terms_) {
        for (const auto& t : large.terms_) {
            Monomial m = s.mono * t.mono;
            if (m.fits(caps)) raw.push_back({m, s.coeff * t.coeff});
        }
    }
    return Poly::from_terms(a.n_vars_, caps, std::move(raw));
}

Poly operator*(const Rational& s, const Poly& p) {
    Poly r(p.n_vars_, p.caps_);
    if (s.is_zero()) return r;
    r.terms_.reserve(p.terms_.size());
    for (const auto& t : p.terms_) r.terms_.push_back({t.mono, s * t.coeff});
    return r;
}

bool operator==(const Poly& a, const Poly& b) {
    if (a.n_vars_ != b.n_vars_ || a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i)
        if (!(a.terms_[i].mono == b.terms_[i].mono) || !(a.terms_[i].coeff == b.terms_[i].coeff)) return false;
    return true;
}

bool Poly::equal_in_common_ring(const Poly& o) const {
    Caps caps = common_caps(caps_, o.caps_);
    return truncated(caps) == o.truncated(caps);
}

std::vector<Term> Poly::sorted_terms() const {
    std::vector<Term> out = terms_;
    std::sort(out.begin(), out.end(), [](const Term& a, const Term& b) { return graded_lex_before(a.mono, b.mono); });
    return out;
}

std::string Poly::to_text() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : sorted_terms()) {
        std::string c = t.coeff.to_string();
        bool negative = t.coeff.sign() < 0;
        if (negative) c.erase(0, 1);
        if (first) {
            if (negative) os << '-';
        } else {
            os << (negative ? " - " : " + ");
        }
        first = false;

        std::vector<std::string> factors;
        auto power = [&](const std::string& name, int e) {
            if (e == 1) factors.push_back(name);
            else if (e > 1) factors.push_back(name + "^" + std::to_string(e));
        };
        power("b", t.mono.beta());
        for (int k = 1; k <= n_vars_; ++k) power("x" + std::to_string(k), t.mono.x(k));

        if (factors.empty()) {
            os << c;
            continue;
        }
        if (c != "1") os << c << '*';
        for (std::size_t i = 0; i < factors.size(); ++i) os << (i ? "*" : "") << factors[i];
    }
    return os.str();
}

std::int64_t gen_binomial(std::int64_t a, int s) {
    if (s < 0) throw UsageError("gen_binomial: negative lower index");
    // Running product stays integral: after step k it equals C(a, k).
    __int128 acc = 1;
    for (int k = 0; k < s; ++k) {
        acc = acc * (a - k) / (k + 1);
        if (acc > std::numeric_limits<std::int64_t>::max() || acc < std::numeric_limits<std::int64_t>::min())
            throw InvariantViolation("gen_binomial overflow");
    }
    return static_cast<std::int64_t>(acc);
}

}  // namespace fgroth
