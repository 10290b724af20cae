#include "fgroth/fock.hpp"

#include <algorithm>
#include <sstream>

#include "fgroth/determinant.hpp"
#include "fgroth/errors.hpp"

namespace fgroth {

namespace {

// Rebuilds a state from "everything below lo is occupied, nothing above hi is,
// and occ[k - lo] in between".
FockState from_window(int lo, const std::vector<char>& occ);

}  // namespace

FockState FockState::vacuum(int charge) {
    FockState s;
    s.charge_ = charge;
    return s;
}

bool FockState::occupied(int k) const {
    if (k >= charge_) return std::binary_search(added_.begin(), added_.end(), k);
    return !std::binary_search(removed_.begin(), removed_.end(), k);
}

int FockState::count_above(int n) const {
    const auto added_above = static_cast<int>(added_.end() - std::upper_bound(added_.begin(), added_.end(), n));
    if (n >= charge_) return added_above;
    const auto removed_above = static_cast<int>(removed_.end() - std::upper_bound(removed_.begin(), removed_.end(), n));
    return (charge_ - 1 - n) - removed_above + added_above;
}

int FockState::energy() const {
    int e = 0;
    for (int a : added_) e += a - charge_;
    for (int b : removed_) e += charge_ - b;
    return e;
}

int FockState::max_occupied() const {
    if (!added_.empty()) return added_.back();
    int k = charge_ - 1;
    while (!occupied(k)) --k;
    return k;
}

int FockState::min_vacant() const {
    if (!removed_.empty()) return removed_.front();
    int k = charge_;
    while (occupied(k)) ++k;
    return k;
}

std::optional<std::pair<int, FockState>> FockState::apply(const Mode& mode) const {
    const int n = mode.index;
    const bool is_set = occupied(n);
    if ((mode.kind == Mode::Kind::psi) == is_set) return std::nullopt;
    const int sign = count_above(n) % 2 ? -1 : 1;

    const int lo = std::min(n, min_vacant());
    const int hi = std::max(n, max_occupied());
    std::vector<char> occ(static_cast<std::size_t>(hi - lo + 1));
    for (int k = lo; k <= hi; ++k) occ[static_cast<std::size_t>(k - lo)] = occupied(k);
    occ[static_cast<std::size_t>(n - lo)] = mode.kind == Mode::Kind::psi;
    return std::make_pair(sign, from_window(lo, occ));
}

std::vector<int> FockState::partition() const {
    std::vector<int> parts;
    int i = 1;
    for (int s = max_occupied(); s >= min_vacant() - 1; --s) {
        if (!occupied(s)) continue;
        const int part = s - (charge_ - i);
        if (part == 0) break;
        parts.push_back(part);
        ++i;
    }
    return parts;
}

FockState FockState::from_partition(int charge, const std::vector<int>& parts) {
    const int len = static_cast<int>(parts.size());
    FockState s;
    s.charge_ = charge;
    std::vector<int> positions;
    for (int i = 1; i <= len; ++i) {
        if (parts[static_cast<std::size_t>(i - 1)] < 0 || (i > 1 && parts[static_cast<std::size_t>(i - 1)] > parts[static_cast<std::size_t>(i - 2)]))
            throw UsageError("from_partition: not a partition");
        positions.push_back(parts[static_cast<std::size_t>(i - 1)] + charge - i);
    }
    for (int p : positions)
        if (p >= charge) s.added_.push_back(p);
    for (int k = charge - len; k < charge; ++k)
        if (std::find(positions.begin(), positions.end(), k) == positions.end()) s.removed_.push_back(k);
    std::sort(s.added_.begin(), s.added_.end());
    return s;
}

std::string FockState::to_string() const {
    std::ostringstream os;
    os << "|" << charge_ << "; (";
    auto p = partition();
    for (std::size_t i = 0; i < p.size(); ++i) os << (i ? "," : "") << p[i];
    os << ")>";
    return os.str();
}

namespace {

FockState from_window(int lo, const std::vector<char>& occ) {
    const int hi = lo + static_cast<int>(occ.size()) - 1;
    auto at = [&](int k) { return occ[static_cast<std::size_t>(k - lo)] != 0; };
    int floor = lo;
    while (floor <= hi && at(floor)) ++floor;
    std::vector<int> top;  // occupied positions above the first vacancy, descending
    for (int k = hi; k > floor; --k)
        if (at(k)) top.push_back(k);
    const int charge = floor + static_cast<int>(top.size());
    std::vector<int> parts;
    for (std::size_t i = 0; i < top.size(); ++i) parts.push_back(top[i] - (charge - static_cast<int>(i) - 1));
    while (!parts.empty() && parts.back() == 0) parts.pop_back();
    return FockState::from_partition(charge, parts);
}

}  // namespace

FockVector FockVector::basis(int n_vars, Caps caps, const FockState& s) {
    FockVector v(n_vars, caps);
    v.add(s, Poly::constant(n_vars, caps, 1));
    return v;
}

int FockVector::max_energy() const {
    int e = 0;
    for (const auto& [s, c] : terms_) e = std::max(e, s.energy());
    return e;
}

Poly FockVector::coefficient(const FockState& s) const {
    auto it = terms_.find(s);
    return it == terms_.end() ? Poly(n_vars_, caps_) : it->second;
}

void FockVector::add(const FockState& s, const Poly& c, const Rational& scale) {
    if (c.is_zero() || scale.is_zero()) return;
    auto it = terms_.find(s);
    if (it == terms_.end()) it = terms_.emplace(s, Poly(n_vars_, caps_)).first;
    it->second.add_scaled(c, scale);
    if (it->second.is_zero()) terms_.erase(it);
}

FockVector& FockVector::operator+=(const FockVector& o) {
    for (const auto& [s, c] : o.terms_) add(s, c, 1);
    return *this;
}

FockVector& FockVector::operator-=(const FockVector& o) {
    for (const auto& [s, c] : o.terms_) add(s, c, -1);
    return *this;
}

FockVector operator*(const Poly& c, const FockVector& v) {
    FockVector out(v.n_vars_, common_caps(v.caps_, c.caps()));
    for (const auto& [s, p] : v.terms_) out.add(s, c * p);
    return out;
}

bool operator==(const FockVector& a, const FockVector& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    for (auto i = a.terms_.begin(), j = b.terms_.begin(); i != a.terms_.end(); ++i, ++j)
        if (!(i->first == j->first) || !(i->second == j->second)) return false;
    return true;
}

Alphabet Alphabet::x_range(int lo, int hi, int sign) {
    Alphabet a;
    if (hi >= lo) a.parts_.push_back({sign, Kind::x_block, lo, hi});
    return a;
}

Alphabet Alphabet::flagged(int f, int g) {
    Alphabet a = prefix(f);
    a += x_range(1, g - 1, -1);
    return a;
}

Alphabet Alphabet::minus_beta() {
    Alphabet a;
    a.parts_.push_back({1, Kind::beta_point});
    return a;
}

Alphabet& Alphabet::operator+=(const Alphabet& o) {
    parts_.insert(parts_.end(), o.parts_.begin(), o.parts_.end());
    return *this;
}

std::vector<int> Alphabet::multiplicities(int n_vars) const {
    std::vector<int> m(static_cast<std::size_t>(n_vars) + 1, 0);
    for (const auto& p : parts_) {
        if (p.kind == Kind::beta_point) {
            m[0] += p.sign;
            continue;
        }
        if (p.lo < 1 || p.hi > n_vars) throw UsageError("alphabet references x" + std::to_string(p.hi) + " beyond n_vars");
        for (int k = p.lo; k <= p.hi; ++k) m[static_cast<std::size_t>(k)] += p.sign;
    }
    return m;
}

bool Alphabet::is_zero(int n_vars) const {
    auto m = multiplicities(n_vars);
    return std::all_of(m.begin(), m.end(), [](int v) { return v == 0; });
}

bool Alphabet::has_x(int n_vars) const {
    auto m = multiplicities(n_vars);
    return std::any_of(m.begin() + 1, m.end(), [](int v) { return v != 0; });
}

bool Alphabet::has_beta(int n_vars) const { return multiplicities(n_vars)[0] != 0; }

int Alphabet::max_x_index() const {
    int k = 0;
    for (const auto& p : parts_)
        if (p.kind == Kind::x_block) k = std::max(k, p.hi);
    return k;
}

Poly Alphabet::power_sum(int n, int n_vars, Caps caps) const {
    const auto m = multiplicities(n_vars);
    Poly p(n_vars, caps);
    if (m[0] != 0 && n <= caps.beta) p.add_scaled(Poly::beta(n_vars, caps, n), n % 2 ? -m[0] : m[0]);
    if (n <= caps.x)
        for (int k = 1; k <= n_vars; ++k)
            if (m[static_cast<std::size_t>(k)] != 0) p.add_scaled(Poly::x(n_vars, caps, k, n), m[static_cast<std::size_t>(k)]);
    return p;
}

std::string Alphabet::to_string() const {
    if (parts_.empty()) return "()";
    std::ostringstream os;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        const auto& p = parts_[i];
        os << (p.sign < 0 ? "-" : (i ? "+" : ""));
        if (p.kind == Kind::beta_point) os << "(-b)";
        else os << "x[" << p.lo << ".." << p.hi << "]";
    }
    return os.str();
}

OrderedPair normal_order_pair(const Mode& a, const Mode& b) {
    if (a.annihilates_vacuum() && !b.annihilates_vacuum()) return {-1, b, a};
    return {1, a, b};
}

FockVector apply_fermion(const Mode& mode, const FockVector& v) {
    FockVector out(v.n_vars(), v.caps());
    for (const auto& [s, c] : v.terms())
        if (auto r = s.apply(mode)) out.add(r->second, c, r->first);
    return out;
}

std::vector<std::pair<int, FockState>> current_terms(int m, const FockState& s) {
    if (m == 0) return {{current_zero_eigenvalue(s), s}};
    std::vector<std::pair<int, FockState>> out;
    const int lo = s.min_vacant();
    const int hi = s.max_occupied() + std::max(0, -m);
    // psi_u psi*_{u+m}: vacate t = u + m, fill u.
    for (int u = lo; u <= hi; ++u) {
        if (s.occupied(u) || !s.occupied(u + m)) continue;
        auto r1 = s.apply(Mode::psi_star(u + m));
        auto r2 = r1->second.apply(Mode::psi(u));
        out.emplace_back(r1->first * r2->first, std::move(r2->second));
    }
    return out;
}

int current_zero_eigenvalue(const FockState& s) {
    // Outside [lo, hi] every :psi_k psi*_k: acts as zero on s.
    const int lo = std::min(s.min_vacant(), 0) - 1;
    const int hi = std::max(s.max_occupied(), 0) + 1;
    int total = 0;
    for (int k = lo; k <= hi; ++k) {
        const OrderedPair p = normal_order_pair(Mode::psi(k), Mode::psi_star(k));
        auto r1 = s.apply(p.second);
        if (!r1) continue;
        auto r2 = r1->second.apply(p.first);
        if (!r2) continue;
        total += p.sign * r1->first * r2->first;
    }
    return total;
}

FockVector apply_current(int m, const FockVector& v) {
    FockVector out(v.n_vars(), v.caps());
    for (const auto& [s, c] : v.terms())
        for (const auto& [sign, t] : current_terms(m, s)) out.add(t, c, sign);
    return out;
}

namespace {

FockVector apply_hamiltonian(HDirection dir, const Alphabet& alph, const FockVector& v) {
    FockVector out(v.n_vars(), v.caps());
    const int top = dir == HDirection::H ? v.max_energy() : v.caps().beta;
    for (int n = 1; n <= top; ++n) {
        const Poly p = alph.power_sum(n, v.n_vars(), v.caps());
        if (p.is_zero()) continue;
        const Rational weight(1, n);
        for (const auto& [s, c] : v.terms()) {
            auto moved = current_terms(dir == HDirection::H ? n : -n, s);
            if (moved.empty()) continue;
            const Poly pc = p * c;
            for (const auto& [sign, t] : moved) out.add(t, pc, sign * weight);
        }
    }
    return out;
}

}  // namespace

ExpResult apply_exp_H(HDirection dir, const Alphabet& alph, int sign, const FockVector& v) {
    if (sign != 1 && sign != -1) throw UsageError("exponential sign must be +1 or -1");
    if (dir == HDirection::H_star) {
        if (alph.has_x(v.n_vars()))
            throw UsageError("exp(H*(X)) with an x-alphabet raises energy without a capped weight; not supported");
        if (alph.has_beta(v.n_vars()) && !v.caps().beta_bounded())
            throw UsageError("exp(H*(-b)) needs a finite b-cap to terminate");
    }
    ExpResult res{v, 0};
    if (alph.is_zero(v.n_vars())) return res;
    FockVector term = v;
    for (int k = 1;; ++k) {
        if (k > 100000) throw InvariantViolation("vertex operator series failed to terminate");
        FockVector next = apply_hamiltonian(dir, alph, term);
        if (next.is_zero()) break;
        term = FockVector(v.n_vars(), v.caps());
        const Rational scale(sign, k);
        for (const auto& [s, c] : next.terms()) term.add(s, c, scale);
        res.value += term;
        res.order = k;
    }
    return res;
}

Poly pair_with_bra(int r, const FockVector& v) { return v.coefficient(FockState::vacuum(-r)); }

int two_point(int r, int m, int n) { return m == n && m >= -r ? 1 : 0; }

std::int64_t wick_expectation(const std::vector<int>& creators, const std::vector<int>& annihilators) {
    if (creators.size() != annihilators.size()) throw UsageError("Wick: mode lists differ in length");
    if (creators.empty()) return 1;
    PolyMatrix m(creators.size());
    for (std::size_t i = 0; i < creators.size(); ++i)
        for (std::size_t j = 0; j < annihilators.size(); ++j)
            m[i].push_back(Poly::constant(0, {}, creators[i] == annihilators[j] && creators[i] < 0 ? 1 : 0));
    return determinant(m).coefficient(Monomial{}).to_int64();
}

std::int64_t direct_expectation(const std::vector<int>& creators, const std::vector<int>& annihilators) {
    if (creators.size() != annihilators.size()) throw UsageError("Wick: mode lists differ in length");
    FockState s = FockState::vacuum(0);
    int sign = 1;
    std::vector<Mode> ops;
    for (int n : annihilators) ops.push_back(Mode::psi_star(n));
    for (auto it = creators.rbegin(); it != creators.rend(); ++it) ops.push_back(Mode::psi(*it));
    for (const auto& op : ops) {
        auto r = s.apply(op);
        if (!r) return 0;
        sign *= r->first;
        s = std::move(r->second);
    }
    return s == FockState::vacuum(0) ? sign : 0;
}

namespace {

void partitions_upto(int remaining, int max_part, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
    out.push_back(cur);
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        cur.push_back(p);
        partitions_upto(remaining - p, p, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<FockState> basis_states(int charge, int max_energy) {
    std::vector<std::vector<int>> parts;
    std::vector<int> cur;
    partitions_upto(max_energy, max_energy, cur, parts);
    std::vector<FockState> out;
    out.reserve(parts.size());
    for (const auto& p : parts) out.push_back(FockState::from_partition(charge, p));
    return out;
}

}  // namespace fgroth
