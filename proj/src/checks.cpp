#include "fgroth/checks.hpp"

#include <algorithm>
#include <chrono>
#include <random>
#include <sstream>

#include "fgroth/errors.hpp"
#include "fgroth/tableaux.hpp"

namespace fgroth::checks {

namespace {

using Clock = std::chrono::steady_clock;

std::string join(const std::vector<int>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s;
}

void partitions_below(const std::vector<int>& bound, std::size_t i, int prev, std::vector<int>& cur,
                      std::vector<std::vector<int>>& out) {
    if (i == bound.size()) {
        out.push_back(cur);
        return;
    }
    for (int a = 0; a <= std::min(prev, bound[i]); ++a) {
        cur.push_back(a);
        partitions_below(bound, i + 1, a, cur, out);
        cur.pop_back();
    }
}

std::vector<std::vector<int>> partitions_below(const std::vector<int>& bound) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    partitions_below(bound, 0, bound.empty() ? 0 : bound.front(), cur, out);
    return out;
}

SkewFlagged make_instance(const GridSpec& spec, const Partition& lambda, const Partition& mu, std::vector<int> f,
                          std::vector<int> g) {
    std::optional<int> x_cap;
    if (spec.x_extra) x_cap = lambda.weight() - mu.weight() + *spec.x_extra;
    return SkewFlagged::make(lambda, mu, std::move(f), std::move(g), spec.n_vars, spec.beta_cap, x_cap);
}

// Runs `check` on every instance; it returns an empty string on success or a failure note.
SuiteResult run_suite(std::string name, const std::vector<SkewFlagged>& instances,
                      const std::function<std::string(const SkewFlagged&)>& check) {
    SuiteResult r;
    r.name = std::move(name);
    const auto start = Clock::now();
    for (const auto& inst : instances) {
        ++r.cases;
        std::string note;
        try {
            note = check(inst);
        } catch (const std::exception& e) {
            note = std::string("exception: ") + e.what();
        }
        if (!note.empty()) {
            if (r.failures++ == 0) r.detail = describe(inst) + ": " + note;
            r.pass = false;
        }
    }
    r.seconds = std::chrono::duration<double>(Clock::now() - start).count();
    if (r.pass) r.detail = std::to_string(r.cases) + " instances";
    return r;
}

std::string mismatch(const Poly& a, const Poly& b) { return a.to_text() + "  vs  " + b.to_text(); }

}  // namespace

std::vector<std::pair<Partition, Partition>> shapes_in_box(const std::vector<int>& box) {
    std::vector<std::pair<Partition, Partition>> out;
    for (const auto& lam : partitions_below(box))
        for (const auto& mu : partitions_below(lam)) out.emplace_back(Partition(lam), Partition(mu));
    return out;
}

std::vector<std::vector<int>> all_flags(int r, int lo, int hi) {
    std::vector<std::vector<int>> out{{}};
    for (int i = 0; i < r; ++i) {
        std::vector<std::vector<int>> next;
        for (const auto& v : out)
            for (int a = lo; a <= hi; ++a) {
                next.push_back(v);
                next.back().push_back(a);
            }
        out = std::move(next);
    }
    return out;
}

std::vector<SkewFlagged> grid_instances(const GridSpec& spec) {
    const int r = static_cast<int>(spec.box.size());
    auto fs = all_flags(r, spec.f_lo, spec.f_hi);
    if (spec.increasing_f) std::erase_if(fs, [](const auto& f) { return !std::is_sorted(f.begin(), f.end()); });
    const auto gs = all_flags(r, spec.g_lo, spec.g_hi);
    std::vector<SkewFlagged> out;
    for (const auto& [lam, mu] : shapes_in_box(spec.box))
        for (const auto& f : fs)
            for (const auto& g : gs) out.push_back(make_instance(spec, lam, mu, f, g));
    return out;
}

std::vector<SkewFlagged> sampled_instances(const GridSpec& spec, int count, std::uint64_t seed,
                                           const std::function<bool(const SkewFlagged&)>& keep) {
    const auto shapes = shapes_in_box(spec.box);
    const int r = static_cast<int>(spec.box.size());
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> pick_shape(0, shapes.size() - 1);
    std::uniform_int_distribution<int> pick_f(spec.f_lo, spec.f_hi), pick_g(spec.g_lo, spec.g_hi);
    std::vector<SkewFlagged> out;
    for (long attempts = 0; static_cast<int>(out.size()) < count; ++attempts) {
        if (attempts > 1000L * count) throw InvariantViolation("sampler could not find enough instances");
        const auto& [lam, mu] = shapes[pick_shape(rng)];
        std::vector<int> f(static_cast<std::size_t>(r)), g(static_cast<std::size_t>(r));
        for (auto& a : f) a = pick_f(rng);
        for (auto& a : g) a = pick_g(rng);
        if (spec.increasing_f) std::sort(f.begin(), f.end());
        auto inst = make_instance(spec, lam, mu, f, g);
        if (!keep || keep(inst)) out.push_back(std::move(inst));
    }
    return out;
}

std::string describe(const SkewFlagged& inst) {
    std::ostringstream os;
    os << "lambda=" << join(inst.lambda.parts()) << " mu=" << join(inst.mu.parts()) << " f=" << join(inst.f)
       << " g=" << join(inst.g) << " N=" << inst.n_vars << " B=" << inst.caps.beta << " D=" << inst.caps.x;
    return os.str();
}

SuiteResult fermionic_identity(const std::vector<SkewFlagged>& instances) {
    return run_suite("fermionic = jacobi-trudi", instances, [](const SkewFlagged& inst) {
        const Poly a = flagged_groth_fermionic(inst);
        const Poly b = jt_determinant(inst, GVariant::double_bracket);
        return a == b ? std::string() : mismatch(a, b);
    });
}

SuiteResult tableau_coincidence(const std::vector<SkewFlagged>& instances) {
    return run_suite("jacobi-trudi = set-valued tableaux", instances, [](const SkewFlagged& inst) {
        const Poly a = jt_determinant(inst, GVariant::double_bracket);
        const Poly b = tableaux_polynomial(inst);
        return a == b ? std::string() : mismatch(a, b);
    });
}

SuiteResult schur_reduction(const std::vector<SkewFlagged>& instances) {
    return run_suite("jacobi-trudi at b = 0 = flagged schur", instances, [](const SkewFlagged& inst) {
        const auto at0 = SkewFlagged::make(inst.lambda, inst.mu, inst.f, inst.g, inst.n_vars, 0, inst.skew_size());
        const Poly a = jt_determinant(at0, GVariant::double_bracket);
        const Poly b = ssyt_polynomial(at0);
        return a == b ? std::string() : mismatch(a, b);
    });
}

SuiteResult variant_coincidence(const std::vector<SkewFlagged>& instances) {
    return run_suite("matsumura = double bracket", instances, [](const SkewFlagged& inst) {
        if (!coincidence_condition(inst)) return std::string("coincidence condition fails");
        const Poly a = jt_determinant(inst, GVariant::matsumura);
        const Poly b = jt_determinant(inst, GVariant::double_bracket);
        return a == b ? std::string() : mismatch(a, b);
    });
}

SuiteResult stabilization(const std::vector<SkewFlagged>& instances) {
    return run_suite("cap stabilization", instances, [](const SkewFlagged& inst) {
        const Poly base = jt_determinant(inst, GVariant::double_bracket);
        const Caps up = inst.caps.raised(1);
        const auto raised_inst = SkewFlagged::make(inst.lambda, inst.mu, inst.f, inst.g, inst.n_vars, up.beta, up.x);
        const Poly raised = jt_determinant(raised_inst, GVariant::double_bracket);
        if (!(raised.truncated(inst.caps) == base)) return "not stable: " + mismatch(base, raised);
        if (inst.g_is_one() && raised.exceeds(inst.caps)) return "terms beyond the caps: " + raised.to_text();
        return std::string();
    });
}

namespace {

struct Tally {
    SuiteResult r;
    Clock::time_point start = Clock::now();

    explicit Tally(std::string name) { r.name = std::move(name); }
    void check(bool ok, const std::function<std::string()>& what) {
        ++r.cases;
        if (!ok) {
            if (r.failures++ == 0) r.detail = what();
            r.pass = false;
        }
    }
    SuiteResult done() {
        r.seconds = std::chrono::duration<double>(Clock::now() - start).count();
        if (r.pass) r.detail = std::to_string(r.cases) + " checks";
        return r;
    }
};

FockVector op(const Mode& m, const FockVector& v) { return apply_fermion(m, v); }

}  // namespace

std::vector<SuiteResult> operator_algebra(const AlgebraSpec& spec) {
    const Caps plain{0, 0};
    std::vector<FockState> states;
    for (int c = -spec.max_charge; c <= spec.max_charge; ++c)
        for (const auto& s : basis_states(c, spec.max_energy)) states.push_back(s);

    std::vector<SuiteResult> out;

    {
        Tally t("anticommutation");
        for (const auto& s : states) {
            const auto v = FockVector::basis(0, plain, s);
            const int lo = s.charge() - spec.index_radius, hi = s.charge() + spec.index_radius;
            for (int m = lo; m <= hi; ++m)
                for (int n = lo; n <= hi; ++n) {
                    const auto where = [&] { return s.to_string() + " m=" + std::to_string(m) + " n=" + std::to_string(n); };
                    auto pp = op(Mode::psi(m), op(Mode::psi(n), v));
                    pp += op(Mode::psi(n), op(Mode::psi(m), v));
                    t.check(pp.is_zero(), [&] { return "psi psi at " + where(); });
                    auto ss = op(Mode::psi_star(m), op(Mode::psi_star(n), v));
                    ss += op(Mode::psi_star(n), op(Mode::psi_star(m), v));
                    t.check(ss.is_zero(), [&] { return "psi* psi* at " + where(); });
                    auto mixed = op(Mode::psi(m), op(Mode::psi_star(n), v));
                    mixed += op(Mode::psi_star(n), op(Mode::psi(m), v));
                    const auto expect = m == n ? v : FockVector(0, plain);
                    t.check(mixed == expect, [&] { return "psi psi* at " + where(); });
                }
        }
        out.push_back(t.done());
    }

    {
        Tally t("current relations");
        const int R = spec.current_range;
        for (const auto& s : states) {
            const auto v = FockVector::basis(0, plain, s);
            const auto where = [&](int m, int n) {
                return s.to_string() + " m=" + std::to_string(m) + " n=" + std::to_string(n);
            };
            t.check(current_zero_eigenvalue(s) == s.charge(), [&] { return "a_0 eigenvalue at " + s.to_string(); });
            for (int m = -R; m <= R; ++m) {
                if (m > 0) {
                    bool lowers = true;
                    for (const auto& [sign, st] : current_terms(m, s)) lowers = lowers && st.energy() == s.energy() - m;
                    t.check(lowers, [&] { return "a_" + std::to_string(m) + " energy shift at " + s.to_string(); });
                }
                for (int n = -R; n <= R; ++n) {
                    auto c = apply_current(m, apply_current(n, v));
                    c -= apply_current(n, apply_current(m, v));
                    const auto expect = Poly::constant(0, plain, m * (m + n == 0 ? 1 : 0)) * v;
                    t.check(c == expect, [&] { return "[a_m, a_n] at " + where(m, n); });
                }
                const int lo = s.charge() - spec.index_radius, hi = s.charge() + spec.index_radius;
                for (int n = lo; n <= hi; ++n) {
                    auto c = apply_current(m, op(Mode::psi(n), v));
                    c -= op(Mode::psi(n), apply_current(m, v));
                    t.check(c == op(Mode::psi(n - m), v), [&] { return "[a_m, psi_n] at " + where(m, n); });
                    auto d = apply_current(m, op(Mode::psi_star(n), v));
                    d -= op(Mode::psi_star(n), apply_current(m, v));
                    auto expect = op(Mode::psi_star(n + m), v);
                    FockVector neg(0, plain);
                    neg -= expect;
                    t.check(d == neg, [&] { return "[a_m, psi*_n] at " + where(m, n); });
                }
            }
        }
        out.push_back(t.done());
    }

    {
        // Single variable t = x1 with a degree cap; -b with a b-cap.
        Tally t("vertex operator conjugation");
        const Caps caps{spec.beta_cap, spec.t_cap};
        const auto x1 = Alphabet::prefix(1);
        const auto mb = Alphabet::minus_beta();
        const Poly tpoly = Poly::x(1, caps, 1);
        const Poly mbeta = -Poly::beta(1, caps);
        for (const auto& s : states) {
            const auto v = FockVector::basis(1, caps, s);
            const int lo = s.charge() - spec.index_radius, hi = s.charge() + spec.index_radius;
            for (int n = lo; n <= hi; ++n) {
                const auto where = [&] { return s.to_string() + " n=" + std::to_string(n); };
                // e^{H(t)} psi_n e^{-H(t)} = sum_k t^k psi_{n-k}
                auto lhs = apply_exp_H(HDirection::H, x1, -1, v).value;
                lhs = apply_exp_H(HDirection::H, x1, 1, op(Mode::psi(n), lhs)).value;
                FockVector rhs(1, caps);
                Poly power = Poly::constant(1, caps, 1);
                for (int k = 0; k <= spec.t_cap; ++k, power *= tpoly) rhs += power * op(Mode::psi(n - k), v);
                t.check(lhs == rhs, [&] { return "e^H(t) psi e^-H(t) at " + where(); });
                // e^{H*(-b)} psi_n e^{-H*(-b)} = sum_k (-b)^k psi_{n+k}
                auto lhs2 = apply_exp_H(HDirection::H_star, mb, -1, v).value;
                lhs2 = apply_exp_H(HDirection::H_star, mb, 1, op(Mode::psi(n), lhs2)).value;
                FockVector rhs2(1, caps);
                power = Poly::constant(1, caps, 1);
                for (int k = 0; k <= spec.beta_cap; ++k, power *= mbeta) rhs2 += power * op(Mode::psi(n + k), v);
                t.check(lhs2 == rhs2, [&] { return "e^H*(-b) psi e^-H*(-b) at " + where(); });
            }
            // e^{H(t)} e^{-H*(-b)} = (1 + b t) e^{-H*(-b)} e^{H(t)}
            const auto a = apply_exp_H(HDirection::H, x1, 1, apply_exp_H(HDirection::H_star, mb, -1, v).value).value;
            const auto b = apply_exp_H(HDirection::H_star, mb, -1, apply_exp_H(HDirection::H, x1, 1, v).value).value;
            const Poly factor = Poly::constant(1, caps, 1) + Poly::beta(1, caps) * tpoly;
            t.check(a == factor * b, [&] { return "e^H e^-H* exchange at " + s.to_string(); });
        }
        for (int r = 0; r <= spec.max_charge; ++r)
            for (int m = -r - 3; m <= 3; ++m)
                for (int n = -r - 3; n <= 3; ++n) {
                    const auto vac = FockVector::basis(0, plain, FockState::vacuum(-r));
                    const Poly direct = pair_with_bra(r, op(Mode::psi_star(n), op(Mode::psi(m), vac)));
                    const int expect = (m == n && m >= -r) ? 1 : 0;
                    t.check(direct == Poly::constant(0, plain, expect) && two_point(r, m, n) == expect, [&] {
                        return "two-point r=" + std::to_string(r) + " m=" + std::to_string(m) + " n=" + std::to_string(n);
                    });
                }
        out.push_back(t.done());
    }

    {
        Tally t("wick");
        for (int k = 1; k <= spec.wick_length; ++k) {
            const auto lists = all_flags(k, spec.wick_lo, spec.wick_hi);
            for (const auto& ms : lists)
                for (const auto& ns : lists) {
                    const auto w = wick_expectation(ms, ns);
                    const auto d = direct_expectation(ms, ns);
                    t.check(w == d, [&] {
                        return "m=" + join(ms) + " n=" + join(ns) + ": " + std::to_string(w) + " vs " + std::to_string(d);
                    });
                }
        }
        out.push_back(t.done());
    }
    return out;
}

SuiteResult one_row(int n_lo, int n_hi, int f_lo, int f_hi, int g_lo, int g_hi, int beta_cap, int n_vars) {
    Tally t("one-row fermionic expression");
    const Caps caps{beta_cap, Caps::kUnbounded};
    for (int f = f_lo; f <= f_hi; ++f)
        for (int g = g_lo; g <= g_hi; ++g) {
            const auto series = g_series(f, g, GVariant::double_bracket, n_lo, n_hi, n_vars, caps);
            for (int n = n_lo; n <= n_hi; ++n) {
                const Poly a = g_n_fermionic(n, f, g, n_vars, caps);
                const Poly b = series.coeff(n);
                t.check(a == b, [&] {
                    return "n=" + std::to_string(n) + " f=" + std::to_string(f) + " g=" + std::to_string(g) + ": " +
                           mismatch(a, b);
                });
            }
        }
    return t.done();
}

}  // namespace fgroth::checks
