#include "fgroth/groth.hpp"

#include <chrono>
#include <functional>
#include <future>
#include <sstream>

#include "fgroth/errors.hpp"
#include "fgroth/tableaux.hpp"

namespace fgroth {

std::string Token::to_string() const {
    std::ostringstream os;
    switch (kind) {
        case Kind::fermion:
            os << (mode.kind == Mode::Kind::psi ? "psi_" : "psi*_") << mode.index;
            break;
        case Kind::exp_h:
            os << "exp(" << (sign < 0 ? "-" : "") << "H(" << alphabet.to_string() << "))";
            break;
        case Kind::exp_h_star_beta:
            os << "exp(" << (sign < 0 ? "-" : "") << "H*(-b))";
            break;
    }
    return os.str();
}

std::string OperatorProgram::to_string() const {
    std::ostringstream os;
    os << "<" << bra_charge << "|";
    for (const auto& t : tokens) os << " " << t.to_string();
    os << " |" << ket_charge << ">";
    return os.str();
}

namespace {

int at(const std::vector<int>& v, int i) { return v[static_cast<std::size_t>(i - 1)]; }

void append_ket_blocks(const SkewFlagged& inst, OperatorProgram& p) {
    const int r = inst.rows();
    for (int i = 1; i <= r; ++i) {
        const int f_prev = i == 1 ? 0 : at(inst.f, i - 1);
        Alphabet a = Alphabet::prefix(at(inst.f, i));
        a += Alphabet::x_range(1, f_prev, -1);
        p.tokens.push_back(Token::exp_h(std::move(a), 1));
        p.tokens.push_back(Token::fermion(Mode::psi(inst.lambda(i) - i)));
        p.tokens.push_back(Token::exp_h_star_beta(-1));
    }
}

}  // namespace

OperatorProgram build_program(const SkewFlagged& inst) {
    inst.validate();
    const int r = inst.rows();
    OperatorProgram p;
    p.bra_charge = p.ket_charge = -r;
    for (int j = r; j >= 1; --j) {
        const int g_prev = j == 1 ? 1 : at(inst.g, j - 1);
        Alphabet a = Alphabet::prefix(at(inst.g, j) - 1);
        a += Alphabet::x_range(1, g_prev - 1, -1);
        p.tokens.push_back(Token::fermion(Mode::psi_star(inst.mu(j) - j)));
        p.tokens.push_back(Token::exp_h_star_beta(1));
        p.tokens.push_back(Token::exp_h(std::move(a), -1));
    }
    append_ket_blocks(inst, p);
    return p;
}

OperatorProgram build_program_g1(const SkewFlagged& inst) {
    inst.validate();
    if (!inst.g_is_one()) throw UsageError("the reduced program needs g = (1, ..., 1)");
    const int r = inst.rows();
    OperatorProgram p;
    p.bra_charge = p.ket_charge = -r;
    for (int j = r; j >= 1; --j) {
        p.tokens.push_back(Token::fermion(Mode::psi_star(inst.mu(j) - j)));
        p.tokens.push_back(Token::exp_h_star_beta(1));
    }
    append_ket_blocks(inst, p);
    return p;
}

OperatorProgram without_identities(const OperatorProgram& p, int n_vars) {
    OperatorProgram out;
    out.bra_charge = p.bra_charge;
    out.ket_charge = p.ket_charge;
    for (const auto& t : p.tokens)
        if (!(t.kind == Token::Kind::exp_h && t.alphabet.is_zero(n_vars))) out.tokens.push_back(t);
    return out;
}

bool same_tokens(const OperatorProgram& a, const OperatorProgram& b, int n_vars) {
    if (a.bra_charge != b.bra_charge || a.ket_charge != b.ket_charge || a.tokens.size() != b.tokens.size()) return false;
    for (std::size_t k = 0; k < a.tokens.size(); ++k) {
        const Token& s = a.tokens[k];
        const Token& t = b.tokens[k];
        if (s.kind != t.kind) return false;
        if (s.kind == Token::Kind::fermion && !(s.mode == t.mode)) return false;
        if (s.kind != Token::Kind::fermion && s.sign != t.sign) return false;
        if (s.kind == Token::Kind::exp_h && s.alphabet.multiplicities(n_vars) != t.alphabet.multiplicities(n_vars))
            return false;
    }
    return true;
}

Poly evaluate(const OperatorProgram& p, int n_vars, Caps caps, EvaluationTrace* trace) {
    int net = 0;
    for (const auto& t : p.tokens)
        if (t.kind == Token::Kind::fermion) net += t.mode.kind == Mode::Kind::psi ? 1 : -1;
    if (p.ket_charge + net != p.bra_charge) return Poly(n_vars, caps);

    FockVector v = FockVector::basis(n_vars, caps, FockState::vacuum(p.ket_charge));
    for (auto it = p.tokens.rbegin(); it != p.tokens.rend(); ++it) {
        switch (it->kind) {
            case Token::Kind::fermion:
                v = apply_fermion(it->mode, v);
                break;
            case Token::Kind::exp_h: {
                auto r = apply_exp_H(HDirection::H, it->alphabet, it->sign, v);
                v = std::move(r.value);
                if (trace) trace->exp_orders.push_back(r.order);
                break;
            }
            case Token::Kind::exp_h_star_beta: {
                auto r = apply_exp_H(HDirection::H_star, Alphabet::minus_beta(), it->sign, v);
                v = std::move(r.value);
                if (trace) trace->exp_orders.push_back(r.order);
                break;
            }
        }
        if (trace) trace->max_states = std::max(trace->max_states, v.terms().size());
        if (v.is_zero()) break;
    }
    return v.coefficient(FockState::vacuum(p.bra_charge));
}

Poly flagged_groth_fermionic(const SkewFlagged& inst, EvaluationTrace* trace) {
    if (inst.rows() == 0) return Poly::constant(inst.n_vars, inst.caps, 1);
    return evaluate(build_program(inst), inst.n_vars, inst.caps, trace).require_integral("fermionic evaluation");
}

Poly g_n_fermionic(int n, int f, int g, int n_vars, Caps caps) {
    if (f < 0 || g < 1) throw UsageError("g_n_fermionic needs f >= 0 and g >= 1");
    OperatorProgram p;
    p.bra_charge = 0;
    p.ket_charge = -1;
    p.tokens = {Token::exp_h(Alphabet::flagged(f, g), 1), Token::fermion(Mode::psi(n - 1)), Token::exp_h_star_beta(-1)};
    return evaluate(p, n_vars, caps).require_integral("fermionic one-row function");
}

std::string_view to_string(Method m) {
    switch (m) {
        case Method::jt: return "jt";
        case Method::fermionic: return "fermionic";
        case Method::tableau: return "tableau";
        case Method::ssyt: return "ssyt";
    }
    return "?";
}

Method parse_method(std::string_view s) {
    if (s == "jt") return Method::jt;
    if (s == "fermionic") return Method::fermionic;
    if (s == "tableau") return Method::tableau;
    if (s == "ssyt") return Method::ssyt;
    throw UsageError("unknown method '" + std::string(s) + "' (expected jt, fermionic, tableau or ssyt)");
}

Poly compute(const SkewFlagged& inst, Method method, GVariant variant) {
    switch (method) {
        case Method::jt: return jt_determinant(inst, variant);
        case Method::fermionic: return flagged_groth_fermionic(inst);
        case Method::tableau: return tableaux_polynomial(inst);
        case Method::ssyt: return ssyt_polynomial(inst);
    }
    throw UsageError("unknown method");
}

const MethodResult* MethodReport::find(std::string_view name) const {
    for (const auto& r : results)
        if (r.name == name) return &r;
    return nullptr;
}

namespace {

using Evaluator = std::function<Poly(const SkewFlagged&)>;

MethodResult run_method(const std::string& name, const Evaluator& eval, const SkewFlagged& inst, bool capped,
                        bool check_stability) {
    const auto t0 = std::chrono::steady_clock::now();
    MethodResult res{name, eval(inst)};
    if (capped && check_stability) {
        SkewFlagged raised = inst;
        raised.caps = inst.caps.raised(1);
        const Poly wide = eval(raised);
        res.stability_checked = true;
        res.stable = wide.truncated(inst.caps) == res.value;
        res.full_polynomial = !wide.exceeds(inst.caps);
    }
    res.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return res;
}

}  // namespace

MethodReport compare(const SkewFlagged& inst, const CompareOptions& opts) {
    MethodReport report;
    report.instance = inst;
    report.coincidence = coincidence_condition(inst);

    struct Job {
        std::string name;
        Evaluator eval;
        bool capped;
    };
    std::vector<Job> jobs = {
        {"jt", [](const SkewFlagged& s) { return jt_determinant(s, GVariant::double_bracket); }, true},
        {"fermionic", [](const SkewFlagged& s) { return flagged_groth_fermionic(s); }, true},
    };
    if (inst.g_is_one()) jobs.push_back({"tableau", [](const SkewFlagged& s) { return tableaux_polynomial(s); }, false});
    if (report.coincidence)
        jobs.push_back({"jt_matsumura", [](const SkewFlagged& s) { return jt_determinant(s, GVariant::matsumura); }, true});

    if (opts.threads > 1) {
        std::vector<std::future<MethodResult>> futures;
        for (const auto& j : jobs)
            futures.push_back(std::async(std::launch::async, run_method, j.name, j.eval, inst, j.capped, opts.check_stability));
        for (auto& f : futures) report.results.push_back(f.get());
    } else {
        for (const auto& j : jobs) report.results.push_back(run_method(j.name, j.eval, inst, j.capped, opts.check_stability));
    }

    for (std::size_t a = 0; a < report.results.size(); ++a) {
        for (std::size_t b = a + 1; b < report.results.size(); ++b) {
            const bool eq = report.results[a].value.equal_in_common_ring(report.results[b].value);
            report.pairs.push_back({report.results[a].name, report.results[b].name, eq});
            report.all_agree = report.all_agree && eq;
        }
    }
    return report;
}

}  // namespace fgroth
