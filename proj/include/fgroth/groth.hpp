#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fgroth/fock.hpp"
#include "fgroth/genfun.hpp"
#include "fgroth/shapes.hpp"

namespace fgroth {

/// One factor of a vacuum expectation value.
struct Token {
    enum class Kind { fermion, exp_h, exp_h_star_beta };
    Kind kind;
    Mode mode{Mode::Kind::psi, 0};  // fermion only
    Alphabet alphabet;              // exp_h only
    int sign = 1;                   // exp_h / exp_h_star_beta: exp(sign * H)

    static Token fermion(Mode m) { return {Kind::fermion, m, {}, 1}; }
    static Token exp_h(Alphabet a, int sign) { return {Kind::exp_h, {Mode::Kind::psi, 0}, std::move(a), sign}; }
    static Token exp_h_star_beta(int sign) { return {Kind::exp_h_star_beta, {Mode::Kind::psi, 0}, {}, sign}; }

    std::string to_string() const;
};

/// <bra_charge| t_1 t_2 ... t_k |ket_charge>, tokens stored in written
/// (left-to-right) order and applied to the ket from the right.
struct OperatorProgram {
    std::vector<Token> tokens;
    int bra_charge = 0;
    int ket_charge = 0;

    std::string to_string() const;
};

/// The expectation value for an instance of length r, evaluated in <-r| ... |-r>:
///   prod_{j = r..1} [ psi*_{mu_j - j} exp(H*(-b)) exp(-H(x^[g_j - 1 / g_{j-1}])) ]
///   prod_{i = 1..r} [ exp(H(x^[f_i / f_{i-1} + 1])) psi_{lambda_i - i} exp(-H*(-b)) ]
/// with f_0 = 0 and g_0 = 1, each x^[a/b] alphabet kept as the signed difference
/// x^[a] - x^[b-1].
OperatorProgram build_program(const SkewFlagged& inst);

/// The g = 1 form: bra blocks reduce to psi*_{mu_j - j} exp(H*(-b)).
OperatorProgram build_program_g1(const SkewFlagged& inst);

/// Drops exp(H(X)) tokens whose alphabet has zero net multiplicity.
OperatorProgram without_identities(const OperatorProgram& p, int n_vars);
bool same_tokens(const OperatorProgram& a, const OperatorProgram& b, int n_vars);

struct EvaluationTrace {
    std::vector<int> exp_orders;  // termination order of each exponential, in application order
    std::size_t max_states = 0;   // largest intermediate vector
};

/// Applies the tokens right to left to |ket_charge> and pairs with <bra_charge|.
Poly evaluate(const OperatorProgram& p, int n_vars, Caps caps, EvaluationTrace* trace = nullptr);

/// The flagged skew Grothendieck polynomial from its fermionic expression.
/// Independent of the determinant code path.
Poly flagged_groth_fermionic(const SkewFlagged& inst, EvaluationTrace* trace = nullptr);

/// <0| exp(H(x^[f/g])) psi_{n-1} exp(-H*(-b)) |-1>.
Poly g_n_fermionic(int n, int f, int g, int n_vars, Caps caps);

enum class Method { jt, fermionic, tableau, ssyt };
std::string_view to_string(Method m);
Method parse_method(std::string_view s);

Poly compute(const SkewFlagged& inst, Method method, GVariant variant = GVariant::double_bracket);

struct MethodResult {
    std::string name;
    Poly value;
    bool stability_checked = false;
    bool stable = true;           // recomputation at caps + 1 agrees below the caps
    bool full_polynomial = true;  // recomputation at caps + 1 has no terms above the caps
    double millis = 0;
};

struct PairVerdict {
    std::string a, b;
    bool equal;
};

struct MethodReport {
    SkewFlagged instance;
    bool coincidence = false;
    std::vector<MethodResult> results;
    std::vector<PairVerdict> pairs;
    bool all_agree = true;

    const MethodResult* find(std::string_view name) const;
};

struct CompareOptions {
    bool check_stability = true;
    int threads = 1;
};

/// Runs the Jacobi-Trudi determinant and the fermionic evaluation, plus the
/// tableau model when g = 1 and the Matsumura determinant when the
/// coincidence condition holds, and compares them in their common quotient ring.
MethodReport compare(const SkewFlagged& inst, const CompareOptions& opts = {});

}  // namespace fgroth
