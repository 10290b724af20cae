#include "doctest.h"
#include "fgroth/checks.hpp"
#include "fgroth/errors.hpp"
#include "fgroth/groth.hpp"

using namespace fgroth;

namespace {

std::vector<const Token*> of_kind(const OperatorProgram& p, Token::Kind k) {
    std::vector<const Token*> out;
    for (const auto& t : p.tokens)
        if (t.kind == k) out.push_back(&t);
    return out;
}

}  // namespace

TEST_CASE("program for a single cell") {
    const auto inst = SkewFlagged::make(Partition{1}, Partition{}, {1}, {1}, 1);
    const auto p = build_program(inst);
    CHECK(p.bra_charge == -1);
    CHECK(p.ket_charge == -1);
    REQUIRE(p.tokens.size() == 6);
    CHECK(p.tokens[0].kind == Token::Kind::fermion);
    CHECK(p.tokens[0].mode == Mode::psi_star(-1));
    CHECK(p.tokens[1].kind == Token::Kind::exp_h_star_beta);
    CHECK(p.tokens[1].sign == 1);
    CHECK(p.tokens[2].kind == Token::Kind::exp_h);
    CHECK(p.tokens[2].alphabet.is_zero(1));
    CHECK(p.tokens[3].kind == Token::Kind::exp_h);
    CHECK(p.tokens[3].alphabet.multiplicities(1) == std::vector<int>{0, 1});
    CHECK(p.tokens[4].mode == Mode::psi(0));
    CHECK(p.tokens[5].kind == Token::Kind::exp_h_star_beta);
    CHECK(p.tokens[5].sign == -1);
}

TEST_CASE("program structure") {
    const auto inst = SkewFlagged::make(Partition{3, 2, 2}, Partition{1, 1}, {2, 3, 3}, {1, 2, 2}, 3, 3, 10);
    const auto p = build_program(inst);
    const auto fermions = of_kind(p, Token::Kind::fermion);
    REQUIRE(fermions.size() == 6);
    int balance = 0;
    for (const auto* t : fermions) balance += t->mode.kind == Mode::Kind::psi ? 1 : -1;
    CHECK(balance == 0);
    CHECK(fermions[0]->mode == Mode::psi_star(0 - 3));
    CHECK(fermions[2]->mode == Mode::psi_star(1 - 1));
    CHECK(fermions[3]->mode == Mode::psi(3 - 1));
    CHECK(fermions[5]->mode == Mode::psi(2 - 3));
    for (const auto* t : of_kind(p, Token::Kind::exp_h)) CHECK(t->alphabet.max_x_index() <= 3);
}

TEST_CASE("g = 1 reduction matches the general program") {
    for (const auto& inst : checks::grid_instances({{3, 2}, 1, 3, 1, 1, 3, {}, {}})) {
        const auto general = without_identities(build_program(inst), inst.n_vars);
        const auto special = without_identities(build_program_g1(inst), inst.n_vars);
        CHECK_MESSAGE(same_tokens(general, special, inst.n_vars), checks::describe(inst));
    }
}

TEST_CASE("constant flags telescope") {
    const auto inst = SkewFlagged::make(Partition{2, 2, 1}, Partition{}, {3, 3, 3}, {1, 1, 1}, 3);
    const auto p = build_program(inst);
    std::vector<const Token*> ket_side;
    for (const auto* t : of_kind(p, Token::Kind::exp_h))
        if (t->sign == 1) ket_side.push_back(t);
    REQUIRE(ket_side.size() == 3);
    CHECK(ket_side[0]->alphabet.multiplicities(3) == std::vector<int>{0, 1, 1, 1});
    CHECK(ket_side[1]->alphabet.is_zero(3));
    CHECK(ket_side[2]->alphabet.is_zero(3));
}

TEST_CASE("fermionic examples") {
    const auto one = SkewFlagged::make(Partition{1}, Partition{}, {2}, {1}, 2);
    CHECK(flagged_groth_fermionic(one).to_text() == "x1 + x2 + b*x1*x2");
    const auto col = SkewFlagged::make(Partition{1, 1}, Partition{}, {1, 2}, {1, 1}, 2);
    CHECK(flagged_groth_fermionic(col).to_text() == "x1*x2");
    for (const auto& inst : checks::grid_instances({{2, 1}, 1, 2, 1, 3, 2, 2, 2})) {
        if (inst.lambda.parts() != inst.mu.parts()) continue;
        CHECK(flagged_groth_fermionic(inst) == Poly::constant(inst.n_vars, inst.caps, 1));
    }
}

TEST_CASE("one-row fermionic examples") {
    const Caps c{3, 6};
    CHECK(g_n_fermionic(1, 1, 1, 1, c) == Poly::x(1, c, 1));
    CHECK(g_n_fermionic(0, 2, 3, 3, c) == Poly::constant(3, c, 1));
    CHECK(g_n_fermionic(-1, 2, 3, 3, c) == -Poly::beta(3, c));
    CHECK(checks::one_row(-2, 4, 0, 3, 1, 3, 3, 3).pass);
}

TEST_CASE("fermionic expression on a small grid with general flags") {
    std::vector<SkewFlagged> grid = checks::grid_instances({{2, 2}, 1, 2, 1, 3, 2, 2, 2});
    const auto r = checks::fermionic_identity(grid);
    CHECK_MESSAGE(r.pass, r.detail);
}

TEST_CASE("degree bounds for g = 1") {
    for (const auto& inst : checks::grid_instances({{3, 2}, 1, 3, 1, 1, 3, {}, {}, true})) {
        const Poly p = flagged_groth_fermionic(inst);
        int bound = 0;
        for (int i = 1; i <= inst.rows(); ++i) bound += (inst.lambda(i) - inst.mu(i)) * (inst.f[static_cast<std::size_t>(i - 1)] - 1);
        CHECK(p.beta_degree() <= bound);
        CHECK(p.beta_degree() <= inst.caps.beta);
        for (const auto& t : p.terms()) CHECK(t.mono.x_degree() == inst.skew_size() + t.mono.beta());
    }
}

TEST_CASE("evaluation trace") {
    const auto inst = SkewFlagged::make(Partition{2, 1}, Partition{}, {2, 2}, {1, 1}, 2);
    EvaluationTrace trace;
    const Poly p = flagged_groth_fermionic(inst, &trace);
    CHECK(p == compute(inst, Method::tableau).truncated(inst.caps));
    CHECK(trace.exp_orders.size() == 8);
    CHECK(trace.max_states > 0);
}

TEST_CASE("compare reports") {
    const auto inst = SkewFlagged::make(Partition{1, 1}, Partition{}, {1, 2}, {1, 1}, 2);
    for (int threads : {1, 3}) {
        const auto r = compare(inst, {true, threads});
        CHECK(r.all_agree);
        CHECK(r.coincidence);
        REQUIRE(r.find("tableau") != nullptr);
        CHECK(r.find("jt")->value.to_text() == "x1*x2");
        CHECK(r.find("jt")->stable);
        CHECK(r.find("jt")->full_polynomial);
        CHECK(r.results.size() == 4);
        CHECK(r.pairs.size() == 6);
    }
    const auto general = SkewFlagged::make(Partition{1}, Partition{}, {1}, {3}, 3, 3, 4);
    const auto r = compare(general);
    CHECK(r.all_agree);
    CHECK_FALSE(r.coincidence);
    CHECK(r.find("tableau") == nullptr);
    CHECK(r.find("jt_matsumura") == nullptr);
    CHECK(r.find("jt")->stable);
    CHECK_FALSE(r.find("jt")->full_polynomial);

    const auto crooked = SkewFlagged::make(Partition{1, 1}, Partition{}, {2, 1}, {1, 1}, 2);
    CHECK_FALSE(compare(crooked).all_agree);
}

TEST_CASE("method names") {
    CHECK(parse_method("fermionic") == Method::fermionic);
    CHECK(to_string(Method::ssyt) == "ssyt");
    CHECK_THROWS_AS(parse_method("wick"), UsageError);
}
