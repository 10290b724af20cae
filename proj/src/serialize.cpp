#include "fgroth/serialize.hpp"

#include "fgroth/errors.hpp"

namespace fgroth {

using nlohmann::json;

namespace {

json cap_json(int c) { return c == Caps::kUnbounded ? json(nullptr) : json(c); }

int cap_from(const json& j) { return j.is_null() ? Caps::kUnbounded : j.get<int>(); }

}  // namespace

json to_json(const Poly& p) {
    json terms = json::array();
    for (const auto& t : p.sorted_terms()) {
        json x = json::array();
        for (int k = 1; k <= p.n_vars(); ++k) x.push_back(t.mono.x(k));
        json coeff;
        if (!t.coeff.is_integer()) throw InvariantViolation("non-integer coefficient in output: " + t.coeff.to_string());
        try {
            coeff = t.coeff.to_int64();
        } catch (const InvariantViolation&) {
            coeff = t.coeff.to_string();
        }
        terms.push_back({{"coeff", coeff}, {"beta", t.mono.beta()}, {"x", x}});
    }
    return {{"n_vars", p.n_vars()}, {"beta_cap", cap_json(p.caps().beta)}, {"x_cap", cap_json(p.caps().x)}, {"terms", terms}};
}

Poly poly_from_json(const json& j) {
    try {
        const int n = j.at("n_vars").get<int>();
        const Caps caps{cap_from(j.at("beta_cap")), cap_from(j.at("x_cap"))};
        std::vector<Term> terms;
        for (const auto& t : j.at("terms")) {
            Monomial m = Monomial::beta_power(t.at("beta").get<int>());
            const auto& x = t.at("x");
            if (static_cast<int>(x.size()) != n) throw UsageError("term exponent vector has wrong length");
            for (int k = 1; k <= n; ++k) m = m * Monomial::x_power(k, x[static_cast<std::size_t>(k - 1)].get<int>());
            const auto& c = t.at("coeff");
            Rational coeff = c.is_string() ? Rational(mpq_class(c.get<std::string>())) : Rational(c.get<std::int64_t>());
            terms.push_back({m, coeff});
        }
        return Poly::from_terms(n, caps, std::move(terms));
    } catch (const json::exception& e) {
        throw UsageError(std::string("malformed polynomial JSON: ") + e.what());
    }
}

json to_json(const SkewFlagged& inst) {
    return {{"lambda", inst.lambda.parts()}, {"mu", inst.mu.parts()}, {"f", inst.f},          {"g", inst.g},
            {"n_vars", inst.n_vars},         {"beta_cap", cap_json(inst.caps.beta)},           {"x_cap", cap_json(inst.caps.x)}};
}

json to_json(const MethodReport& r, bool deterministic) {
    json methods = json::array();
    for (const auto& m : r.results) {
        json e = {{"name", m.name}, {"value", to_json(m.value)}, {"stability_checked", m.stability_checked}};
        if (m.stability_checked) {
            e["stable"] = m.stable;
            e["full_polynomial"] = m.full_polynomial;
        }
        if (!deterministic) e["millis"] = m.millis;
        methods.push_back(std::move(e));
    }
    json pairs = json::array();
    for (const auto& p : r.pairs) pairs.push_back({{"a", p.a}, {"b", p.b}, {"equal", p.equal}});
    return {{"instance", to_json(r.instance)},
            {"coincidence_condition", r.coincidence},
            {"methods", methods},
            {"pairs", pairs},
            {"all_agree", r.all_agree}};
}

std::string dump(const json& j) { return j.dump(2); }

}  // namespace fgroth
