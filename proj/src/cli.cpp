#include "fgroth/cli.hpp"

#include <algorithm>
#include <iomanip>
#include <optional>
#include <sstream>

#include "CLI11.hpp"

#include "fgroth/checks.hpp"
#include "fgroth/errors.hpp"
#include "fgroth/serialize.hpp"

namespace fgroth::cli {

namespace {

using nlohmann::json;

std::vector<int> parse_list(const std::string& text, const std::string& what) {
    std::vector<int> out;
    if (text.empty()) return out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            const int v = std::stoi(item, &used);
            if (used != item.size()) throw std::invalid_argument(item);
            out.push_back(v);
        } catch (const std::logic_error&) {
            throw UsageError(what + ": '" + item + "' is not an integer");
        }
    }
    return out;
}

std::string join(const std::vector<int>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s;
}

struct InstanceArgs {
    std::string lambda, mu, f, g;
    std::optional<int> n_vars, beta_cap, x_cap;

    void attach(CLI::App* app) {
        app->add_option("--lambda", lambda, "outer partition, comma separated (e.g. 2,1)")->required();
        app->add_option("--mu", mu, "inner partition (default empty)");
        app->add_option("--f", f, "upper flag, one entry per row")->required();
        app->add_option("--g", g, "lower flag, one entry per row (default all 1)");
        app->add_option("--nvars", n_vars, "number of x variables (default max f_i, g_i - 1)");
        app->add_option("--beta-cap", beta_cap, "largest b exponent kept");
        app->add_option("--x-cap", x_cap, "largest total x degree kept");
    }

    SkewFlagged build() const {
        Partition lam(parse_list(lambda, "--lambda"));
        Partition m(parse_list(mu, "--mu"));
        auto fs = parse_list(f, "--f");
        auto gs = g.empty() ? std::vector<int>(static_cast<std::size_t>(lam.length()), 1) : parse_list(g, "--g");
        int n = 0;
        for (int a : fs) n = std::max(n, a);
        for (int a : gs) n = std::max(n, a - 1);
        return SkewFlagged::make(lam, m, fs, gs, n_vars.value_or(n), beta_cap, x_cap);
    }
};

struct Common {
    std::string format = "text";
    bool deterministic = false;

    void attach(CLI::App* app) {
        app->add_option("--format", format, "output format")->check(CLI::IsMember({"text", "json"}));
        app->add_flag("--deterministic", deterministic, "leave timings out of the output");
    }
    bool json() const { return format == "json"; }
};

std::string millis_text(double ms) {
    std::ostringstream os;
    os << std::fixed << std::setprecision(2) << ms << " ms";
    return os.str();
}

int do_compute(const InstanceArgs& ia, const Common& c, const std::string& method, const std::string& variant,
               std::ostream& out) {
    const auto inst = ia.build();
    const Poly p = compute(inst, parse_method(method), parse_variant(variant));
    p.require_integral("computed polynomial");
    if (c.json())
        out << dump(to_json(p)) << '\n';
    else
        out << p.to_text() << '\n';
    return ok;
}

int do_compare(const InstanceArgs& ia, const Common& c, bool strict, bool stability, int threads, std::ostream& out) {
    const auto inst = ia.build();
    const auto report = compare(inst, {stability, threads});
    if (c.json()) {
        out << dump(to_json(report, c.deterministic)) << '\n';
    } else {
        out << "instance: " << checks::describe(inst) << '\n';
        out << "coincidence condition: " << (report.coincidence ? "true" : "false") << '\n';
        for (const auto& r : report.results) {
            out << r.name << ": " << r.value.to_text();
            if (!c.deterministic) out << "  (" << millis_text(r.millis) << ")";
            out << '\n';
            if (r.stability_checked)
                out << "  stable: " << (r.stable ? "true" : "false")
                    << ", full polynomial: " << (r.full_polynomial ? "true" : "false") << '\n';
        }
        for (const auto& p : report.pairs) out << p.a << " = " << p.b << ": " << (p.equal ? "true" : "false") << '\n';
        out << "all methods agree: " << (report.all_agree ? "true" : "false") << '\n';
    }
    return strict && !report.all_agree ? mismatch : ok;
}

std::vector<int> parse_word(const std::string& w) {
    if (w.find(',') != std::string::npos) return parse_list(w, "--w");
    std::vector<int> out;
    for (char ch : w) {
        if (ch < '1' || ch > '9') throw UsageError("--w: use digits (e.g. 1432) or a comma-separated list");
        out.push_back(ch - '0');
    }
    return out;
}

int do_perm(const std::string& word, const Common& c, std::ostream& out) {
    const Permutation w(parse_word(word));
    const auto sets = inversion_sets(w);
    const bool vex = is_vexillary(w);
    std::optional<ShapeAndFlag> sf;
    if (vex) sf = shape_and_flag(w);
    if (c.json()) {
        json j = {{"w", w.one_line()}, {"vexillary", vex}};
        json js = json::array();
        for (const auto& s : sets) js.push_back(std::vector<int>(s.begin(), s.end()));
        j["inversion_sets"] = js;
        j["lambda"] = sf ? json(sf->lambda.parts()) : json(nullptr);
        j["flag"] = sf ? json(sf->flag) : json(nullptr);
        out << dump(j) << '\n';
        return ok;
    }
    out << "inversion sets:";
    for (std::size_t i = 0; i < sets.size(); ++i)
        out << " I" << i + 1 << "={" << join(std::vector<int>(sets[i].begin(), sets[i].end())) << "}";
    out << '\n' << "vexillary: " << (vex ? "true" : "false") << '\n';
    if (sf) out << "lambda: " << join(sf->lambda.parts()) << '\n' << "flag: " << join(sf->flag) << '\n';
    return ok;
}

std::vector<checks::SuiteResult> desk_suites() {
    using namespace checks;
    std::vector<SuiteResult> results;
    std::vector<SkewFlagged> thm;
    for (auto box : {std::vector<int>{2}, std::vector<int>{2, 2}}) {
        auto part = grid_instances({box, 1, 2, 1, 2, 2, 2, 2});
        thm.insert(thm.end(), part.begin(), part.end());
    }
    results.push_back(fermionic_identity(thm));
    std::vector<SkewFlagged> g1;
    for (auto box : {std::vector<int>{3}, std::vector<int>{3, 3}}) {
        auto part = grid_instances({box, 1, 3, 1, 1, 3, {}, {}, true});
        g1.insert(g1.end(), part.begin(), part.end());
    }
    results.push_back(tableau_coincidence(g1));
    results.push_back(schur_reduction(g1));
    results.push_back(stabilization(g1));
    results.push_back(variant_coincidence(
        sampled_instances({{3, 2}, 1, 3, 1, 3, 3, 2, 2}, 40, 7, [](const SkewFlagged& s) { return coincidence_condition(s); })));
    for (auto& r : operator_algebra({4, 2, 5, 3, 4, 3, 2, -3, 2})) results.push_back(std::move(r));
    results.push_back(one_row(-2, 4, 0, 3, 1, 3, 3, 3));
    return results;
}

int do_selftest(const Common& c, std::ostream& out) {
    const auto results = desk_suites();
    bool all = true;
    json arr = json::array();
    for (const auto& r : results) {
        all = all && r.pass;
        if (c.json()) {
            json e = {{"name", r.name}, {"pass", r.pass}, {"cases", r.cases}, {"failures", r.failures}, {"detail", r.detail}};
            if (!c.deterministic) e["seconds"] = r.seconds;
            arr.push_back(std::move(e));
        } else {
            out << (r.pass ? "PASS " : "FAIL ") << r.name << ": " << r.detail;
            if (!c.deterministic) out << " (" << millis_text(r.seconds * 1000) << ")";
            out << '\n';
        }
    }
    if (c.json()) out << dump(json{{"suites", arr}, {"all_pass", all}}) << '\n';
    return all ? ok : invariant;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Flagged skew Grothendieck polynomials: determinant, free-fermion and tableau computations"};
    app.name("fgroth");
    app.require_subcommand(1);

    InstanceArgs compute_inst, compare_inst;
    Common compute_c, compare_c, perm_c, self_c;
    std::string method = "jt", variant = "double_bracket", word;
    bool strict = false, no_stability = false;
    int threads = 1;

    auto* cmp = app.add_subcommand("compute", "compute one polynomial");
    compute_inst.attach(cmp);
    compute_c.attach(cmp);
    cmp->add_option("--method", method, "jt, fermionic, tableau or ssyt");
    cmp->add_option("--variant", variant, "double_bracket or matsumura (jt only)");

    auto* cpr = app.add_subcommand("compare", "run every applicable method and compare");
    compare_inst.attach(cpr);
    compare_c.attach(cpr);
    cpr->add_flag("--strict", strict, "exit with status 3 when the methods disagree");
    cpr->add_flag("--no-stability", no_stability, "skip the recomputation at raised caps");
    cpr->add_option("--threads", threads, "worker threads")->check(CLI::PositiveNumber);

    auto* prm = app.add_subcommand("perm", "inversion sets, vexillary test, shape and flag of a permutation");
    prm->add_option("--w", word, "one-line notation, e.g. 1432 or 1,4,3,2")->required();
    perm_c.attach(prm);

    auto* slf = app.add_subcommand("selftest", "property suites at desk scale");
    self_c.attach(slf);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? ok : usage;
    }

    try {
        if (*cmp) return do_compute(compute_inst, compute_c, method, variant, out);
        if (*cpr) return do_compare(compare_inst, compare_c, strict, !no_stability, threads, out);
        if (*prm) return do_perm(word, perm_c, out);
        return do_selftest(self_c, out);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return usage;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return invariant;
    }
}

}  // namespace fgroth::cli
