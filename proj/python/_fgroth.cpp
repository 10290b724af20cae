#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "fgroth/cli.hpp"
#include "fgroth/errors.hpp"
#include "fgroth/groth.hpp"
#include "fgroth/serialize.hpp"
#include "fgroth/tableaux.hpp"

namespace py = pybind11;
using namespace fgroth;

namespace {

SkewFlagged make_instance(std::vector<int> lambda, std::vector<int> mu, std::vector<int> f, std::optional<std::vector<int>> g,
                          std::optional<int> n_vars, std::optional<int> beta_cap, std::optional<int> x_cap) {
    std::vector<int> gs = g.value_or(std::vector<int>(lambda.size(), 1));
    int n = 0;
    for (int a : f) n = std::max(n, a);
    for (int a : gs) n = std::max(n, a - 1);
    return SkewFlagged::make(Partition(std::move(lambda)), Partition(std::move(mu)), std::move(f), std::move(gs),
                             n_vars.value_or(n), beta_cap, x_cap);
}

py::object cap(int c) { return c == Caps::kUnbounded ? py::none() : py::object(py::int_(c)); }

}  // namespace

PYBIND11_MODULE(_fgroth, m) {
    m.doc() = "Flagged skew Grothendieck polynomials: Jacobi-Trudi, free-fermion and tableau computations";

    py::register_exception<UsageError>(m, "UsageError", PyExc_ValueError);
    py::register_exception<WindowError>(m, "WindowError", PyExc_IndexError);
    py::register_exception<InvariantViolation>(m, "InvariantViolation", PyExc_RuntimeError);

    py::class_<Poly>(m, "Poly")
        .def_property_readonly("n_vars", &Poly::n_vars)
        .def_property_readonly("beta_cap", [](const Poly& p) { return cap(p.caps().beta); })
        .def_property_readonly("x_cap", [](const Poly& p) { return cap(p.caps().x); })
        .def("to_json", [](const Poly& p) { return dump(to_json(p)); })
        .def_static("from_json", [](const std::string& s) { return poly_from_json(nlohmann::json::parse(s)); })
        .def("terms",
             [](const Poly& p) {
                 py::list out;
                 for (const auto& t : p.sorted_terms()) {
                     py::list x;
                     for (int k = 1; k <= p.n_vars(); ++k) x.append(t.mono.x(k));
                     out.append(py::make_tuple(py::int_(py::str(t.coeff.to_string())), t.mono.beta(), py::tuple(x)));
                 }
                 return out;
             },
             "(coefficient, b exponent, x exponents) in serialization order")
        .def("truncated", [](const Poly& p, int beta_cap, int x_cap) { return p.truncated({beta_cap, x_cap}); })
        .def("is_zero", &Poly::is_zero)
        .def("__eq__", [](const Poly& a, const Poly& b) { return a == b; })
        .def("__str__", &Poly::to_text)
        .def("__repr__", [](const Poly& p) { return "Poly(" + p.to_text() + ")"; });

    py::class_<SkewFlagged>(m, "Instance")
        .def(py::init(&make_instance), py::arg("lam"), py::arg("mu") = std::vector<int>{}, py::arg("f"),
             py::arg("g") = py::none(), py::arg("n_vars") = py::none(), py::arg("beta_cap") = py::none(),
             py::arg("x_cap") = py::none())
        .def_property_readonly("lam", [](const SkewFlagged& s) { return s.lambda.parts(); })
        .def_property_readonly("mu", [](const SkewFlagged& s) { return s.mu.parts(); })
        .def_readonly("f", &SkewFlagged::f)
        .def_readonly("g", &SkewFlagged::g)
        .def_readonly("n_vars", &SkewFlagged::n_vars)
        .def_property_readonly("beta_cap", [](const SkewFlagged& s) { return cap(s.caps.beta); })
        .def_property_readonly("x_cap", [](const SkewFlagged& s) { return cap(s.caps.x); })
        .def("coincidence_condition", &coincidence_condition);

    m.def("jt_determinant",
          [](const SkewFlagged& s, const std::string& variant) { return jt_determinant(s, parse_variant(variant)); },
          py::arg("inst"), py::arg("variant") = "double_bracket");
    m.def("fermionic", [](const SkewFlagged& s) { return flagged_groth_fermionic(s); }, py::arg("inst"));
    m.def("tableaux_polynomial", &tableaux_polynomial, py::arg("inst"));
    m.def("ssyt_polynomial", &ssyt_polynomial, py::arg("inst"));
    m.def("compute",
          [](const SkewFlagged& s, const std::string& method, const std::string& variant) {
              return compute(s, parse_method(method), parse_variant(variant));
          },
          py::arg("inst"), py::arg("method") = "jt", py::arg("variant") = "double_bracket");
    m.def("compare_json",
          [](const SkewFlagged& s, bool stability, int threads, bool deterministic) {
              MethodReport r;
              {
                  py::gil_scoped_release release;
                  r = compare(s, {stability, threads});
              }
              return dump(to_json(r, deterministic));
          },
          py::arg("inst"), py::arg("check_stability") = true, py::arg("threads") = 1, py::arg("deterministic") = true);
    m.def("g_n_fermionic",
          [](int n, int f, int g, int n_vars, int beta_cap, std::optional<int> x_cap) {
              return g_n_fermionic(n, f, g, n_vars, {beta_cap, x_cap.value_or(Caps::kUnbounded)});
          },
          py::arg("n"), py::arg("f"), py::arg("g"), py::arg("n_vars"), py::arg("beta_cap"), py::arg("x_cap") = py::none());
    m.def("g_coefficient",
          [](int n, int p, int q, int n_vars, int beta_cap, std::optional<int> x_cap, const std::string& variant) {
              return g_series(p, q, parse_variant(variant), n, n, n_vars, {beta_cap, x_cap.value_or(Caps::kUnbounded)}).coeff(n);
          },
          py::arg("n"), py::arg("p"), py::arg("q"), py::arg("n_vars"), py::arg("beta_cap"), py::arg("x_cap") = py::none(),
          py::arg("variant") = "double_bracket");

    m.def("inversion_sets", [](const std::vector<int>& w) {
        std::vector<std::vector<int>> out;
        for (const auto& s : inversion_sets(Permutation(w))) out.emplace_back(s.begin(), s.end());
        return out;
    });
    m.def("is_vexillary", [](const std::vector<int>& w) { return is_vexillary(Permutation(w)); });
    m.def("shape_and_flag", [](const std::vector<int>& w) {
        const auto sf = shape_and_flag(Permutation(w));
        return py::make_tuple(sf.lambda.parts(), sf.flag);
    });

    m.def("run_cli",
          [](const std::vector<std::string>& args) {
              std::ostringstream out, err;
              int code;
              {
                  py::gil_scoped_release release;
                  code = cli::run(args, out, err);
              }
              return py::make_tuple(code, out.str(), err.str());
          },
          "Runs the command-line interface in process; returns (exit code, stdout, stderr).");
}
