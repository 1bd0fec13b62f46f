// Python surface over the float-mode operations. Reports cross the boundary
// as plain dicts/lists via the JSON serializers.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "sosw/report_json.hpp"

namespace py = pybind11;
using namespace sosw;

namespace {

py::object json_to_py(const Json& j) {
  switch (j.type()) {
    case Json::value_t::null:
      return py::none();
    case Json::value_t::boolean:
      return py::bool_(j.get<bool>());
    case Json::value_t::number_integer:
      return py::int_(j.get<long long>());
    case Json::value_t::number_unsigned:
      return py::int_(j.get<unsigned long long>());
    case Json::value_t::number_float:
      return py::float_(j.get<double>());
    case Json::value_t::string:
      return py::str(j.get<std::string>());
    case Json::value_t::array: {
      py::list out;
      for (const auto& item : j) out.append(json_to_py(item));
      return out;
    }
    case Json::value_t::object: {
      py::dict out;
      for (const auto& [key, value] : j.items()) out[py::str(key)] = json_to_py(value);
      return out;
    }
    default:
      return py::none();
  }
}

Monomial monomial_from_list(const std::vector<int>& vars) { return Monomial(vars); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "sum-of-squares pseudo-expectation workbench (float-mode core)";

  py::register_exception<BudgetError>(m, "BudgetError", PyExc_RuntimeError);

  py::class_<Graph>(m, "Graph")
      .def(py::init<int>(), py::arg("n"))
      .def(py::init<int, std::vector<std::pair<int, int>>>(), py::arg("n"), py::arg("edges"))
      .def_property_readonly("n", &Graph::n)
      .def_property_readonly("edges", [](const Graph& g) { return g.edges(); })
      .def("has_edge", &Graph::has_edge)
      .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
      .def("__repr__", [](const Graph& g) {
        return "Graph(n=" + std::to_string(g.n()) +
               ", m=" + std::to_string(g.edge_count()) + ")";
      });

  m.def("gen_gnp", &gen_gnp, py::arg("n"), py::arg("p"), py::arg("seed"));
  m.def("complement", &complement);
  m.def("is_independent_set",
        [](const Graph& g, const std::vector<int>& s) { return is_independent_set(g, s); });
  m.def("max_independent_set", [](const Graph& g) {
    auto r = max_independent_set(g);
    return py::make_tuple(r.size, r.witness);
  });
  m.def("enumerate_independent_sets", &enumerate_independent_sets, py::arg("g"),
        py::arg("max_size"));
  m.def("is_k_colorable", &is_k_colorable);
  m.def("graph_hash", &graph_hash);
  m.def("write_edge_list", &write_edge_list);
  m.def("parse_edge_list", &parse_edge_list);

  py::class_<PseudoExpectation<double>>(m, "PseudoExpectation")
      .def_readonly("n", &PseudoExpectation<double>::n)
      .def_readonly("d", &PseudoExpectation<double>::d)
      .def("value",
           [](const PseudoExpectation<double>& pe, const std::vector<int>& s) {
             return pe.value(monomial_from_list(s));
           })
      .def("singleton_values", [](const PseudoExpectation<double>& pe) {
        std::vector<double> out;
        for (int i = 1; i <= pe.n; ++i) out.push_back(pe.value(Monomial({i})));
        return out;
      });

  m.def("uniform_independent_set_pe", &uniform_independent_set_pe<double>, py::arg("g"),
        py::arg("d"));

  m.def(
      "pe_calibrated",
      [](const Graph& g, double omega, int tau, int d, double epsilon,
         const std::string& rule) {
        CalibrationParams params;
        params.omega = omega > 0 ? omega
                                 : std::pow(static_cast<double>(g.n()), 0.5 - epsilon);
        params.tau = tau;
        params.d = d;
        params.epsilon = epsilon;
        auto cal = pe_calibrated<double>(g, params, parse_truncation_rule(rule));
        py::dict out;
        out["degenerate"] = cal.degenerate;
        out["raw_one"] = to_double(cal.raw_one);
        out["forcing_noop"] = cal.forcing_noop;
        out["pe"] = cal.degenerate ? py::object(py::none()) : py::cast(cal.normalized);
        return out;
      },
      py::arg("g"), py::arg("omega") = 0.0, py::arg("tau") = 2, py::arg("d") = 2,
      py::arg("epsilon") = 0.3, py::arg("rule") = "union");

  m.def("covering_certificate",
        [](const PseudoExpectation<double>& pe, const Graph& g) {
          return json_to_py(to_json(covering_certificate(pe, g)));
        });

  m.def(
      "choose_k",
      [](long k0, int d, double lam, long n, double c_k) { return choose_k(k0, d, lam, n, c_k).k; },
      py::arg("k0"), py::arg("d"), py::arg("lam"), py::arg("n"), py::arg("c_k") = 1.0);

  m.def(
      "run_reduction",
      [](const Graph& g, const PseudoExpectation<double>& pe, double c_k) {
        ReductionOptions opts;
        opts.c_k = c_k;
        return json_to_py(to_json(run_reduction(g, pe, opts)));
      },
      py::arg("g"), py::arg("pe"), py::arg("c_k") = 1.0);

  m.def("check_coloring",
        [](const Graph& g, const PseudoExpectation<double>& pe, int k) {
          ColoringPE<double> cpe(pe, k);
          py::dict out;
          out["booleanity"] = json_to_py(to_json(check_booleanity(cpe, 200, 1)));
          out["edges"] = json_to_py(to_json(check_edges(cpe, g)));
          out["positivity"] =
              json_to_py(to_json(check_positivity(cpe, g, cpe.d_prime / 2, cpe.d_prime / 2)));
          out["sum_constraints"] =
              json_to_py(to_json(check_sum_constraints(cpe, g, pe.d / 4)));
          return out;
        });

  m.def("h_expectation", [](const Graph& g, const PseudoExpectation<double>& pe, int k, int i) {
    ColoringPE<double> cpe(pe, k);
    auto r = h_expectation(cpe, i);
    py::dict out;
    out["value"] = r.value;
    out["k0"] = r.k0;
    out["bound"] = r.bound;
    out["bound_holds"] = r.bound_holds;
    return out;
  });

  m.def("tensor_restricted_min_eig",
        [](const PseudoExpectation<double>& pe, const Graph& g, int k, int total_degree) {
          return tensor_restricted_min_eig(pe, g, k, total_degree);
        });

  m.def(
      "refute_coloring_existence",
      [](const Graph& g, int k, int degree) {
        if (degree <= 0) degree = 4 * max_independent_set(g).size;
        return json_to_py(to_json(refute_coloring_existence(g, k, degree)));
      },
      py::arg("g"), py::arg("k"), py::arg("degree") = 0);

  m.def("power_chain_refute", [](const Graph& g, const PseudoExpectation<double>& pe) {
    return json_to_py(to_json(power_chain_refute(pe, g)));
  });

  m.def(
      "chi_sum_moment",
      [](int n, int ell, int anchor, const std::string& mode, long trials,
         std::uint64_t seed) {
        ShapeFamily fam = anchor > 0 ? single_edge_family_at(anchor) : single_edge_family();
        MomentResult r;
        if (mode == "exact") r = chi_sum_moment_exact(fam, n, ell);
        else if (mode == "enum") r = chi_sum_moment_enumerate(fam, n, ell);
        else r = chi_sum_moment_montecarlo(fam, n, ell, trials, seed);
        return json_to_py(to_json(r));
      },
      py::arg("n"), py::arg("ell"), py::arg("anchor") = 0, py::arg("mode") = "exact",
      py::arg("trials") = 200, py::arg("seed") = 1);

  m.def(
      "xi_concentration",
      [](const std::vector<int>& ns, double epsilon, long trials, std::uint64_t seed, int tau,
         const std::string& rule) {
        py::list out;
        for (const auto& row :
             xi_concentration(ns, epsilon, trials, seed, tau, parse_truncation_rule(rule)))
          out.append(json_to_py(to_json(row)));
        return out;
      },
      py::arg("ns"), py::arg("epsilon") = 0.3, py::arg("trials") = 50, py::arg("seed") = 1,
      py::arg("tau") = 2, py::arg("rule") = "union");

  m.def(
      "pipeline_survey",
      [](int n, double epsilon, long trials, std::uint64_t seed, double c_k, int d, int tau,
         const std::string& rule, bool control) {
        return json_to_py(to_json(pipeline_survey(n, epsilon, trials, seed, c_k, d, tau,
                                                  parse_truncation_rule(rule), control)));
      },
      py::arg("n") = 10, py::arg("epsilon") = 0.3, py::arg("trials") = 10, py::arg("seed") = 1,
      py::arg("c_k") = 1.0, py::arg("d") = 2, py::arg("tau") = 2, py::arg("rule") = "union",
      py::arg("control") = true);
}
