#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

#include "rpbell/analysis.hpp"
#include "rpbell/bell.hpp"
#include "rpbell/identities.hpp"
#include "rpbell/oracle.hpp"
#include "rpbell/restriction.hpp"
#include "rpbell/stirling.hpp"

namespace py = pybind11;

namespace {

using rpbell::ExactInt;
using rpbell::ExactRational;
using rpbell::RestrictionVector;

// Exact values cross the boundary as decimal strings so Python sees native
// arbitrary-precision ints and Fractions.
py::object to_py_int(const ExactInt& v) {
  PyObject* obj = PyLong_FromString(v.str().c_str(), nullptr, 10);
  if (!obj) throw py::error_already_set();
  return py::reinterpret_steal<py::object>(obj);
}

py::object to_py_fraction(const ExactRational& v) {
  py::object fraction = py::module_::import("fractions").attr("Fraction");
  return fraction(to_py_int(v.numerator()), to_py_int(v.denominator()));
}

ExactInt exact_int_from(const py::object& obj) {
  return ExactInt(py::cast<std::string>(py::str(obj)));
}

ExactRational rational_from(const py::object& obj) {
  // str() of int, Fraction, or "p/q" strings all parse exactly.
  return ExactRational::parse(py::cast<std::string>(py::str(obj)));
}

py::list int_list(const std::vector<ExactInt>& values) {
  py::list out;
  for (const auto& v : values) out.append(to_py_int(v));
  return out;
}

std::vector<ExactInt> exact_vector_from(const py::sequence& seq) {
  std::vector<ExactInt> out;
  out.reserve(seq.size());
  for (const auto& item : seq) out.push_back(exact_int_from(py::reinterpret_borrow<py::object>(item)));
  return out;
}

py::dict report_to_dict(const rpbell::VerificationReport& report) {
  py::dict d;
  d["identity"] = rpbell::identity_name(report.id);
  py::dict params;
  for (const auto& [key, value] : report.params) params[py::str(key)] = value;
  d["params"] = params;
  d["passed"] = report.passed;
  if (report.first_discrepancy) {
    py::dict disc;
    disc["location"] = report.first_discrepancy->location;
    disc["lhs"] = report.first_discrepancy->lhs;
    disc["rhs"] = report.first_discrepancy->rhs;
    d["first_discrepancy"] = disc;
  } else {
    d["first_discrepancy"] = py::none();
  }
  return d;
}

rpbell::PartitionSpec spec_from(int n, const std::vector<int>& layout, std::optional<int> k) {
  return rpbell::PartitionSpec{n, layout, k};
}

}  // namespace

PYBIND11_MODULE(_rpbell, m) {
  m.doc() = "Exact restricted Stirling numbers, Bell polynomials, and identity checks";

  m.def("stirling2", [](int n, int k) { return to_py_int(rpbell::stirling2(n, k)); },
        py::arg("n"), py::arg("k"));
  m.def("stirling1_unsigned",
        [](int n, int k) { return to_py_int(rpbell::stirling1_unsigned(n, k)); },
        py::arg("n"), py::arg("k"));
  m.def("r_stirling2",
        [](int n, int k, int r) { return to_py_int(rpbell::r_stirling2(n, k, r)); },
        py::arg("n"), py::arg("k"), py::arg("r"));
  m.def("r_stirling1_unsigned",
        [](int n, int k, int r) { return to_py_int(rpbell::r_stirling1_unsigned(n, k, r)); },
        py::arg("n"), py::arg("k"), py::arg("r"));

  m.def("rp_stirling2",
        [](int n, int k, const std::vector<int>& r) {
          return to_py_int(rpbell::rp_stirling2(n, k, RestrictionVector(r)));
        },
        py::arg("n"), py::arg("k"), py::arg("r"));
  m.def("rp_stirling2_via_reduction",
        [](int n, int k, const std::vector<int>& r) {
          return to_py_int(rpbell::rp_stirling2_via_reduction(n, k, RestrictionVector(r)));
        },
        py::arg("n"), py::arg("k"), py::arg("r"));
  m.def("a_coeffs",
        [](const std::vector<int>& prefix) { return int_list(rpbell::a_coeffs(prefix).values()); },
        py::arg("prefix"));

  m.def("bell_coefficients",
        [](int n, const std::vector<int>& r) {
          return int_list(rpbell::bell_poly(n, RestrictionVector(r)).poly().coeffs());
        },
        py::arg("n"), py::arg("r"));
  m.def("bell_tilde_coefficients",
        [](int n, const std::vector<int>& r) {
          return int_list(rpbell::bell_tilde(n, RestrictionVector(r)).poly().coeffs());
        },
        py::arg("n"), py::arg("r"));
  m.def("poly_p_coefficients",
        [](int n, const std::vector<int>& r) {
          return int_list(rpbell::poly_P(n, RestrictionVector(r)).coeffs());
        },
        py::arg("n"), py::arg("r"));
  m.def("bell_value",
        [](int n, const std::vector<int>& r, const py::object& z) {
          return to_py_fraction(
              rpbell::bell_poly(n, RestrictionVector(r)).poly().eval(rational_from(z)));
        },
        py::arg("n"), py::arg("r"), py::arg("z") = py::int_(1));
  m.def("r_bell_number",
        [](int n, int r) { return to_py_int(rpbell::r_bell_number(n, r)); },
        py::arg("n"), py::arg("r") = 0);

  m.def("count_partitions",
        [](int n, const std::vector<int>& r, std::optional<int> k, int guard) {
          rpbell::OracleLimits limits;
          limits.count_guard = guard;
          return to_py_int(rpbell::count_partitions(spec_from(n, r, k), limits));
        },
        py::arg("n"), py::arg("r") = std::vector<int>{}, py::arg("k") = py::none(),
        py::arg("guard") = rpbell::OracleLimits{}.count_guard);
  m.def("enumerate_partitions",
        [](int n, const std::vector<int>& r, std::optional<int> k, int guard) {
          rpbell::OracleLimits limits;
          limits.enumerate_guard = guard;
          return rpbell::enumerate_partitions(spec_from(n, r, k), limits);
        },
        py::arg("n"), py::arg("r") = std::vector<int>{}, py::arg("k") = py::none(),
        py::arg("guard") = rpbell::OracleLimits{}.enumerate_guard);

  m.def("run_suite",
        [](const std::string& name, int max_n, int max_m, int max_r, int order) {
          rpbell::SuiteOptions options{max_n, max_m, max_r, order};
          py::list out;
          for (const auto& report : rpbell::run_suite(name, options)) {
            out.append(report_to_dict(report));
          }
          return out;
        },
        py::arg("name"), py::arg("max_n") = 4, py::arg("max_m") = 4, py::arg("max_r") = 3,
        py::arg("order") = 0);
  m.def("suite_names", []() { return rpbell::suite_names(); });
  m.def("verify_dobinski",
        [](int n, const std::vector<int>& r, int order) {
          return report_to_dict(rpbell::verify_dobinski(n, RestrictionVector(r), order));
        },
        py::arg("n"), py::arg("r"), py::arg("order"));

  m.def("certify_real_negative_roots",
        [](const py::sequence& coeffs) {
          rpbell::RootCertificate cert = rpbell::certify_real_negative_roots(
              rpbell::IntPolynomial(exact_vector_from(coeffs)));
          py::dict d;
          d["degree"] = cert.degree;
          d["distinct_real_negative_roots"] = cert.distinct_real_negative_roots;
          d["squarefree_degree"] = cert.squarefree_degree;
          d["all_real_negative"] = cert.all_real_negative;
          return d;
        },
        py::arg("coefficients"));
  m.def("check_newton_inequality",
        [](const py::sequence& coeffs) {
          return rpbell::check_newton_inequality(exact_vector_from(coeffs));
        },
        py::arg("coefficients"));
  m.def("check_strong_log_concavity",
        [](const py::sequence& coeffs) {
          return rpbell::check_strong_log_concavity(exact_vector_from(coeffs));
        },
        py::arg("coefficients"));
  m.def("max_index_report",
        [](int n, const std::vector<int>& r) {
          rpbell::MaxIndexReport report = rpbell::max_index_report(n, RestrictionVector(r));
          py::dict d;
          d["n"] = report.n;
          d["r"] = report.r.parts();
          d["max_index"] = report.max_index;
          d["darroch_center"] = to_py_fraction(report.darroch_center);
          d["within_one"] = report.within_one;
          d["on_boundary"] = report.on_boundary;
          return d;
        },
        py::arg("n"), py::arg("r"));
}
