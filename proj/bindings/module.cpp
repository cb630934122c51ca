// Python bindings for the main operations: zoo construction, document IO,
// validators, theorem checks, and the exact subspace kernel. Structured
// results cross the boundary as plain python objects decoded from the same
// canonical JSON the CLI emits.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <nlohmann/json.hpp>

#include "gradedlie/constructions.hpp"
#include "gradedlie/document.hpp"
#include "gradedlie/theorem.hpp"

namespace py = pybind11;
using namespace gradedlie;

namespace {

py::object to_py(const json& j) {
  return py::module_::import("json").attr("loads")(j.dump());
}

json matrix_json(const Matrix& rows) { return matrix_to_json(rows); }

Matrix matrix_from_py(std::size_t ambient, const std::vector<std::vector<std::string>>& rows) {
  Matrix m;
  for (const auto& row : rows) {
    if (row.size() != ambient) throw mismatch_error("row length does not match ambient dimension");
    Vector v;
    for (const auto& s : row) v.push_back(Rational::parse(s));
    m.push_back(std::move(v));
  }
  return m;
}

std::vector<GroupElement> tuple_from_keys(const GradedAlgebra& a,
                                          const std::vector<std::string>& keys) {
  std::vector<GroupElement> gs;
  for (const auto& k : keys) gs.push_back(element_from_key(a.ctx(), k));
  return gs;
}

json star_result_json(const StarResult& r) {
  json out;
  json tuple = json::array();
  for (const auto& g : r.tuple) tuple.push_back(element_key(g));
  out["tuple"] = tuple;
  out["bracket_dim"] = r.bracket_dim;
  if (r.violating_pair)
    out["violating_pair"] = json::array({r.violating_pair->first, r.violating_pair->second});
  else
    out["violating_pair"] = nullptr;
  return out;
}

/// Thin immutable handle the python side works with.
class PyAlgebra {
 public:
  explicit PyAlgebra(GradedAlgebra a) : a_(std::move(a)) {}

  const GradedAlgebra& get() const { return a_; }

  std::size_t dimension() const { return a_.dim(); }

  std::vector<std::string> support() const {
    std::vector<std::string> out;
    for (const auto& g : a_.support()) out.push_back(element_key(g));
    return out;
  }

  std::string document() const {
    return canonical_dump(algebra_to_document(a_, {"", ""}));
  }

  py::object validate() const {
    json out;
    json jac = json::array();
    for (const auto& v : validate_algebra(a_.algebra())) {
      jac.push_back({{"triple", json::array({v.i, v.j, v.k})},
                     {"residual", vector_to_json(v.residual)}});
    }
    json grad = json::array();
    for (const auto& v : validate_grading(a_)) {
      grad.push_back({{"pair", json::array({v.i, v.j})},
                      {"stray_coordinates", v.offending}});
    }
    out["algebra"] = jac;
    out["grading"] = grad;
    return to_py(out);
  }

  bool is_valid() const {
    return validate_algebra(a_.algebra()).empty() && validate_grading(a_).empty();
  }

  py::object component(const std::string& key) const {
    return to_py(matrix_json(a_.component(element_from_key(a_.ctx(), key)).basis_rows()));
  }

  py::object nested_bracket_py(const std::vector<std::string>& keys) const {
    return to_py(matrix_json(nested_bracket(a_, tuple_from_keys(a_, keys)).basis_rows()));
  }

  py::object check_star_py(const std::vector<std::string>& keys) const {
    return to_py(star_result_json(check_star(a_, tuple_from_keys(a_, keys))));
  }

  py::object star_sweep_py(std::size_t max_len, std::size_t budget) const {
    const StarSweepReport report = star_sweep(a_, max_len, ScanBudget{budget});
    json out;
    json results = json::array();
    for (const auto& r : report.results) results.push_back(star_result_json(r));
    out["results"] = results;
    out["tuples_examined"] = report.tuples_examined;
    out["budget_truncated"] = report.budget_truncated;
    return to_py(out);
  }

  py::object star_trace_py(const std::vector<std::string>& keys) const {
    const StarTrace trace = star_trace(a_, tuple_from_keys(a_, keys));
    json out;
    out["lines"] = trace.lines;
    out["consistent"] = trace.consistent;
    json levels = json::array();
    for (const auto& level : trace.levels) {
      json lj;
      lj["head_index"] = level.head_index;
      lj["branch"] = std::string(1, level.branch);
      json conclusions = json::array();
      for (const auto& [i, j] : level.conclusions) conclusions.push_back(json::array({i, j}));
      lj["conclusions"] = conclusions;
      levels.push_back(lj);
    }
    out["levels"] = levels;
    json pairs = json::array();
    for (const auto& [i, j] : trace.concluded_pairs) pairs.push_back(json::array({i, j}));
    out["concluded_pairs"] = pairs;
    out["text"] = trace.text();
    return to_py(out);
  }

  py::object check_proposition_py() const {
    json out = json::array();
    for (const auto& cert : check_proposition(a_)) out.push_back(certificate_to_json(cert));
    return to_py(out);
  }

  py::object final_identity_py(const std::string& g, const std::string& g_prime,
                               std::size_t max_len) const {
    const FinalIdentityReport r = final_identity_check(
        a_, element_from_key(a_.ctx(), g), element_from_key(a_.ctx(), g_prime), max_len);
    json out;
    out["tuples_checked"] = r.tuples_checked;
    json viols = json::array();
    for (const auto& t : r.violations) {
      json tj = json::array();
      for (const auto& h : t) tj.push_back(element_key(h));
      viols.push_back(tj);
    }
    out["violations"] = viols;
    return to_py(out);
  }

  py::object support_subgroup_py() const {
    const SupportSubgroupReport r = support_subgroup_report(a_);
    json out;
    out["abelian"] = r.abelian;
    out["violation"] =
        r.violation ? json::array({element_key(r.violation->first),
                                   element_key(r.violation->second)})
                    : json(nullptr);
    out["certificate"] = r.certificate ? certificate_to_json(*r.certificate) : json(nullptr);
    return to_py(out);
  }

  py::object prime_scan_py() const {
    const PrimeScanVerdict verdict = prime_scan(a_);
    json out;
    out["verdict"] = verdict.witness_found ? "NotGradedPrime" : "NoWitnessFound";
    out["candidates_examined"] = verdict.candidates_examined;
    out["certificate"] =
        verdict.certificate ? certificate_to_json(*verdict.certificate) : json(nullptr);
    return to_py(out);
  }

  py::object verify_certificate_py(const py::object& cert) const {
    const std::string dumped =
        py::module_::import("json").attr("dumps")(cert).cast<std::string>();
    const CertificateCheck check = verify_certificate(a_, json::parse(dumped));
    json out;
    out["valid"] = check.valid;
    out["failures"] = check.failures;
    return to_py(out);
  }

  PyAlgebra shuffled(std::uint64_t seed) const { return PyAlgebra(basis_shuffle(a_, seed)); }

  std::vector<std::string> element_support_py(const std::vector<std::string>& coords) const {
    Vector v;
    for (const auto& s : coords) v.push_back(Rational::parse(s));
    std::vector<std::string> out;
    for (const auto& g : a_.element_support(v)) out.push_back(element_key(g));
    return out;
  }

 private:
  GradedAlgebra a_;
};

PyAlgebra load_algebra(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw parse_error(std::string("invalid JSON: ") + e.what());
  }
  return PyAlgebra(document_to_algebra(doc).algebra);
}

}  // namespace

PYBIND11_MODULE(_gradedlie, m) {
  m.doc() = "exact-arithmetic toolkit for group-graded Lie algebras";

  py::register_exception<parse_error>(m, "ParseError", PyExc_ValueError);
  py::register_exception<mismatch_error>(m, "MismatchError", PyExc_ValueError);

  py::class_<PyAlgebra>(m, "GradedAlgebra")
      .def_property_readonly("dimension", &PyAlgebra::dimension)
      .def("support", &PyAlgebra::support)
      .def("document", &PyAlgebra::document)
      .def("validate", &PyAlgebra::validate)
      .def("is_valid", &PyAlgebra::is_valid)
      .def("component", &PyAlgebra::component, py::arg("label"))
      .def("element_support", &PyAlgebra::element_support_py, py::arg("coordinates"))
      .def("nested_bracket", &PyAlgebra::nested_bracket_py, py::arg("labels"))
      .def("check_star", &PyAlgebra::check_star_py, py::arg("labels"))
      .def("star_sweep", &PyAlgebra::star_sweep_py, py::arg("max_len") = 4,
           py::arg("budget") = 100000)
      .def("star_trace", &PyAlgebra::star_trace_py, py::arg("labels"))
      .def("check_proposition", &PyAlgebra::check_proposition_py)
      .def("final_identity_check", &PyAlgebra::final_identity_py, py::arg("g"),
           py::arg("g_prime"), py::arg("max_len") = 2)
      .def("support_subgroup_report", &PyAlgebra::support_subgroup_py)
      .def("prime_scan", &PyAlgebra::prime_scan_py)
      .def("verify_certificate", &PyAlgebra::verify_certificate_py, py::arg("certificate"))
      .def("basis_shuffle", &PyAlgebra::shuffled, py::arg("seed"));

  m.def("example", [](const std::string& name) { return PyAlgebra(example_by_name(name)); },
        py::arg("name"), "build a named zoo algebra (see example_names())");
  m.def("example_names", &example_names);
  m.def("load", &load_algebra, py::arg("text"), "parse an algebra document");
  m.def(
      "random_graded",
      [](std::uint64_t seed, std::size_t blocks, const std::string& backend,
         std::size_t max_dim) {
        return PyAlgebra(random_graded(seed, RandomParams{blocks, backend, max_dim}));
      },
      py::arg("seed"), py::arg("blocks") = 2, py::arg("backend") = "permutation",
      py::arg("max_dim") = 24, "seed-deterministic random graded algebra");

  m.def(
      "rref",
      [](std::size_t ambient, const std::vector<std::vector<std::string>>& rows) {
        return to_py(matrix_json(Subspace::span(ambient, matrix_from_py(ambient, rows)).basis_rows()));
      },
      py::arg("ambient"), py::arg("rows"), "canonical reduced row echelon basis");
  m.def(
      "subspace_sum",
      [](std::size_t ambient, const std::vector<std::vector<std::string>>& a,
         const std::vector<std::vector<std::string>>& b) {
        const Subspace u = Subspace::span(ambient, matrix_from_py(ambient, a));
        const Subspace v = Subspace::span(ambient, matrix_from_py(ambient, b));
        return to_py(matrix_json(subspace_sum(u, v).basis_rows()));
      },
      py::arg("ambient"), py::arg("rows_a"), py::arg("rows_b"));
  m.def(
      "subspace_intersect",
      [](std::size_t ambient, const std::vector<std::vector<std::string>>& a,
         const std::vector<std::vector<std::string>>& b) {
        const Subspace u = Subspace::span(ambient, matrix_from_py(ambient, a));
        const Subspace v = Subspace::span(ambient, matrix_from_py(ambient, b));
        return to_py(matrix_json(subspace_intersect(u, v).basis_rows()));
      },
      py::arg("ambient"), py::arg("rows_a"), py::arg("rows_b"));
  m.def(
      "contains",
      [](std::size_t ambient, const std::vector<std::vector<std::string>>& rows,
         const std::vector<std::string>& vec) {
        Vector v;
        for (const auto& s : vec) v.push_back(Rational::parse(s));
        return Subspace::span(ambient, matrix_from_py(ambient, rows)).contains(v);
      },
      py::arg("ambient"), py::arg("rows"), py::arg("vector"));
}
