#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "subalg/cli.hpp"
#include "subalg/io.hpp"
#include "subalg/search.hpp"
#include "subalg/structure.hpp"

namespace py = pybind11;
using namespace subalg;

namespace {

using StrMat = std::vector<std::vector<std::string>>;

Mat mat_from_strings(const StrMat& rows, const Field& f) {
  const std::size_t n = rows.size();
  if (n == 0) fail(errc::invalid_params, "empty matrix");
  Mat m(n, f);
  for (std::size_t i = 0; i < n; ++i) {
    if (rows[i].size() != n) fail(errc::invalid_params, "matrix is not square");
    for (std::size_t j = 0; j < n; ++j) m.at(i, j) = Scalar::parse(rows[i][j], f);
  }
  return m;
}

StrMat mat_to_strings(const Mat& m) {
  StrMat rows(m.n(), std::vector<std::string>(m.n()));
  for (std::size_t i = 0; i < m.n(); ++i)
    for (std::size_t j = 0; j < m.n(); ++j) rows[i][j] = m.at(i, j).str();
  return rows;
}

// Thin value wrapper so python holds certified algebras only.
struct PyAlgebra {
  Subalgebra a;

  static PyAlgebra canon(const std::string& spec, std::size_t n, const std::string& field) {
    Field f = Field::parse(field);
    return {canonical_algebra(CanonicalSpec::parse(spec, n), f)};
  }
  static PyAlgebra closure_of(const std::vector<StrMat>& mats, const std::string& field) {
    if (mats.empty()) fail(errc::invalid_params, "need at least one matrix");
    Field f = Field::parse(field);
    std::vector<Mat> ms;
    for (const auto& g : mats) ms.push_back(mat_from_strings(g, f));
    return {multiplicative_closure(Subspace::span(ms[0].n(), f, ms))};
  }
  static PyAlgebra certify_span(const std::vector<StrMat>& mats, const std::string& field) {
    if (mats.empty()) fail(errc::invalid_params, "need at least one matrix");
    Field f = Field::parse(field);
    std::vector<Mat> ms;
    for (const auto& g : mats) ms.push_back(mat_from_strings(g, f));
    return {Subalgebra::certify(Subspace::span(ms[0].n(), f, ms))};
  }
  static PyAlgebra from_json(const std::string& text) {
    AlgebraFile f = parse_algebra_text(text);
    return {Subalgebra::certify(span_of(f))};
  }

  std::size_t n() const { return a.n(); }
  std::size_t dim() const { return a.dim(); }
  std::string field() const { return a.field().str(); }
  std::vector<StrMat> basis() const {
    std::vector<StrMat> out;
    for (const Mat& b : a.basis()) out.push_back(mat_to_strings(b));
    return out;
  }
  std::string to_json() const { return emit_algebra_text(algebra_file_from(a)); }

  PyAlgebra intersect_with(const PyAlgebra& o) const { return {intersect(a, o.a)}; }
  PyAlgebra conjugate(const StrMat& g) const {
    return {conjugate_algebra(a, mat_from_strings(g, a.field()))};
  }
  PyAlgebra transpose() const { return {transpose_algebra(a)}; }

  py::dict unity() const {
    UnitySummary u = unity_summary(a);
    py::dict d;
    d["status"] = std::string(unity_status_name(u.status));
    d["left_parameters"] =
        u.left.empty() ? py::object(py::none()) : py::object(py::int_(u.left.parameters()));
    d["right_parameters"] =
        u.right.empty() ? py::object(py::none()) : py::object(py::int_(u.right.parameters()));
    d["two_sided"] = u.two_sided ? py::object(py::cast(mat_to_strings(*u.two_sided)))
                                 : py::object(py::none());
    return d;
  }
  std::size_t radical_dim() const { return jacobson_radical(a).dim(); }

  bool eq(const PyAlgebra& o) const { return a == o.a; }
};

py::dict witness_to_dict(const ClassificationWitness& w, const Subalgebra& input) {
  py::dict d;
  d["kind"] = std::string(witness_kind_name(w.kind));
  d["target"] = w.target.str();
  d["certified"] = w.certified;
  d["conjugator"] = mat_to_strings(w.conj.g());
  d["certificate_json"] =
      emit_certificate_text(certificate_from(w, algebra_file_from(input)));
  return d;
}

}  // namespace

PYBIND11_MODULE(_subalg, m) {
  m.doc() = "exact subalgebra toolkit core";

  py::register_exception<error>(m, "ToolkitError");

  py::class_<PyAlgebra>(m, "Algebra")
      .def_static("canon", &PyAlgebra::canon, py::arg("spec"), py::arg("n"),
                  py::arg("field") = "Q")
      .def_static("closure_of", &PyAlgebra::closure_of, py::arg("matrices"),
                  py::arg("field") = "Q")
      .def_static("certify_span", &PyAlgebra::certify_span, py::arg("matrices"),
                  py::arg("field") = "Q")
      .def_static("from_json", &PyAlgebra::from_json)
      .def_property_readonly("n", &PyAlgebra::n)
      .def_property_readonly("dim", &PyAlgebra::dim)
      .def_property_readonly("field", &PyAlgebra::field)
      .def("basis", &PyAlgebra::basis)
      .def("to_json", &PyAlgebra::to_json)
      .def("intersect", &PyAlgebra::intersect_with)
      .def("conjugate", &PyAlgebra::conjugate)
      .def("transpose", &PyAlgebra::transpose)
      .def("unity", &PyAlgebra::unity)
      .def("radical_dim", &PyAlgebra::radical_dim)
      .def("__eq__", &PyAlgebra::eq)
      .def("__repr__", [](const PyAlgebra& x) {
        std::ostringstream os;
        os << "Algebra(n=" << x.n() << ", dim=" << x.dim() << ", field=" << x.field() << ")";
        return os.str();
      });

  m.def("classify_gamma",
        [](const PyAlgebra& x) { return witness_to_dict(classify_gamma_max(x.a), x.a); });
  m.def("classify_omega",
        [](const PyAlgebra& x) { return witness_to_dict(classify_omega_max(x.a), x.a); });
  m.def("recognize_parabolic",
        [](const PyAlgebra& x) { return witness_to_dict(recognize_parabolic(x.a), x.a); });
  m.def("recognize_max_nonunital",
        [](const PyAlgebra& x) { return witness_to_dict(recognize_max_nonunital(x.a), x.a); });

  m.def("gamma_check", [](const PyAlgebra& u, const PyAlgebra& v) {
    GammaCheckReport r = gamma_bound_check(u.a, v.a);
    py::dict d;
    d["is_gamma"] = r.is_gamma;
    d["dim"] = r.dim_n;
    d["bound_ok"] = r.bound_ok;
    return d;
  });

  m.def("reverify", [](const std::string& algebra_json, const std::string& certificate_json) {
    return reverify_certificate(parse_algebra_text(algebra_json),
                                parse_certificate_text(certificate_json));
  });

  m.def("suite_ids", [] { return suite_ids(); });
  m.def(
      "run_suite_json",
      [](const std::string& suite, std::size_t n, std::size_t trials, std::uint64_t seed,
         std::int64_t bound, const std::string& field) {
        SuiteParams p;
        p.n = n;
        p.trials = trials;
        p.seed = seed;
        p.bound = bound;
        p.field = Field::parse(field);
        return emit_report_text(run_suite(suite, p));
      },
      py::arg("suite"), py::arg("n") = 3, py::arg("trials") = 200, py::arg("seed") = 0,
      py::arg("bound") = 3, py::arg("field") = "Q");

  m.def("cli", [](const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
  });
}
