// Python binding. Values cross the boundary as JSON text in the same shapes
// the CLI reads and writes; the filiform package decodes them.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "filiform/errors.hpp"
#include "filiform/io.hpp"

namespace py = pybind11;
using namespace filiform;
using io::json;

namespace {

ClassifyOptions options(double tol) {
  ClassifyOptions opts;
  opts.zero_tol = tol;
  return opts;
}

TLeibParams tleib(const std::string& params) { return io::as_tleib(io::params_from_json(io::parse(params))); }

std::string classify_json(const std::string& params, double tol) {
  return io::to_json(classify(tleib(params), options(tol))).dump();
}

std::string isomorphic_json(const std::string& a, const std::string& b, double tol) {
  return io::to_json(isomorphic(tleib(a), tleib(b), options(tol))).dump();
}

std::string table_json(const std::string& params) { return io::to_json(io::build(io::params_from_json(io::parse(params)))).dump(); }

std::string verify_json(const std::string& input) {
  const json j = io::parse(input);
  const AlgebraTable t = j.contains("entries") ? io::table_from_json(j) : io::build(io::params_from_json(j));
  json out;
  out["dim"] = t.dim();
  out["leibniz_defect"] = io::to_json(leibniz_defect(t));
  out["lower_central_series"] = lower_central_series(t);
  out["filiform"] = is_filiform(t);
  return out.dump();
}

std::string sample_json(const std::string& label, std::uint64_t seed) {
  return io::to_json(io::to_family(sample_orbit_member(OrbitLabel::parse(label), seed))).dump();
}

std::string representative_json(const std::string& label, const std::vector<std::string>& lambdas) {
  std::vector<Scalar> values;
  for (const auto& l : lambdas) values.push_back(parse_scalar(l));
  return io::to_json(io::to_family(representative(OrbitLabel::parse(label), values))).dump();
}

std::vector<std::string> labels(int dim) {
  std::vector<std::string> out;
  for (const auto& l : all_labels(dim)) out.push_back(l.str());
  return out;
}

}  // namespace

PYBIND11_MODULE(_filiform, m) {
  m.doc() = "Classification of the TLeib_5 and TLeib_6 filiform Leibniz families";

  auto base = py::register_exception<Error>(m, "FiliformError", PyExc_ValueError);
  py::register_exception<ParseError>(m, "ParseError", base.ptr());

  m.def("classify_json", &classify_json, py::arg("params"), py::arg("tol") = kDefaultTol);
  m.def("isomorphic_json", &isomorphic_json, py::arg("a"), py::arg("b"), py::arg("tol") = kDefaultTol);
  m.def("table_json", &table_json, py::arg("params"));
  m.def("verify_json", &verify_json, py::arg("input"));
  m.def("sample_json", &sample_json, py::arg("label"), py::arg("seed"));
  m.def("representative_json", &representative_json, py::arg("label"), py::arg("lambdas") = std::vector<std::string>{});
  m.def("labels", &labels, py::arg("dim"));
  m.def("normalize_scalar", [](const std::string& s) { return to_string(parse_scalar(s)); }, py::arg("text"));
}
