#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <array>
#include <cstddef>
#include <vector>

#include "affcurve/affine_map.hpp"
#include "affcurve/canonical.hpp"
#include "affcurve/curve.hpp"
#include "affcurve/errors.hpp"
#include "affcurve/invariants.hpp"
#include "affcurve/io.hpp"
#include "affcurve/reconstruction.hpp"

namespace py = pybind11;
using namespace affcurve;

namespace {

SampledCurve curve_from_lists(const std::vector<double>& params,
                              const std::vector<std::array<double, 3>>& points) {
  std::vector<Vec3> pts(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) {
    pts[i] = {points[i][0], points[i][1], points[i][2]};
  }
  return SampledCurve::make(params, std::move(pts));
}

std::vector<std::array<double, 3>> points_to_lists(const SampledCurve& curve) {
  std::vector<std::array<double, 3>> out(curve.size());
  for (std::size_t i = 0; i < curve.size(); ++i) {
    out[i] = {curve.points[i].x, curve.points[i].y, curve.points[i].z};
  }
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "special affine differential invariants of space curves";

  // translators run newest-first, so the subclass goes second
  auto base = py::register_exception<Error>(m, "AffcurveError");
  py::register_exception<DegenerateCurve>(m, "DegenerateCurveError", base);

  py::class_<SampledCurve>(m, "SampledCurve")
      .def(py::init(&curve_from_lists), py::arg("params"), py::arg("points"))
      .def_property_readonly("params", [](const SampledCurve& c) { return c.params; })
      .def_property_readonly("points", &points_to_lists)
      .def("__len__", &SampledCurve::size);

  py::class_<AffineSignature>(m, "AffineSignature")
      .def_readonly("sigma", &AffineSignature::sigma)
      .def_readonly("chi1", &AffineSignature::chi1)
      .def_readonly("chi2", &AffineSignature::chi2)
      .def("__len__", &AffineSignature::size);

  py::class_<SpecialAffineMap>(m, "SpecialAffineMap")
      .def(py::init([](const std::array<double, 9>& b, const std::array<double, 3>& tau) {
             SpecialAffineMap map;
             map.B.m = b;
             map.tau = {tau[0], tau[1], tau[2]};
             return map;
           }),
           py::arg("B"), py::arg("tau"))
      .def_property_readonly("B", [](const SpecialAffineMap& s) { return s.B.m; })
      .def_property_readonly("tau", [](const SpecialAffineMap& s) {
        return std::array<double, 3>{s.tau.x, s.tau.y, s.tau.z};
      });

  py::class_<EquivalenceReport>(m, "EquivalenceReport")
      .def_readonly("equivalent", &EquivalenceReport::equivalent)
      .def_readonly("distance", &EquivalenceReport::distance)
      .def_readonly("compared_length", &EquivalenceReport::compared_length)
      .def_property_readonly("map",
                             [](const EquivalenceReport& r) -> py::object {
                               if (!r.map) return py::none();
                               return py::cast(*r.map);
                             })
      .def("to_json", &report_to_json);

  m.def(
      "signature",
      [](const SampledCurve& curve, std::size_t n, double eps_det) {
        return signature(curve, n, eps_det);
      },
      py::arg("curve"), py::arg("n") = 400, py::arg("eps_det") = kDefaultEpsDet,
      "Curvature signature (chi1, chi2) on a uniform arc-length grid.");

  m.def("generate_canonical", &generate_canonical, py::arg("chi1"), py::arg("chi2"),
        py::arg("sigma_max"), py::arg("n"),
        "Constant-curvature canonical curve through the matrix exponential.");

  m.def(
      "classify_case",
      [](double chi1, double chi2, double eps) {
        return std::string(to_string(classify_case(chi1, chi2, eps)));
      },
      py::arg("chi1"), py::arg("chi2"), py::arg("eps") = 1e-6);

  m.def(
      "reconstruct_curve",
      [](const std::vector<double>& sigma, const std::vector<double>& chi1,
         const std::vector<double>& chi2) {
        return reconstruct_curve(NaturalEquations::make(sigma, chi1, chi2));
      },
      py::arg("sigma"), py::arg("chi1"), py::arg("chi2"),
      "Curve with the given natural equations (identity frame, origin start).");

  m.def("verify_equivalence", &verify_equivalence, py::arg("a"), py::arg("b"),
        py::arg("tol") = kDefaultTolerance, py::arg("samples") = kDefaultPipelineSamples,
        py::arg("eps_det") = kDefaultEpsDet,
        "Decide special affine equivalence and recover the aligning map.");

  m.def("random_map", &random_map, py::arg("seed"), py::arg("scale") = 1.0,
        "Seeded random unimodular affine map.");

  m.def(
      "apply", [](const SpecialAffineMap& map, const SampledCurve& c) { return apply(map, c); },
      py::arg("map"), py::arg("curve"));
  m.def("compose", &compose, py::arg("a"), py::arg("b"));
  m.def("invert", &invert, py::arg("map"));

  m.def("read_curve_csv", &read_curve_csv_file, py::arg("path"));
  m.def("write_curve_csv", &write_curve_csv_file, py::arg("path"), py::arg("curve"));

  m.attr("__version__") = "0.1.0";
}
