// Copyright 2026 The conedepth Authors
// SPDX-License-Identifier: Apache-2.0

#include <algorithm>

#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "conedepth/depth.hpp"
#include "conedepth/errors.hpp"
#include "conedepth/oracle.hpp"
#include "conedepth/quantile.hpp"

namespace py = pybind11;
using namespace conedepth;

namespace {

using Array = py::array_t<double, py::array::c_style | py::array::forcecast>;

DataSet to_data(const Array& a) {
  if (a.ndim() != 2 || a.shape(1) != 2) throw InvalidInput("data must have shape (N, 2)");
  DataSet X;
  X.points.reserve(static_cast<std::size_t>(a.shape(0)));
  auto r = a.unchecked<2>();
  for (py::ssize_t i = 0; i < r.shape(0); ++i) X.points.push_back({r(i, 0), r(i, 1)});
  return X;
}

Vec2 to_vec(const std::array<double, 2>& v) { return {v[0], v[1]}; }

py::array_t<double> to_array(const std::vector<Vec2>& pts) {
  py::array_t<double> out({static_cast<py::ssize_t>(pts.size()), py::ssize_t{2}});
  auto w = out.mutable_unchecked<2>();
  for (std::size_t i = 0; i < pts.size(); ++i) {
    w(static_cast<py::ssize_t>(i), 0) = pts[i].x;
    w(static_cast<py::ssize_t>(i), 1) = pts[i].y;
  }
  return out;
}

ConeV to_cone(const py::object& cone) {
  if (cone.is_none()) return ConeV::orthant();
  if (py::isinstance<py::str>(cone)) {
    if (cone.cast<std::string>() == "orthant") return ConeV::orthant();
    throw InvalidInput("unknown cone preset '" + cone.cast<std::string>() + "'");
  }
  if (py::isinstance<ConeV>(cone)) return cone.cast<ConeV>();
  const auto gens = cone.cast<std::array<std::array<double, 2>, 2>>();
  return {to_vec(gens[0]), to_vec(gens[1])};
}

Tolerance tolerance(double eps) {
  Tolerance tol;
  tol.eps = eps;
  return tol;
}

py::dict polyhedron_dict(const Polyhedron2& poly) {
  py::list hrep;
  for (const Halfspace& h : poly.hrep) hrep.append(py::make_tuple(py::make_tuple(h.w.x, h.w.y), h.q));
  py::dict d;
  d["hrep"] = hrep;
  d["vertices"] = to_array(poly.vertices);
  d["directions"] = to_array(poly.rec_dirs);
  d["empty"] = poly.empty;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Lower cone distribution functions, cone quantiles and halfspace depth in the plane";

  auto error = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<DegenerateCone>(m, "DegenerateCone", error);
  py::register_exception<UnsupportedCone>(m, "UnsupportedCone", error);
  py::register_exception<OutOfRange>(m, "OutOfRange", error);
  py::register_exception<EmptyInput>(m, "EmptyInput", error);
  py::register_exception<InvalidInput>(m, "InvalidInput", error);
  py::register_exception<InvalidState>(m, "InvalidState", error);

  py::class_<ConeV>(m, "Cone")
      .def(py::init([](std::array<double, 2> b1, std::array<double, 2> b2) {
             return ConeV{to_vec(b1), to_vec(b2)};
           }),
           py::arg("b1"), py::arg("b2"))
      .def_static("orthant", &ConeV::orthant)
      .def_property_readonly("b1", [](const ConeV& c) { return py::make_tuple(c.b1.x, c.b1.y); })
      .def_property_readonly("b2", [](const ConeV& c) { return py::make_tuple(c.b2.x, c.b2.y); })
      .def("dual_base",
           [](const ConeV& c) {
             const DualBase base = dual_base(c);
             return py::make_tuple(py::make_tuple(base.v1.x, base.v1.y),
                                   py::make_tuple(base.v2.x, base.v2.y));
           })
      .def("standardizer", [](const ConeV& c) {
        const Mat2 A = standardizer(c).A;
        py::array_t<double> out({py::ssize_t{2}, py::ssize_t{2}});
        auto w = out.mutable_unchecked<2>();
        w(0, 0) = A.a;
        w(0, 1) = A.b;
        w(1, 0) = A.c;
        w(1, 1) = A.d;
        return out;
      });

  m.def("level_count", &level_count, py::arg("n"), py::arg("p"));

  m.def(
      "cone_depth",
      [](std::array<double, 2> z, const Array& data, const py::object& cone, double eps) {
        const DepthResult r = cone_depth(to_vec(z), to_data(data), to_cone(cone), tolerance(eps));
        py::dict d;
        d["K"] = r.K;
        d["F"] = r.F;
        d["z_was_original"] = r.z_was_original;
        d["argmin_w"] = py::make_tuple(r.argmin_w.x, r.argmin_w.y);
        d["n_augmented"] = r.n_augmented;
        return d;
      },
      py::arg("z"), py::arg("data"), py::arg("cone") = py::none(), py::arg("eps") = 1e-9);

  m.def(
      "cone_cdf",
      [](const Array& zs, const Array& data, const py::object& cone, double eps) {
        const DataSet Z = to_data(zs);
        const DataSet X = to_data(data);
        const ConeV c = to_cone(cone);
        std::vector<double> F;
        {
          py::gil_scoped_release release;
          F = cone_cdf_grid(Z.points, X, c, tolerance(eps));
        }
        py::array_t<double> out(static_cast<py::ssize_t>(F.size()));
        std::copy(F.begin(), F.end(), out.mutable_data());
        return out;
      },
      py::arg("zs"), py::arg("data"), py::arg("cone") = py::none(), py::arg("eps") = 1e-9,
      "Lower cone distribution values at the rows of zs.");

  m.def(
      "cone_quantile",
      [](const Array& data, double p, const py::object& cone, double eps) {
        const auto [r, trace] = cone_quantile(to_data(data), to_cone(cone), p, tolerance(eps));
        py::dict d = polyhedron_dict(r.poly);
        d["p"] = r.p;
        d["K"] = r.K;
        d["steps"] = trace.rotations();
        py::list anchors;
        for (const QuantileNormal& n : r.normals) anchors.append(n.anchor_index);
        d["anchors"] = anchors;
        return d;
      },
      py::arg("data"), py::arg("p"), py::arg("cone") = py::none(), py::arg("eps") = 1e-9);

  m.def(
      "tukey_depth",
      [](std::array<double, 2> z, const Array& data, double eps) {
        return tukey_depth(to_vec(z), to_data(data), tolerance(eps));
      },
      py::arg("z"), py::arg("data"), py::arg("eps") = 1e-9);

  m.def(
      "tukey_region",
      [](const Array& data, double p, double eps) {
        const TukeyRegion r = tukey_region(to_data(data), p, tolerance(eps));
        py::dict d = polyhedron_dict(r.poly);
        d["p"] = p;
        d["K"] = r.K;
        d["steps"] = r.rotations;
        return d;
      },
      py::arg("data"), py::arg("p"), py::arg("eps") = 1e-9);

  m.def(
      "oracle_cone_depth",
      [](std::array<double, 2> z, const Array& data, const py::object& cone) {
        return oracle_cone_depth(to_vec(z), to_data(data), to_cone(cone));
      },
      py::arg("z"), py::arg("data"), py::arg("cone") = py::none());

  m.def(
      "oracle_tukey_depth",
      [](std::array<double, 2> z, const Array& data) {
        return oracle_tukey_depth(to_vec(z), to_data(data));
      },
      py::arg("z"), py::arg("data"));
}
