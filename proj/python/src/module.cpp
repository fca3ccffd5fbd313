#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>

#include "lnet/io.hpp"
#include "lnet/isothermic.hpp"
#include "lnet/miquel.hpp"
#include "lnet/packing.hpp"
#include "lnet/svg.hpp"
#include "lnet/xvars.hpp"

namespace py = pybind11;
using namespace lnet;

namespace {

using Array = py::array_t<double, py::array::c_style | py::array::forcecast>;

// Grid fields are row-major with the horizontal index fastest, so a field over a
// width x height grid is an array of shape (height, width, k).
template <class T, class Get>
Array to_array(const std::vector<T>& data, int rows, int cols, int k, Get get) {
  std::vector<py::ssize_t> shape{rows, cols};
  if (k > 0) shape.push_back(k);
  Array out(shape);
  double* p = out.mutable_data();
  for (const T& x : data) {
    get(x, p);
    p += k > 0 ? k : 1;
  }
  return out;
}

Array checked(const Array& a, int k, const char* what) {
  const bool ok = k > 0 ? (a.ndim() == 3 && a.shape(2) == k) : a.ndim() == 2;
  if (!ok || a.shape(0) < 1 || a.shape(1) < 1) {
    throw py::value_error(std::string(what) + ": expected shape (rows, cols" + (k > 0 ? ", " + std::to_string(k) : "") +
                          ")");
  }
  return a;
}

QuadGrid grid_of(const Array& vertex_array) { return QuadGrid(int(vertex_array.shape(1)), int(vertex_array.shape(0))); }

void require_faces(const QuadGrid& g, const Array& a, const char* what) {
  if (a.shape(0) != g.height() - 1 || a.shape(1) != g.width() - 1) {
    throw py::value_error(std::string(what) + ": face array must have one row and column fewer than the vertices");
  }
}

template <class T, class Set>
void fill(std::vector<T>& data, const Array& a, int k, Set set) {
  const double* p = a.data();
  for (T& x : data) {
    set(x, p);
    p += k > 0 ? k : 1;
  }
}

Array spheres_array(const ContactCongruence& cc) {
  const QuadGrid& g = cc.grid();
  return to_array(cc.spheres.data(), g.height(), g.width(), 4, [](const OrientedSphere& s, double* p) {
    p[0] = s.center[0], p[1] = s.center[1], p[2] = s.center[2], p[3] = s.rho;
  });
}

Array isolines_array(const ContactCongruence& cc) {
  const QuadGrid& g = cc.grid();
  return to_array(cc.isolines.data(), g.height() - 1, g.width() - 1, 10, [](const OrientedIsoLine& l, double* p) {
    for (int k = 0; k < 3; ++k) p[k] = l.base[k], p[3 + k] = l.dir[k];
    for (int k = 0; k < 4; ++k) p[6 + k] = l.ospan[k];
  });
}

ContactCongruence make_congruence(const Array& spheres, const py::object& isolines) {
  checked(spheres, 4, "spheres");
  const QuadGrid g = grid_of(spheres);
  ContactCongruence cc{VertexField<OrientedSphere>(g), FaceField<OrientedIsoLine>(g)};
  fill(cc.spheres.data(), spheres, 4, [](OrientedSphere& s, const double* p) {
    s.center = LorentzPoint(p[0], p[1], p[2]);
    s.rho = p[3];
  });
  if (isolines.is_none()) {
    cc.isolines = refit_isolines(cc.spheres);
  } else {
    const Array lines = checked(isolines.cast<Array>(), 10, "isolines");
    require_faces(g, lines, "isolines");
    fill(cc.isolines.data(), lines, 10, [](OrientedIsoLine& l, const double* p) {
      l.base = LorentzPoint(p[0], p[1], p[2]);
      l.dir = LorentzPoint(p[3], p[4], p[5]);
      l.ospan = CycloPoint(p[6], p[7], p[8], p[9]);
    });
  }
  return cc;
}

Array scalar_array(const VertexField<double>& f) {
  return to_array(f.data(), f.grid().height(), f.grid().width(), 0, [](double x, double* p) { *p = x; });
}

VertexField<double> scalar_field(const Array& a) {
  checked(a, 0, "values");
  VertexField<double> f(grid_of(a));
  fill(f.data(), a, 0, [](double& x, const double* p) { x = *p; });
  return f;
}

Array vec2_vertex_array(const VertexField<Vec2>& f) {
  return to_array(f.data(), f.grid().height(), f.grid().width(), 2, [](const Vec2& v, double* p) {
    p[0] = v[0], p[1] = v[1];
  });
}

VertexField<Vec2> vec2_vertex_field(const Array& a, const char* what) {
  checked(a, 2, what);
  VertexField<Vec2> f(grid_of(a));
  fill(f.data(), a, 2, [](Vec2& v, const double* p) { v = Vec2(p[0], p[1]); });
  return f;
}

FaceId face_of(std::pair<int, int> f) { return {f.first, f.second}; }

SvgOptions svg_options(double width, bool centers, bool points, bool lines) {
  SvgOptions o;
  o.width = width;
  o.centers = centers;
  o.points = points;
  o.lines = lines;
  return o;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Contact congruences of oriented spheres, circle patterns and their X-variables";

  static py::exception<Error> error_type(m, "LnetError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr ptr) {
    try {
      if (ptr) std::rethrow_exception(ptr);
    } catch (const Error& e) {
      py::object err = py::handle(error_type)(e.what());
      err.attr("kind") = to_string(e.kind());
      PyErr_SetObject(error_type.ptr(), err.ptr());
    }
  });

  py::class_<ContactCongruence>(m, "ContactCongruence")
      .def(py::init(&make_congruence), py::arg("spheres"), py::arg("isolines") = py::none(),
           "Spheres as (height, width, 4) rows [c1, c2, c3, rho]; isolines as (height-1, width-1, 10) rows "
           "[base(3), dir(3), ospan(4)], refitted from the spheres when omitted.")
      .def_property_readonly("width", [](const ContactCongruence& cc) { return cc.grid().width(); })
      .def_property_readonly("height", [](const ContactCongruence& cc) { return cc.grid().height(); })
      .def_property_readonly("spheres", &spheres_array)
      .def_property_readonly("isolines", &isolines_array)
      .def("__repr__", [](const ContactCongruence& cc) {
        return "<ContactCongruence " + std::to_string(cc.grid().width()) + "x" + std::to_string(cc.grid().height()) +
               ">";
      });

  py::class_<CirclePattern>(m, "CirclePattern")
      .def(py::init([](const Array& circles, const Array& points) {
             checked(circles, 3, "circles");
             checked(points, 2, "points");
             const QuadGrid g = grid_of(circles);
             require_faces(g, points, "points");
             CirclePattern p{VertexField<Circle2>(g), FaceField<Vec2>(g)};
             fill(p.circles.data(), circles, 3, [](Circle2& c, const double* q) { c = {Vec2(q[0], q[1]), q[2]}; });
             fill(p.points.data(), points, 2, [](Vec2& x, const double* q) { x = Vec2(q[0], q[1]); });
             return p;
           }),
           py::arg("circles"), py::arg("points"))
      .def_property_readonly("circles",
                             [](const CirclePattern& p) {
                               const QuadGrid& g = p.circles.grid();
                               return to_array(p.circles.data(), g.height(), g.width(), 3,
                                               [](const Circle2& c, double* q) {
                                                 q[0] = c.center[0], q[1] = c.center[1], q[2] = c.radius;
                                               });
                             })
      .def_property_readonly("points", [](const CirclePattern& p) {
        const QuadGrid& g = p.points.grid();
        return to_array(p.points.data(), g.height() - 1, g.width() - 1, 2,
                        [](const Vec2& x, double* q) { q[0] = x[0], q[1] = x[1]; });
      });

  py::class_<CyclePattern>(m, "CyclePattern")
      .def_property_readonly("cycles",
                             [](const CyclePattern& p) {
                               const QuadGrid& g = p.cycles.grid();
                               return to_array(p.cycles.data(), g.height(), g.width(), 3,
                                               [](const Cycle2& c, double* q) {
                                                 q[0] = c.center[0], q[1] = c.center[1], q[2] = c.radius;
                                               });
                             })
      .def_property_readonly("lines", [](const CyclePattern& p) {
        const QuadGrid& g = p.lines.grid();
        return to_array(p.lines.data(), g.height() - 1, g.width() - 1, 3, [](const OrientedLine2& l, double* q) {
          q[0] = l.normal[0], q[1] = l.normal[1], q[2] = l.offset;
        });
      });

  py::class_<ConicalNet>(m, "ConicalNet")
      .def(py::init([](const Array& centers) { return ConicalNet{vec2_vertex_field(centers, "centers")}; }),
           py::arg("centers"))
      .def_property_readonly("centers", [](const ConicalNet& n) { return vec2_vertex_array(n.centers); });

  py::class_<IncircularNet>(m, "IncircularNet")
      .def(py::init([](const Array& centers, const Array& radius) {
             IncircularNet net{vec2_vertex_field(centers, "centers"), scalar_field(radius)};
             if (radius.shape(0) != centers.shape(0) || radius.shape(1) != centers.shape(1))
               throw py::value_error("incircle_radius must match the grid of the centers");
             return net;
           }),
           py::arg("centers"), py::arg("incircle_radius"))
      .def_property_readonly("centers", [](const IncircularNet& n) { return vec2_vertex_array(n.centers); })
      .def_property_readonly("incircle_radius", [](const IncircularNet& n) { return scalar_array(n.incircle_radius); });

  py::class_<ScalarField>(m, "ScalarField")
      .def(py::init([](const Array& values, std::string label) { return ScalarField{scalar_field(values), label}; }),
           py::arg("values"), py::arg("label") = "")
      .def_property_readonly("values", [](const ScalarField& f) { return scalar_array(f.values); })
      .def_readonly("label", &ScalarField::label);

  // fixtures
  m.def("generate_grid", [](int w, int h) { return generate_grid(w, h).congruence; }, py::arg("width"),
        py::arg("height"), "Null congruence over the square grid packing.");
  m.def("generate_isothermic", &generate_isothermic, py::arg("width"), py::arg("height"), py::arg("seed"),
        py::arg("strength") = 0.25);
  m.def("random_null_congruence", &random_null_congruence, py::arg("width"), py::arg("height"), py::arg("seed"),
        py::arg("jitter") = 0.15);
  m.def("random_conical_net", &random_conical_net, py::arg("width"), py::arg("height"), py::arg("seed"),
        py::arg("jitter") = 0.15);

  // lifts and projections
  m.def(
      "lorentz_lift",
      [](const CirclePattern& p, std::pair<int, int> face, double height, int side) {
        const FaceId f0 = face_of(face);
        return lorentz_lift(p, f0, initial_line(p, f0, height, side)).congruence;
      },
      py::arg("pattern"), py::arg("face") = std::pair<int, int>{0, 0}, py::arg("height") = 0.0, py::arg("side") = 1);
  m.def(
      "lift_conical",
      [](const ConicalNet& net, std::pair<int, int> face, double height, int side) {
        const FaceId f0 = face_of(face);
        return lift_conical(net, f0, initial_line(net, f0, height, side)).congruence;
      },
      py::arg("net"), py::arg("face") = std::pair<int, int>{0, 0}, py::arg("height") = 0.0, py::arg("side") = 1);
  m.def(
      "null_lift",
      [](const IncircularNet& inc, double height, int side, std::pair<int, int> face) {
        return null_lift(inc, height, side, face_of(face));
      },
      py::arg("net"), py::arg("height") = 0.0, py::arg("side") = 1, py::arg("face") = std::pair<int, int>{0, 0});
  m.def("project_circle_pattern", &project_circle_pattern);
  m.def("project_cycle_pattern", &project_cycle_pattern);
  m.def("projected_centers", &projected_centers);
  m.def("incircular_from_packing", &incircular_from_packing, py::arg("pattern"), py::arg("tol") = 1e-9);

  // congruence operations
  m.def("crop", [](const ContactCongruence& cc, int ring) { return crop(cc, ring); }, py::arg("cc"), py::arg("ring"));
  m.def("reversed", [](const ContactCongruence& cc) { return reversed(cc); });
  m.def("sweep_black", &sweep_black);
  m.def("sweep_white", &sweep_white);

  // residuals
  m.def("contact_residual", &contact_residual);
  m.def("isothermic_residual", &isothermic_residual);
  m.def("circle_pattern_residual", &circle_pattern_residual);
  m.def("circle_packing_residual", &circle_packing_residual);
  m.def("cycle_pattern_residual", &cycle_pattern_residual);
  m.def("incircular_residual", &incircular_residual);

  // X-variables; boundary entries are NaN
  m.def("x_vars", [](const ConicalNet& net, double tol) { return scalar_array(x_vars(net, tol)); }, py::arg("net"),
        py::arg("tol") = 1e-8);
  m.def("x_vars_cyclo", [](const ContactCongruence& cc) { return scalar_array(x_vars_cyclo(cyclographic_lift(cc))); });
  m.def("x_vars_null", [](const ContactCongruence& cc, double tol) { return scalar_array(x_vars_null(cc, tol)); },
        py::arg("cc"), py::arg("tol") = 1e-9);
  m.def("conformal_x", [](const ContactCongruence& cc, double tol) { return scalar_array(conformal_x(cc, tol)); },
        py::arg("cc"), py::arg("tol") = 1e-8);
  m.def("ising_residual", [](const Array& x) { return scalar_array(ising_residual(scalar_field(x))); });
  m.def("miq_update_black", [](const Array& x) { return scalar_array(miq_update_black(scalar_field(x))); });
  m.def("miq_update_white", [](const Array& x) { return scalar_array(miq_update_white(scalar_field(x))); });
  m.def("isothermic_subvariety_residual",
        [](const Array& x) { return scalar_array(isothermic_subvariety_residual(scalar_field(x))); });

  // documents
  m.def("to_json", &to_json, py::arg("document"));
  m.def("from_json", &from_json, py::arg("text"));
  m.def("save", &save, py::arg("document"), py::arg("path"));
  m.def("load", &load, py::arg("path"));

  m.def(
      "render_svg",
      [](const CirclePattern& p, double width, bool centers, bool points) {
        return render_svg(p, svg_options(width, centers, points, true));
      },
      py::arg("pattern"), py::arg("width") = 800.0, py::arg("centers") = true, py::arg("points") = true);
  m.def(
      "render_svg",
      [](const CyclePattern& p, double width, bool centers, bool lines) {
        return render_svg(p, svg_options(width, centers, true, lines));
      },
      py::arg("pattern"), py::arg("width") = 800.0, py::arg("centers") = true, py::arg("lines") = true);
  m.def(
      "render_svg",
      [](const IncircularNet& net, double width, bool centers, const IncircularNet* companion) {
        return render_svg(net, svg_options(width, centers, true, true), companion);
      },
      py::arg("net"), py::arg("width") = 800.0, py::arg("centers") = true, py::arg("companion") = nullptr);
}
