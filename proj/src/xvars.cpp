#include "lnet/xvars.hpp"

#include <cmath>
#include <complex>
#include <limits>
#include <string>

#include "lnet/miquel.hpp"

namespace lnet {

namespace {

const double kNaN = std::numeric_limits<double>::quiet_NaN();
using Complex = std::complex<double>;

Complex as_complex(const Vec2& p) { return {p[0], p[1]}; }

double at(const VertexField<double>& x, VertexId v) { return x.grid().contains(v) ? x[v] : kNaN; }

// 1 + 1/x with the positivity check; NaN passes through.
double one_plus_inverse(double x) {
  if (std::isnan(x)) return kNaN;
  if (!(x > 0)) throw Error(ErrorKind::NonpositiveX, "X = " + std::to_string(x) + " is inverted");
  return 1.0 + 1.0 / x;
}

// (1 + X(N))(1 + X(S)) / ((1 + 1/X(E))(1 + 1/X(W))) around v.
double ising_rhs(const VertexField<double>& x, VertexId v) {
  const double e = at(x, {v.i + 1, v.j});
  const double w = at(x, {v.i - 1, v.j});
  const double n = at(x, {v.i, v.j + 1});
  const double s = at(x, {v.i, v.j - 1});
  return (1.0 + n) * (1.0 + s) / (one_plus_inverse(e) * one_plus_inverse(w));
}

VertexField<double> miq_update(const VertexField<double>& x, Color updated) {
  VertexField<double> out = x;
  for (VertexId v : x.grid().vertices()) {
    if (color_of(v) != updated) continue;
    const double rhs = ising_rhs(x, v);
    if (std::isnan(rhs) || std::isnan(x[v])) {
      out[v] = kNaN;
      continue;
    }
    if (!(x[v] > 0)) throw Error(ErrorKind::NonpositiveX, "X = " + std::to_string(x[v]) + " is inverted");
    out[v] = rhs / x[v];
  }
  return out;
}

double ratio(double num, double den, double scale) {
  if (std::abs(den) <= 1e-14 * scale) throw Error(ErrorKind::UndefinedX, "vanishing denominator");
  return num / den;
}

}  // namespace

VertexField<double> x_vars(const ConicalNet& net, double tol) {
  const QuadGrid& g = net.centers.grid();
  VertexField<double> x(g, kNaN);
  for (VertexId v : g.vertices()) {
    if (!g.is_interior(v)) continue;
    const auto s = g.star(v);
    const Complex p = as_complex(net.centers[v]);
    Complex d[4];
    for (int k = 0; k < 4; ++k) {
      d[k] = as_complex(net.centers[s[k]]) - p;
      if (std::abs(d[k]) == 0.0) throw Error(ErrorKind::DegenerateStar, "neighbour coincides with the center");
    }
    const Complex value = -(d[0] * d[2]) / (d[1] * d[3]);
    if (std::abs(value.imag()) > tol * std::max(1.0, std::abs(value))) {
      throw Error(ErrorKind::UndefinedX, "X has imaginary part " + std::to_string(value.imag()));
    }
    x[v] = value.real();
  }
  return x;
}

VertexField<double> x_vars_cyclo(const CycloNet& net) {
  const QuadGrid& g = net.points.grid();
  VertexField<double> x(g, kNaN);
  for (VertexId v : g.vertices()) {
    if (!g.is_interior(v)) continue;
    const auto s = g.star(v);
    const CycloPoint d13 = net.points[s[0]] - net.points[s[2]];
    const CycloPoint d24 = net.points[s[1]] - net.points[s[3]];
    x[v] = ratio(cyclo_dot(d13, d13), cyclo_dot(d24, d24), d24.squaredNorm());
  }
  return x;
}

VertexField<double> x_vars_null(const ContactCongruence& cc, double tol) {
  const QuadGrid& g = cc.grid();
  const double scale = scale_of(cc);
  for (VertexId v : g.vertices()) {
    if (color_of(v) == Color::black && std::abs(cc.spheres[v].rho) > tol * scale) {
      throw Error(ErrorKind::NotNullCongruence, "black radius " + std::to_string(cc.spheres[v].rho));
    }
  }
  VertexField<double> x(g, kNaN);
  for (VertexId w : g.vertices()) {
    if (color_of(w) != Color::white || !g.is_interior(w)) continue;
    const auto s = g.star(w);
    const LorentzPoint d13 = cc.spheres[s[0]].center - cc.spheres[s[2]].center;
    const LorentzPoint d24 = cc.spheres[s[1]].center - cc.spheres[s[3]].center;
    x[w] = ratio(lorentz_norm_sq(d13), lorentz_norm_sq(d24), d24.squaredNorm());
  }
  return x;
}

VertexField<double> ising_residual(const VertexField<double>& x) {
  VertexField<double> r(x.grid(), kNaN);
  for (VertexId b : x.grid().vertices()) {
    if (color_of(b) != Color::black) continue;
    r[b] = x[b] * x[b] - ising_rhs(x, b);
  }
  return r;
}

VertexField<double> miq_update_black(const VertexField<double>& x) { return miq_update(x, Color::white); }
VertexField<double> miq_update_white(const VertexField<double>& x) { return miq_update(x, Color::black); }

VertexField<double> isothermic_subvariety_residual(const VertexField<double>& x_white) {
  const QuadGrid& g = x_white.grid();
  // complete the field: blacks from the Ising relation
  VertexField<double> x(g, kNaN);
  for (VertexId v : g.vertices())
    if (color_of(v) == Color::white) x[v] = x_white[v];
  VertexField<double> before(g, kNaN);  // X(b)^2 from the original whites
  for (VertexId b : g.vertices()) {
    if (color_of(b) != Color::black) continue;
    before[b] = ising_rhs(x, b);
    x[b] = std::sqrt(before[b]);  // NaN stays NaN
  }
  const VertexField<double> updated = miq_update_black(x);
  VertexField<double> r(g, kNaN);
  for (VertexId b : g.vertices()) {
    if (color_of(b) != Color::black) continue;
    r[b] = before[b] - ising_rhs(updated, b);
  }
  return r;
}

VertexField<double> conformal_x(const ContactCongruence& cc, double tol) {
  const QuadGrid& g = cc.grid();
  VertexField<double> x(g, kNaN);
  if (g.width() < 5 || g.height() < 5) return x;
  const ContactCongruence swept = sweep_black(cc);
  const QuadGrid& sg = swept.grid();
  for (VertexId w : g.vertices()) {
    if (color_of(w) != Color::white || g.depth(w) < 2) continue;
    const FaceId nw_swept{w.i - 2, w.j - 1};
    const FaceId se_swept{w.i - 1, w.j - 2};
    if (!sg.contains(nw_swept) || !sg.contains(se_swept)) continue;
    const Complex a = as_complex(cc.isolines[FaceId{w.i, w.j}].trace());
    const Complex b = as_complex(swept.isolines[nw_swept].trace());
    const Complex c = as_complex(cc.isolines[FaceId{w.i - 1, w.j - 1}].trace());
    const Complex d = as_complex(swept.isolines[se_swept].trace());
    const Complex den = (a - d) * (b - c);
    const double size = std::abs(a - c) + std::abs(b - d);
    if (std::abs(a - b) * std::abs(c - d) <= 1e-14 * size * size || std::abs(den) <= 1e-14 * size * size) {
      throw Error(ErrorKind::DegenerateCrossRatio, "coincident traces");
    }
    const Complex value = (a - b) * (c - d) / den;
    if (std::abs(value.imag()) > tol * std::max(1.0, std::abs(value))) {
      throw Error(ErrorKind::DegenerateCrossRatio, "cross-ratio has imaginary part " + std::to_string(value.imag()));
    }
    x[w] = value.real();
  }
  return x;
}

}  // namespace lnet
