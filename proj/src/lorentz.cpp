#include "lnet/lorentz.hpp"

#include <cmath>

namespace lnet {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::LightConeSingularity: return "LightConeSingularity";
    case ErrorKind::NonIsotropicDirection: return "NonIsotropicDirection";
    case ErrorKind::DegenerateAxis: return "DegenerateAxis";
    case ErrorKind::DegenerateSpheres: return "DegenerateSpheres";
    case ErrorKind::NotConical: return "NotConical";
    case ErrorKind::InitialLineMismatch: return "InitialLineMismatch";
    case ErrorKind::NotIsotropicConjugate: return "NotIsotropicConjugate";
    case ErrorKind::NotNullCongruence: return "NotNullCongruence";
    case ErrorKind::NotCirclePacking: return "NotCirclePacking";
    case ErrorKind::NotIncircular: return "NotIncircular";
    case ErrorKind::DegenerateStar: return "DegenerateStar";
    case ErrorKind::ContactElementCase: return "ContactElementCase";
    case ErrorKind::NotConcyclic: return "NotConcyclic";
    case ErrorKind::NotIsothermic: return "NotIsothermic";
    case ErrorKind::NoRealIntersection: return "NoRealIntersection";
    case ErrorKind::NotHarmonic: return "NotHarmonic";
    case ErrorKind::UndefinedX: return "UndefinedX";
    case ErrorKind::InvalidTransform: return "InvalidTransform";
    case ErrorKind::DegenerateImage: return "DegenerateImage";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::InvalidGrid: return "InvalidGrid";
    case ErrorKind::SchemaMismatch: return "SchemaMismatch";
    case ErrorKind::VersionMismatch: return "VersionMismatch";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::NotASphere: return "NotASphere";
    case ErrorKind::PointAtInfinity: return "PointAtInfinity";
    case ErrorKind::NonSpacelikeEdge: return "NonSpacelikeEdge";
    case ErrorKind::ZeroLengthEdge: return "ZeroLengthEdge";
    case ErrorKind::ClosureFailure: return "ClosureFailure";
    case ErrorKind::InconsistentChoice: return "InconsistentChoice";
    case ErrorKind::DegenerateCrossRatio: return "DegenerateCrossRatio";
    case ErrorKind::NonpositiveX: return "NonpositiveX";
    case ErrorKind::EmptyNet: return "EmptyNet";
  }
  return "Unknown";
}

double lorentz_dot(const LorentzPoint& x, const LorentzPoint& y) {
  return x[0] * y[0] + x[1] * y[1] - x[2] * y[2];
}

double lorentz_norm_sq(const LorentzPoint& x) { return lorentz_dot(x, x); }

double cyclo_dot(const CycloPoint& x, const CycloPoint& y) {
  return x[0] * y[0] + x[1] * y[1] - x[2] * y[2] - x[3] * y[3];
}

double mobius_dot(const MobiusPoint& x, const MobiusPoint& y) {
  return x[0] * y[0] + x[1] * y[1] + x[2] * y[2] - x[3] * y[3] - x[4] * y[4];
}

double lie_dot(const LiePoint& x, const LiePoint& y) {
  return x[0] * y[0] + x[1] * y[1] + x[2] * y[2] - x[3] * y[3] - x[4] * y[4] - x[5] * y[5];
}

Eigen::Matrix3d lorentz_gram() { return Eigen::Vector3d(1, 1, -1).asDiagonal(); }
Eigen::Matrix4d cyclo_gram() { return Eigen::Vector4d(1, 1, -1, -1).asDiagonal(); }
Eigen::Matrix<double, 5, 5> mobius_gram() {
  MobiusPoint d;
  d << 1, 1, 1, -1, -1;
  return d.asDiagonal();
}
Eigen::Matrix<double, 6, 6> lie_gram() {
  LiePoint d;
  d << 1, 1, 1, -1, -1, -1;
  return d.asDiagonal();
}

CycloPoint to_cyclo(const OrientedSphere& s) {
  return CycloPoint(s.center[0], s.center[1], s.center[2], s.rho);
}

OrientedSphere from_cyclo(const CycloPoint& y) { return {y.head<3>(), y[3]}; }

MobiusPoint mobius_lift(const OrientedSphere& s) {
  const LorentzPoint& c = s.center;
  const double k = lorentz_norm_sq(c) - s.rho * s.rho;
  MobiusPoint m;
  m << c[0], c[1], 0.5 * (1.0 - k), c[2], 0.5 * (1.0 + k);
  return m;
}

MobiusPoint mobius_lift(const LorentzPoint& x) { return mobius_lift(OrientedSphere{x, 0.0}); }

LiePoint lie_lift(const OrientedSphere& s) {
  LiePoint l;
  l << mobius_lift(s), s.rho;
  return l;
}

OrientedSphere from_lie(const LiePoint& l, double tol) {
  const double n = l[2] + l[4];
  if (std::abs(n) <= tol * l.norm()) {
    throw Error(ErrorKind::DegenerateImage, "Lie point represents a plane or a point at infinity");
  }
  const LiePoint u = l / n;
  return {LorentzPoint(u[0], u[1], u[3]), u[5]};
}

LorentzPoint point_from_mobius(const MobiusPoint& m, double tol) {
  const double n = m[2] + m[4];
  if (std::abs(n) <= tol * m.norm()) {
    throw Error(ErrorKind::DegenerateImage, "Moebius point at infinity");
  }
  return LorentzPoint(m[0], m[1], m[3]) / n;
}

double tangential_distance_sq(const OrientedSphere& s, const OrientedSphere& t) {
  const CycloPoint d = to_cyclo(s) - to_cyclo(t);
  return cyclo_dot(d, d);
}

double touching_residual(const OrientedSphere& s, const OrientedSphere& t) {
  const MobiusPoint ms = mobius_lift(s);
  const MobiusPoint mt = mobius_lift(t);
  const double st = mobius_dot(ms, mt);
  return st * st - mobius_dot(ms, ms) * mobius_dot(mt, mt);
}

LorentzPoint invert_point(const LorentzPoint& x, const OrientedSphere& s, double tol) {
  const LorentzPoint d = x - s.center;
  const double q = lorentz_norm_sq(d);
  if (std::abs(q) <= tol * std::max(1.0, d.squaredNorm())) {
    throw Error(ErrorKind::LightConeSingularity, "point on the light cone of the inversion center");
  }
  return s.center + (s.rho * s.rho / q) * d;
}

namespace {

Vec2 perp(const Vec2& u) { return Vec2(-u[1], u[0]); }

bool lex_greater(const CycloPoint& a, const CycloPoint& b) {
  for (int k = 0; k < 4; ++k) {
    if (a[k] != b[k]) return a[k] > b[k];
  }
  return false;
}

OrientedIsoLine build_line(const LorentzPoint& point, const Vec2& u, int side) {
  OrientedIsoLine l;
  l.dir = LorentzPoint(u[0], u[1], 1.0);
  l.base = point - point[2] * l.dir;
  l.base[2] = 0.0;
  const auto cand = ospan_candidates(l.dir);
  l.ospan = side >= 0 ? cand.first : cand.second;
  return l;
}

}  // namespace

std::pair<CycloPoint, CycloPoint> ospan_candidates(const LorentzPoint& dir) {
  const Vec2 p = perp(dir.head<2>());
  const CycloPoint a(p[0], p[1], 0.0, 1.0);
  const CycloPoint b(-p[0], -p[1], 0.0, 1.0);
  return lex_greater(b, a) ? std::make_pair(b, a) : std::make_pair(a, b);
}

int OrientedIsoLine::side() const {
  const auto cand = ospan_candidates(dir);
  return ospan.head<2>().dot(cand.first.head<2>()) > 0 ? 1 : -1;
}

CycloPoint OrientedIsoLine::plane_direction(int k) const {
  if (k == 0) return CycloPoint(dir[0], dir[1], dir[2], 0.0);
  return ospan;
}

OrientedIsoLine make_iso_line(const LorentzPoint& point, const LorentzPoint& dir, int side,
                              double tol) {
  const double scale = dir.norm();
  if (scale == 0.0 || std::abs(dir[2]) <= tol * scale) {
    throw Error(ErrorKind::NonIsotropicDirection, "direction is zero or horizontal");
  }
  const LorentzPoint d = dir / dir[2];
  if (std::abs(lorentz_norm_sq(d)) > tol) {
    throw Error(ErrorKind::NonIsotropicDirection, "direction is not on the light cone");
  }
  const Vec2 u = d.head<2>().normalized();
  return build_line(point, u, side);
}

OrientedIsoLine reversed(const OrientedIsoLine& l) {
  OrientedIsoLine r = l;
  r.ospan.head<2>() = -l.ospan.head<2>();
  return r;
}

OrientedSphere reversed(const OrientedSphere& s) { return {s.center, -s.rho}; }

double iso_line_contact_residual(const OrientedSphere& s, const OrientedIsoLine& l) {
  CycloPoint base(l.base[0], l.base[1], l.base[2], 0.0);
  CycloPoint delta = to_cyclo(s) - base;
  CycloPoint e1 = l.plane_direction(0).normalized();
  CycloPoint e2 = l.plane_direction(1);
  e2 -= e2.dot(e1) * e1;
  e2.normalize();
  delta -= delta.dot(e1) * e1;
  delta -= delta.dot(e2) * e2;
  return delta.norm();
}

OrientedSphere sphere_from_axis_and_line(const Vec2& axis_foot, const OrientedIsoLine& l) {
  const Vec2 delta = axis_foot - l.base.head<2>();
  const Vec2 u = l.dir.head<2>();
  const double h = l.base[2] + delta.dot(u);
  const double rho = delta.dot(l.ospan.head<2>());
  return {LorentzPoint(axis_foot[0], axis_foot[1], h), rho};
}

Circle3 smallest_circle(const OrientedSphere& s) {
  return {s.center, LorentzPoint(0, 0, 1), std::abs(s.rho)};
}

VerticalReflection VerticalReflection::through(const Vec2& a, const Vec2& b) {
  const Vec2 d = b - a;
  if (d.norm() == 0.0) {
    throw Error(ErrorKind::DegenerateAxis, "reflection line through two equal points");
  }
  return {a, d.normalized()};
}

Vec2 VerticalReflection::apply_linear(const Vec2& v) const { return 2.0 * v.dot(dir) * dir - v; }

Vec2 VerticalReflection::apply(const Vec2& x) const { return point + apply_linear(x - point); }

LorentzPoint reflect_vertical(const VerticalReflection& r, const LorentzPoint& x) {
  const Vec2 h = r.apply(x.head<2>());
  return LorentzPoint(h[0], h[1], x[2]);
}

OrientedSphere reflect_vertical(const VerticalReflection& r, const OrientedSphere& s) {
  return {reflect_vertical(r, s.center), s.rho};
}

OrientedIsoLine reflect_vertical(const VerticalReflection& r, const OrientedIsoLine& l) {
  OrientedIsoLine out;
  out.base = reflect_vertical(r, l.base);
  const Vec2 u = r.apply_linear(l.dir.head<2>());
  out.dir = LorentzPoint(u[0], u[1], 1.0);
  const Vec2 o = r.apply_linear(l.ospan.head<2>());
  out.ospan = CycloPoint(o[0], o[1], 0.0, 1.0);
  return out;
}

IsoLineFit common_isoline(const OrientedSphere* spheres, int n) {
  if (n < 2) throw Error(ErrorKind::DegenerateSpheres, "need at least two spheres");
  Eigen::MatrixXd pts(n, 4);
  for (int k = 0; k < n; ++k) pts.row(k) = to_cyclo(spheres[k]).transpose();
  const Eigen::RowVector4d centroid = pts.colwise().mean();
  const Eigen::MatrixXd centered = pts.rowwise() - centroid;
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(centered, Eigen::ComputeFullV);
  const Eigen::VectorXd& sv = svd.singularValues();
  if (sv.size() < 2 || sv[1] <= 1e-12 * std::max(1.0, sv[0])) {
    throw Error(ErrorKind::DegenerateSpheres, "cyclographic points are collinear");
  }
  const Eigen::Vector4d v0 = svd.matrixV().col(0);
  const Eigen::Vector4d v1 = svd.matrixV().col(1);
  Eigen::Vector4d d = v0 * v1[3] - v1 * v0[3];
  if (d.norm() <= 1e-12 || std::abs(d[2]) <= 1e-12 * d.norm()) {
    throw Error(ErrorKind::NonIsotropicDirection, "fitted plane has no isotropic line");
  }
  d /= d[2];
  Eigen::Vector4d o = std::abs(v0[3]) >= std::abs(v1[3]) ? v0 : v1;
  o /= o[3];
  o -= o[2] * d;
  const Eigen::Vector4d p = centroid.transpose() - centroid[3] * o;
  const Vec2 u = d.head<2>().normalized();
  const int sgn = o.head<2>().dot(perp(u)) >= 0 ? 1 : -1;
  OrientedIsoLine line = build_line(p.head<3>(), u, 1);
  line.ospan = CycloPoint(sgn * perp(u)[0], sgn * perp(u)[1], 0.0, 1.0);
  return {line, sv.size() >= 3 ? sv[2] : 0.0};
}

LorentzPoint contact_point(const OrientedSphere& a, const OrientedSphere& b) {
  const double dr = a.rho - b.rho;
  const double scale = std::max({1.0, std::abs(a.rho), std::abs(b.rho)});
  if (std::abs(dr) <= 1e-14 * scale) {
    throw Error(ErrorKind::DegenerateSpheres, "spheres with equal signed radius have no contact point");
  }
  return a.center + (a.rho / dr) * (b.center - a.center);
}

std::pair<OrientedIsoLine, OrientedIsoLine> common_isolines(const OrientedSphere& a,
                                                             const OrientedSphere& b) {
  // Radii of point spheres recomputed by sweeps carry roundoff proportional to
  // the coordinates, not to the distance between the two centers.
  const double scale = std::max({1.0, (a.center - b.center).norm(), a.center.norm(), b.center.norm()});
  const bool a_null = std::abs(a.rho) <= 1e-11 * scale;
  const bool b_null = std::abs(b.rho) <= 1e-11 * scale;
  if (a_null && b_null) {
    const LorentzPoint d = b.center - a.center;
    const OrientedIsoLine l = make_iso_line(a.center, d, 1, 1e-8);
    return {l, reversed(l)};
  }
  const LorentzPoint p = contact_point(a, b);
  const LorentzPoint n = b.center - a.center;
  const Vec2 nh = n.head<2>();
  const double m2 = nh.squaredNorm();
  if (m2 <= 0.0 || lorentz_norm_sq(n) <= 0.0) {
    throw Error(ErrorKind::DegenerateSpheres, "touching spheres without a timelike tangent plane");
  }
  const double along = n[2] / m2;
  const double across = std::sqrt(std::max(0.0, 1.0 - n[2] * n[2] / m2)) / std::sqrt(m2);
  Vec2 u1 = along * nh + across * perp(nh);
  Vec2 u2 = along * nh - across * perp(nh);
  if (u2[0] > u1[0] || (u2[0] == u1[0] && u2[1] > u1[1])) std::swap(u1, u2);
  const OrientedSphere& probe = a_null ? b : a;
  auto oriented = [&](const Vec2& u) {
    OrientedIsoLine l = build_line(p, u.normalized(), 1);
    OrientedIsoLine r = reversed(l);
    return iso_line_contact_residual(probe, l) <= iso_line_contact_residual(probe, r) ? l : r;
  };
  return {oriented(u1), oriented(u2)};
}

}  // namespace lnet
