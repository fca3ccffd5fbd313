#include "lnet/miquel.hpp"

#include <cmath>

namespace lnet {

namespace {

// Relative rank threshold for the star system and the tangent-case threshold.
constexpr double kRankTol = 1e-10;
constexpr double kTangentTol = 1e-10;

double sphere_scale(const OrientedSphere& s) { return std::max({1.0, s.center.norm(), std::abs(s.rho)}); }

bool close(const OrientedSphere& a, const OrientedSphere& b, double tol) {
  return (a.center - b.center).norm() <= tol && std::abs(a.rho - b.rho) <= tol;
}

std::pair<Vec2, Vec2> intersect(const Circle2& a, const Circle2& b) {
  const Vec2 d = b.center - a.center;
  const double dist = d.norm();
  if (dist == 0.0) throw Error(ErrorKind::NoRealIntersection, "concentric circles");
  const double along = (dist * dist + a.radius * a.radius - b.radius * b.radius) / (2.0 * dist);
  const double h2 = a.radius * a.radius - along * along;
  if (h2 < -1e-12 * std::max(1.0, a.radius * a.radius)) {
    throw Error(ErrorKind::NoRealIntersection, "circles do not meet");
  }
  const double h = std::sqrt(std::max(0.0, h2));
  const Vec2 u = d / dist;
  const Vec2 m = a.center + along * u;
  const Vec2 n(-u[1], u[0]);
  return {m + h * n, m - h * n};
}

Circle2 circumcircle(const Vec2& a, const Vec2& b, const Vec2& c) {
  const Vec2 ab = b - a;
  const Vec2 ac = c - a;
  const double det = 2.0 * (ab[0] * ac[1] - ab[1] * ac[0]);
  if (std::abs(det) <= 1e-14 * std::max(1.0, ab.squaredNorm() + ac.squaredNorm())) {
    throw Error(ErrorKind::NotConcyclic, "collinear points");
  }
  const Vec2 o(ac[1] * ab.squaredNorm() - ab[1] * ac.squaredNorm(), ab[0] * ac.squaredNorm() - ac[0] * ab.squaredNorm());
  const Vec2 center = a + o / det;
  return {center, (center - a).norm()};
}

double line_distance(const OrientedIsoLine& a, const OrientedIsoLine& b) {
  return (a.base - b.base).norm() + (a.dir - b.dir).norm() + (a.ospan - b.ospan).norm();
}

}  // namespace

OrientedSphere miquel_sphere(const OrientedSphere& s, const OrientedSphere* star) {
  const Eigen::Matrix<double, 6, 6> k = lie_gram();
  Eigen::Matrix<double, 4, 6> a;
  for (int i = 0; i < 4; ++i) {
    const LiePoint li = lie_lift(star[i]);
    a.row(i) = (k * li / li.norm()).transpose();
  }
  Eigen::JacobiSVD<Eigen::Matrix<double, 4, 6>> svd(a, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  if (sv[3] <= kRankTol * sv[0]) throw Error(ErrorKind::DegenerateStar, "neighbour spheres span less than a 3-space");
  const Eigen::Matrix<double, 6, 2> null = svd.matrixV().rightCols<2>();

  LiePoint lam = lie_lift(s);
  lam /= lam.norm();
  // express Lambda(S) in the null basis, then take the orthogonal complement there
  const Eigen::Vector2d coeff = null.transpose() * lam;
  const Eigen::Vector2d perp_coeff(-coeff[1], coeff[0]);
  LiePoint q = null * perp_coeff;
  q /= q.norm();
  const double lq = lie_dot(lam, q);
  const double qq = lie_dot(q, q);
  if (std::abs(lq) <= kTangentTol && std::abs(qq) <= kTangentTol) {
    throw Error(ErrorKind::ContactElementCase, "polar line lies in the Lie quadric");
  }
  if (std::abs(lq) <= kTangentTol) return s;
  const LiePoint second = qq * lam - 2.0 * lq * q;
  OrientedSphere out;
  try {
    out = from_lie(second, 1e-12 * second.norm());
  } catch (const Error&) {
    throw Error(ErrorKind::NotASphere, "second sphere is a plane");
  }
  const OrientedSphere rev = reversed(s);
  if (close(out, rev, 1e-9 * sphere_scale(s))) return rev;
  return out;
}

MiquelCircle miquel_circle(const Circle2& c, const Circle2* star) {
  Vec2 y[4];
  for (int i = 0; i < 4; ++i) {
    const auto [p, q] = intersect(star[i], star[(i + 1) % 4]);
    const double dp = std::abs((p - c.center).norm() - c.radius);
    const double dq = std::abs((q - c.center).norm() - c.radius);
    y[i] = dp >= dq ? p : q;
  }
  MiquelCircle out;
  out.circle = circumcircle(y[0], y[1], y[2]);
  out.residual = std::abs((y[3] - out.circle.center).norm() - out.circle.radius);
  return out;
}

ContactCongruence sweep(const ContactCongruence& cc, Color color) {
  const QuadGrid& g = cc.grid();
  VertexField<OrientedSphere> moved = cc.spheres;
  for (VertexId v : g.vertices()) {
    if (color_of(v) != color || !g.is_interior(v)) continue;
    OrientedSphere star[4];
    int k = 0;
    for (VertexId n : g.star(v)) star[k++] = cc.spheres[n];
    moved[v] = miquel_sphere(cc.spheres[v], star);
  }
  const ContactCongruence old = crop(cc, 1);
  ContactCongruence out{crop(moved, 1), old.isolines};
  const QuadGrid& h = out.grid();
  const Color fixed = color == Color::black ? Color::white : Color::black;
  const double tol = 1e-8 * scale_of(cc);
  for (FaceId f : h.faces()) {
    const auto a = h.face_vertices_of(f, fixed);
    const auto b = h.face_vertices_of(f, color);
    const auto [l1, l2] = common_isolines(out.spheres[a[0]], out.spheres[a[1]]);
    auto score = [&](const OrientedIsoLine& l) {
      return std::max(iso_line_contact_residual(out.spheres[b[0]], l), iso_line_contact_residual(out.spheres[b[1]], l));
    };
    const double s1 = score(l1);
    const double s2 = score(l2);
    const OrientedIsoLine& prev = old.isolines[f];
    if (s1 <= tol && s2 <= tol) {
      out.isolines[f] = line_distance(l1, prev) >= line_distance(l2, prev) ? l1 : l2;
    } else {
      out.isolines[f] = s1 <= s2 ? l1 : l2;
    }
  }
  return out;
}

ContactCongruence sweep_black(const ContactCongruence& cc) { return sweep(cc, Color::black); }
ContactCongruence sweep_white(const ContactCongruence& cc) { return sweep(cc, Color::white); }

}  // namespace lnet
