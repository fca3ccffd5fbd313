#include "lnet/isothermic.hpp"

#include <cmath>
#include <deque>
#include <map>
#include <optional>
#include <string>

namespace lnet {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

const Eigen::Matrix3d& lorentz_j() {
  static const Eigen::Matrix3d j = lorentz_gram();
  return j;
}

std::array<OrientedSphere, 4> star_spheres(const ContactCongruence& cc, VertexId v) {
  std::array<OrientedSphere, 4> out;
  int k = 0;
  for (VertexId n : cc.grid().star(v)) out[k++] = cc.spheres[n];
  return out;
}

double line_point_distance(const LorentzPoint& p, const LorentzPoint& d, const LorentzPoint& x) {
  const LorentzPoint u = d.normalized();
  const LorentzPoint r = x - p;
  return (r - r.dot(u) * u).norm();
}

// The oriented line through two apexes that touches the probe sphere.
OrientedIsoLine apex_line(const LorentzPoint& a, const LorentzPoint& b, const OrientedSphere& probe) {
  const auto [l, r] = common_isolines({a, 0.0}, {b, 0.0});
  return iso_line_contact_residual(probe, l) <= iso_line_contact_residual(probe, r) ? l : r;
}

double lorentz_length(const LorentzPoint& d) {
  const double q = lorentz_norm_sq(d);
  if (!(q > 0.0)) throw Error(ErrorKind::NonSpacelikeEdge, "edge is not spacelike");
  return std::sqrt(q);
}

// Integrates a closed-up-to-residual form on the vertex-face incidence graph.
// step(v, f) is the increment from v to f.
template <class Step>
DualNet integrate_combined(const QuadGrid& g, Step step) {
  const int nv = g.num_vertices();
  DualNet out{{VertexField<LorentzPoint>(g, LorentzPoint::Zero()), FaceField<LorentzPoint>(g, LorentzPoint::Zero())}};
  std::vector<char> seen(nv + g.num_faces(), 0);
  std::deque<int> queue{int(g.index(VertexId{0, 0}))};
  seen[queue.front()] = 1;
  while (!queue.empty()) {
    const int node = queue.front();
    queue.pop_front();
    if (node < nv) {
      const VertexId v = g.vertex(node);
      for (FaceId f : g.incident_faces(v)) {
        const int k = nv + g.index(f);
        if (seen[k]) continue;
        seen[k] = 1;
        out.net.faces[f] = out.net.vertices[v] + step(v, f);
        queue.push_back(k);
      }
    } else {
      const FaceId f = g.face(node - nv);
      for (VertexId v : g.face_vertices(f)) {
        const int k = g.index(v);
        if (seen[k]) continue;
        seen[k] = 1;
        out.net.vertices[v] = out.net.faces[f] - step(v, f);
        queue.push_back(k);
      }
    }
  }
  for (FaceId f : g.faces()) {
    for (FaceId h : {FaceId{f.i + 1, f.j}, FaceId{f.i, f.j + 1}}) {
      if (!g.contains(h)) continue;
      const Edge e = g.shared_edge(f, h);
      const LorentzPoint sum = step(e.a, f) - step(e.b, f) + step(e.b, h) - step(e.a, h);
      out.closure = std::max(out.closure, sum.norm());
    }
  }
  return out;
}

}  // namespace

VertexField<StarPlane> isothermic_residuals(const ContactCongruence& cc) {
  const QuadGrid& g = cc.grid();
  VertexField<StarPlane> out(g);
  for (VertexId b : g.vertices()) {
    if (color_of(b) != Color::black || !g.is_interior(b)) continue;
    const auto star = star_spheres(cc, b);
    LorentzPoint mean = LorentzPoint::Zero();
    for (const auto& s : star) mean += s.center / 4.0;
    Eigen::Matrix<double, 4, 3> m;
    for (int k = 0; k < 4; ++k) m.row(k) = (star[k].center - mean).transpose();
    Eigen::JacobiSVD<Eigen::Matrix<double, 4, 3>> svd(m, Eigen::ComputeFullV);
    const LorentzPoint e = svd.matrixV().col(2);
    StarPlane p;
    p.coplanarity = (m * e).cwiseAbs().maxCoeff();
    p.normal = lorentz_j() * e;
    if (p.normal[2] < 0) p.normal = -p.normal;
    p.spacelike = lorentz_norm_sq(p.normal) < 0.0;
    out[b] = p;
  }
  return out;
}

double isothermic_residual(const ContactCongruence& cc) {
  double worst = 0.0;
  const VertexField<StarPlane> planes = isothermic_residuals(cc);
  for (const StarPlane& p : planes.data()) {
    if (std::isnan(p.coplanarity)) continue;
    if (!p.spacelike) return std::numeric_limits<double>::infinity();
    worst = std::max(worst, p.coplanarity);
  }
  return worst;
}

std::pair<LorentzPoint, LorentzPoint> two_point_intersection(const OrientedSphere* star, const LorentzPoint* hint) {
  const Eigen::Matrix<double, 5, 5> gm = mobius_gram();
  Eigen::Matrix<double, 4, 5> a;
  for (int i = 0; i < 4; ++i) {
    const MobiusPoint m = mobius_lift(star[i]);
    a.row(i) = (gm * m / m.norm()).transpose();
  }
  Eigen::JacobiSVD<Eigen::Matrix<double, 4, 5>> svd(a, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  if (sv[2] <= 1e-10 * sv[0]) throw Error(ErrorKind::DegenerateStar, "spheres span less than a plane of the pencil");
  const MobiusPoint p = svd.matrixV().col(3);
  const MobiusPoint q = svd.matrixV().col(4);
  // quadratic form restricted to span{p, q}
  const double pp = mobius_dot(p, p);
  const double pq = mobius_dot(p, q);
  const double qq = mobius_dot(q, q);
  double disc = pq * pq - pp * qq;
  if (disc < -1e-10) throw Error(ErrorKind::NoRealIntersection, "common-point pencil misses the quadric");
  disc = std::max(0.0, disc);
  // roots t of qq t^2 + 2 pq t + pp = 0 as homogeneous pairs, avoiding cancellation
  const double h = -(pq + std::copysign(std::sqrt(disc), pq));
  MobiusPoint x1, x2;
  if (h == 0.0) {
    x1 = x2 = std::abs(qq) >= std::abs(pp) ? p : q;
  } else {
    x1 = qq * p + h * q;  // t = h / qq
    x2 = h * p + pp * q;  // t = pp / h
  }
  LorentzPoint y1, y2;
  try {
    y1 = point_from_mobius(x1, 1e-12 * x1.norm());
    y2 = point_from_mobius(x2, 1e-12 * x2.norm());
  } catch (const Error&) {
    throw Error(ErrorKind::PointAtInfinity, "common point at infinity");
  }
  if (hint != nullptr && (y2 - *hint).norm() < (y1 - *hint).norm()) std::swap(y1, y2);
  return {y1, y2};
}

SpacelikeCircle circle_through(const LorentzPoint& a, const LorentzPoint& b, const LorentzPoint& c) {
  const LorentzPoint u = b - a;
  const LorentzPoint v = c - a;
  Eigen::Matrix2d m;
  m << lorentz_dot(u, u), lorentz_dot(u, v), lorentz_dot(u, v), lorentz_dot(v, v);
  LorentzPoint n = lorentz_j() * u.cross(v);
  const double nn = lorentz_norm_sq(n);
  if (!(nn < 0.0)) throw Error(ErrorKind::DegenerateStar, "points do not span a spacelike plane");
  const Eigen::Vector2d ab = m.partialPivLu().solve(0.5 * Eigen::Vector2d(m(0, 0), m(1, 1)));
  SpacelikeCircle out;
  out.center = a + ab[0] * u + ab[1] * v;
  out.radius = std::sqrt(lorentz_norm_sq(out.center - a));
  n /= std::sqrt(-nn);
  out.normal = n[2] < 0 ? LorentzPoint(-n) : n;
  return out;
}

ContactCircle contact_circle(const OrientedSphere* star) {
  LorentzPoint p[4];
  for (int k = 0; k < 4; ++k) p[k] = contact_point(star[k], star[(k + 1) % 4]);
  ContactCircle out;
  out.circle = circle_through(p[0], p[1], p[2]);
  const LorentzPoint d = p[3] - out.circle.center;
  out.residual = std::abs(std::sqrt(std::max(0.0, lorentz_norm_sq(d))) - out.circle.radius) +
                 std::abs(lorentz_dot(d, out.circle.normal));
  return out;
}

double s_isothermic_residual(const SIsothermicNet& net) {
  const QuadGrid& g = net.grid();
  auto gap = [](const LorentzPoint& d, double r) { return std::abs(std::sqrt(std::max(0.0, lorentz_norm_sq(d))) - r); };
  double worst = 0.0;
  for (FaceId f : g.faces()) {
    const LorentzPoint p = net.contact_points[f];
    const auto w = g.face_vertices_of(f, Color::white);
    const auto b = g.face_vertices_of(f, Color::black);
    for (VertexId v : w) worst = std::max(worst, gap(p - net.white_spheres[v].center, std::abs(net.white_spheres[v].rho)));
    worst = std::max(worst, std::abs(tangential_distance_sq(net.white_spheres[w[0]], net.white_spheres[w[1]])));
    for (VertexId v : b) {
      const SpacelikeCircle& c = net.black_circles[v];
      worst = std::max(worst, gap(p - c.center, c.radius) + std::abs(lorentz_dot(p - c.center, c.normal)));
      for (VertexId u : w) {
        const OrientedSphere& s = net.white_spheres[u];
        const double ortho = lorentz_norm_sq(c.center - s.center) - c.radius * c.radius - s.rho * s.rho;
        worst = std::max(worst, std::abs(ortho) / std::max(1.0, c.radius * c.radius + s.rho * s.rho));
      }
    }
  }
  return worst;
}

SIsothermicNet to_s_isothermic(const ContactCongruence& cc, double tol) {
  const double residual = isothermic_residual(cc);
  if (!(residual <= tol * scale_of(cc))) {
    throw Error(ErrorKind::NotIsothermic, "white stars are not in spacelike planes (" + std::to_string(residual) + ")");
  }
  const QuadGrid g = cropped(cc.grid(), 1);
  SIsothermicNet net{crop(cc.spheres, 1), VertexField<SpacelikeCircle>(g), FaceField<LorentzPoint>(g)};
  for (VertexId v : g.vertices()) {
    if (color_of(v) != Color::black) continue;
    const auto star = star_spheres(cc, {v.i + 1, v.j + 1});
    net.black_circles[v] = contact_circle(star.data()).circle;
  }
  for (FaceId f : g.faces()) {
    const auto w = g.face_vertices_of(f, Color::white);
    net.contact_points[f] = contact_point(net.white_spheres[w[0]], net.white_spheres[w[1]]);
  }
  return net;
}

CongruenceBuild from_s_isothermic(const SIsothermicNet& net, int side, double tol) {
  const QuadGrid& g = net.grid();
  VertexField<LorentzPoint> apex(g, LorentzPoint::Constant(kNaN));
  std::vector<char> chosen(g.num_vertices(), 0);
  auto candidates = [&](VertexId b) {
    const SpacelikeCircle& c = net.black_circles[b];
    return std::array<LorentzPoint, 2>{c.center + c.radius * c.normal, c.center - c.radius * c.normal};
  };
  double discrepancy = 0.0;
  double scale = 1.0;
  for (VertexId v : g.vertices())
    if (color_of(v) == Color::white) scale = std::max(scale, net.white_spheres[v].center.norm());
  // place the apex of b on the line through p with direction d
  auto settle = [&](VertexId b, const LorentzPoint& p, const LorentzPoint& d) {
    const auto cand = candidates(b);
    const double d0 = line_point_distance(p, d, cand[0]);
    const double d1 = line_point_distance(p, d, cand[1]);
    if (chosen[g.index(b)]) {
      discrepancy = std::max(discrepancy, line_point_distance(p, d, apex[b]));
      return;
    }
    apex[b] = d0 <= d1 ? cand[0] : cand[1];
    discrepancy = std::max(discrepancy, std::min(d0, d1));
    chosen[g.index(b)] = 1;
  };

  const DualTree tree = dual_spanning_tree(g, {0, 0});
  for (FaceId f : tree.order) {
    const LorentzPoint p = net.contact_points[f];
    const auto b = g.face_vertices_of(f, Color::black);
    if (f == tree.order.front()) {
      const auto w = g.face_vertices_of(f, Color::white);
      const auto lines = common_isolines(net.white_spheres[w[0]], net.white_spheres[w[1]]);
      const OrientedIsoLine& l = side >= 0 ? lines.first : lines.second;
      settle(b[0], p, l.dir);
      settle(b[1], p, l.dir);
      continue;
    }
    const VertexId known = chosen[g.index(b[0])] ? b[0] : b[1];
    const VertexId other = known == b[0] ? b[1] : b[0];
    const LorentzPoint d = apex[known] - p;
    settle(other, p, d);
  }
  // every face line must pass through both apexes and the contact point
  ContactCongruence cc{VertexField<OrientedSphere>(g), FaceField<OrientedIsoLine>(g)};
  for (VertexId v : g.vertices())
    cc.spheres[v] = color_of(v) == Color::white ? net.white_spheres[v] : OrientedSphere{apex[v], 0.0};
  for (FaceId f : g.faces()) {
    const auto b = g.face_vertices_of(f, Color::black);
    const auto w = g.face_vertices_of(f, Color::white);
    discrepancy = std::max(discrepancy, line_point_distance(apex[b[0]], apex[b[1]] - apex[b[0]], net.contact_points[f]));
    cc.isolines[f] = apex_line(apex[b[0]], apex[b[1]], cc.spheres[w[0]]);
  }
  if (discrepancy > tol * scale) {
    throw Error(ErrorKind::InconsistentChoice, "apex choices disagree by " + std::to_string(discrepancy));
  }
  return {cc, discrepancy};
}

HarmonicResidual harmonic_quad_residual(const std::array<LorentzPoint, 4>& q) {
  double len[4];
  for (int k = 0; k < 4; ++k) len[k] = lorentz_length(q[(k + 1) % 4] - q[k]);
  HarmonicResidual out;
  out.balance = std::abs(len[0] * len[2] - len[1] * len[3]);
  const SpacelikeCircle c = circle_through(q[0], q[1], q[2]);
  const LorentzPoint d = q[3] - c.center;
  out.concyclicity =
      std::abs(std::sqrt(std::max(0.0, lorentz_norm_sq(d))) - c.radius) + std::abs(lorentz_dot(d, c.normal));
  return out;
}

int incidence_sign(VertexId v, FaceId f) { return (f.i == v.i) == (f.j == v.j) ? 1 : -1; }

CombinedNet combined_net(const SIsothermicNet& net) {
  const QuadGrid& g = net.grid();
  CombinedNet out{VertexField<LorentzPoint>(g), net.contact_points};
  for (VertexId v : g.vertices())
    out.vertices[v] = color_of(v) == Color::white ? net.white_spheres[v].center : net.black_circles[v].center;
  return out;
}

double harmonic_net_residual(const CombinedNet& net) {
  const QuadGrid& g = net.grid();
  double worst = 0.0;
  for (FaceId f : g.faces()) {
    for (FaceId h : {FaceId{f.i + 1, f.j}, FaceId{f.i, f.j + 1}}) {
      if (!g.contains(h)) continue;
      const Edge e = g.shared_edge(f, h);
      const HarmonicResidual r =
          harmonic_quad_residual({net.vertices[e.a], net.faces[f], net.vertices[e.b], net.faces[h]});
      worst = std::max({worst, r.concyclicity, r.balance});
    }
  }
  return worst;
}

DualNet christoffel_dual(const CombinedNet& net) {
  const QuadGrid& g = net.grid();
  auto step = [&](VertexId v, FaceId f) -> LorentzPoint {
    const LorentzPoint d = net.faces[f] - net.vertices[v];
    const double q = lorentz_norm_sq(d);
    if (d.norm() <= 1e-14) throw Error(ErrorKind::ZeroLengthEdge, "coincident combined-net points");
    if (!(q > 0.0)) throw Error(ErrorKind::NonSpacelikeEdge, "combined-net edge is not spacelike");
    return incidence_sign(v, f) * d / q;
  };
  return integrate_combined(g, step);
}

SIsothermicNet dual_s_isothermic(const SIsothermicNet& net, const CombinedNet& dual) {
  const QuadGrid& g = net.grid();
  SIsothermicNet out{VertexField<OrientedSphere>(g), VertexField<SpacelikeCircle>(g), dual.faces};
  for (VertexId v : g.vertices()) {
    if (color_of(v) == Color::white) {
      out.white_spheres[v] = {dual.vertices[v], 1.0 / net.white_spheres[v].rho};
    } else {
      const SpacelikeCircle& c = net.black_circles[v];
      out.black_circles[v] = {dual.vertices[v], c.normal, 1.0 / c.radius};
    }
  }
  return out;
}

LorentzPoint direct_white_dual_edge(const OrientedSphere& w, const OrientedSphere& w2, VertexId a, VertexId b) {
  const double s = (b.i - a.i) * (b.j - a.j) > 0 ? 1.0 : -1.0;
  return -s * (w2.center - w.center) / (w.rho * w2.rho);
}

DualCongruence christoffel_dual_congruence(const ContactCongruence& cc, double tol) {
  const SIsothermicNet net = to_s_isothermic(cc, tol);
  const QuadGrid& g = net.grid();
  const ContactCongruence base = crop(cc, 1);
  const DualNet dual = christoffel_dual(combined_net(net));
  DualCongruence out;
  out.closure = dual.closure;
  ContactCongruence& c = out.congruence;
  c = {VertexField<OrientedSphere>(g), FaceField<OrientedIsoLine>(g)};
  for (VertexId v : g.vertices()) {
    if (color_of(v) == Color::white) {
      c.spheres[v] = {dual.net.vertices[v], 1.0 / net.white_spheres[v].rho};
      continue;
    }
    // apex from each incident face; NW/SE faces give the mirror image in the dual
    // circle center
    const double r2 = net.black_circles[v].radius * net.black_circles[v].radius;
    const LorentzPoint a = base.spheres[v].center;
    std::vector<LorentzPoint> est;
    for (FaceId f : g.incident_faces(v)) {
      const LorentzPoint p = dual.net.faces[f] + incidence_sign(v, f) * (a - net.contact_points[f]) / r2;
      est.push_back(incidence_sign(v, f) > 0 ? p : LorentzPoint(2.0 * dual.net.vertices[v] - p));
    }
    LorentzPoint mean = LorentzPoint::Zero();
    for (const auto& p : est) mean += p / double(est.size());
    for (const auto& p : est) out.black_spread = std::max(out.black_spread, (p - mean).norm());
    c.spheres[v] = {mean, 0.0};
  }
  for (FaceId f : g.faces()) {
    const auto w = g.face_vertices_of(f, Color::white);
    const auto b = g.face_vertices_of(f, Color::black);
    const LorentzPoint step = c.spheres[w[1]].center - c.spheres[w[0]].center;
    const LorentzPoint direct = direct_white_dual_edge(net.white_spheres[w[0]], net.white_spheres[w[1]], w[0], w[1]);
    out.white_gap = std::max(out.white_gap, (step - direct).norm());
    c.isolines[f] = apex_line(c.spheres[b[0]].center, c.spheres[b[1]].center, c.spheres[w[0]]);
  }
  return out;
}

std::array<LorentzPoint, 4> koenigs_dual_quad(const std::array<LorentzPoint, 4>& q) {
  Eigen::Matrix<double, 3, 2> m;
  m.col(0) = q[2] - q[0];
  m.col(1) = -(q[3] - q[1]);
  const Eigen::Vector2d st = m.colPivHouseholderQr().solve(q[1] - q[0]);
  const LorentzPoint c = q[0] + st[0] * (q[2] - q[0]);
  const double size = std::max((q[2] - q[0]).norm(), (q[3] - q[1]).norm());
  if ((m * st - (q[1] - q[0])).norm() > 1e-9 * size) throw Error(ErrorKind::DegenerateStar, "quad is not planar");
  const LorentzPoint u = (q[2] - q[0]).normalized();
  const LorentzPoint v = (q[3] - q[1]).normalized();
  const double x[4] = {(q[0] - c).dot(u), (q[1] - c).dot(v), (q[2] - c).dot(u), (q[3] - c).dot(v)};
  for (double t : x)
    if (std::abs(t) <= 1e-12 * size) throw Error(ErrorKind::DegenerateStar, "diagonals meet at a vertex");
  std::array<LorentzPoint, 4> out;
  out[0] = LorentzPoint::Zero();
  LorentzPoint e[3];
  for (int k = 0; k < 3; ++k) e[k] = (q[k + 1] - q[k]) / (x[k] * x[k + 1]);
  const double s = 1.0 / e[0].norm();
  for (int k = 0; k < 3; ++k) out[k + 1] = out[k] + s * e[k];
  return out;
}

KoenigsDual koenigs_dual_white_net(const ContactCongruence& cc) {
  const QuadGrid& g = cc.grid();
  struct QuadDual {
    std::array<VertexId, 4> whites;
    std::array<LorentzPoint, 4> dual;
  };
  std::map<int, QuadDual> quads;
  for (VertexId b : g.vertices()) {
    if (color_of(b) != Color::black || !g.is_interior(b)) continue;
    QuadDual d{g.star(b), {}};
    std::array<LorentzPoint, 4> q;
    for (int k = 0; k < 4; ++k) q[k] = cc.spheres[d.whites[k]].center;
    d.dual = koenigs_dual_quad(q);
    quads[g.index(b)] = d;
  }
  KoenigsDual out{VertexField<LorentzPoint>(g, LorentzPoint::Constant(kNaN)), 0.0};
  if (quads.empty()) return out;
  // dual edge of quad d from white a to white b
  auto edge = [](const QuadDual& d, VertexId a, VertexId b) -> std::optional<LorentzPoint> {
    for (int k = 0; k < 4; ++k) {
      const int n = (k + 1) % 4;
      if (d.whites[k] == a && d.whites[n] == b) return d.dual[n] - d.dual[k];
      if (d.whites[k] == b && d.whites[n] == a) return d.dual[k] - d.dual[n];
    }
    return std::nullopt;
  };
  std::map<int, double> scale;
  std::deque<VertexId> queue;
  const VertexId b0 = g.vertex(quads.begin()->first);
  scale[quads.begin()->first] = 1.0;
  queue.push_back(b0);
  out.centers[quads.begin()->second.whites[0]] = LorentzPoint::Zero();
  std::vector<char> placed(g.num_vertices(), 0);
  placed[g.index(quads.begin()->second.whites[0])] = 1;
  while (!queue.empty()) {
    const VertexId b = queue.front();
    queue.pop_front();
    const QuadDual& d = quads.at(g.index(b));
    const double s = scale.at(g.index(b));
    // place the quad's whites
    for (int pass = 0; pass < 2; ++pass) {
      for (int k = 0; k < 4; ++k) {
        const VertexId a = d.whites[k];
        const VertexId n = d.whites[(k + 1) % 4];
        if (placed[g.index(a)] && !placed[g.index(n)]) {
          out.centers[n] = out.centers[a] + s * (d.dual[(k + 1) % 4] - d.dual[k]);
          placed[g.index(n)] = 1;
        } else if (placed[g.index(n)] && !placed[g.index(a)]) {
          out.centers[a] = out.centers[n] - s * (d.dual[(k + 1) % 4] - d.dual[k]);
          placed[g.index(a)] = 1;
        }
      }
    }
    for (VertexId nb : {VertexId{b.i + 1, b.j + 1}, VertexId{b.i - 1, b.j + 1}, VertexId{b.i - 1, b.j - 1},
                        VertexId{b.i + 1, b.j - 1}}) {
      if (!g.contains(nb) || !quads.count(g.index(nb))) continue;
      // shared white edge
      const VertexId wa{b.i, nb.j};
      const VertexId wb{nb.i, b.j};
      const LorentzPoint e1 = s * *edge(d, wa, wb);
      const LorentzPoint e2 = *edge(quads.at(g.index(nb)), wa, wb);
      if (!scale.count(g.index(nb))) {
        scale[g.index(nb)] = e1.dot(e2) / e2.squaredNorm();
        queue.push_back(nb);
      } else {
        const LorentzPoint e3 = scale.at(g.index(nb)) * e2;
        out.gluing = std::max(out.gluing, (e1 - e3).norm() / e1.norm());
      }
    }
  }
  return out;
}

VertexField<double> other_tangent_concurrency(const ContactCongruence& cc) {
  const QuadGrid& g = cc.grid();
  const CyclePattern cp = project_cycle_pattern(cc);
  VertexField<double> out(g, kNaN);
  for (VertexId b : g.vertices()) {
    if (color_of(b) != Color::black || !g.is_interior(b)) continue;
    const auto star = g.star(b);
    const auto faces = g.incident_faces(b);
    std::vector<OrientedLine2> lines;
    for (int k = 0; k < 4; ++k)
      lines.push_back(other_common_tangent(cp.cycles[star[k]], cp.cycles[star[(k + 1) % 4]], cp.lines[faces[k]]));
    out[b] = concurrency(lines).spread;
  }
  return out;
}

}  // namespace lnet
