#include "lnet/lift.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace lnet {

namespace {

Vec2 perp(const Vec2& u) { return Vec2(-u[1], u[0]); }

double line_distance(const OrientedIsoLine& a, const OrientedIsoLine& b) {
  return (a.base - b.base).norm() + (a.dir - b.dir).norm() + (a.ospan - b.ospan).norm();
}

struct SphereAverage {
  OrientedSphere sphere;
  double spread;
};

// Spheres on the axis over `foot` touching each incident line; average and spread.
SphereAverage attach_sphere(const Vec2& foot, const std::vector<OrientedIsoLine>& lines) {
  double h = 0.0;
  double rho = 0.0;
  std::vector<OrientedSphere> cand;
  for (const auto& l : lines) {
    cand.push_back(sphere_from_axis_and_line(foot, l));
    h += cand.back().center[2];
    rho += cand.back().rho;
  }
  h /= double(lines.size());
  rho /= double(lines.size());
  double spread = 0.0;
  for (const auto& s : cand) spread = std::max({spread, std::abs(s.center[2] - h), std::abs(s.rho - rho)});
  return {{LorentzPoint(foot[0], foot[1], h), rho}, spread};
}

}  // namespace

double scale_of(const ContactCongruence& cc) {
  Eigen::Vector3d lo = Eigen::Vector3d::Constant(std::numeric_limits<double>::infinity());
  Eigen::Vector3d hi = -lo;
  for (const auto& s : cc.spheres.data()) {
    lo = lo.cwiseMin(s.center);
    hi = hi.cwiseMax(s.center);
  }
  return std::max(1.0, (hi - lo).norm());
}

double contact_residual(const ContactCongruence& cc) {
  double worst = 0.0;
  const QuadGrid& g = cc.grid();
  for (FaceId f : g.faces())
    for (VertexId v : g.face_vertices(f))
      worst = std::max(worst, iso_line_contact_residual(cc.spheres[v], cc.isolines[f]));
  return worst;
}

double edge_contact_residual(const ContactCongruence& cc) {
  double worst = 0.0;
  const QuadGrid& g = cc.grid();
  for (VertexId v : g.vertices()) {
    for (VertexId w : {VertexId{v.i + 1, v.j}, VertexId{v.i, v.j + 1}}) {
      if (!g.contains(w)) continue;
      worst = std::max(worst, std::abs(tangential_distance_sq(cc.spheres[v], cc.spheres[w])));
    }
  }
  return worst;
}

ContactCongruence crop(const ContactCongruence& cc, int ring) {
  return {crop(cc.spheres, ring), crop(cc.isolines, ring)};
}

ContactCongruence reversed(const ContactCongruence& cc) {
  ContactCongruence out = cc;
  for (auto& s : out.spheres.data()) s = reversed(s);
  for (auto& l : out.isolines.data()) l = reversed(l);
  return out;
}

FaceField<OrientedIsoLine> refit_isolines(const VertexField<OrientedSphere>& spheres, double* worst_fit) {
  const QuadGrid& g = spheres.grid();
  FaceField<OrientedIsoLine> out(g);
  double worst = 0.0;
  for (FaceId f : g.faces()) {
    std::array<OrientedSphere, 4> s;
    const auto vs = g.face_vertices(f);
    for (int k = 0; k < 4; ++k) s[k] = spheres[vs[k]];
    const IsoLineFit fit = common_isoline(s.data(), 4);
    out[f] = fit.line;
    worst = std::max(worst, fit.fit_residual);
  }
  if (worst_fit) *worst_fit = worst;
  return out;
}

LiftBuild lift_conical(const ConicalNet& net, FaceId f0, const OrientedIsoLine& l0, double tol) {
  const double r = max_conical_residual(net);
  if (r > tol) throw Error(ErrorKind::NotConical, "reflection condition violated by " + std::to_string(r));
  const QuadGrid& g = net.centers.grid();
  const DualTree tree = dual_spanning_tree(g, f0);
  LiftBuild out{{VertexField<OrientedSphere>(g), FaceField<OrientedIsoLine>(g)}};
  auto& lines = out.congruence.isolines;
  lines[f0] = l0;
  for (std::size_t k = 1; k < tree.order.size(); ++k) {
    const FaceId f = tree.order[k];
    const FaceId parent = *tree.parent[g.index(f)];
    lines[f] = reflect_vertical(edge_reflection(net, g.shared_edge(parent, f)), lines[parent]);
  }
  for (const auto& [f, h] : tree.extra_edges) {
    const auto q = reflect_vertical(edge_reflection(net, g.shared_edge(f, h)), lines[f]);
    out.cycle_discrepancy = std::max(out.cycle_discrepancy, line_distance(q, lines[h]));
  }
  for (VertexId v : g.vertices()) {
    std::vector<OrientedIsoLine> inc;
    for (FaceId f : g.incident_faces(v)) inc.push_back(lines[f]);
    const SphereAverage a = attach_sphere(net.centers[v], inc);
    out.congruence.spheres[v] = a.sphere;
    out.sphere_spread = std::max(out.sphere_spread, a.spread);
  }
  return out;
}

LiftBuild lorentz_lift(const CirclePattern& p, FaceId f0, const OrientedIsoLine& l0, double tol) {
  const ConicalNet net = centers_of(p);
  const double miss = (l0.trace() - p.points[f0]).norm();
  if (miss > tol * diameter(net)) {
    throw Error(ErrorKind::InitialLineMismatch, "initial line misses the face point by " + std::to_string(miss));
  }
  return lift_conical(net, f0, l0, tol);
}

OrientedIsoLine initial_line(const Vec2& p0, const Vec2& axis, double height, int side) {
  const Vec2 delta = axis - p0;
  const double r2 = delta.squaredNorm();
  if (height * height > r2 * (1.0 + 1e-12)) {
    throw Error(ErrorKind::DegenerateAxis, "requested height exceeds the circle radius");
  }
  const double across = std::sqrt(std::max(0.0, r2 - height * height));
  const Vec2 u = r2 > 0 ? Vec2((height * delta + across * perp(delta)) / r2) : Vec2(1, 0);
  return make_iso_line(LorentzPoint(p0[0], p0[1], 0.0), LorentzPoint(u[0], u[1], 1.0), side, 1e-9);
}

OrientedIsoLine initial_line(const CirclePattern& p, FaceId f0, double height, int side) {
  const QuadGrid& g = p.circles.grid();
  VertexId v = g.face_vertices(f0)[0];
  for (VertexId u : g.face_vertices(f0))
    if (p.circles[u].radius > p.circles[v].radius) v = u;
  return initial_line(p.points[f0], p.circles[v].center, height, side);
}

OrientedIsoLine initial_line(const ConicalNet& net, FaceId f0, double height, int side) {
  const QuadGrid& g = net.centers.grid();
  Vec2 mid = Vec2::Zero();
  for (VertexId v : g.face_vertices(f0)) mid += 0.25 * net.centers[v];
  return initial_line(mid, net.centers[g.face_vertices(f0)[0]], height, side);
}

CirclePattern project_circle_pattern(const ContactCongruence& cc) {
  const QuadGrid& g = cc.grid();
  CirclePattern p{VertexField<Circle2>(g), FaceField<Vec2>(g)};
  for (VertexId v : g.vertices()) {
    const auto& s = cc.spheres[v];
    p.circles[v] = {s.center.head<2>(), std::sqrt(s.rho * s.rho + s.center[2] * s.center[2])};
  }
  for (FaceId f : g.faces()) p.points[f] = cc.isolines[f].trace();
  return p;
}

CyclePattern project_cycle_pattern(const ContactCongruence& cc) {
  const QuadGrid& g = cc.grid();
  CyclePattern p{VertexField<Cycle2>(g), FaceField<OrientedLine2>(g)};
  for (VertexId v : g.vertices()) p.cycles[v] = {cc.spheres[v].center.head<2>(), cc.spheres[v].rho};
  for (FaceId f : g.faces()) {
    const auto& l = cc.isolines[f];
    const Vec2 n = l.ospan.head<2>();
    p.lines[f] = {n, n.dot(l.base.head<2>())};
  }
  return p;
}

ConicalNet projected_centers(const ContactCongruence& cc) {
  ConicalNet net{VertexField<Vec2>(cc.grid())};
  for (VertexId v : cc.grid().vertices()) net.centers[v] = cc.spheres[v].center.head<2>();
  return net;
}

VertexField<LorentzPoint> center_net(const ContactCongruence& cc) {
  VertexField<LorentzPoint> m(cc.grid());
  for (VertexId v : cc.grid().vertices()) m[v] = cc.spheres[v].center;
  return m;
}

namespace {

FacePlaneFit fit_face(const VertexField<LorentzPoint>& m, FaceId f) {
  const auto vs = m.grid().face_vertices(f);
  Eigen::Matrix<double, 4, 3> pts;
  for (int k = 0; k < 4; ++k) pts.row(k) = m[vs[k]].transpose();
  const Eigen::RowVector3d centroid = pts.colwise().mean();
  const Eigen::Matrix<double, 4, 3> centered = pts.rowwise() - centroid;
  Eigen::JacobiSVD<Eigen::Matrix<double, 4, 3>> svd(centered, Eigen::ComputeFullV);
  const Eigen::Vector3d en = svd.matrixV().col(2);
  FacePlaneFit fit;
  for (int k = 0; k < 4; ++k) fit.coplanarity = std::max(fit.coplanarity, std::abs(centered.row(k).dot(en)));
  fit.normal = lorentz_gram() * en;
  fit.isotropy = std::abs(lorentz_norm_sq(fit.normal));
  return fit;
}

}  // namespace

FaceField<FacePlaneFit> center_net_residuals(const VertexField<LorentzPoint>& centers) {
  FaceField<FacePlaneFit> out(centers.grid());
  for (FaceId f : centers.grid().faces()) out[f] = fit_face(centers, f);
  return out;
}

LiftBuild congruence_from_center_net(const VertexField<LorentzPoint>& m, FaceId f0, const OrientedIsoLine& l0,
                                     double tol) {
  const QuadGrid& g = m.grid();
  const FaceField<FacePlaneFit> fits = center_net_residuals(m);
  double scale = 1.0;
  for (const auto& c : m.data()) scale = std::max(scale, c.norm());
  for (FaceId f : g.faces()) {
    if (fits[f].coplanarity > tol * scale || fits[f].isotropy > tol) {
      throw Error(ErrorKind::NotIsotropicConjugate,
                  "face (" + std::to_string(f.i) + "," + std::to_string(f.j) + ") is not an isotropic plane");
    }
  }
  for (VertexId v : g.face_vertices(f0)) {
    if (std::abs(lorentz_dot(m[v] - l0.base, l0.dir)) > tol * scale) {
      throw Error(ErrorKind::InitialLineMismatch, "initial line not in the isotropic plane of the first face");
    }
  }
  auto face_dir = [&](FaceId f) {
    LorentzPoint n = fits[f].normal;
    n /= n[2];
    const Vec2 u = n.head<2>().normalized();
    return LorentzPoint(u[0], u[1], 1.0);
  };
  auto rho_of = [&](VertexId v, const OrientedIsoLine& l) {
    return (m[v].head<2>() - l.base.head<2>()).dot(l.ospan.head<2>());
  };
  auto propagate = [&](FaceId from, FaceId to, const OrientedIsoLine& l) {
    const Edge e = g.shared_edge(from, to);
    const LorentzPoint a = m[e.a];
    const LorentzPoint b = m[e.b];
    Eigen::Matrix<double, 3, 2> sys;
    sys.col(0) = l.dir;
    sys.col(1) = a - b;
    const Eigen::Vector2d st = sys.colPivHouseholderQr().solve(a - l.base);
    const LorentzPoint q = l.base + st[0] * l.dir;
    const double ra = rho_of(e.a, l);
    const double rb = rho_of(e.b, l);
    const OrientedSphere probe = std::abs(ra) >= std::abs(rb) ? OrientedSphere{a, ra} : OrientedSphere{b, rb};
    const OrientedIsoLine cand = make_iso_line(q, face_dir(to), 1, 1e-6);
    const OrientedIsoLine other = reversed(cand);
    return iso_line_contact_residual(probe, cand) <= iso_line_contact_residual(probe, other) ? cand : other;
  };
  const DualTree tree = dual_spanning_tree(g, f0);
  LiftBuild out{{VertexField<OrientedSphere>(g), FaceField<OrientedIsoLine>(g)}};
  auto& lines = out.congruence.isolines;
  lines[f0] = l0;
  for (std::size_t k = 1; k < tree.order.size(); ++k) {
    const FaceId f = tree.order[k];
    const FaceId parent = *tree.parent[g.index(f)];
    lines[f] = propagate(parent, f, lines[parent]);
  }
  for (const auto& [f, h] : tree.extra_edges)
    out.cycle_discrepancy = std::max(out.cycle_discrepancy, line_distance(propagate(f, h, lines[f]), lines[h]));
  for (VertexId v : g.vertices()) {
    double sum = 0.0;
    const auto faces = g.incident_faces(v);
    for (FaceId f : faces) sum += rho_of(v, lines[f]);
    const double rho = sum / double(faces.size());
    for (FaceId f : faces) out.sphere_spread = std::max(out.sphere_spread, std::abs(rho_of(v, lines[f]) - rho));
    out.congruence.spheres[v] = {m[v], rho};
  }
  return out;
}

CycloNet cyclographic_lift(const ContactCongruence& cc) {
  const QuadGrid& g = cc.grid();
  CycloNet net{VertexField<CycloPoint>(g), FaceField<CycloPlane>(g)};
  for (VertexId v : g.vertices()) net.points[v] = to_cyclo(cc.spheres[v]);
  for (FaceId f : g.faces()) {
    const auto& l = cc.isolines[f];
    net.planes[f] = {CycloPoint(l.base[0], l.base[1], l.base[2], 0.0), l.plane_direction(0), l.plane_direction(1)};
  }
  return net;
}

double cyclo_lift_residual(const CycloNet& net) {
  const QuadGrid& g = net.points.grid();
  double worst = 0.0;
  for (FaceId f : g.faces()) {
    const CycloPlane& pl = net.planes[f];
    worst = std::max({worst, std::abs(cyclo_dot(pl.d1, pl.d1)), std::abs(cyclo_dot(pl.d1, pl.d2)),
                      std::abs(cyclo_dot(pl.d2, pl.d2))});
    Eigen::Matrix<double, 4, 2> basis;
    basis.col(0) = pl.d1;
    basis.col(1) = pl.d2;
    const Eigen::HouseholderQR<Eigen::Matrix<double, 4, 2>> qr(basis);
    const Eigen::Matrix<double, 4, 2> q = qr.householderQ() * Eigen::Matrix<double, 4, 2>::Identity();
    for (VertexId v : g.face_vertices(f)) {
      const CycloPoint d = net.points[v] - pl.base;
      worst = std::max(worst, (d - q * (q.transpose() * d)).norm());
    }
  }
  return worst;
}

OrigamiMap origami_map(const ConicalNet& net, FaceId f0) {
  const QuadGrid& g = net.centers.grid();
  struct Affine {
    Eigen::Matrix2d a;
    Vec2 t;
  };
  std::vector<Affine> r(g.num_faces(), {Eigen::Matrix2d::Identity(), Vec2::Zero()});
  const DualTree tree = dual_spanning_tree(g, f0);
  for (std::size_t k = 1; k < tree.order.size(); ++k) {
    const FaceId f = tree.order[k];
    const FaceId parent = *tree.parent[g.index(f)];
    const VerticalReflection refl = edge_reflection(net, g.shared_edge(parent, f));
    const Eigen::Matrix2d lin = 2.0 * refl.dir * refl.dir.transpose() - Eigen::Matrix2d::Identity();
    const Vec2 off = refl.point - lin * refl.point;
    const Affine& pr = r[g.index(parent)];
    r[g.index(f)] = {pr.a * lin, pr.a * off + pr.t};
  }
  OrigamiMap out{VertexField<Vec2>(g)};
  for (VertexId v : g.vertices()) {
    const auto faces = g.incident_faces(v);
    const Affine& first = r[g.index(faces.front())];
    out.folded[v] = first.a * net.centers[v] + first.t;
    for (FaceId f : faces) {
      const Affine& rf = r[g.index(f)];
      out.spread = std::max(out.spread, (rf.a * net.centers[v] + rf.t - out.folded[v]).norm());
    }
  }
  return out;
}

double origami_cyclift_residual(const ContactCongruence& cc, FaceId f0) {
  const QuadGrid& g = cc.grid();
  const OrigamiMap o = origami_map(projected_centers(cc), f0);
  auto target = [&](VertexId v) { return Vec2(cc.spheres[v].center[2], cc.spheres[v].rho); };
  const auto base = g.face_vertices(f0);
  Vec2 mo = Vec2::Zero();
  Vec2 mt = Vec2::Zero();
  for (VertexId v : base) {
    mo += o.folded[v] / 4.0;
    mt += target(v) / 4.0;
  }
  Eigen::Matrix2d h = Eigen::Matrix2d::Zero();
  for (VertexId v : base) h += (target(v) - mt) * (o.folded[v] - mo).transpose();
  Eigen::JacobiSVD<Eigen::Matrix2d> svd(h, Eigen::ComputeFullU | Eigen::ComputeFullV);
  double best = std::numeric_limits<double>::infinity();
  for (double flip : {1.0, -1.0}) {
    const Eigen::Matrix2d d = Eigen::Vector2d(1.0, flip).asDiagonal();
    const Eigen::Matrix2d q = svd.matrixU() * d * svd.matrixV().transpose();
    double worst = 0.0;
    for (VertexId v : g.vertices()) worst = std::max(worst, (q * (o.folded[v] - mo) + mt - target(v)).norm());
    best = std::min(best, worst);
  }
  return best;
}

}  // namespace lnet
