#include "lnet/patterns.hpp"

#include <cmath>
#include <limits>
#include <random>

namespace lnet {

namespace {

Vec2 perp(const Vec2& u) { return Vec2(-u[1], u[0]); }

template <class F>
double max_over_incidences(const QuadGrid& g, F&& defect) {
  double worst = 0.0;
  for (FaceId f : g.faces())
    for (VertexId v : g.face_vertices(f)) worst = std::max(worst, defect(f, v));
  return worst;
}

void require_conical(const ConicalNet& net, double tol) {
  const double r = max_conical_residual(net);
  if (r > tol) {
    throw Error(ErrorKind::NotConical, "reflection condition violated by " + std::to_string(r));
  }
}

}  // namespace

VerticalReflection edge_reflection(const ConicalNet& net, const Edge& e) {
  return VerticalReflection::through(net.centers[e.a], net.centers[e.b]);
}

OrientedLine2 reflect(const VerticalReflection& r, const OrientedLine2& l) {
  const Vec2 n = r.apply_linear(l.normal);
  const Vec2 x = r.apply(l.foot());
  return {n, n.dot(x)};
}

double conical_residual(const ConicalNet& net, VertexId v) {
  const auto nb = net.centers.grid().star(v);
  Eigen::Matrix2d a = Eigen::Matrix2d::Identity();
  for (VertexId w : nb) {
    const Vec2 d = (net.centers[w] - net.centers[v]).normalized();
    const Eigen::Matrix2d refl = 2.0 * d * d.transpose() - Eigen::Matrix2d::Identity();
    a = refl * a;
  }
  return (a - Eigen::Matrix2d::Identity()).norm();
}

VertexField<double> conical_residuals(const ConicalNet& net) {
  const QuadGrid& g = net.centers.grid();
  VertexField<double> out(g, std::numeric_limits<double>::quiet_NaN());
  for (VertexId v : g.vertices())
    if (g.is_interior(v)) out[v] = conical_residual(net, v);
  return out;
}

double max_conical_residual(const ConicalNet& net) {
  double worst = 0.0;
  const QuadGrid& g = net.centers.grid();
  for (VertexId v : g.vertices())
    if (g.is_interior(v)) worst = std::max(worst, conical_residual(net, v));
  return worst;
}

double diameter(const ConicalNet& net) {
  Eigen::Vector2d lo = Vec2::Constant(std::numeric_limits<double>::infinity());
  Eigen::Vector2d hi = -lo;
  for (const Vec2& c : net.centers.data()) {
    lo = lo.cwiseMin(c);
    hi = hi.cwiseMax(c);
  }
  return std::max(1.0, (hi - lo).norm());
}

PatternBuild<CirclePattern> circle_pattern_from_conical(const ConicalNet& net, FaceId f0, const Vec2& p0,
                                                        double tol) {
  require_conical(net, tol);
  const QuadGrid& g = net.centers.grid();
  const DualTree tree = dual_spanning_tree(g, f0);
  PatternBuild<CirclePattern> out{{VertexField<Circle2>(g), FaceField<Vec2>(g)}, {}};
  auto& pts = out.pattern.points;
  pts[f0] = p0;
  for (std::size_t k = 1; k < tree.order.size(); ++k) {
    const FaceId f = tree.order[k];
    const FaceId parent = *tree.parent[g.index(f)];
    pts[f] = edge_reflection(net, g.shared_edge(parent, f)).apply(pts[parent]);
  }
  for (const auto& [f, h] : tree.extra_edges) {
    const Vec2 q = edge_reflection(net, g.shared_edge(f, h)).apply(pts[f]);
    out.report.cycle_discrepancy = std::max(out.report.cycle_discrepancy, (q - pts[h]).norm());
  }
  for (VertexId v : g.vertices()) {
    const Vec2 c = net.centers[v];
    const auto faces = g.incident_faces(v);
    double sum = 0.0;
    for (FaceId f : faces) sum += (pts[f] - c).norm();
    const double r = sum / double(faces.size());
    for (FaceId f : faces)
      out.report.radius_spread = std::max(out.report.radius_spread, std::abs((pts[f] - c).norm() - r));
    out.pattern.circles[v] = {c, r};
  }
  return out;
}

PatternBuild<CyclePattern> cycle_pattern_from_conical(const ConicalNet& net, FaceId f0,
                                                      const OrientedLine2& l0, double tol) {
  require_conical(net, tol);
  const QuadGrid& g = net.centers.grid();
  const DualTree tree = dual_spanning_tree(g, f0);
  PatternBuild<CyclePattern> out{{VertexField<Cycle2>(g), FaceField<OrientedLine2>(g)}, {}};
  auto& lines = out.pattern.lines;
  lines[f0] = {l0.normal.normalized(), l0.offset / l0.normal.norm()};
  for (std::size_t k = 1; k < tree.order.size(); ++k) {
    const FaceId f = tree.order[k];
    const FaceId parent = *tree.parent[g.index(f)];
    lines[f] = reflect(edge_reflection(net, g.shared_edge(parent, f)), lines[parent]);
  }
  for (const auto& [f, h] : tree.extra_edges) {
    const OrientedLine2 q = reflect(edge_reflection(net, g.shared_edge(f, h)), lines[f]);
    const double d = (q.normal - lines[h].normal).norm() + std::abs(q.offset - lines[h].offset);
    out.report.cycle_discrepancy = std::max(out.report.cycle_discrepancy, d);
  }
  for (VertexId v : g.vertices()) {
    const Vec2 c = net.centers[v];
    const auto faces = g.incident_faces(v);
    double sum = 0.0;
    for (FaceId f : faces) sum += lines[f].signed_distance(c);
    const double r = sum / double(faces.size());
    for (FaceId f : faces)
      out.report.radius_spread = std::max(out.report.radius_spread, std::abs(lines[f].signed_distance(c) - r));
    out.pattern.cycles[v] = {c, r};
  }
  return out;
}

ConicalNet centers_of(const CirclePattern& p) {
  ConicalNet net{VertexField<Vec2>(p.circles.grid())};
  for (VertexId v : p.circles.grid().vertices()) net.centers[v] = p.circles[v].center;
  return net;
}

ConicalNet centers_of(const CyclePattern& p) {
  ConicalNet net{VertexField<Vec2>(p.cycles.grid())};
  for (VertexId v : p.cycles.grid().vertices()) net.centers[v] = p.cycles[v].center;
  return net;
}

double circle_pattern_residual(const CirclePattern& p) {
  return max_over_incidences(p.circles.grid(), [&](FaceId f, VertexId v) {
    return std::abs((p.points[f] - p.circles[v].center).norm() - p.circles[v].radius);
  });
}

double cycle_pattern_residual(const CyclePattern& p) {
  return max_over_incidences(p.cycles.grid(), [&](FaceId f, VertexId v) {
    return std::abs(p.lines[f].signed_distance(p.cycles[v].center) - p.cycles[v].radius);
  });
}

double circle_packing_residual(const CirclePattern& p) {
  const QuadGrid& g = p.circles.grid();
  double worst = 0.0;
  for (FaceId f : g.faces()) {
    const auto b = g.face_vertices_of(f, Color::black);
    const Circle2& c0 = p.circles[b[0]];
    const Circle2& c1 = p.circles[b[1]];
    const double d = (c0.center - c1.center).norm();
    const double ext = std::abs(d - (c0.radius + c1.radius));
    const double in = std::abs(d - std::abs(c0.radius - c1.radius));
    worst = std::max(worst, std::min(ext, in));
  }
  return worst;
}

OrientedLine2 other_common_tangent(const Cycle2& a, const Cycle2& b, const OrientedLine2& known) {
  const Vec2 delta = a.center - b.center;
  const double m2 = delta.squaredNorm();
  const double k = (a.radius - b.radius) / m2;
  const double disc = 1.0 / m2 - k * k;
  if (m2 == 0.0 || disc < -1e-12 / std::max(1.0, m2)) {
    throw Error(ErrorKind::DegenerateSpheres, "cycles without common oriented tangents");
  }
  const double s = std::sqrt(std::max(0.0, disc));
  const Vec2 n1 = k * delta + s * perp(delta);
  const Vec2 n2 = k * delta - s * perp(delta);
  const Vec2 n = (n1 - known.normal).norm() >= (n2 - known.normal).norm() ? n1 : n2;
  return {n, n.dot(a.center) - a.radius};
}

Concurrency concurrency(const std::vector<OrientedLine2>& lines) {
  Eigen::MatrixXd a(lines.size(), 2);
  Eigen::VectorXd rhs(lines.size());
  for (std::size_t k = 0; k < lines.size(); ++k) {
    a.row(k) = lines[k].normal.transpose();
    rhs[k] = lines[k].offset;
  }
  const Vec2 x = a.colPivHouseholderQr().solve(rhs);
  double spread = 0.0;
  for (const auto& l : lines) spread = std::max(spread, std::abs(l.signed_distance(x)));
  return {x, spread};
}

ConicalNet random_conical_net(int width, int height, std::uint64_t seed, double jitter) {
  QuadGrid g(width, height);
  ConicalNet net{VertexField<Vec2>(g)};
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  auto lattice = [&](int i, int j) { return Vec2(i + jitter * unit(rng), j + jitter * unit(rng)); };
  for (int j = 0; j < std::min(2, height); ++j)
    for (int i = 0; i < width; ++i) net.centers[{i, j}] = lattice(i, j);
  auto angle = [&](VertexId from, VertexId to) {
    const Vec2 d = net.centers[to] - net.centers[from];
    return std::atan2(d[1], d[0]);
  };
  for (int j = 1; j + 1 < height; ++j) {
    net.centers[{0, j + 1}] = lattice(0, j + 1);
    net.centers[{width - 1, j + 1}] = lattice(width - 1, j + 1);
    for (int i = 1; i + 1 < width; ++i) {
      const VertexId v{i, j};
      const double theta = angle(v, {i + 1, j}) + angle(v, {i - 1, j}) - angle(v, {i, j - 1});
      Vec2 dir(std::cos(theta), std::sin(theta));
      const Vec2 incoming = net.centers[v] - net.centers[{i, j - 1}];
      if (dir.dot(incoming) < 0) dir = -dir;
      net.centers[{i, j + 1}] = net.centers[v] + (1.0 + jitter * unit(rng)) * dir;
    }
  }
  return net;
}

}  // namespace lnet
