#include "lnet/packing.hpp"

#include <cmath>
#include <deque>
#include <limits>
#include <random>
#include <string>

namespace lnet {

namespace {

const double kSqrt2 = std::sqrt(2.0);

double line_point_distance(const Vec2& a, const Vec2& b, const Vec2& x) {
  const Vec2 d = (b - a).normalized();
  const Vec2 r = x - a;
  return std::abs(d[0] * r[1] - d[1] * r[0]);
}

OrientedIsoLine line_through_apexes(const LorentzPoint& a, const LorentzPoint& b, const OrientedSphere& probe) {
  LorentzPoint d = b - a;
  if (d[2] < 0) d = -d;
  const OrientedIsoLine l = make_iso_line(a, d, 1, 1e-7);
  const OrientedIsoLine r = reversed(l);
  return iso_line_contact_residual(probe, l) <= iso_line_contact_residual(probe, r) ? l : r;
}

}  // namespace

NullReport null_congruence_report(const ContactCongruence& cc) {
  NullReport r{0.0, std::numeric_limits<double>::infinity()};
  for (VertexId v : cc.grid().vertices()) {
    const double a = std::abs(cc.spheres[v].rho);
    if (color_of(v) == Color::black) r.max_black_rho = std::max(r.max_black_rho, a);
    else r.min_white_rho = std::min(r.min_white_rho, a);
  }
  return r;
}

double incircular_residual(const IncircularNet& inc) {
  const QuadGrid& g = inc.grid();
  double worst = 0.0;
  for (VertexId w : g.vertices()) {
    if (color_of(w) != Color::white) continue;
    for (FaceId f : g.incident_faces(w)) {
      const auto b = g.face_vertices_of(f, Color::black);
      const double d = line_point_distance(inc.centers[b[0]], inc.centers[b[1]], inc.centers[w]);
      worst = std::max(worst, std::abs(d - inc.incircle_radius[w]));
    }
  }
  return worst;
}

ContactCongruence null_lift(const IncircularNet& inc, double height0, int sign0, FaceId f0) {
  const auto b = inc.grid().face_vertices_of(f0, Color::black);
  const Vec2 c0 = inc.centers[b[0]];
  const Vec2 u = (inc.centers[b[1]] - c0).normalized();
  const OrientedIsoLine l0 = make_iso_line(LorentzPoint(c0[0], c0[1], height0), LorentzPoint(u[0], u[1], 1.0), sign0);
  return lift_conical(inc.conical(), f0, l0).congruence;
}

IncircularNet incircular_from_packing(const CirclePattern& p, double tol) {
  const QuadGrid& g = p.circles.grid();
  const ConicalNet net = centers_of(p);
  const double scale = diameter(net);
  const double defect = circle_packing_residual(p);
  if (defect > tol * scale) {
    throw Error(ErrorKind::NotCirclePacking, "black circles miss contact by " + std::to_string(defect));
  }
  IncircularNet inc{net.centers, VertexField<double>(g, std::numeric_limits<double>::quiet_NaN())};
  for (VertexId w : g.vertices()) {
    if (color_of(w) != Color::white) continue;
    std::vector<double> d;
    for (FaceId f : g.incident_faces(w)) {
      const auto b = g.face_vertices_of(f, Color::black);
      d.push_back(line_point_distance(inc.centers[b[0]], inc.centers[b[1]], inc.centers[w]));
    }
    double mean = 0.0;
    for (double x : d) mean += x / double(d.size());
    for (double x : d) {
      if (std::abs(x - mean) > tol * scale) {
        throw Error(ErrorKind::NotIncircular, "white center is not equidistant from its quad sides");
      }
    }
    inc.incircle_radius[w] = mean;
  }
  return inc;
}

GridFixture generate_grid(int width, int height) {
  QuadGrid g(width, height);
  IncircularNet inc{VertexField<Vec2>(g), VertexField<double>(g, std::numeric_limits<double>::quiet_NaN())};
  for (VertexId v : g.vertices()) {
    inc.centers[v] = Vec2(v.i, v.j);
    if (color_of(v) == Color::white) inc.incircle_radius[v] = kSqrt2 / 2;
  }
  ContactCongruence cc = null_lift(inc, 0.0, 1);
  for (VertexId v : g.vertices())
    if (color_of(v) == Color::black) cc.spheres[v].rho = 0.0;
  return {inc, cc};
}

ContactCongruence generate_isothermic(int width, int height, std::uint64_t seed, double strength) {
  const ContactCongruence grid = generate_grid(width, height).congruence;
  const MobiusTransform t = sample_mobius_for(grid, seed, strength);
  return apply_mobius(t, grid);
}

ContactCongruence random_null_congruence(int width, int height, std::uint64_t seed, double jitter) {
  const QuadGrid big(width + 2, height + 2);
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  VertexField<LorentzPoint> apex(big, LorentzPoint::Constant(std::numeric_limits<double>::quiet_NaN()));
  auto nominal_height = [](int i) { return (((i - 1) % 2) + 2) % 2 == 0 ? 0.0 : kSqrt2; };

  // isotropic step from a toward the nominal position of target
  auto step = [&](const LorentzPoint& a, VertexId from, VertexId to) {
    const Vec2 d(to.i - from.i, to.j - from.j);
    const double theta = std::atan2(d[1], d[0]) + 0.5 * jitter * unit(rng);
    const double len = kSqrt2 * (1.0 + jitter * unit(rng));
    const double sgn = nominal_height(to.i) > nominal_height(from.i) ? 1.0 : -1.0;
    return LorentzPoint(a[0] + len * std::cos(theta), a[1] + len * std::sin(theta), a[2] + sgn * len);
  };

  // rows 0 and 1 form a zigzag chain of isotropic steps
  apex[{0, 0}] = LorentzPoint(-1, -1, nominal_height(0));
  for (int i = 1; i < big.width(); ++i) {
    const VertexId from{i - 1, (i - 1) % 2};
    const VertexId to{i, i % 2};
    apex[to] = step(apex[from], from, to);
  }
  for (int j = 2; j < big.height(); ++j) {
    for (int i = j % 2; i < big.width(); i += 2) {
      const VertexId v{i, j};
      const VertexId left{i - 1, j - 1};
      const VertexId right{i + 1, j - 1};
      if (!big.contains(left) || !big.contains(right)) {
        const VertexId nb = big.contains(left) ? left : right;
        apex[v] = step(apex[nb], nb, v);
        continue;
      }
      // the bottom apex mirrored in the vertical plane through left and right lies
      // on both light cones; jitter moves it along their intersection
      const LorentzPoint l = apex[left];
      const LorentzPoint r = apex[right];
      const VerticalReflection m = VerticalReflection::through(l.head<2>(), r.head<2>());
      const LorentzPoint dir0 = reflect_vertical(m, apex[{i, j - 2}]) - l;
      const double theta = std::atan2(dir0[1], dir0[0]) + 0.3 * jitter * unit(rng);
      const LorentzPoint e(std::cos(theta), std::sin(theta), dir0[2] >= 0 ? 1.0 : -1.0);
      const LorentzPoint lr = l - r;
      const double s = -lorentz_norm_sq(lr) / (2.0 * lorentz_dot(lr, e));
      apex[v] = l + s * e;
    }
  }

  VertexField<OrientedSphere> spheres(big);
  for (VertexId v : big.vertices())
    if (color_of(v) == Color::black) spheres[v] = {apex[v], 0.0};
  std::vector<char> done(big.num_vertices(), 0);
  for (VertexId w : big.vertices()) {
    if (color_of(w) != Color::white || !big.is_interior(w)) continue;
    Eigen::Matrix4d a;
    Eigen::Vector4d rhs;
    int k = 0;
    for (VertexId b : big.star(w)) {
      const LorentzPoint x = apex[b];
      a.row(k) << -2 * x[0], -2 * x[1], 2 * x[2], 1.0;
      rhs[k] = -lorentz_norm_sq(x);
      ++k;
    }
    const Eigen::Vector4d sol = a.fullPivLu().solve(rhs);
    const LorentzPoint c = sol.head<3>();
    const double rho2 = lorentz_norm_sq(c) - sol[3];
    if (!(rho2 > 0)) throw Error(ErrorKind::DegenerateSpheres, "white sphere through the apexes is not timelike");
    spheres[w] = {c, std::sqrt(rho2)};
    done[big.index(w)] = 1;
  }
  // orient the white spheres so that neighbours across a face are in oriented contact
  std::vector<char> oriented(big.num_vertices(), 0);
  std::deque<VertexId> queue;
  const VertexId seed_white{2, 1};
  oriented[big.index(seed_white)] = 1;
  queue.push_back(seed_white);
  while (!queue.empty()) {
    const VertexId w = queue.front();
    queue.pop_front();
    for (VertexId x : {VertexId{w.i + 1, w.j + 1}, VertexId{w.i - 1, w.j + 1}, VertexId{w.i - 1, w.j - 1},
                       VertexId{w.i + 1, w.j - 1}}) {
      if (!big.contains(x) || !done[big.index(x)] || oriented[big.index(x)]) continue;
      const double plus = std::abs(tangential_distance_sq(spheres[w], spheres[x]));
      const double minus = std::abs(tangential_distance_sq(spheres[w], reversed(spheres[x])));
      if (minus < plus) spheres[x] = reversed(spheres[x]);
      oriented[big.index(x)] = 1;
      queue.push_back(x);
    }
  }

  const QuadGrid g(width, height);
  ContactCongruence cc{VertexField<OrientedSphere>(g), FaceField<OrientedIsoLine>(g)};
  for (VertexId v : g.vertices()) cc.spheres[v] = spheres[{v.i + 1, v.j + 1}];
  // the first white may have been oriented arbitrarily; match the grid convention
  const VertexId w0{1, 0};
  if ((cc.spheres[w0].rho > 0) != (w0.i % 2 != 0)) cc = reversed(cc);
  for (FaceId f : g.faces()) {
    const auto b = g.face_vertices_of(f, Color::black);
    const auto w = g.face_vertices_of(f, Color::white);
    cc.isolines[f] = line_through_apexes(cc.spheres[b[0]].center, cc.spheres[b[1]].center, cc.spheres[w[0]]);
  }
  return cc;
}

}  // namespace lnet
