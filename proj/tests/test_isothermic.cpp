#include <doctest.h>

#include <cmath>

#include "lnet/isothermic.hpp"
#include "lnet/miquel.hpp"
#include "lnet/packing.hpp"
#include "support.hpp"

using namespace lnet;
using namespace lnet::test;

namespace {

double sphere_distance(const ContactCongruence& a, const ContactCongruence& b) {
  double d = 0.0;
  for (VertexId v : a.grid().vertices()) {
    d = std::max(d, (a.spheres[v].center - b.spheres[v].center).norm());
    d = std::max(d, std::abs(a.spheres[v].rho - b.spheres[v].rho));
  }
  return d;
}

std::array<OrientedSphere, 4> star_of(const ContactCongruence& cc, VertexId v) {
  std::array<OrientedSphere, 4> out;
  int k = 0;
  for (VertexId n : cc.grid().star(v)) out[k++] = cc.spheres[n];
  return out;
}

double on_sphere(const LorentzPoint& x, const OrientedSphere& s) {
  return std::abs(lorentz_norm_sq(x - s.center) - s.rho * s.rho);
}

bool parallel(const LorentzPoint& a, const LorentzPoint& b, double tol) {
  return a.cross(b).norm() <= tol * a.norm() * b.norm();
}

}  // namespace

TEST_CASE("isothermic residuals") {
  const ContactCongruence grid = hand_grid(7, 7);
  const auto planes = isothermic_residuals(grid);
  for (VertexId v : grid.grid().vertices()) {
    if (color_of(v) != Color::black || !grid.grid().is_interior(v)) {
      CHECK(std::isnan(planes[v].coplanarity));
      continue;
    }
    CHECK(planes[v].coplanarity == 0.0);
    CHECK((planes[v].normal - LorentzPoint(0, 0, 1)).norm() < 1e-15);
    CHECK(planes[v].spacelike);
  }
  ContactCongruence bumped = grid;
  bumped.spheres[{3, 2}].center[2] += 0.01;
  CHECK(isothermic_residual(bumped) > 1e-3);
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    CHECK(isothermic_residual(generate_isothermic(9, 9, seed)) < 1e-8);
    CHECK(isothermic_residual(random_null_congruence(9, 9, seed)) > 1e-3);
  }
}

TEST_CASE("sweep_black keeps exactly the isothermic null congruences null") {
  for (std::uint64_t seed = 1; seed <= 3; ++seed) {
    CHECK(null_congruence_report(sweep_black(generate_isothermic(9, 9, seed))).max_black_rho < 1e-8);
    CHECK(null_congruence_report(sweep_black(random_null_congruence(9, 9, seed))).max_black_rho > 1e-3);
  }
}

TEST_CASE("two point intersection of a white star") {
  const ContactCongruence grid = hand_grid(5, 5);
  for (VertexId b : {VertexId{2, 2}, VertexId{1, 1}, VertexId{3, 1}}) {
    const auto star = star_of(grid, b);
    const LorentzPoint apex = grid.spheres[b].center;
    const auto [p, q] = two_point_intersection(star.data(), &apex);
    CHECK((p - apex).norm() < 1e-12);
    CHECK((q - LorentzPoint(b.i, b.j, kS2 - grid_black_height(b.i))).norm() < 1e-12);
    // mirror images in the white-center plane
    CHECK(std::abs(p[2] + q[2] - kS2) < 1e-12);
  }
  for (std::uint64_t seed = 1; seed <= 4; ++seed) {
    const ContactCongruence cc = generate_isothermic(7, 7, seed);
    const ContactCongruence swept = sweep_black(cc);
    for (VertexId b : {VertexId{2, 2}, VertexId{3, 3}, VertexId{4, 2}}) {
      const auto star = star_of(cc, b);
      const LorentzPoint apex = cc.spheres[b].center;
      const auto [p, q] = two_point_intersection(star.data(), &apex);
      for (const auto& s : star) {
        CHECK(on_sphere(p, s) < 1e-9);
        CHECK(on_sphere(q, s) < 1e-9);
      }
      CHECK((p - apex).norm() < 1e-9);
      CHECK((q - swept.spheres[{b.i - 1, b.j - 1}].center).norm() < 1e-9);
    }
  }
}

TEST_CASE("contact circle of a white star") {
  const ContactCongruence grid = hand_grid(5, 5);
  const auto star = star_of(grid, {2, 2});
  const ContactCircle c = contact_circle(star.data());
  CHECK((c.circle.center - LorentzPoint(2, 2, kS2 / 2)).norm() < 1e-15);
  CHECK(c.circle.radius == doctest::Approx(kS2 / 2));
  CHECK(c.residual < 1e-15);
  for (std::uint64_t seed = 1; seed <= 4; ++seed) {
    const ContactCongruence cc = generate_isothermic(7, 7, seed);
    for (VertexId b : {VertexId{2, 2}, VertexId{3, 3}}) {
      const auto s = star_of(cc, b);
      const ContactCircle k = contact_circle(s.data());
      CHECK(k.residual < 1e-9);
      const double r2 = k.circle.radius * k.circle.radius;
      for (const auto& w : s) CHECK(std::abs(lorentz_norm_sq(k.circle.center - w.center) - r2 - w.rho * w.rho) < 1e-9);
      // the circle lies on the black null sphere; apex and center form a right triangle
      const LorentzPoint apex = cc.spheres[b].center;
      CHECK(std::abs(lorentz_norm_sq(apex - k.circle.center) + r2) < 1e-9);
      for (int i = 0; i < 4; ++i) {
        const LorentzPoint p = contact_point(s[i], s[(i + 1) % 4]);
        CHECK(std::abs(lorentz_norm_sq(p - apex)) < 1e-9);
        CHECK(std::abs(lorentz_norm_sq(p - k.circle.center) + lorentz_norm_sq(k.circle.center - apex)) < 1e-9);
      }
    }
  }
}

TEST_CASE("S-isothermic nets and the two congruences they define") {
  const ContactCongruence grid = hand_grid(7, 7);
  for (int k = 0; k < 5; ++k) {
    const ContactCongruence cc = k == 0 ? grid : generate_isothermic(9, 9, k);
    const SIsothermicNet net = to_s_isothermic(cc);
    CHECK(s_isothermic_residual(net) < 1e-9);
    const ContactCongruence a = from_s_isothermic(net, 1).congruence;
    const ContactCongruence b = from_s_isothermic(net, -1).congruence;
    const ContactCongruence orig = crop(cc, 1);
    const ContactCongruence swept = sweep_black(cc);
    const double da = std::min(sphere_distance(a, orig), sphere_distance(a, swept));
    const double db = std::min(sphere_distance(b, orig), sphere_distance(b, swept));
    CHECK(da < 1e-8);
    CHECK(db < 1e-8);
    CHECK(sphere_distance(a, b) > 1e-3);
    CHECK(contact_residual(a) < 1e-9);
    CHECK(contact_residual(b) < 1e-9);
  }
  CHECK_THROWS_AS(to_s_isothermic(random_null_congruence(7, 7, 2)), Error);
}

TEST_CASE("harmonic quads") {
  const HarmonicResidual sq = harmonic_quad_residual({LorentzPoint(0, 0, 0), LorentzPoint(1, 0, 0),
                                                      LorentzPoint(1, 1, 0), LorentzPoint(0, 1, 0)});
  CHECK(sq.concyclicity < 1e-15);
  CHECK(sq.balance < 1e-15);
  // concyclic but unbalanced
  auto on_unit = [](double t) { return LorentzPoint(std::cos(t), std::sin(t), 0.0); };
  const HarmonicResidual gen = harmonic_quad_residual({on_unit(0.0), on_unit(0.4), on_unit(2.0), on_unit(4.0)});
  CHECK(gen.concyclicity < 1e-14);
  CHECK(gen.balance > 1e-2);
  CHECK_THROWS_AS(harmonic_quad_residual({LorentzPoint(0, 0, 0), LorentzPoint(1, 0, 1), LorentzPoint(1, 1, 0),
                                          LorentzPoint(0, 1, 0)}),
                  Error);
  for (std::uint64_t seed = 1; seed <= 4; ++seed)
    CHECK(harmonic_net_residual(combined_net(to_s_isothermic(generate_isothermic(9, 9, seed)))) < 1e-9);
}

TEST_CASE("Christoffel dual of the combined net") {
  const CombinedNet grid = combined_net(to_s_isothermic(hand_grid(7, 7)));
  const DualNet d = christoffel_dual(grid);
  CHECK(d.closure < 1e-14);
  const QuadGrid& g = grid.grid();
  for (FaceId f : g.faces())
    for (VertexId v : g.face_vertices(f)) {
      const LorentzPoint e = grid.faces[f] - grid.vertices[v];
      const LorentzPoint e2 = d.net.faces[f] - d.net.vertices[v];
      CHECK((e2 - incidence_sign(v, f) * 2.0 * e).norm() < 1e-14);
    }
  for (std::uint64_t seed = 1; seed <= 4; ++seed) {
    const CombinedNet net = combined_net(to_s_isothermic(generate_isothermic(9, 9, seed)));
    const DualNet once = christoffel_dual(net);
    CHECK(once.closure < 1e-9);
    const DualNet twice = christoffel_dual(once.net);
    CHECK(twice.closure < 1e-9);
    const LorentzPoint shift = net.vertices[{0, 0}] - twice.net.vertices[{0, 0}];
    double d2 = 0.0;
    for (VertexId v : g.vertices()) d2 = std::max(d2, (twice.net.vertices[v] + shift - net.vertices[v]).norm());
    for (FaceId f : net.grid().faces()) d2 = std::max(d2, (twice.net.faces[f] + shift - net.faces[f]).norm());
    CHECK(d2 < 1e-9);
    CHECK(harmonic_net_residual(once.net) < 1e-9);
  }
}

TEST_CASE("Christoffel dual of isothermic congruences") {
  for (int k = 0; k < 5; ++k) {
    const ContactCongruence cc = k == 0 ? hand_grid(7, 7) : generate_isothermic(9, 9, k);
    const DualCongruence d = christoffel_dual_congruence(cc);
    CHECK(d.closure < 1e-9);
    CHECK(d.white_gap < 1e-10);
    CHECK(d.black_spread < 1e-9);
    CHECK(contact_residual(d.congruence) < 1e-9);
    CHECK(null_congruence_report(d.congruence).max_black_rho == 0.0);
    CHECK(isothermic_residual(d.congruence) < 1e-9);
    // the dual white spheres have reciprocal radii
    const ContactCongruence base = crop(cc, 1);
    for (VertexId v : base.grid().vertices())
      if (color_of(v) == Color::white) CHECK(d.congruence.spheres[v].rho * base.spheres[v].rho == doctest::Approx(1.0));
  }
  const DualCongruence g = christoffel_dual_congruence(hand_grid(7, 7));
  // grid: dual apexes at height +-sqrt2 above the dual white plane
  const double plane = g.congruence.spheres[{1, 0}].center[2];
  for (VertexId v : g.congruence.grid().vertices()) {
    const double h = g.congruence.spheres[v].center[2] - plane;
    if (color_of(v) == Color::white) CHECK(std::abs(h) < 1e-14);
    else CHECK(std::abs(std::abs(h) - kS2) < 1e-13);
  }
}

TEST_CASE("Koenigs dual quads") {
  const std::array<LorentzPoint, 4> square = {LorentzPoint(0, 0, 0), LorentzPoint(2, 0, 0), LorentzPoint(2, 2, 0),
                                              LorentzPoint(0, 2, 0)};
  const auto ds = koenigs_dual_quad(square);
  for (int k = 0; k < 4; ++k) {
    const LorentzPoint e = ds[(k + 1) % 4] - ds[k];
    CHECK(e.norm() == doctest::Approx(1.0));
    CHECK(parallel(e, square[(k + 1) % 4] - square[k], 1e-14));
  }
  const std::array<LorentzPoint, 4> para = {LorentzPoint(0, 0, 0), LorentzPoint(3, 0, 1), LorentzPoint(4, 2, 1),
                                            LorentzPoint(1, 2, 0)};
  const auto dp = koenigs_dual_quad(para);
  CHECK((dp[0] + dp[2] - dp[1] - dp[3]).norm() < 1e-14);
  for (int k = 0; k < 4; ++k) CHECK(parallel(dp[(k + 1) % 4] - dp[k], para[(k + 1) % 4] - para[k], 1e-12));
  CHECK(parallel(dp[2] - dp[0], para[3] - para[1], 1e-12));
  CHECK(parallel(dp[3] - dp[1], para[2] - para[0], 1e-12));
  const std::array<LorentzPoint, 4> skew = {LorentzPoint(0, 0, 0), LorentzPoint(1, 0, 0), LorentzPoint(1, 1, 1),
                                            LorentzPoint(0, 1, 0)};
  CHECK_THROWS_AS(koenigs_dual_quad(skew), Error);
}

TEST_CASE("Koenigs dual of the white-center net matches the Christoffel dual") {
  for (std::uint64_t seed = 1; seed <= 4; ++seed) {
    const ContactCongruence cc = generate_isothermic(9, 9, seed);
    const KoenigsDual k = koenigs_dual_white_net(cc);
    CHECK(k.gluing < 1e-9);
    const ContactCongruence dual = christoffel_dual_congruence(cc).congruence;
    // compare on white edges of interior quads: parallel with one global ratio
    double ratio = 0.0, spread = 0.0;
    const QuadGrid& g = cc.grid();
    for (FaceId f : g.faces()) {
      const auto w = g.face_vertices_of(f, Color::white);
      const VertexId a{w[0].i - 1, w[0].j - 1}, b{w[1].i - 1, w[1].j - 1};
      if (std::isnan(k.centers[w[0]][0]) || std::isnan(k.centers[w[1]][0])) continue;
      if (!dual.grid().contains(a) || !dual.grid().contains(b)) continue;
      const LorentzPoint e1 = k.centers[w[1]] - k.centers[w[0]];
      const LorentzPoint e2 = dual.spheres[b].center - dual.spheres[a].center;
      const double r = e1.dot(e2) / e2.squaredNorm();
      if (ratio == 0.0) ratio = r;
      spread = std::max(spread, std::abs(r - ratio) / std::abs(ratio));
      CHECK(parallel(e1, e2, 1e-9));
    }
    CHECK(ratio != 0.0);
    CHECK(spread < 1e-9);
  }
}

TEST_CASE("other common tangents of consecutive incircles") {
  for (std::uint64_t seed = 1; seed <= 3; ++seed) {
    double iso = 0.0, rnd = 0.0;
    const auto a = other_tangent_concurrency(generate_isothermic(9, 9, seed));
    for (double x : a.data())
      if (!std::isnan(x)) iso = std::max(iso, x);
    const auto b = other_tangent_concurrency(random_null_congruence(9, 9, seed));
    for (double x : b.data())
      if (!std::isnan(x)) rnd = std::max(rnd, x);
    CHECK(iso < 1e-8);
    CHECK(rnd > 1e-3);
  }
}
