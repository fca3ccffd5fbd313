#include <doctest.h>

#include "support.hpp"

using namespace lnet;
using namespace lnet::test;

namespace {

ConicalNet lattice(int w, int h) {
  QuadGrid g(w, h);
  ConicalNet net{VertexField<Vec2>(g)};
  for (VertexId v : g.vertices()) net.centers[v] = Vec2(v.i, v.j);
  return net;
}

double congruence_distance(const ContactCongruence& a, const ContactCongruence& b) {
  double d = 0.0;
  for (VertexId v : a.grid().vertices()) {
    d = std::max(d, (a.spheres[v].center - b.spheres[v].center).norm());
    d = std::max(d, std::abs(a.spheres[v].rho - b.spheres[v].rho));
  }
  for (FaceId f : a.grid().faces()) {
    d = std::max(d, (a.isolines[f].base - b.isolines[f].base).norm());
    d = std::max(d, (a.isolines[f].dir - b.isolines[f].dir).norm());
    d = std::max(d, (a.isolines[f].ospan - b.isolines[f].ospan).norm());
  }
  return d;
}

OrientedIsoLine grid_line() { return make_iso_line(LorentzPoint::Zero(), LorentzPoint(1, 1, kS2), 1); }

}  // namespace

TEST_CASE("hand-built grid is a contact congruence") {
  const ContactCongruence cc = hand_grid(6, 5);
  for (FaceId f : cc.grid().faces())
    for (VertexId v : cc.grid().face_vertices(f))
      CHECK(contact_by_orthogonality(cc.spheres[v], cc.isolines[f]) < 1e-14);
  CHECK(contact_residual(cc) < 1e-14);
  CHECK(edge_contact_residual(cc) < 1e-14);
}

TEST_CASE("lifting the square lattice reproduces the grid fixture") {
  const LiftBuild b = lift_conical(lattice(6, 5), {0, 0}, grid_line());
  CHECK(congruence_distance(b.congruence, hand_grid(6, 5)) < 1e-14);
  CHECK(b.cycle_discrepancy < 1e-14);
  CHECK(b.sphere_spread < 1e-14);
}

TEST_CASE("projection of the grid fixture") {
  const ContactCongruence cc = hand_grid(5, 5);
  const CirclePattern p = project_circle_pattern(cc);
  for (VertexId v : cc.grid().vertices()) {
    const double r = p.circles[v].radius;
    if (color_of(v) == Color::white) CHECK(r == doctest::Approx(1.0));
    else CHECK(r == doctest::Approx(v.i % 2 == 0 ? 0.0 : kS2));
  }
  for (FaceId f : cc.grid().faces()) {
    const auto b = cc.grid().face_vertices_of(f, Color::black);
    const VertexId even = b[0].i % 2 == 0 ? b[0] : b[1];
    CHECK((p.points[f] - Vec2(even.i, even.j)).norm() < 1e-15);
  }
  CHECK(circle_pattern_residual(p) < 1e-14);
  CHECK(circle_packing_residual(p) < 1e-14);
  const CyclePattern cp = project_cycle_pattern(cc);
  CHECK(cycle_pattern_residual(cp) < 1e-14);
  CHECK(cp.cycles[{1, 0}].radius == doctest::Approx(kS2 / 2));
  CHECK(cp.cycles[{0, 1}].radius == doctest::Approx(-kS2 / 2));
}

TEST_CASE("lift then project is the identity on random circle patterns") {
  for (std::uint64_t seed = 1; seed <= 6; ++seed) {
    const ConicalNet net = random_conical_net(7, 7, seed);
    const FaceId f0{3, 2};
    const auto pat = circle_pattern_from_conical(net, f0, net.centers[{3, 2}] + Vec2(0.31, 0.42)).pattern;
    const double r0 = pat.circles[{3, 2}].radius;
    const OrientedIsoLine l0 = initial_line(pat.points[f0], net.centers[{3, 2}], 0.4 * r0, seed % 2 ? 1 : -1);
    const LiftBuild b = lorentz_lift(pat, f0, l0);
    CHECK(b.cycle_discrepancy < 1e-9);
    CHECK(b.sphere_spread < 1e-9);
    CHECK(contact_residual(b.congruence) < 1e-9);
    CHECK(b.congruence.spheres[{3, 2}].center[2] == doctest::Approx(0.4 * r0));
    const CirclePattern back = project_circle_pattern(b.congruence);
    double d = 0.0;
    for (VertexId v : net.centers.grid().vertices()) {
      d = std::max(d, (back.circles[v].center - pat.circles[v].center).norm());
      d = std::max(d, std::abs(back.circles[v].radius - pat.circles[v].radius));
    }
    for (FaceId f : net.centers.grid().faces()) d = std::max(d, (back.points[f] - pat.points[f]).norm());
    CHECK(d < 1e-9);
  }
}

TEST_CASE("initial line must meet the face point") {
  const ConicalNet net = lattice(4, 4);
  const auto pat = circle_pattern_from_conical(net, {0, 0}, Vec2(0.5, 0.5)).pattern;
  const OrientedIsoLine off = make_iso_line(LorentzPoint(0.6, 0.5, 0), LorentzPoint(1, 0, 1), 1);
  CHECK_THROWS_AS(lorentz_lift(pat, {0, 0}, off), Error);
}

TEST_CASE("center nets are isotropic conjugate and determine the congruence") {
  for (std::uint64_t seed = 1; seed <= 4; ++seed) {
    const ConicalNet net = random_conical_net(6, 6, seed);
    const FaceId f0{1, 1};
    const OrientedIsoLine l0 = make_iso_line(LorentzPoint(1.5, 1.4, 0.2), LorentzPoint(0.6, 0.8, 1), 1);
    const LiftBuild b = lift_conical(net, f0, l0);
    const auto m = center_net(b.congruence);
    const auto fits = center_net_residuals(m);
    for (const auto& fit : fits.data()) {
      CHECK(fit.coplanarity < 1e-9);
      CHECK(fit.isotropy < 1e-9);
    }
    const LiftBuild c = congruence_from_center_net(m, f0, l0);
    CHECK(c.cycle_discrepancy < 1e-8);
    CHECK(c.sphere_spread < 1e-8);
    CHECK(congruence_distance(b.congruence, c.congruence) < 1e-8);
    // a second line in the same isotropic plane: same centers, other spheres
    const OrientedIsoLine l1 = make_iso_line(l0.base + LorentzPoint(-0.8, 0.6, 0), l0.dir, 1);
    const LiftBuild d = congruence_from_center_net(m, f0, l1);
    CHECK(contact_residual(d.congruence) < 1e-8);
    CHECK(d.sphere_spread < 1e-8);
    CHECK(congruence_distance(b.congruence, d.congruence) > 1e-3);
  }
}

TEST_CASE("cyclographic lift is a fully isotropic face net") {
  const ConicalNet net = random_conical_net(6, 5, 9);
  const LiftBuild b = lift_conical(net, {0, 0}, make_iso_line(LorentzPoint(0.4, 0.3, 0), LorentzPoint(0, 1, 1), -1));
  CHECK(cyclo_lift_residual(cyclographic_lift(b.congruence)) < 1e-9);
  CHECK(cyclo_lift_residual(cyclographic_lift(hand_grid(4, 4))) < 1e-14);
}

TEST_CASE("origami map of the square lattice folds onto one square") {
  const OrigamiMap o = origami_map(lattice(6, 6), {0, 0});
  CHECK(o.spread < 1e-14);
  for (VertexId v : o.folded.grid().vertices())
    CHECK((o.folded[v] - Vec2(v.i % 2, v.j % 2)).norm() < 1e-14);
}

TEST_CASE("origami map matches the cyclographic lift up to a plane isometry") {
  CHECK(origami_cyclift_residual(hand_grid(6, 6), {0, 0}) < 1e-12);
  for (std::uint64_t seed = 1; seed <= 4; ++seed) {
    const ConicalNet net = random_conical_net(6, 6, seed);
    const LiftBuild b = lift_conical(net, {2, 1}, make_iso_line(LorentzPoint(2.5, 1.5, 0.1), LorentzPoint(0.8, -0.6, 1), 1));
    CHECK(origami_map(net, {2, 1}).spread < 1e-9);
    CHECK(origami_cyclift_residual(b.congruence, {2, 1}) < 1e-9);
  }
}
