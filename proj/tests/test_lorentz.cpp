#include <doctest.h>

#include "support.hpp"

using namespace lnet;
using namespace lnet::test;

TEST_CASE("lifts satisfy the quadric identities") {
  Rng rng(11);
  for (int k = 0; k < 50; ++k) {
    const OrientedSphere s = rng.sphere();
    const OrientedSphere t = rng.sphere();
    const MobiusPoint m = mobius_lift(s);
    // q(M) written out by hand
    const double q = m[0] * m[0] + m[1] * m[1] + m[2] * m[2] - m[3] * m[3] - m[4] * m[4];
    CHECK(q == doctest::Approx(s.rho * s.rho).epsilon(1e-12));
    CHECK(std::abs(lie_dot(lie_lift(s), lie_lift(s))) < 1e-12);
    const LorentzPoint dc = s.center - t.center;
    const double tan2 = dc[0] * dc[0] + dc[1] * dc[1] - dc[2] * dc[2] - (s.rho - t.rho) * (s.rho - t.rho);
    CHECK(tangential_distance_sq(s, t) == doctest::Approx(tan2).epsilon(1e-12));
    CHECK(2.0 * lie_dot(lie_lift(s), lie_lift(t)) == doctest::Approx(-tan2).epsilon(1e-12));
  }
}

TEST_CASE("lie lift round trip through a scaled representative") {
  Rng rng(3);
  for (int k = 0; k < 20; ++k) {
    const OrientedSphere s = rng.sphere();
    const OrientedSphere r = from_lie(-2.5 * lie_lift(s));
    CHECK((r.center - s.center).norm() < 1e-12);
    CHECK(r.rho == doctest::Approx(s.rho));
  }
}

TEST_CASE("grid white sphere touches the null sphere at the origin") {
  const OrientedSphere white{LorentzPoint(1, 0, kS2 / 2), kS2 / 2};
  const OrientedSphere apex{LorentzPoint(0, 0, 0), 0.0};
  CHECK(std::abs(oriented_contact_residual(white, apex)) < 1e-15);
  CHECK(std::abs(touching_residual(white, apex)) < 1e-15);
  CHECK(std::abs(touching_residual(reversed(white), apex)) < 1e-15);
}

TEST_CASE("touching residual ignores orientation, oriented contact does not") {
  Rng rng(5);
  for (int k = 0; k < 20; ++k) {
    const OrientedSphere s = rng.sphere();
    const OrientedSphere t = touching_sphere(s, rng);
    CHECK(std::abs(oriented_contact_residual(s, t)) < 1e-12);
    CHECK(std::abs(touching_residual(s, t)) < 1e-10);
    CHECK(std::abs(touching_residual(s, reversed(t))) < 1e-10);
    if (std::abs(s.rho * t.rho) > 1e-3) CHECK(std::abs(oriented_contact_residual(s, reversed(t))) > 1e-6);
  }
}

TEST_CASE("inversion fixes its sphere and is an involution") {
  const OrientedSphere s{LorentzPoint(0.3, -0.2, 0.1), 1.3};
  Rng rng(8);
  for (int k = 0; k < 20; ++k) {
    const LorentzPoint x = rng.point(3.0);
    if (std::abs(lorentz_norm_sq(x - s.center)) < 1e-2) continue;
    const LorentzPoint y = invert_point(x, s);
    CHECK((invert_point(y, s) - x).norm() < 1e-9 * std::max(1.0, x.norm()));
    // points of the sphere are fixed
    LorentzPoint d(std::cos(k), std::sin(k), 0.4 * std::sin(3.0 * k));
    d *= s.rho / std::sqrt(lorentz_norm_sq(d));
    CHECK((invert_point(s.center + d, s) - (s.center + d)).norm() < 1e-12);
  }
  CHECK_THROWS_AS(invert_point(s.center + LorentzPoint(1, 0, 1), s), Error);
}

TEST_CASE("iso line construction and canonical form") {
  const OrientedIsoLine l = make_iso_line(LorentzPoint(1, 1, kS2), LorentzPoint(1, 1, kS2), 1);
  CHECK(l.base.norm() < 1e-15);
  CHECK(l.dir[2] == 1.0);
  CHECK(std::abs(lorentz_norm_sq(l.dir)) < 1e-15);
  CHECK(std::abs(cyclo_dot(l.ospan, l.ospan)) < 1e-15);
  CHECK(std::abs(cyclo_dot(l.ospan, l.plane_direction(0))) < 1e-15);
  CHECK(l.side() == 1);
  CHECK(make_iso_line(LorentzPoint::Zero(), LorentzPoint(1, 1, kS2), -1).side() == -1);
  // the lexicographically larger candidate: (+0.707, -0.707, 0, 1)
  CHECK(l.ospan[0] > 0);
  CHECK_THROWS_AS(make_iso_line(LorentzPoint::Zero(), LorentzPoint(1, 0, 0.5), 1), Error);
  CHECK_THROWS_AS(make_iso_line(LorentzPoint::Zero(), LorentzPoint(1, 0, 0), 1), Error);
}

TEST_CASE("sphere from axis and line on the grid fixture") {
  const OrientedIsoLine l = make_iso_line(LorentzPoint::Zero(), LorentzPoint(1, 1, kS2), 1);
  const OrientedSphere s = sphere_from_axis_and_line(Vec2(1, 0), l);
  CHECK((s.center - LorentzPoint(1, 0, kS2 / 2)).norm() < 1e-15);
  CHECK(s.rho == doctest::Approx(kS2 / 2));
  CHECK(contact_by_orthogonality(s, l) < 1e-15);
  CHECK(iso_line_contact_residual(s, l) < 1e-15);
  // rho^2 is the Lorentz distance from the center to any point of the line
  CHECK(lorentz_norm_sq(l.at(0.37) - s.center) == doctest::Approx(s.rho * s.rho));
  const OrientedSphere apex = sphere_from_axis_and_line(Vec2(1, 1), l);
  CHECK(std::abs(apex.rho) < 1e-15);
  CHECK(apex.center[2] == doctest::Approx(kS2));
}

TEST_CASE("contact residual agrees with self-orthogonality") {
  Rng rng(21);
  for (int k = 0; k < 30; ++k) {
    const double th = rng.uniform(-3, 3);
    const OrientedIsoLine l =
        make_iso_line(rng.point(), LorentzPoint(std::cos(th), std::sin(th), 1.0), k % 2 ? 1 : -1);
    const OrientedSphere s = sphere_from_axis_and_line(Vec2(rng.uniform(), rng.uniform()), l);
    CHECK(contact_by_orthogonality(s, l) < 1e-12);
    CHECK(iso_line_contact_residual(s, l) < 1e-12);
    const OrientedSphere off{s.center + LorentzPoint(0, 0, 0.01), s.rho};
    CHECK(iso_line_contact_residual(off, l) > 1e-4);
    if (std::abs(s.rho) > 1e-3) CHECK(iso_line_contact_residual(reversed(s), l) > 1e-6);
  }
}

TEST_CASE("smallest circle") {
  const Circle3 c = smallest_circle({LorentzPoint(1, 2, 3), -0.5});
  CHECK(c.radius == 0.5);
  CHECK(c.center == LorentzPoint(1, 2, 3));
  CHECK(c.normal == LorentzPoint(0, 0, 1));
}

TEST_CASE("vertical reflection preserves contact and height") {
  Rng rng(4);
  const VerticalReflection r = VerticalReflection::through(Vec2(0.2, 0.1), Vec2(1.0, -0.7));
  for (int k = 0; k < 10; ++k) {
    const double th = rng.uniform(-3, 3);
    const OrientedIsoLine l = make_iso_line(rng.point(), LorentzPoint(std::cos(th), std::sin(th), 1.0), 1);
    const OrientedSphere s = sphere_from_axis_and_line(Vec2(rng.uniform(), rng.uniform()), l);
    const OrientedSphere rs = reflect_vertical(r, s);
    const OrientedIsoLine rl = reflect_vertical(r, l);
    CHECK(rs.center[2] == s.center[2]);
    CHECK(rs.rho == s.rho);
    CHECK(contact_by_orthogonality(rs, rl) < 1e-12);
    CHECK((reflect_vertical(r, rs).center - s.center).norm() < 1e-14);
  }
}

TEST_CASE("common isoline of four spheres on a line") {
  Rng rng(31);
  for (int k = 0; k < 10; ++k) {
    const double th = rng.uniform(-3, 3);
    const OrientedIsoLine l = make_iso_line(rng.point(), LorentzPoint(std::cos(th), std::sin(th), 1.0), k % 2 ? 1 : -1);
    std::array<OrientedSphere, 4> s;
    for (auto& x : s) x = sphere_from_axis_and_line(Vec2(rng.uniform(-2, 2), rng.uniform(-2, 2)), l);
    const IsoLineFit fit = common_isoline(s.data(), 4);
    CHECK(fit.fit_residual < 1e-12);
    CHECK((fit.line.base - l.base).norm() < 1e-9);
    CHECK((fit.line.dir - l.dir).norm() < 1e-9);
    CHECK((fit.line.ospan - l.ospan).norm() < 1e-9);
  }
}

TEST_CASE("common isolines of a touching pair") {
  Rng rng(13);
  for (int k = 0; k < 20; ++k) {
    const OrientedSphere a = rng.sphere();
    const OrientedSphere b = touching_sphere(a, rng);
    const auto [l1, l2] = common_isolines(a, b);
    for (const auto& l : {l1, l2}) {
      CHECK(contact_by_orthogonality(a, l) < 1e-10);
      CHECK(contact_by_orthogonality(b, l) < 1e-10);
    }
    CHECK((l1.dir - l2.dir).norm() > 1e-6);
    const LorentzPoint p = contact_point(a, b);
    CHECK(lorentz_norm_sq(p - a.center) == doctest::Approx(a.rho * a.rho));
    CHECK(lorentz_norm_sq(p - b.center) == doctest::Approx(b.rho * b.rho));
  }
  const OrientedSphere n0{LorentzPoint(0, 0, 0), 0.0};
  const OrientedSphere n1{LorentzPoint(1, 1, kS2), 0.0};
  const auto [m1, m2] = common_isolines(n0, n1);
  CHECK((m1.dir - m2.dir).norm() < 1e-15);
  CHECK(m1.side() == -m2.side());
}
