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

}  // namespace

TEST_CASE("square lattice is conical, a bent vertex is not") {
  ConicalNet net = lattice(5, 5);
  CHECK(max_conical_residual(net) < 1e-15);
  net.centers[{2, 2}] += Vec2(0.1, 0.03);
  CHECK(conical_residual(net, {2, 2}) > 1e-3);
  CHECK_THROWS_AS(circle_pattern_from_conical(net, {0, 0}, Vec2(0.5, 0.5)), Error);
}

TEST_CASE("square lattice with face-center points gives equal radii") {
  const auto b = circle_pattern_from_conical(lattice(6, 5), {0, 0}, Vec2(0.5, 0.5));
  for (const auto& c : b.pattern.circles.data()) CHECK(c.radius == doctest::Approx(std::sqrt(0.5)));
  CHECK(b.report.cycle_discrepancy < 1e-12);
  CHECK(b.report.radius_spread < 1e-12);
}

TEST_CASE("square lattice with a vertex as face point") {
  const auto b = circle_pattern_from_conical(lattice(6, 5), {0, 0}, Vec2(0, 0));
  for (VertexId v : b.pattern.circles.grid().vertices()) {
    // distance to the nearest even-even lattice point
    const double expected = std::sqrt(double(v.i % 2 + v.j % 2));
    CHECK(b.pattern.circles[v].radius == doctest::Approx(expected));
  }
  CHECK(circle_packing_residual(b.pattern) < 1e-12);
}

TEST_CASE("random conical nets carry circle and cycle patterns") {
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    const ConicalNet net = random_conical_net(7, 6, seed);
    CHECK(max_conical_residual(net) < 1e-12);
    const auto b = circle_pattern_from_conical(net, {2, 2}, Vec2(2.4, 2.6));
    CHECK(b.report.cycle_discrepancy < 1e-9);
    CHECK(b.report.radius_spread < 1e-9);
    CHECK(circle_pattern_residual(b.pattern) < 1e-9);
    const auto c = cycle_pattern_from_conical(net, {0, 0}, OrientedLine2{Vec2(0.6, 0.8), 0.3});
    CHECK(c.report.cycle_discrepancy < 1e-9);
    CHECK(c.report.radius_spread < 1e-9);
    CHECK(cycle_pattern_residual(c.pattern) < 1e-9);
  }
}

TEST_CASE("other common tangent") {
  Rng rng(17);
  for (int k = 0; k < 20; ++k) {
    const Cycle2 a{Vec2(rng.uniform(), rng.uniform()), rng.uniform(-0.3, 0.3)};
    const Cycle2 b{Vec2(rng.uniform(2, 3), rng.uniform()), rng.uniform(-0.3, 0.3)};
    // one common tangent from the normal equation n.(a-b) = ra - rb
    const Vec2 d = a.center - b.center;
    const double k0 = (a.radius - b.radius) / d.squaredNorm();
    const Vec2 n = k0 * d + std::sqrt(1.0 / d.squaredNorm() - k0 * k0) * Vec2(-d[1], d[0]);
    const OrientedLine2 known{n, n.dot(a.center) - a.radius};
    const OrientedLine2 other = other_common_tangent(a, b, known);
    CHECK(other.normal.norm() == doctest::Approx(1.0));
    CHECK(std::abs(other.signed_distance(a.center) - a.radius) < 1e-12);
    CHECK(std::abs(other.signed_distance(b.center) - b.radius) < 1e-12);
    CHECK((other.normal - known.normal).norm() > 1e-6);
  }
}

TEST_CASE("concurrency of lines") {
  const Vec2 p(0.3, -1.2);
  std::vector<OrientedLine2> lines;
  for (double t : {0.1, 1.0, 2.0, 2.5}) {
    const Vec2 n(std::cos(t), std::sin(t));
    lines.push_back({n, n.dot(p)});
  }
  const Concurrency c = concurrency(lines);
  CHECK((c.point - p).norm() < 1e-12);
  CHECK(c.spread < 1e-12);
  lines.back().offset += 0.1;
  CHECK(concurrency(lines).spread > 1e-3);
}
