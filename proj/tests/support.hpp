#pragma once

// Independent test oracles: hand-built fixtures and direct formulas that do not go
// through the library's construction routines.

#include <cmath>
#include <random>

#include "lnet/lift.hpp"

namespace lnet::test {

inline const double kS2 = std::sqrt(2.0);

// Contact of a sphere with a line, tested by self-orthogonality of the contact
// plane: S^ - P^ must be orthogonal (in R^{2,2}) to both spanning vectors.
inline double contact_by_orthogonality(const OrientedSphere& s, const OrientedIsoLine& l) {
  const CycloPoint d = to_cyclo(s) - CycloPoint(l.base[0], l.base[1], l.base[2], 0.0);
  const CycloPoint e(l.dir[0], l.dir[1], l.dir[2], 0.0);
  return std::abs(cyclo_dot(d, e)) + std::abs(cyclo_dot(d, l.ospan));
}

// Square-grid contact congruence written down directly: black null spheres with
// apex height 0 on even and sqrt2 on odd columns, white spheres at height sqrt2/2
// with radius +sqrt2/2 on odd and -sqrt2/2 on even columns, and the face lines
// through the two black apexes.
inline double grid_black_height(int i) { return (i % 2 == 0) ? 0.0 : kS2; }
inline double grid_white_rho(int i) { return (i % 2 != 0) ? kS2 / 2 : -kS2 / 2; }

inline ContactCongruence hand_grid(int w, int h) {
  QuadGrid g(w, h);
  ContactCongruence cc{VertexField<OrientedSphere>(g), FaceField<OrientedIsoLine>(g)};
  for (VertexId v : g.vertices()) {
    if (color_of(v) == Color::black)
      cc.spheres[v] = {LorentzPoint(v.i, v.j, grid_black_height(v.i)), 0.0};
    else
      cc.spheres[v] = {LorentzPoint(v.i, v.j, kS2 / 2), grid_white_rho(v.i)};
  }
  for (FaceId f : g.faces()) {
    const auto b = g.face_vertices_of(f, Color::black);
    const LorentzPoint a0 = cc.spheres[b[0]].center;
    const LorentzPoint a1 = cc.spheres[b[1]].center;
    LorentzPoint d = a1 - a0;
    if (d[2] < 0) d = -d;
    d /= d[2];
    OrientedIsoLine l;
    l.dir = d;
    l.base = a0 - a0[2] * d;
    const Vec2 p(-d[1], d[0]);
    const auto w = g.face_vertices_of(f, Color::white);
    l.ospan = CycloPoint(p[0], p[1], 0, 1);
    if (contact_by_orthogonality(cc.spheres[w[0]], l) > 1e-12) l.ospan.head<2>() = -p;
    cc.isolines[f] = l;
  }
  return cc;
}

struct Rng {
  std::mt19937_64 gen;
  explicit Rng(std::uint64_t seed) : gen(seed) {}
  double uniform(double a = -1.0, double b = 1.0) { return std::uniform_real_distribution<double>(a, b)(gen); }
  LorentzPoint point(double s = 1.0) { return LorentzPoint(uniform() * s, uniform() * s, uniform() * s); }
  OrientedSphere sphere() { return {point(2.0), uniform(-1.5, 1.5)}; }
};

// Sphere in oriented contact with s: pick a direction, move along it.
inline OrientedSphere touching_sphere(const OrientedSphere& s, Rng& rng) {
  // (c', rho') = (c + t n, rho + t k) with <n,n> = k^2 gives |dc|^2 - drho^2 = 0.
  const double theta = rng.uniform(-3.1, 3.1);
  const LorentzPoint n(std::cos(theta), std::sin(theta), rng.uniform(-0.8, 0.8));
  const double k = (rng.uniform() < 0 ? -1.0 : 1.0) * std::sqrt(lorentz_norm_sq(n));
  const double t = rng.uniform(0.3, 1.0);
  return {s.center + t * n, s.rho + t * k};
}

}  // namespace lnet::test
