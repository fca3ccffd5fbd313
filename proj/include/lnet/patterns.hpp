#pragma once

// Planar circle and cycle patterns with Z^2 combinatorics and the conical nets of
// their centers.

#include <cstdint>
#include <vector>

#include "lnet/grid.hpp"
#include "lnet/lorentz.hpp"

namespace lnet {

struct Circle2 {
  Vec2 center = Vec2::Zero();
  double radius = 0.0;
};

// Circle with signed radius; positive means counter-clockwise orientation.
struct Cycle2 {
  Vec2 center = Vec2::Zero();
  double radius = 0.0;
};

// Points x with normal . x = offset; the normal is a unit vector.  A cycle touches
// the line in oriented contact when normal . center - offset = radius.
struct OrientedLine2 {
  Vec2 normal = Vec2(0, 1);
  double offset = 0.0;

  Vec2 direction() const { return Vec2(normal[1], -normal[0]); }
  Vec2 foot() const { return offset * normal; }
  double signed_distance(const Vec2& x) const { return normal.dot(x) - offset; }
};

struct ConicalNet {
  VertexField<Vec2> centers;
};

struct CirclePattern {
  VertexField<Circle2> circles;
  FaceField<Vec2> points;
};

struct CyclePattern {
  VertexField<Cycle2> cycles;
  FaceField<OrientedLine2> lines;
};

VerticalReflection edge_reflection(const ConicalNet& net, const Edge& e);
OrientedLine2 reflect(const VerticalReflection& r, const OrientedLine2& l);

// Frobenius norm of (composition of the four edge reflections around v) - I.
double conical_residual(const ConicalNet& net, VertexId v);
// NaN on the boundary.
VertexField<double> conical_residuals(const ConicalNet& net);
double max_conical_residual(const ConicalNet& net);

// Euclidean diameter of the center set, at least 1; used to scale tolerances.
double diameter(const ConicalNet& net);

struct PatternReport {
  double cycle_discrepancy = 0.0;  // over non-tree dual edges
  double radius_spread = 0.0;      // max deviation of a face distance from the mean radius
};

template <class P>
struct PatternBuild {
  P pattern;
  PatternReport report;
};

// Throws NotConical when some interior vertex fails the reflection condition by more
// than tol.
PatternBuild<CirclePattern> circle_pattern_from_conical(const ConicalNet& net, FaceId f0, const Vec2& p0,
                                                        double tol = 1e-9);
PatternBuild<CyclePattern> cycle_pattern_from_conical(const ConicalNet& net, FaceId f0,
                                                      const OrientedLine2& l0, double tol = 1e-9);

ConicalNet centers_of(const CirclePattern& p);
ConicalNet centers_of(const CyclePattern& p);

// max | |p(f) - c(v)| - r(v) | over incidences.
double circle_pattern_residual(const CirclePattern& p);
// max |n.c - offset - r| over incidences.
double cycle_pattern_residual(const CyclePattern& p);

// Circles touching along black face diagonals; either external or internal contact
// counts.  Returns the largest defect.
double circle_packing_residual(const CirclePattern& p);

// The second common oriented tangent of two cycles, other than `known`.
OrientedLine2 other_common_tangent(const Cycle2& a, const Cycle2& b, const OrientedLine2& known);

// Least-squares common point of lines and the largest distance from it.
struct Concurrency {
  Vec2 point;
  double spread;
};
Concurrency concurrency(const std::vector<OrientedLine2>& lines);

// Random conical net: perturbed lattice on the first two rows and on the side
// columns, then every interior vertex fixes the direction to its north neighbour and
// a random step length is taken along it.
ConicalNet random_conical_net(int width, int height, std::uint64_t seed, double jitter = 0.15);

}  // namespace lnet
