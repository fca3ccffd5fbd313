#pragma once

// Oriented spheres of Lorentz 3-space and their three coordinate models:
// cyclographic (R^{2,2}), Moebius (R^{3,2}) and Lie (R^{3,3}).

#include <Eigen/Dense>

#include "lnet/errors.hpp"

namespace lnet {

using Vec2 = Eigen::Vector2d;
using LorentzPoint = Eigen::Vector3d;
using CycloPoint = Eigen::Vector4d;
using MobiusPoint = Eigen::Matrix<double, 5, 1>;
using LiePoint = Eigen::Matrix<double, 6, 1>;

// Default tolerance; callers scale it with the size of the configuration.
inline constexpr double kEps = 1e-9;

double lorentz_dot(const LorentzPoint& x, const LorentzPoint& y);
double lorentz_norm_sq(const LorentzPoint& x);
double cyclo_dot(const CycloPoint& x, const CycloPoint& y);
double mobius_dot(const MobiusPoint& x, const MobiusPoint& y);
double lie_dot(const LiePoint& x, const LiePoint& y);

// diag(1,1,-1), diag(1,1,-1,-1), diag(1,1,1,-1,-1), diag(1,1,1,-1,-1,-1)
Eigen::Matrix3d lorentz_gram();
Eigen::Matrix4d cyclo_gram();
Eigen::Matrix<double, 5, 5> mobius_gram();
Eigen::Matrix<double, 6, 6> lie_gram();

// Center c and signed radius rho; rho^2 = <x-c,x-c> on the sphere.  rho = 0 is a
// null sphere (light cone with apex c).
struct OrientedSphere {
  LorentzPoint center = LorentzPoint::Zero();
  double rho = 0.0;

  bool is_null(double tol = kEps) const { return std::abs(rho) <= tol; }
};

CycloPoint to_cyclo(const OrientedSphere& s);
OrientedSphere from_cyclo(const CycloPoint& y);

MobiusPoint mobius_lift(const OrientedSphere& s);
MobiusPoint mobius_lift(const LorentzPoint& x);
LiePoint lie_lift(const OrientedSphere& s);

// Inverse of lie_lift for any representative with m3 + m5 != 0.
OrientedSphere from_lie(const LiePoint& l, double tol = 1e-12);
// Point (null sphere) from a Moebius representative with m3 + m5 != 0.
LorentzPoint point_from_mobius(const MobiusPoint& m, double tol = 1e-12);

// |S^ - T^|^2 in R^{2,2}; zero exactly for spheres in oriented contact.
double tangential_distance_sq(const OrientedSphere& s, const OrientedSphere& t);
inline double oriented_contact_residual(const OrientedSphere& s, const OrientedSphere& t) {
  return tangential_distance_sq(s, t);
}
// <M(S),M(T)>^2 - q(M(S)) q(M(T)); vanishes for touching spheres of either orientation.
double touching_residual(const OrientedSphere& s, const OrientedSphere& t);

// Reflection in the sphere (center c, rho^2). Throws LightConeSingularity when x
// is on the light cone of c.
LorentzPoint invert_point(const LorentzPoint& x, const OrientedSphere& s, double tol = 1e-14);

// Oriented isotropic line.  dir is normalised to (u, 1) with |u| = 1, base is the
// point of the line at height 0 and ospan = (+-perp(u), 0, 1) picks one of the two
// fully isotropic planes of R^{2,2} through the line.  The spheres in oriented
// contact with the line are exactly the points of base + span{(dir,0), ospan}.
struct OrientedIsoLine {
  LorentzPoint base = LorentzPoint::Zero();
  LorentzPoint dir = LorentzPoint(1, 0, 1);
  CycloPoint ospan = CycloPoint(0, 1, 0, 1);

  // +1 when ospan is the lexicographically larger candidate.
  int side() const;
  LorentzPoint at(double t) const { return base + t * dir; }
  Vec2 trace() const { return base.head<2>(); }  // intersection with height 0
  CycloPoint plane_direction(int k) const;       // k = 0: (dir,0), k = 1: ospan
};

// Throws NonIsotropicDirection when d is not isotropic (or horizontal).
OrientedIsoLine make_iso_line(const LorentzPoint& point, const LorentzPoint& dir, int side,
                              double tol = 1e-9);
// The two ospan candidates for an isotropic direction, larger one first.
std::pair<CycloPoint, CycloPoint> ospan_candidates(const LorentzPoint& dir);

OrientedIsoLine reversed(const OrientedIsoLine& l);
OrientedSphere reversed(const OrientedSphere& s);

// Euclidean distance in R^4 from S^ to the contact plane of the line.
double iso_line_contact_residual(const OrientedSphere& s, const OrientedIsoLine& l);

// Sphere centered on the vertical line over axis_foot in contact with l.
OrientedSphere sphere_from_axis_and_line(const Vec2& axis_foot, const OrientedIsoLine& l);

// Euclidean circle of least radius on the sphere (horizontal section through c).
struct Circle3 {
  LorentzPoint center;
  LorentzPoint normal;
  double radius;
};
Circle3 smallest_circle(const OrientedSphere& s);

// Reflection in the vertical plane over the line a + t*dir of the height-0 plane.
struct VerticalReflection {
  Vec2 point;
  Vec2 dir;  // unit

  static VerticalReflection through(const Vec2& a, const Vec2& b);
  Vec2 apply(const Vec2& x) const;
  Vec2 apply_linear(const Vec2& v) const;
};
LorentzPoint reflect_vertical(const VerticalReflection& r, const LorentzPoint& x);
OrientedSphere reflect_vertical(const VerticalReflection& r, const OrientedSphere& s);
OrientedIsoLine reflect_vertical(const VerticalReflection& r, const OrientedIsoLine& l);

// Oriented isotropic line in contact with four spheres; the spheres' cyclographic
// points must span a fully isotropic plane.  fit_residual is the third singular
// value of the centered point cloud.
struct IsoLineFit {
  OrientedIsoLine line;
  double fit_residual;
};
IsoLineFit common_isoline(const OrientedSphere* spheres, int n);

// Point where two spheres in oriented contact touch (for null spheres, the apex).
// Throws DegenerateSpheres for two null spheres or equal radii.
LorentzPoint contact_point(const OrientedSphere& a, const OrientedSphere& b);

// The two oriented isotropic lines in contact with both spheres of a touching pair.
// The first has the lexicographically larger direction.
std::pair<OrientedIsoLine, OrientedIsoLine> common_isolines(const OrientedSphere& a,
                                                             const OrientedSphere& b);

}  // namespace lnet
