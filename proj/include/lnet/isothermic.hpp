#pragma once

// Isothermic null congruences, S-isothermic nets and their Christoffel duals.

#include <array>
#include <limits>
#include <utility>

#include "lnet/lift.hpp"

namespace lnet {

// Circle in a spacelike plane: points x of the plane with <x-m,x-m> = r^2.  The
// normal is Lorentz-orthogonal to the plane with <n,n> = -1 and n[2] > 0.
struct SpacelikeCircle {
  LorentzPoint center = LorentzPoint::Constant(std::numeric_limits<double>::quiet_NaN());
  LorentzPoint normal = LorentzPoint::Constant(std::numeric_limits<double>::quiet_NaN());
  double radius = std::numeric_limits<double>::quiet_NaN();
};

// Plane through the four white centers around a black vertex.
struct StarPlane {
  double coplanarity = std::numeric_limits<double>::quiet_NaN();  // largest distance to the plane
  LorentzPoint normal = LorentzPoint::Zero();                      // Lorentz normal, Euclidean unit
  bool spacelike = false;                                          // normal timelike
};
// Entries at interior black vertices; NaN coplanarity elsewhere.
VertexField<StarPlane> isothermic_residuals(const ContactCongruence& cc);
// Largest coplanarity over interior black vertices, +inf if some plane is not spacelike.
double isothermic_residual(const ContactCongruence& cc);

// The two points common to four cyclically touching spheres.  With a hint, the point
// nearer to it comes first.  Throws DegenerateStar, NoRealIntersection or
// PointAtInfinity.
std::pair<LorentzPoint, LorentzPoint> two_point_intersection(const OrientedSphere* star,
                                                             const LorentzPoint* hint = nullptr);

// Circle through the contact points of consecutive spheres; residual measures the
// fourth contact point.
struct ContactCircle {
  SpacelikeCircle circle;
  double residual = 0.0;
};
ContactCircle contact_circle(const OrientedSphere* star);

// Lorentz circle through three points, in their plane.  Throws DegenerateStar when
// the plane is not spacelike.
SpacelikeCircle circle_through(const LorentzPoint& a, const LorentzPoint& b, const LorentzPoint& c);

// White spheres, black circles and face contact points.  Entries at vertices of the
// other color are unused.
struct SIsothermicNet {
  VertexField<OrientedSphere> white_spheres;
  VertexField<SpacelikeCircle> black_circles;
  FaceField<LorentzPoint> contact_points;

  const QuadGrid& grid() const { return white_spheres.grid(); }
};

// Largest violation of the incidences: contact points on both spheres and circles of
// their face, white spheres in contact, circles orthogonal to adjacent spheres.
double s_isothermic_residual(const SIsothermicNet& net);

// The black circles need complete stars, so the net lives on crop(cc, 1).  Throws
// NotIsothermic when isothermic_residual exceeds tol * scale.
SIsothermicNet to_s_isothermic(const ContactCongruence& cc, double tol = 1e-8);

// Each black circle is the section of two null spheres (apexes on its axis).  side
// picks one of the two isotropic lines through the contact point of face (0,0); the
// choice then propagates over a dual spanning tree.  Throws InconsistentChoice.
struct CongruenceBuild {
  ContactCongruence congruence;
  double discrepancy = 0.0;  // largest distance of an apex from its face line
};
CongruenceBuild from_s_isothermic(const SIsothermicNet& net, int side, double tol = 1e-8);

struct HarmonicResidual {
  double concyclicity = 0.0;
  double balance = 0.0;  // | |P1P2||P3P4| - |P2P3||P4P1| | with Lorentz lengths
};
// Throws NonSpacelikeEdge.
HarmonicResidual harmonic_quad_residual(const std::array<LorentzPoint, 4>& quad);

// Values on vertices and faces of Z^2.  Its quads are (v, f, v', f') for edges vv'
// with faces f, f' on either side.  A vertex-face incidence is "horizontal" (dual
// sign +) when the face lies NE or SW of the vertex, after turning the combined
// lattice by 45 degrees.
struct CombinedNet {
  VertexField<LorentzPoint> vertices;
  FaceField<LorentzPoint> faces;

  const QuadGrid& grid() const { return vertices.grid(); }
};
int incidence_sign(VertexId v, FaceId f);

// Sphere centers at white vertices, circle centers at black vertices, contact points
// at faces.
CombinedNet combined_net(const SIsothermicNet& net);
// Per-quad harmonic residuals, max of both components.
double harmonic_net_residual(const CombinedNet& net);

struct DualNet {
  CombinedNet net;
  double closure = 0.0;  // largest sum of dual edges around a quad
};
// Integrates d* = +-d / <d,d> from vertex (0,0) pinned at the origin.  Throws
// NonSpacelikeEdge or ZeroLengthEdge.
DualNet christoffel_dual(const CombinedNet& net);

// Dual S-isothermic net: dual white spheres have radius 1/rho, dual circles 1/r.
SIsothermicNet dual_s_isothermic(const SIsothermicNet& net, const CombinedNet& dual);

struct DualCongruence {
  ContactCongruence congruence;  // on crop(cc, 1)
  double closure = 0.0;
  double white_gap = 0.0;     // face integration vs the direct white-edge formula
  double black_spread = 0.0;  // disagreement of the black apex across its NE/SW faces
};
// Christoffel dual of an isothermic congruence.  White centers and contact points
// are integrated with the sphere radii, black apexes from the contact points along
// the NE/SW incidences with the incircle radii.
DualCongruence christoffel_dual_congruence(const ContactCongruence& cc, double tol = 1e-8);

// White-center step across the face shared by w and w' without contact points:
// -s * (c' - c) / (rho rho'), s = +1 when w' - w is (1,1) or (-1,-1), else -1.
LorentzPoint direct_white_dual_edge(const OrientedSphere& w, const OrientedSphere& w2, VertexId a, VertexId b);

// Quad with edges parallel to the given planar quad and diagonals parallel to its
// opposite diagonals; first point at the origin, first edge of unit length.
std::array<LorentzPoint, 4> koenigs_dual_quad(const std::array<LorentzPoint, 4>& quad);

// Koenigs dual of the white-center net (quads around interior black vertices), glued
// over shared white edges.  Dual centers at white vertices of the interior quads.
struct KoenigsDual {
  VertexField<LorentzPoint> centers;
  double gluing = 0.0;  // relative scale mismatch on shared edges outside the spanning tree
};
KoenigsDual koenigs_dual_white_net(const ContactCongruence& cc);

// At interior black vertices: spread of the four other common tangents of
// consecutive incircles of the projected cycle pattern.
VertexField<double> other_tangent_concurrency(const ContactCongruence& cc);

}  // namespace lnet
