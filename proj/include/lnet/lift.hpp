#pragma once

// Contact congruences: oriented spheres on Z^2 with an oriented isotropic line per
// face touching the four spheres of the face.  Lifting conical nets into Lorentz
// space, projecting back, center nets, cyclographic lifts and the origami map.

#include "lnet/grid.hpp"
#include "lnet/lorentz.hpp"
#include "lnet/patterns.hpp"

namespace lnet {

struct ContactCongruence {
  VertexField<OrientedSphere> spheres;
  FaceField<OrientedIsoLine> isolines;

  const QuadGrid& grid() const { return spheres.grid(); }
};

// Euclidean diameter of the sphere centers (at least 1).
double scale_of(const ContactCongruence& cc);
// Largest iso_line_contact_residual over all face/vertex incidences.
double contact_residual(const ContactCongruence& cc);
// Largest |tangential distance^2| between spheres sharing an edge.
double edge_contact_residual(const ContactCongruence& cc);

ContactCongruence crop(const ContactCongruence& cc, int ring);
ContactCongruence reversed(const ContactCongruence& cc);
// Rebuild every face line from the four spheres of the face.
FaceField<OrientedIsoLine> refit_isolines(const VertexField<OrientedSphere>& spheres,
                                          double* worst_fit = nullptr);

struct LiftBuild {
  ContactCongruence congruence;
  double cycle_discrepancy = 0.0;  // line mismatch over non-tree dual edges
  double sphere_spread = 0.0;      // disagreement of the per-face sphere candidates
};

// Propagates l0 from f0 by the vertical reflections over the net's edges and
// attaches to each vertex the sphere on its axis touching the incident lines.
LiftBuild lift_conical(const ConicalNet& net, FaceId f0, const OrientedIsoLine& l0, double tol = 1e-9);

// Same, for a circle pattern; l0 must meet the height-0 plane at p.points[f0].
LiftBuild lorentz_lift(const CirclePattern& p, FaceId f0, const OrientedIsoLine& l0, double tol = 1e-9);

// Line through (p0, 0) whose sphere on the axis over `axis` has center height
// `height`; |height| must not exceed |axis - p0|.
OrientedIsoLine initial_line(const Vec2& p0, const Vec2& axis, double height, int side);

// initial_line anchored on face f0: through the face point (or the centroid of the
// face centers) with the axis over the largest circle (or the first face vertex).
OrientedIsoLine initial_line(const CirclePattern& p, FaceId f0, double height, int side);
OrientedIsoLine initial_line(const ConicalNet& net, FaceId f0, double height, int side);

CirclePattern project_circle_pattern(const ContactCongruence& cc);
CyclePattern project_cycle_pattern(const ContactCongruence& cc);
ConicalNet projected_centers(const ContactCongruence& cc);

VertexField<LorentzPoint> center_net(const ContactCongruence& cc);

struct FacePlaneFit {
  double coplanarity = 0.0;  // largest Euclidean distance of a center to the fitted plane
  double isotropy = 0.0;     // |<n,n>| for the Euclidean-unit Lorentz normal n
  LorentzPoint normal = LorentzPoint::Zero();
};
FaceField<FacePlaneFit> center_net_residuals(const VertexField<LorentzPoint>& centers);

// Isotropic conjugate net -> contact congruence.  Each new line passes through
// the point where its predecessor meets the line through the two centers of the
// shared edge, with the isotropic direction of the new face plane.
LiftBuild congruence_from_center_net(const VertexField<LorentzPoint>& centers, FaceId f0,
                                     const OrientedIsoLine& l0, double tol = 1e-9);

struct CycloPlane {
  CycloPoint base;
  CycloPoint d1;
  CycloPoint d2;
};
struct CycloNet {
  VertexField<CycloPoint> points;
  FaceField<CycloPlane> planes;
};
CycloNet cyclographic_lift(const ContactCongruence& cc);
// Largest distance of a face's points from its plane, plus the isotropy defect of
// the plane's directions.
double cyclo_lift_residual(const CycloNet& net);

struct OrigamiMap {
  VertexField<Vec2> folded;
  double spread = 0.0;
};
OrigamiMap origami_map(const ConicalNet& net, FaceId f0);

// Largest distance between (c3, rho) of the congruence and the origami map of the
// projected centers after the best plane isometry fitted on the vertices of f0.
double origami_cyclift_residual(const ContactCongruence& cc, FaceId f0);

}  // namespace lnet
