#pragma once

// Circle packings, incircular nets and null congruences (black spheres are null).

#include <cstdint>

#include "lnet/lift.hpp"
#include "lnet/transforms.hpp"

namespace lnet {

// Black vertices carry quad vertices, white vertices the incircle centers.  The
// incircle radius is stored at white vertices (NaN at black ones).
struct IncircularNet {
  VertexField<Vec2> centers;
  VertexField<double> incircle_radius;

  const QuadGrid& grid() const { return centers.grid(); }
  ConicalNet conical() const { return {centers}; }
};

struct NullReport {
  double max_black_rho = 0.0;
  double min_white_rho = 0.0;  // smallest |rho| over white vertices
};
NullReport null_congruence_report(const ContactCongruence& cc);

// Largest distance from a white center to the lines through black edges of its
// incident faces, minus the stored radius.
double incircular_residual(const IncircularNet& inc);

// Null lift: the initial line runs in the vertical plane over the black diagonal of
// f0, through the apex of height `height0` over the black vertex with smaller
// column index, climbing toward the other black vertex; `sign0` picks the side.
ContactCongruence null_lift(const IncircularNet& inc, double height0 = 0.0, int sign0 = 1, FaceId f0 = {0, 0});

// Incircular net of a circle packing: black centers of the packing and white circle
// centers (the conical net); incircle radii measured from the black edge lines.
IncircularNet incircular_from_packing(const CirclePattern& p, double tol = 1e-9);

// Square-grid fixture: black null spheres with apex height 0 on even and sqrt2 on
// odd columns, white spheres of radius sqrt2/2 at height sqrt2/2.
struct GridFixture {
  IncircularNet incircular;
  ContactCongruence congruence;
};
GridFixture generate_grid(int width, int height);

// Moebius image of the grid fixture: inversion in a sphere far below the patch
// followed by a random Lorentz isometry and translation.
ContactCongruence generate_isothermic(int width, int height, std::uint64_t seed, double strength = 0.25);

// Null congruence without the isothermic property.  Black apexes are built row by
// row: each new apex is the bottom apex of its black quad mirrored in the vertical
// plane through the two middle apexes, then jittered along the intersection of their
// light cones.  White spheres pass through their four black apexes.
ContactCongruence random_null_congruence(int width, int height, std::uint64_t seed, double jitter = 0.15);

}  // namespace lnet
