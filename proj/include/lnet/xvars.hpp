#pragma once

// X-variables of conical nets and contact congruences, the Ising and isothermic
// subvariety residuals, their Miquel updates and the Moebius invariant variant.
//
// Fields live on the full grid.  Entries whose stencil leaves the patch are NaN,
// and NaN propagates through the updates, so each stencil application consumes one
// ring of the domain.

#include "lnet/lift.hpp"

namespace lnet {

// -(p1 - p)(p3 - p) / ((p2 - p)(p4 - p)) over the star E, N, W, S, as complex
// numbers.  Throws DegenerateStar for coincident neighbours and UndefinedX when the
// imaginary part exceeds tol times the modulus.
VertexField<double> x_vars(const ConicalNet& net, double tol = 1e-8);

// Ratio of the R^{2,2} squared lengths of the E-W and N-S differences of the
// cyclographic points.  Throws UndefinedX on a vanishing denominator.
VertexField<double> x_vars_cyclo(const CycloNet& net);

// At white vertices: ratio of the Lorentz squared distances between the opposite
// black apexes.  Black entries are NaN.  Throws NotNullCongruence when a black
// radius exceeds tol * scale, UndefinedX on a vanishing denominator.
VertexField<double> x_vars_null(const ContactCongruence& cc, double tol = 1e-9);

// At black vertices: X(b)^2 - (1 + X(N))(1 + X(S)) / ((1 + 1/X(E))(1 + 1/X(W))).
// Throws NonpositiveX when an inverted neighbour value is not positive.
VertexField<double> ising_residual(const VertexField<double>& x);

// Vertices of the updated color get X^-1 times the Ising right hand side of their
// star; the other color is copied.  miq_update_black changes the white values.
VertexField<double> miq_update_black(const VertexField<double>& x);
VertexField<double> miq_update_white(const VertexField<double>& x);

// Only white entries are read.  Black values are recovered from the Ising relation
// (positive root), whites are updated by miq_update_black, and the residual is the
// difference of both sides of the Ising relation at black b before and after the
// update.  The stencil reaches the whites w with |w - b|_1 <= 3.
VertexField<double> isothermic_subvariety_residual(const VertexField<double>& x_white);

// Per white vertex: cross-ratio of the height-0 traces of the NE and SW face lines
// of cc and the NW and SE face lines of sweep_black(cc), taken in the order NE, NW,
// SW, SE as (a - b)(c - d) / ((a - d)(b - c)).  Needs the four faces in the swept
// patch, so two rings are lost.  Throws DegenerateCrossRatio for coincident traces
// or a non-real value.
VertexField<double> conformal_x(const ContactCongruence& cc, double tol = 1e-8);

}  // namespace lnet
