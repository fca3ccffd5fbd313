#pragma once

// Miquel dynamics: replace a sphere by the other sphere touching its four
// neighbours, on single stars, plane circles and whole congruences.

#include "lnet/lift.hpp"

namespace lnet {

// The second oriented sphere touching s1..s4 (s touches all four).  Returns s itself
// when the polar line of the star is tangent to the Lie quadric at s.  Throws
// DegenerateStar, ContactElementCase or NotASphere.
OrientedSphere miquel_sphere(const OrientedSphere& s, const OrientedSphere* star);

struct MiquelCircle {
  Circle2 circle;
  double residual = 0.0;  // distance of the fourth point from the circle through the others
};

// c meets c[i] and c[i+1] in a common point; the other intersection points of
// consecutive c[i] lie on the returned circle.  Throws NoRealIntersection.
MiquelCircle miquel_circle(const Circle2& c, const Circle2* star);

// Sweeps replace every interior sphere of one color and rebuild each face line as
// the other isotropic line in the tangent plane of the face's fixed pair.  The
// result is cropped by one ring, since boundary stars are incomplete.
ContactCongruence sweep_black(const ContactCongruence& cc);
ContactCongruence sweep_white(const ContactCongruence& cc);
ContactCongruence sweep(const ContactCongruence& cc, Color color);

}  // namespace lnet
