#pragma once

// Moebius, Laguerre and Lie sphere transformations acting on oriented spheres and on
// contact congruences (face lines are rebuilt from the transformed spheres).

#include <cstdint>

#include "lnet/lift.hpp"

namespace lnet {

using Matrix5 = Eigen::Matrix<double, 5, 5>;
using Matrix6 = Eigen::Matrix<double, 6, 6>;

// A with A^T G A = G for G = diag(1,1,1,-1,-1).
class MobiusTransform {
 public:
  MobiusTransform() : a_(Matrix5::Identity()) {}
  explicit MobiusTransform(const Matrix5& a, double tol = 1e-9);

  const Matrix5& matrix() const { return a_; }
  MobiusTransform then(const MobiusTransform& next) const;  // next after this
  MobiusTransform inverse() const;

  static MobiusTransform translation(const LorentzPoint& t);
  static MobiusTransform scaling(double lambda);
  // Linear Lorentz isometry L (L^T J L = J) fixing the origin.
  static MobiusTransform lorentz(const Eigen::Matrix3d& l);
  // Inversion in the sphere with the given center and rho^2 = radius_sq (either sign).
  static MobiusTransform inversion(const LorentzPoint& center, double radius_sq);

 private:
  Matrix5 a_;
};

// y -> B y + t on cyclographic points with B^T H B = s H, s > 0.
class LaguerreTransform {
 public:
  LaguerreTransform() : b_(Eigen::Matrix4d::Identity()), t_(CycloPoint::Zero()) {}
  LaguerreTransform(const Eigen::Matrix4d& b, const CycloPoint& t, double tol = 1e-9);

  const Eigen::Matrix4d& matrix() const { return b_; }
  const CycloPoint& translation() const { return t_; }
  double scale() const { return s_; }

 private:
  Eigen::Matrix4d b_;
  CycloPoint t_;
  double s_ = 1.0;
};

// C with C^T K C = K for K = diag(1,1,1,-1,-1,-1).
class LieTransform {
 public:
  LieTransform() : c_(Matrix6::Identity()) {}
  explicit LieTransform(const Matrix6& c, double tol = 1e-9);
  static LieTransform from_mobius(const MobiusTransform& m);

  const Matrix6& matrix() const { return c_; }

 private:
  Matrix6 c_;
};

OrientedSphere apply(const MobiusTransform& t, const OrientedSphere& s);
LorentzPoint apply(const MobiusTransform& t, const LorentzPoint& x);
OrientedSphere apply(const LaguerreTransform& t, const OrientedSphere& s);
OrientedSphere apply(const LieTransform& t, const OrientedSphere& s);

// Throws DegenerateImage when a sphere goes to a plane or the face lines cannot be
// rebuilt.  `fit` receives the largest plane-fit residual of the rebuilt lines.
ContactCongruence apply_mobius(const MobiusTransform& t, const ContactCongruence& cc, double* fit = nullptr);
ContactCongruence apply_laguerre(const LaguerreTransform& t, const ContactCongruence& cc, double* fit = nullptr);
ContactCongruence apply_lie(const LieTransform& t, const ContactCongruence& cc, double* fit = nullptr);

// Random transforms of controlled size near the identity; `magnitude` scales the
// translation, boost, rotation and scaling parameters.
MobiusTransform sample_mobius(std::uint64_t seed, double magnitude = 0.3);
LaguerreTransform sample_laguerre(std::uint64_t seed, double magnitude = 0.3);
LieTransform sample_lie(std::uint64_t seed, double magnitude = 0.3);

// Rejection-sample (at most 100 tries) a transform that keeps every sphere of cc
// finite, with the image's center diameter within `max_growth` of the original.
MobiusTransform sample_mobius_for(const ContactCongruence& cc, std::uint64_t seed, double magnitude = 0.3,
                                  double max_growth = 10.0);
LaguerreTransform sample_laguerre_for(const ContactCongruence& cc, std::uint64_t seed, double magnitude = 0.3,
                                      double max_growth = 10.0);
LieTransform sample_lie_for(const ContactCongruence& cc, std::uint64_t seed, double magnitude = 0.3,
                            double max_growth = 10.0);

}  // namespace lnet
