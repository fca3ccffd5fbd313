#include "lnet/transforms.hpp"

#include <cmath>
#include <functional>
#include <random>
#include <string>

namespace lnet {

namespace {

// Matrix of a linear map on Moebius coordinates given as a function.
Matrix5 matrix_of(const std::function<MobiusPoint(const MobiusPoint&)>& f) {
  Matrix5 a;
  for (int k = 0; k < 5; ++k) a.col(k) = f(MobiusPoint::Unit(k));
  return a;
}

// (c, N, D) with N = m3 + m5 and D = m5 - m3.
struct Split {
  LorentzPoint c;
  double n;
  double d;
};
Split split(const MobiusPoint& m) { return {LorentzPoint(m[0], m[1], m[3]), m[2] + m[4], m[4] - m[2]}; }
MobiusPoint join(const Split& s) {
  MobiusPoint m;
  m << s.c[0], s.c[1], 0.5 * (s.n - s.d), s.c[2], 0.5 * (s.n + s.d);
  return m;
}

Eigen::Matrix3d boost(int axis, double phi) {
  Eigen::Matrix3d b = Eigen::Matrix3d::Identity();
  b(axis, axis) = std::cosh(phi);
  b(2, 2) = std::cosh(phi);
  b(axis, 2) = std::sinh(phi);
  b(2, axis) = std::sinh(phi);
  return b;
}

Eigen::Matrix3d rotation_z(double theta) {
  Eigen::Matrix3d r = Eigen::Matrix3d::Identity();
  r(0, 0) = std::cos(theta);
  r(0, 1) = -std::sin(theta);
  r(1, 0) = std::sin(theta);
  r(1, 1) = std::cos(theta);
  return r;
}

// Rotation (same signature) or boost (mixed signature) in the coordinate plane (p, q)
// of a space whose first `pos` coordinates are positive.
template <int N>
Eigen::Matrix<double, N, N> plane_rotation(int p, int q, int pos, double angle) {
  Eigen::Matrix<double, N, N> r = Eigen::Matrix<double, N, N>::Identity();
  const bool mixed = (p < pos) != (q < pos);
  if (mixed) {
    r(p, p) = r(q, q) = std::cosh(angle);
    r(p, q) = r(q, p) = std::sinh(angle);
  } else {
    r(p, p) = r(q, q) = std::cos(angle);
    r(p, q) = -std::sin(angle);
    r(q, p) = std::sin(angle);
  }
  return r;
}

double center_diameter(const ContactCongruence& cc) { return scale_of(cc); }

// Similarity moving the sphere centers of cc into a unit-size region at the origin.
struct Normalizer {
  LorentzPoint center;
  double diameter;
  MobiusTransform to_unit;
};
Normalizer normalizer(const ContactCongruence& cc) {
  LorentzPoint c = LorentzPoint::Zero();
  for (const auto& s : cc.spheres.data()) c += s.center;
  c /= double(cc.spheres.data().size());
  const double d = scale_of(cc);
  return {c, d, MobiusTransform::translation(-c).then(MobiusTransform::scaling(1.0 / d))};
}

template <class T, class Sampler>
T sample_for(const ContactCongruence& cc, std::uint64_t seed, double magnitude, double max_growth, Sampler&& sample) {
  const double d0 = center_diameter(cc);
  for (int attempt = 0; attempt < 100; ++attempt) {
    const T t = sample(seed * 1000003ULL + std::uint64_t(attempt), magnitude);
    try {
      VertexField<OrientedSphere> img(cc.grid());
      for (VertexId v : cc.grid().vertices()) img[v] = apply(t, cc.spheres[v]);
      const double d1 = scale_of(ContactCongruence{img, cc.isolines});
      if (!std::isfinite(d1) || d1 > max_growth * d0 || d1 * max_growth < d0) continue;
      return t;
    } catch (const Error&) {
      continue;
    }
  }
  throw Error(ErrorKind::DegenerateImage, "no admissible transform found in 100 attempts");
}

ContactCongruence rebuild(VertexField<OrientedSphere> spheres, double* fit) {
  ContactCongruence out{std::move(spheres), {}};
  try {
    out.isolines = refit_isolines(out.spheres, fit);
  } catch (const Error& e) {
    throw Error(ErrorKind::DegenerateImage, std::string("face lines could not be rebuilt: ") + e.what());
  }
  return out;
}

}  // namespace

MobiusTransform::MobiusTransform(const Matrix5& a, double tol) : a_(a) {
  const Matrix5 g = mobius_gram();
  const double err = (a.transpose() * g * a - g).norm();
  if (!(err <= tol * std::max(1.0, a.squaredNorm()))) {
    throw Error(ErrorKind::InvalidTransform, "matrix does not preserve the Moebius form");
  }
}

MobiusTransform MobiusTransform::then(const MobiusTransform& next) const {
  MobiusTransform out;
  out.a_ = next.a_ * a_;
  return out;
}

MobiusTransform MobiusTransform::inverse() const {
  MobiusTransform out;
  const Matrix5 g = mobius_gram();
  out.a_ = g * a_.transpose() * g;
  return out;
}

MobiusTransform MobiusTransform::translation(const LorentzPoint& t) {
  return MobiusTransform(matrix_of([&](const MobiusPoint& m) {
    Split s = split(m);
    const double d = s.d + 2.0 * lorentz_dot(s.c, t) + lorentz_norm_sq(t) * s.n;
    s.c += t * s.n;
    s.d = d;
    return join(s);
  }));
}

MobiusTransform MobiusTransform::scaling(double lambda) {
  if (!(lambda > 0)) throw Error(ErrorKind::InvalidTransform, "scaling factor must be positive");
  return MobiusTransform(matrix_of([&](const MobiusPoint& m) {
    Split s = split(m);
    s.n /= lambda;
    s.d *= lambda;
    return join(s);
  }));
}

MobiusTransform MobiusTransform::lorentz(const Eigen::Matrix3d& l) {
  const Eigen::Matrix3d j = lorentz_gram();
  if ((l.transpose() * j * l - j).norm() > 1e-9 * std::max(1.0, l.squaredNorm())) {
    throw Error(ErrorKind::InvalidTransform, "matrix is not a Lorentz isometry");
  }
  return MobiusTransform(matrix_of([&](const MobiusPoint& m) {
    Split s = split(m);
    s.c = l * s.c;
    return join(s);
  }));
}

MobiusTransform MobiusTransform::inversion(const LorentzPoint& center, double radius_sq) {
  if (radius_sq == 0.0) throw Error(ErrorKind::InvalidTransform, "inversion radius must be nonzero");
  MobiusPoint flip;
  flip << 1, 1, -1, 1, 1;
  const MobiusTransform unit_inv(Matrix5(flip.asDiagonal()));
  const double r = std::sqrt(std::abs(radius_sq));
  MobiusTransform t = translation(-center).then(scaling(1.0 / r)).then(unit_inv);
  if (radius_sq < 0) t = t.then(lorentz(-Eigen::Matrix3d::Identity()));
  return t.then(scaling(r)).then(translation(center));
}

LaguerreTransform::LaguerreTransform(const Eigen::Matrix4d& b, const CycloPoint& t, double tol) : b_(b), t_(t) {
  const Eigen::Matrix4d h = cyclo_gram();
  const Eigen::Matrix4d m = b.transpose() * h * b;
  s_ = (h * m).trace() / 4.0;
  if (!(s_ > 0) || (m - s_ * h).norm() > tol * std::max(1.0, s_)) {
    throw Error(ErrorKind::InvalidTransform, "matrix is not a Laguerre similarity");
  }
}

LieTransform::LieTransform(const Matrix6& c, double tol) : c_(c) {
  const Matrix6 k = lie_gram();
  if ((c.transpose() * k * c - k).norm() > tol * std::max(1.0, c.squaredNorm())) {
    throw Error(ErrorKind::InvalidTransform, "matrix does not preserve the Lie form");
  }
}

LieTransform LieTransform::from_mobius(const MobiusTransform& m) {
  Matrix6 c = Matrix6::Identity();
  c.topLeftCorner<5, 5>() = m.matrix();
  return LieTransform(c);
}

OrientedSphere apply(const MobiusTransform& t, const OrientedSphere& s) {
  return apply(LieTransform::from_mobius(t), s);
}

LorentzPoint apply(const MobiusTransform& t, const LorentzPoint& x) {
  return point_from_mobius(t.matrix() * mobius_lift(x), 1e-10);
}

OrientedSphere apply(const LaguerreTransform& t, const OrientedSphere& s) {
  return from_cyclo(t.matrix() * to_cyclo(s) + t.translation());
}

OrientedSphere apply(const LieTransform& t, const OrientedSphere& s) {
  return from_lie(t.matrix() * lie_lift(s), 1e-10);
}

ContactCongruence apply_mobius(const MobiusTransform& t, const ContactCongruence& cc, double* fit) {
  return apply_lie(LieTransform::from_mobius(t), cc, fit);
}

ContactCongruence apply_laguerre(const LaguerreTransform& t, const ContactCongruence& cc, double* fit) {
  VertexField<OrientedSphere> s(cc.grid());
  for (VertexId v : cc.grid().vertices()) s[v] = apply(t, cc.spheres[v]);
  return rebuild(std::move(s), fit);
}

ContactCongruence apply_lie(const LieTransform& t, const ContactCongruence& cc, double* fit) {
  VertexField<OrientedSphere> s(cc.grid());
  for (VertexId v : cc.grid().vertices()) s[v] = apply(t, cc.spheres[v]);
  return rebuild(std::move(s), fit);
}

MobiusTransform sample_mobius(std::uint64_t seed, double magnitude) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  const double far = 2.0 / std::max(magnitude, 1e-6);
  const LorentzPoint c0(magnitude * u(rng), magnitude * u(rng), -far * (1.0 + 0.25 * u(rng)));
  const MobiusTransform inv = MobiusTransform::inversion(c0, lorentz_norm_sq(c0));
  const Eigen::Matrix3d l =
      rotation_z(3.0 * magnitude * u(rng)) * boost(0, magnitude * u(rng)) * boost(1, magnitude * u(rng));
  const LorentzPoint t(magnitude * u(rng), magnitude * u(rng), magnitude * u(rng));
  return inv.then(MobiusTransform::lorentz(l))
      .then(MobiusTransform::scaling(std::exp(magnitude * u(rng))))
      .then(MobiusTransform::translation(t));
}

LaguerreTransform sample_laguerre(std::uint64_t seed, double magnitude) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  Eigen::Matrix4d b = Eigen::Matrix4d::Identity();
  for (auto [p, q] : {std::pair{0, 1}, {2, 3}, {0, 2}, {0, 3}, {1, 2}, {1, 3}})
    b = plane_rotation<4>(p, q, 2, magnitude * u(rng)) * b;
  b *= std::exp(magnitude * u(rng));
  const CycloPoint t(magnitude * u(rng), magnitude * u(rng), magnitude * u(rng), magnitude * u(rng));
  return LaguerreTransform(b, t);
}

LieTransform sample_lie(std::uint64_t seed, double magnitude) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  Matrix6 c = Matrix6::Identity();
  for (int k = 0; k < 8; ++k) {
    const int p = int(rng() % 6);
    int q = int(rng() % 5);
    if (q >= p) ++q;
    c = plane_rotation<6>(p, q, 3, magnitude * u(rng)) * c;
  }
  return LieTransform(c);
}

MobiusTransform sample_mobius_for(const ContactCongruence& cc, std::uint64_t seed, double magnitude,
                                  double max_growth) {
  const Normalizer n = normalizer(cc);
  return sample_for<MobiusTransform>(cc, seed, magnitude, max_growth, [&](std::uint64_t s, double m) {
    return n.to_unit.then(sample_mobius(s, m)).then(n.to_unit.inverse());
  });
}

LaguerreTransform sample_laguerre_for(const ContactCongruence& cc, std::uint64_t seed, double magnitude,
                                      double max_growth) {
  const Normalizer n = normalizer(cc);
  const CycloPoint c(n.center[0], n.center[1], n.center[2], 0.0);
  return sample_for<LaguerreTransform>(cc, seed, magnitude, max_growth, [&](std::uint64_t s, double m) {
    const LaguerreTransform t = sample_laguerre(s, m);
    return LaguerreTransform(t.matrix(), c - t.matrix() * c + n.diameter * t.translation());
  });
}

LieTransform sample_lie_for(const ContactCongruence& cc, std::uint64_t seed, double magnitude, double max_growth) {
  const Normalizer n = normalizer(cc);
  const Matrix6 to = LieTransform::from_mobius(n.to_unit).matrix();
  const Matrix6 from = LieTransform::from_mobius(n.to_unit.inverse()).matrix();
  return sample_for<LieTransform>(cc, seed, magnitude, max_growth, [&](std::uint64_t s, double m) {
    return LieTransform(from * sample_lie(s, m).matrix() * to);
  });
}

}  // namespace lnet
