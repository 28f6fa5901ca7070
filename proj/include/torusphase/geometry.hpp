#pragma once

#include "torusphase/types.hpp"

#include <functional>

namespace torusphase {

/// Orthonormal moving frame at a parameter point, with the scale factors
/// that convert coordinate differentials into arc length.
template <typename Scalar>
struct Frame {
  Vec3<Scalar> e_theta;
  Vec3<Scalar> e_psi;
  Vec3<Scalar> e_perp;  // e_theta x e_psi, right-handed
  Scalar h_theta;       // b + a*cos(psi)
  Scalar h_psi;         // a
};

/// Complex tangent basis e_plus = (e_theta + i e_psi)/sqrt(2) and its
/// conjugate. Plays the role of a normalized state over the parameter torus.
template <typename Scalar>
struct ComplexFrame {
  CVec3<Scalar> e_plus;
  CVec3<Scalar> e_minus;
};

/// Sample of a one-form written as a_theta*dtheta + a_psi*dpsi.
template <typename Scalar>
struct OneFormSample {
  Scalar a_theta;
  Scalar a_psi;
};

/// Sample of a two-form written as f_theta_psi * dtheta ^ dpsi.
template <typename Scalar>
struct TwoFormSample {
  Scalar f_theta_psi;
};

/// Area-element coefficients per dtheta*dpsi: on the surface itself and on
/// the unit sphere under the Gauss map.
template <typename Scalar>
struct AreaElements {
  Scalar surface;    // a*(b + a*cos(psi))
  Scalar gauss_map;  // cos(psi)
};

/// Smooth scalar field chi(theta, psi) supplied together with its analytic
/// partial derivatives. Fields with winding (e.g. chi = theta) are allowed;
/// only the partials must be 2*pi-periodic.
template <typename Scalar>
struct GaugeField {
  std::function<Scalar(Scalar, Scalar)> value;
  std::function<Scalar(Scalar, Scalar)> d_theta;
  std::function<Scalar(Scalar, Scalar)> d_psi;
};

template <typename Scalar>
struct TangentPair {
  Vec3<Scalar> e_theta;
  Vec3<Scalar> e_psi;
};

/// Embedding of the parameter torus in R^3.
template <typename Scalar>
Vec3<Scalar> embed(const TorusShape<Scalar>& shape, const ParamPoint<Scalar>& p) {
  const Scalar a = shape.minor_radius;
  const Scalar b = shape.major_radius;
  const Scalar ct = std::cos(p.theta), st = std::sin(p.theta);
  const Scalar cp = std::cos(p.psi), sp = std::sin(p.psi);
  return Vec3<Scalar>((b + a * cp) * ct, (b + a * cp) * st, a * sp);
}

/// Orthonormal tangent/normal frame and scale factors at a point.
template <typename Scalar>
Frame<Scalar> frame(const TorusShape<Scalar>& shape, const ParamPoint<Scalar>& p) {
  const Scalar ct = std::cos(p.theta), st = std::sin(p.theta);
  const Scalar cp = std::cos(p.psi), sp = std::sin(p.psi);
  Frame<Scalar> f;
  f.e_theta = Vec3<Scalar>(-st, ct, Scalar(0));
  f.e_psi = Vec3<Scalar>(-sp * ct, -sp * st, cp);
  f.e_perp = f.e_theta.cross(f.e_psi);
  f.h_theta = shape.major_radius + shape.minor_radius * cp;
  f.h_psi = shape.minor_radius;
  return f;
}

template <typename Scalar>
ComplexFrame<Scalar> complex_frame(const TorusShape<Scalar>& shape,
                                   const ParamPoint<Scalar>& p) {
  using C = std::complex<Scalar>;
  const Frame<Scalar> f = frame(shape, p);
  const Scalar inv_sqrt2 = Scalar(1) / std::sqrt(Scalar(2));
  ComplexFrame<Scalar> cf;
  cf.e_plus = (f.e_theta.template cast<C>() + C(0, 1) * f.e_psi.template cast<C>()) * inv_sqrt2;
  cf.e_minus = cf.e_plus.conjugate();
  return cf;
}

/// Connection one-form of the complex frame: A = i e_plus^* . d(e_plus)
/// evaluates to sin(psi) dtheta on the torus.
template <typename Scalar>
OneFormSample<Scalar> connection(const ParamPoint<Scalar>& p) {
  return {std::sin(p.psi), Scalar(0)};
}

/// Curvature two-form F = dA = -cos(psi) dtheta ^ dpsi.
template <typename Scalar>
TwoFormSample<Scalar> curvature(const ParamPoint<Scalar>& p) {
  return {-std::cos(p.psi)};
}

/// Gaussian curvature, the ratio of the Gauss-map area element to the
/// surface area element: cos(psi) / (a*(b + a*cos(psi))).
template <typename Scalar>
Scalar gaussian_curvature(const TorusShape<Scalar>& shape, const ParamPoint<Scalar>& p) {
  const Scalar a = shape.minor_radius;
  const Scalar b = shape.major_radius;
  const Scalar cp = std::cos(p.psi);
  return cp / (a * (b + a * cp));
}

template <typename Scalar>
AreaElements<Scalar> area_elements(const TorusShape<Scalar>& shape,
                                   const ParamPoint<Scalar>& p) {
  const Scalar a = shape.minor_radius;
  const Scalar b = shape.major_radius;
  const Scalar cp = std::cos(p.psi);
  return {a * (b + a * cp), cp};
}

/// Connection in vector form: (a_theta/h_theta) e_theta + (a_psi/h_psi) e_psi.
template <typename Scalar>
Vec3<Scalar> vector_potential(const TorusShape<Scalar>& shape, const ParamPoint<Scalar>& p) {
  const Frame<Scalar> f = frame(shape, p);
  const OneFormSample<Scalar> a = connection(p);
  return (a.a_theta / f.h_theta) * f.e_theta + (a.a_psi / f.h_psi) * f.e_psi;
}

/// Curvature in vector form: (f_theta_psi / (h_theta*h_psi)) e_perp, which
/// equals -K e_perp.
template <typename Scalar>
Vec3<Scalar> curvature_vector(const TorusShape<Scalar>& shape, const ParamPoint<Scalar>& p) {
  const Frame<Scalar> f = frame(shape, p);
  return (curvature(p).f_theta_psi / (f.h_theta * f.h_psi)) * f.e_perp;
}

/// Gauge-transformed connection A' = A + d(chi).
template <typename Scalar>
OneFormSample<Scalar> gauge_transform_connection(const ParamPoint<Scalar>& p,
                                                 const GaugeField<Scalar>& chi) {
  return {std::sin(p.psi) + chi.d_theta(p.theta, p.psi), chi.d_psi(p.theta, p.psi)};
}

/// Real tangent pair induced by e_plus' = exp(-i*chi) e_plus:
///   e_theta' =  cos(chi) e_theta + sin(chi) e_psi
///   e_psi'   = -sin(chi) e_theta + cos(chi) e_psi
/// This is the rotation consistent with A' = A + d(chi).
template <typename Scalar>
TangentPair<Scalar> gauge_rotate_frame(const TorusShape<Scalar>& shape,
                                       const ParamPoint<Scalar>& p, Scalar chi_value) {
  const Frame<Scalar> f = frame(shape, p);
  const Scalar c = std::cos(chi_value), s = std::sin(chi_value);
  return {c * f.e_theta + s * f.e_psi, -s * f.e_theta + c * f.e_psi};
}

}  // namespace torusphase
