#pragma once

#include "torusphase/geometry.hpp"

namespace torusphase {

// Centered finite-difference probes. Kept deliberately independent of the
// closed-form expressions in geometry.hpp so they can act as cross-checks;
// the closed forms stay the primary path everywhere else.

template <typename Scalar>
inline constexpr Scalar default_fd_step = Scalar(1e-5);

template <typename Scalar>
Vec3<Scalar> fd_embed_partial_theta(const TorusShape<Scalar>& shape,
                                    const ParamPoint<Scalar>& p,
                                    Scalar h = default_fd_step<Scalar>) {
  const Vec3<Scalar> fwd = embed(shape, ParamPoint<Scalar>(p.theta + h, p.psi));
  const Vec3<Scalar> bwd = embed(shape, ParamPoint<Scalar>(p.theta - h, p.psi));
  return (fwd - bwd) / (Scalar(2) * h);
}

template <typename Scalar>
Vec3<Scalar> fd_embed_partial_psi(const TorusShape<Scalar>& shape,
                                  const ParamPoint<Scalar>& p,
                                  Scalar h = default_fd_step<Scalar>) {
  const Vec3<Scalar> fwd = embed(shape, ParamPoint<Scalar>(p.theta, p.psi + h));
  const Vec3<Scalar> bwd = embed(shape, ParamPoint<Scalar>(p.theta, p.psi - h));
  return (fwd - bwd) / (Scalar(2) * h);
}

/// Connection assembled from the complex frame by centered differences:
/// a_mu = Re[ i e_plus(p)^dagger (e_plus(p + h e_mu) - e_plus(p - h e_mu)) / (2h) ].
template <typename Scalar>
OneFormSample<Scalar> fd_connection(const TorusShape<Scalar>& shape,
                                    const ParamPoint<Scalar>& p,
                                    Scalar h = default_fd_step<Scalar>) {
  using C = std::complex<Scalar>;
  const CVec3<Scalar> center = complex_frame(shape, p).e_plus;
  const auto partial = [&](const CVec3<Scalar>& fwd, const CVec3<Scalar>& bwd) {
    const CVec3<Scalar> d = (fwd - bwd) / C(Scalar(2) * h, 0);
    return (C(0, 1) * center.dot(d)).real();  // dot conjugates its receiver
  };
  const Scalar a_theta =
      partial(complex_frame(shape, ParamPoint<Scalar>(p.theta + h, p.psi)).e_plus,
              complex_frame(shape, ParamPoint<Scalar>(p.theta - h, p.psi)).e_plus);
  const Scalar a_psi =
      partial(complex_frame(shape, ParamPoint<Scalar>(p.theta, p.psi + h)).e_plus,
              complex_frame(shape, ParamPoint<Scalar>(p.theta, p.psi - h)).e_plus);
  return {a_theta, a_psi};
}

/// Exterior derivative of a sampled one-form by centered differences:
/// f_theta_psi = d(a_psi)/d(theta) - d(a_theta)/d(psi).
template <typename Scalar, typename OneForm>
TwoFormSample<Scalar> fd_exterior_derivative(const OneForm& one_form,
                                             const ParamPoint<Scalar>& p,
                                             Scalar h = default_fd_step<Scalar>) {
  const Scalar da_psi_dtheta =
      (one_form(ParamPoint<Scalar>(p.theta + h, p.psi)).a_psi -
       one_form(ParamPoint<Scalar>(p.theta - h, p.psi)).a_psi) /
      (Scalar(2) * h);
  const Scalar da_theta_dpsi =
      (one_form(ParamPoint<Scalar>(p.theta, p.psi + h)).a_theta -
       one_form(ParamPoint<Scalar>(p.theta, p.psi - h)).a_theta) /
      (Scalar(2) * h);
  return {da_psi_dtheta - da_theta_dpsi};
}

}  // namespace torusphase
