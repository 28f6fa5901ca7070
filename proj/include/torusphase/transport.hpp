#pragma once

#include "torusphase/geometry.hpp"

#include <limits>
#include <utility>

namespace torusphase {

/// Tangent vector expressed in the orthonormal frame (e_theta, e_psi).
template <typename Scalar>
struct TangentVec {
  Scalar v_theta;
  Scalar v_psi;

  Scalar norm() const { return std::hypot(v_theta, v_psi); }
};

/// Components in the complex basis: v = v_plus e_plus + v_minus e_minus.
template <typename Scalar>
struct ComplexComp {
  std::complex<Scalar> v_plus;
  std::complex<Scalar> v_minus;
};

/// Piecewise-smooth closed loop t in [0,1] -> (theta(t), psi(t)) with
/// analytic derivatives. Angles are raw (unwrapped) so winding survives;
/// the constructor enforces theta(1) - theta(0) = 2*pi*winding_theta and
/// likewise for psi.
template <typename Scalar>
struct ClosedPath {
  std::function<Scalar(Scalar)> theta;
  std::function<Scalar(Scalar)> psi;
  std::function<Scalar(Scalar)> theta_dot;
  std::function<Scalar(Scalar)> psi_dot;
  int winding_theta = 0;
  int winding_psi = 0;

  ClosedPath(std::function<Scalar(Scalar)> theta_fn, std::function<Scalar(Scalar)> psi_fn,
             std::function<Scalar(Scalar)> theta_dot_fn,
             std::function<Scalar(Scalar)> psi_dot_fn, int w_theta, int w_psi)
      : theta(std::move(theta_fn)),
        psi(std::move(psi_fn)),
        theta_dot(std::move(theta_dot_fn)),
        psi_dot(std::move(psi_dot_fn)),
        winding_theta(w_theta),
        winding_psi(w_psi) {
    const Scalar tol = Scalar(1e5) * std::numeric_limits<Scalar>::epsilon();
    const Scalar dtheta = theta(Scalar(1)) - theta(Scalar(0)) - two_pi<Scalar> * w_theta;
    const Scalar dpsi = psi(Scalar(1)) - psi(Scalar(0)) - two_pi<Scalar> * w_psi;
    if (std::abs(dtheta) > tol || std::abs(dpsi) > tol) {
      throw std::invalid_argument(
          "ClosedPath: endpoints do not match the declared winding numbers");
    }
  }
};

/// Net rotation after parallel transport around a loop. The transported
/// vector is rotated clockwise by gamma in the (e_theta, e_psi) frame.
template <typename Scalar>
struct HolonomyResult {
  Scalar gamma_raw;
  Scalar gamma_mod;       // gamma_raw reduced to [0, 2*pi)
  Mat2<Scalar> rotation;  // [[cos g, sin g], [-sin g, cos g]] at gamma_raw
};

template <typename Scalar>
HolonomyResult<Scalar> make_holonomy_result(Scalar gamma_raw) {
  const Scalar c = std::cos(gamma_raw), s = std::sin(gamma_raw);
  HolonomyResult<Scalar> r;
  r.gamma_raw = gamma_raw;
  r.gamma_mod = wrap_angle(gamma_raw);
  r.rotation << c, s, -s, c;
  return r;
}

/// v_plus = (v_theta - i v_psi)/sqrt(2), v_minus = (v_theta + i v_psi)/sqrt(2).
template <typename Scalar>
ComplexComp<Scalar> to_complex(const TangentVec<Scalar>& v) {
  using C = std::complex<Scalar>;
  const Scalar inv_sqrt2 = Scalar(1) / std::sqrt(Scalar(2));
  return {C(v.v_theta, -v.v_psi) * inv_sqrt2, C(v.v_theta, v.v_psi) * inv_sqrt2};
}

template <typename Scalar>
TangentVec<Scalar> from_complex(const ComplexComp<Scalar>& c) {
  using C = std::complex<Scalar>;
  const Scalar inv_sqrt2 = Scalar(1) / std::sqrt(Scalar(2));
  return {((c.v_plus + c.v_minus) * inv_sqrt2).real(),
          (C(0, 1) * (c.v_plus - c.v_minus) * inv_sqrt2).real()};
}

namespace detail {

// Composite trapezoid on the periodic parameter [0,1]; endpoints identified.
template <typename Scalar, typename Fn>
Scalar periodic_trapezoid(const Fn& integrand, int steps) {
  Scalar sum = Scalar(0);
  for (int k = 0; k < steps; ++k) {
    sum += integrand(Scalar(k) / Scalar(steps));
  }
  return sum / Scalar(steps);
}

}  // namespace detail

/// Holonomy angle gamma = loop integral of sin(psi) dtheta, with the induced
/// clockwise rotation matrix.
template <typename Scalar>
HolonomyResult<Scalar> holonomy(const ClosedPath<Scalar>& path, int quad_steps) {
  if (quad_steps < 16) {
    throw std::invalid_argument("holonomy: quad_steps must be at least 16");
  }
  const Scalar gamma = detail::periodic_trapezoid<Scalar>(
      [&](Scalar t) { return std::sin(path.psi(t)) * path.theta_dot(t); }, quad_steps);
  return make_holonomy_result(gamma);
}

/// Loop integral of the gauge-transformed connection A + d(chi).
template <typename Scalar>
HolonomyResult<Scalar> holonomy_after_gauge(const ClosedPath<Scalar>& path,
                                            const GaugeField<Scalar>& chi,
                                            int quad_steps) {
  if (quad_steps < 16) {
    throw std::invalid_argument("holonomy_after_gauge: quad_steps must be at least 16");
  }
  const Scalar gamma = detail::periodic_trapezoid<Scalar>(
      [&](Scalar t) {
        const Scalar th = path.theta(t), ps = path.psi(t);
        return (std::sin(ps) + chi.d_theta(th, ps)) * path.theta_dot(t) +
               chi.d_psi(th, ps) * path.psi_dot(t);
      },
      quad_steps);
  return make_holonomy_result(gamma);
}

/// Integrates the transport equation dv_plus/dt = i sin(psi(t)) theta'(t) v_plus
/// with the classical fixed-step 4th-order Runge-Kutta scheme and returns the
/// transported vector in the real frame.
template <typename Scalar>
TangentVec<Scalar> parallel_transport(const ClosedPath<Scalar>& path,
                                      const TangentVec<Scalar>& v0, int ode_steps) {
  using C = std::complex<Scalar>;
  if (ode_steps < 64) {
    throw std::invalid_argument("parallel_transport: ode_steps must be at least 64");
  }
  const auto rhs = [&](Scalar t, C v) {
    return C(0, 1) * std::sin(path.psi(t)) * path.theta_dot(t) * v;
  };
  const Scalar h = Scalar(1) / Scalar(ode_steps);
  C v = to_complex(v0).v_plus;
  for (int k = 0; k < ode_steps; ++k) {
    const Scalar t = Scalar(k) * h;
    const C k1 = rhs(t, v);
    const C k2 = rhs(t + h / Scalar(2), v + (h / Scalar(2)) * k1);
    const C k3 = rhs(t + h / Scalar(2), v + (h / Scalar(2)) * k2);
    const C k4 = rhs(t + h, v + h * k3);
    v += (h / Scalar(6)) * (k1 + Scalar(2) * (k2 + k3) + k4);
  }
  return from_complex(ComplexComp<Scalar>{v, std::conj(v)});
}

/// Applies the clockwise holonomy rotation to a tangent vector.
template <typename Scalar>
TangentVec<Scalar> rotate_by_holonomy(Scalar gamma, const TangentVec<Scalar>& v0) {
  const Scalar c = std::cos(gamma), s = std::sin(gamma);
  return {c * v0.v_theta + s * v0.v_psi, -s * v0.v_theta + c * v0.v_psi};
}

/// Latitude circle psi = psi0 traversed `winding` times in theta.
template <typename Scalar>
ClosedPath<Scalar> latitude_loop(Scalar psi0, int winding = 1) {
  const Scalar rate = two_pi<Scalar> * winding;
  return ClosedPath<Scalar>([rate](Scalar t) { return rate * t; },
                            [psi0](Scalar) { return psi0; },
                            [rate](Scalar) { return rate; }, [](Scalar) { return Scalar(0); },
                            winding, 0);
}

/// Meridian circle theta = theta0 traversed `winding` times in psi.
template <typename Scalar>
ClosedPath<Scalar> meridian_loop(Scalar theta0, int winding = 1) {
  const Scalar rate = two_pi<Scalar> * winding;
  return ClosedPath<Scalar>([theta0](Scalar) { return theta0; },
                            [rate](Scalar t) { return rate * t; },
                            [](Scalar) { return Scalar(0); }, [rate](Scalar) { return rate; },
                            0, winding);
}

/// Same loop traversed in the opposite orientation.
template <typename Scalar>
ClosedPath<Scalar> reversed(const ClosedPath<Scalar>& path) {
  auto theta = path.theta;
  auto psi = path.psi;
  auto theta_dot = path.theta_dot;
  auto psi_dot = path.psi_dot;
  return ClosedPath<Scalar>(
      [theta](Scalar t) { return theta(Scalar(1) - t); },
      [psi](Scalar t) { return psi(Scalar(1) - t); },
      [theta_dot](Scalar t) { return -theta_dot(Scalar(1) - t); },
      [psi_dot](Scalar t) { return -psi_dot(Scalar(1) - t); }, -path.winding_theta,
      -path.winding_psi);
}

}  // namespace torusphase
