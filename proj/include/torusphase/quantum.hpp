#pragma once

#include "torusphase/transport.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <vector>

namespace torusphase {

template <typename Scalar>
using Spinor = Eigen::Matrix<std::complex<Scalar>, 2, 1>;

/// Amplitudes of the driving field B = ((beta + alpha cos psi) cos theta,
/// (beta + alpha cos psi) sin theta, alpha sin psi). beta > alpha keeps
/// |B| >= beta - alpha > 0, so the two levels never touch.
template <typename Scalar>
struct FieldParams {
  Scalar alpha;
  Scalar beta;
  Scalar mu;
  Scalar hbar;

  FieldParams(Scalar alpha_in, Scalar beta_in, Scalar mu_in, Scalar hbar_in = Scalar(1))
      : alpha(alpha_in), beta(beta_in), mu(mu_in), hbar(hbar_in) {
    if (!(alpha > Scalar(0)) || !(beta > alpha)) {
      throw std::invalid_argument("FieldParams: requires beta > alpha > 0");
    }
    if (!(mu > Scalar(0)) || !(hbar > Scalar(0))) {
      throw std::invalid_argument("FieldParams: requires mu > 0 and hbar > 0");
    }
  }
};

template <typename Scalar>
struct EigenPair {
  Scalar energy;
  Spinor<Scalar> state;
};

template <typename Scalar>
struct EigenSystem {
  EigenPair<Scalar> ground;   // energy -mu*|B|
  EigenPair<Scalar> excited;  // energy +mu*|B|
};

/// Closed loop in parameter space traversed over total_time with a fixed
/// number of propagator steps.
template <typename Scalar>
struct DriveSchedule {
  ClosedPath<Scalar> path;
  Scalar total_time;
  int steps;
};

template <typename Scalar>
struct PhaseReport {
  Scalar total_phase;       // arg<n(T)|Psi(T)>, principal value
  Scalar dynamical_phase;   // -(1/hbar) * integral of E_ground dt
  Scalar geometric_phase;   // (total - dynamical) mod 2*pi
  Scalar residual_nonadiabaticity;  // 1 - |<n(T)|Psi(T)>|^2
  bool adiabatic_warning;           // residual above 1e-2: T too small
  Scalar max_norm_deviation;        // worst |norm(Psi) - 1| seen while stepping
};

template <typename Scalar>
struct EvolutionResult {
  Spinor<Scalar> final_state;
  PhaseReport<Scalar> report;
};

template <typename Scalar>
struct ConnectionSample {
  Scalar value;               // i <n | dn/dt>, real by norm preservation
  Scalar imaginary_residual;  // leftover imaginary part, a diagnostic
};

template <typename Scalar>
struct BerryPhase {
  Scalar gamma_raw;
  Scalar gamma_mod;  // gamma_raw reduced to [0, 2*pi)
  Scalar max_imaginary_residual;
};

/// Raised when consecutive eigenstate samples along a path overlap too
/// little for phase tracking (the sampling step is too large).
class GaugeTrackingError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Single-valued time-dependent phase twist chi(t) applied to the tracked
/// eigenstate, for gauge-invariance experiments.
template <typename Scalar>
using GaugeTwist = std::function<Scalar(Scalar)>;

template <typename Scalar>
Vec3<Scalar> b_field(const FieldParams<Scalar>& params, const ParamPoint<Scalar>& p) {
  const Scalar ct = std::cos(p.theta), st = std::sin(p.theta);
  const Scalar cp = std::cos(p.psi), sp = std::sin(p.psi);
  const Scalar ring = params.beta + params.alpha * cp;
  return Vec3<Scalar>(ring * ct, ring * st, params.alpha * sp);
}

/// H = -mu * (B . sigma) for an arbitrary field vector.
template <typename Scalar>
CMat2<Scalar> pauli_hamiltonian(Scalar mu, const Vec3<Scalar>& b) {
  using C = std::complex<Scalar>;
  CMat2<Scalar> h;
  h << C(-mu * b.z(), 0), C(-mu * b.x(), mu * b.y()),
       C(-mu * b.x(), -mu * b.y()), C(mu * b.z(), 0);
  return h;
}

template <typename Scalar>
CMat2<Scalar> hamiltonian(const FieldParams<Scalar>& params, const ParamPoint<Scalar>& p) {
  return pauli_hamiltonian(params.mu, b_field(params, p));
}

namespace detail {

// Makes the largest-magnitude component real positive (ties pick the first).
template <typename Scalar>
Spinor<Scalar> phase_fix_largest(Spinor<Scalar> v) {
  const int idx = std::abs(v[0]) >= std::abs(v[1]) ? 0 : 1;
  const Scalar mag = std::abs(v[idx]);
  if (mag > Scalar(0)) v *= std::conj(v[idx]) / mag;
  return v;
}

// Rephases v so that <ref|v> is real positive.
template <typename Scalar>
Spinor<Scalar> align_phase(Spinor<Scalar> v, const Spinor<Scalar>& ref) {
  const std::complex<Scalar> overlap = ref.dot(v);
  const Scalar mag = std::abs(overlap);
  if (mag > Scalar(0)) v *= std::conj(overlap) / mag;
  return v;
}

}  // namespace detail

/// Eigenpairs for an arbitrary field vector, solved numerically and given
/// the deterministic gauge: largest-magnitude component real positive.
template <typename Scalar>
EigenSystem<Scalar> pauli_eigenstates(Scalar mu, const Vec3<Scalar>& b) {
  if (!(b.norm() > Scalar(0))) {
    throw std::invalid_argument("pauli_eigenstates: field vector must be nonzero");
  }
  Eigen::SelfAdjointEigenSolver<CMat2<Scalar>> solver(pauli_hamiltonian(mu, b));
  EigenSystem<Scalar> sys;
  sys.ground = {solver.eigenvalues()[0],
                detail::phase_fix_largest<Scalar>(solver.eigenvectors().col(0))};
  sys.excited = {solver.eigenvalues()[1],
                 detail::phase_fix_largest<Scalar>(solver.eigenvectors().col(1))};
  return sys;
}

template <typename Scalar>
EigenSystem<Scalar> eigenstates(const FieldParams<Scalar>& params, const ParamPoint<Scalar>& p) {
  return pauli_eigenstates(params.mu, b_field(params, p));
}

/// Closed-form section of the ground-state bundle, smooth over the whole
/// parameter torus: spin aligned with the field direction, written in the
/// convention (cos(T/2), e^{i Phi} sin(T/2)). Well defined globally because
/// beta > alpha keeps the field off the +-z axis, where Phi degenerates.
template <typename Scalar>
Spinor<Scalar> reference_ground_state(const FieldParams<Scalar>& params,
                                      const ParamPoint<Scalar>& p) {
  using C = std::complex<Scalar>;
  const Vec3<Scalar> b = b_field(params, p);
  const Scalar bn = b.norm();
  const Scalar bz = b.z() / bn;
  const Scalar bxy = std::hypot(b.x(), b.y());
  const C azimuth = C(b.x() / bxy, b.y() / bxy);
  const Scalar cos_half = std::sqrt((Scalar(1) + bz) / Scalar(2));
  const Scalar sin_half = std::sqrt((Scalar(1) - bz) / Scalar(2));
  Spinor<Scalar> s;
  s << C(cos_half, 0), azimuth * sin_half;
  return s;
}

/// Ground eigenstate at path parameter t, in the smooth single-valued gauge:
/// the numerically solved eigenvector is rephased against the closed-form
/// reference section. An optional twist multiplies by e^{i chi(t)}.
template <typename Scalar>
Spinor<Scalar> tracked_ground_state(const FieldParams<Scalar>& params,
                                    const ClosedPath<Scalar>& path, Scalar t,
                                    const GaugeTwist<Scalar>& twist = {}) {
  using C = std::complex<Scalar>;
  const ParamPoint<Scalar> p(path.theta(t), path.psi(t));
  Spinor<Scalar> state = detail::align_phase(eigenstates(params, p).ground.state,
                                             reference_ground_state(params, p));
  if (twist) state *= std::exp(C(0, twist(t)));
  return state;
}

/// Berry connection pulled back to the path parameter: i <n(t)| dn/dt>,
/// evaluated by a centered difference of the tracked (phase-aligned)
/// eigenstate. The value is real up to discretization; the leftover
/// imaginary part is reported as a diagnostic.
template <typename Scalar>
ConnectionSample<Scalar> berry_connection_along(const FieldParams<Scalar>& params,
                                                const ClosedPath<Scalar>& path, Scalar t,
                                                const GaugeTwist<Scalar>& twist = {},
                                                Scalar fd_step = Scalar(1e-5)) {
  using C = std::complex<Scalar>;
  const Spinor<Scalar> center = tracked_ground_state(params, path, t, twist);
  const Spinor<Scalar> fwd = tracked_ground_state(params, path, t + fd_step, twist);
  const Spinor<Scalar> bwd = tracked_ground_state(params, path, t - fd_step, twist);
  const Spinor<Scalar> derivative = (fwd - bwd) / C(Scalar(2) * fd_step, 0);
  const C a = C(0, 1) * center.dot(derivative);
  return {a.real(), std::abs(a.imag())};
}

/// Berry phase of the ground state around a closed loop: periodic trapezoid
/// of the pulled-back connection. Consecutive samples must overlap by at
/// least 0.99 in magnitude, otherwise the sampling is declared too coarse.
template <typename Scalar>
BerryPhase<Scalar> berry_phase_loop(const FieldParams<Scalar>& params,
                                    const ClosedPath<Scalar>& path, int quad_steps,
                                    const GaugeTwist<Scalar>& twist = {}) {
  if (quad_steps < 256) {
    throw std::invalid_argument("berry_phase_loop: quad_steps must be at least 256");
  }
  const Scalar overlap_floor = Scalar(0.99);
  Scalar sum = Scalar(0);
  Scalar max_residual = Scalar(0);
  Spinor<Scalar> first = tracked_ground_state(params, path, Scalar(0), twist);
  Spinor<Scalar> prev = first;
  for (int k = 0; k < quad_steps; ++k) {
    const Scalar t = Scalar(k) / Scalar(quad_steps);
    const Spinor<Scalar> cur = k == 0 ? first : tracked_ground_state(params, path, t, twist);
    if (k > 0 && std::abs(prev.dot(cur)) < overlap_floor) {
      throw GaugeTrackingError(
          "berry_phase_loop: consecutive eigenstate overlap below 0.99; "
          "increase quad_steps");
    }
    const ConnectionSample<Scalar> sample = berry_connection_along(params, path, t, twist);
    sum += sample.value;
    max_residual = std::max(max_residual, sample.imaginary_residual);
    prev = cur;
  }
  if (std::abs(prev.dot(first)) < overlap_floor) {
    throw GaugeTrackingError(
        "berry_phase_loop: loop closure overlap below 0.99; increase quad_steps");
  }
  const Scalar gamma = sum / Scalar(quad_steps);
  return {gamma, wrap_angle(gamma), max_residual};
}

/// Integrates the Schrodinger equation over one traversal of the scheduled
/// loop. Each step applies the exact unitary of the midpoint Hamiltonian,
/// exp(-i H dt / hbar) = cos(phi) I + i sin(phi) (Bhat . sigma) with
/// phi = mu |B| dt / hbar, so the norm is preserved to rounding.
template <typename Scalar>
EvolutionResult<Scalar> adiabatic_evolve(const FieldParams<Scalar>& params,
                                         const DriveSchedule<Scalar>& schedule) {
  using C = std::complex<Scalar>;
  if (schedule.steps < 1024) {
    throw std::invalid_argument("adiabatic_evolve: steps must be at least 1024");
  }
  if (!(schedule.total_time > Scalar(0))) {
    throw std::invalid_argument("adiabatic_evolve: total_time must be positive");
  }
  const int n = schedule.steps;
  const Scalar dt = schedule.total_time / Scalar(n);
  const auto point_at = [&](Scalar s) {
    return ParamPoint<Scalar>(schedule.path.theta(s), schedule.path.psi(s));
  };

  Spinor<Scalar> state = eigenstates(params, point_at(Scalar(0))).ground.state;
  Scalar max_dev = Scalar(0);
  for (int k = 0; k < n; ++k) {
    const Scalar s_mid = (Scalar(k) + Scalar(0.5)) / Scalar(n);
    const Vec3<Scalar> b = b_field(params, point_at(s_mid));
    const Scalar bn = b.norm();
    const Scalar phi = params.mu * bn * dt / params.hbar;
    const Scalar c = std::cos(phi), s = std::sin(phi);
    const Scalar bx = b.x() / bn, by = b.y() / bn, bz = b.z() / bn;
    CMat2<Scalar> u;
    u << C(c, s * bz), C(s * by, s * bx), C(-s * by, s * bx), C(c, -s * bz);
    state = (u * state).eval();
    max_dev = std::max(max_dev, std::abs(state.norm() - Scalar(1)));
  }

  // dynamical phase by the trapezoid rule on the step grid
  Scalar energy_sum = Scalar(0);
  for (int k = 0; k <= n; ++k) {
    const Scalar e = -params.mu * b_field(params, point_at(Scalar(k) / Scalar(n))).norm();
    energy_sum += (k == 0 || k == n) ? e / Scalar(2) : e;
  }
  const Scalar dynamical = -(energy_sum * dt) / params.hbar;

  const Spinor<Scalar> n_final = eigenstates(params, point_at(Scalar(1))).ground.state;
  const C overlap = n_final.dot(state);
  const Scalar total = std::arg(overlap);
  const Scalar residual =
      std::clamp(Scalar(1) - std::norm(overlap), Scalar(0), Scalar(1));

  PhaseReport<Scalar> report;
  report.total_phase = total;
  report.dynamical_phase = dynamical;
  report.geometric_phase = wrap_angle(total - dynamical);
  report.residual_nonadiabaticity = residual;
  report.adiabatic_warning = residual > Scalar(1e-2);
  report.max_norm_deviation = max_dev;
  return {state, report};
}

/// Signed solid angle enclosed by the loop of unit field directions,
/// accumulated as the spherical excess of the triangle fan from the loop's
/// centroid direction. A point loop returns 0.
template <typename Scalar>
Scalar solid_angle_oracle(const FieldParams<Scalar>& params, const ClosedPath<Scalar>& path,
                          int samples) {
  if (samples < 1024) {
    throw std::invalid_argument("solid_angle_oracle: samples must be at least 1024");
  }
  std::vector<Vec3<Scalar>> dirs(static_cast<std::size_t>(samples));
  Vec3<Scalar> mean = Vec3<Scalar>::Zero();
  for (int k = 0; k < samples; ++k) {
    const Scalar t = Scalar(k) / Scalar(samples);
    dirs[static_cast<std::size_t>(k)] =
        b_field(params, ParamPoint<Scalar>(path.theta(t), path.psi(t))).normalized();
    mean += dirs[static_cast<std::size_t>(k)];
  }
  mean /= Scalar(samples);
  // a loop balanced around the origin (e.g. a great circle) leaves the mean
  // ill-conditioned; any fixed apex off the loop works, and +z never lies on
  // a field loop since |B_z| < |B|
  const Vec3<Scalar> apex =
      mean.norm() < Scalar(1e-9) ? Vec3<Scalar>(0, 0, 1) : Vec3<Scalar>(mean.normalized());
  Scalar omega = Scalar(0);
  for (int k = 0; k < samples; ++k) {
    const Vec3<Scalar>& cur = dirs[static_cast<std::size_t>(k)];
    const Vec3<Scalar>& nxt = dirs[static_cast<std::size_t>((k + 1) % samples)];
    const Scalar numer = apex.dot(cur.cross(nxt));
    const Scalar denom = Scalar(1) + apex.dot(cur) + apex.dot(nxt) + cur.dot(nxt);
    omega += Scalar(2) * std::atan2(numer, denom);
  }
  return omega;
}

}  // namespace torusphase
