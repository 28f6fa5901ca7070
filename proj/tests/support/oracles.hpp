#pragma once

// Test-side oracles and generators, independent of the closed forms they
// cross-check.

#include "torusphase/torusphase.hpp"

#include <array>
#include <random>

namespace torusphase::testing {

/// High-resolution reference for loop integrals of sin(psi) dtheta: periodic
/// trapezoid at 2^16 samples with one Richardson step against 2^15.
inline double holonomy_quadrature_oracle(const ClosedPath<double>& path) {
  const auto trapezoid = [&](int n) {
    double sum = 0.0;
    for (int k = 0; k < n; ++k) {
      const double t = static_cast<double>(k) / n;
      sum += std::sin(path.psi(t)) * path.theta_dot(t);
    }
    return sum / n;
  };
  const double coarse = trapezoid(1 << 15);
  const double fine = trapezoid(1 << 16);
  return fine + (fine - coarse) / 3.0;
}

/// Random smooth closed loops: winding plus two harmonics per angle, with
/// analytic derivatives. Deterministic for a fixed seed.
class LoopFactory {
 public:
  explicit LoopFactory(unsigned long long seed) : rng_(seed) {}

  ClosedPath<double> next(int max_winding = 2, double max_amplitude = 0.6) {
    std::uniform_int_distribution<int> winding(-max_winding, max_winding);
    std::uniform_real_distribution<double> amplitude(-max_amplitude, max_amplitude);
    std::uniform_real_distribution<double> offset(0.0, two_pi<double>);
    const int w_theta = winding(rng_);
    const int w_psi = winding(rng_);
    const double theta0 = offset(rng_);
    const double psi0 = offset(rng_);
    std::array<double, 4> ct{}, cp{};
    for (double& c : ct) c = amplitude(rng_);
    for (double& c : cp) c = amplitude(rng_);
    return ClosedPath<double>(harmonic(theta0, w_theta, ct), harmonic(psi0, w_psi, cp),
                              harmonic_dot(w_theta, ct), harmonic_dot(w_psi, cp), w_theta,
                              w_psi);
  }

 private:
  // f(t) = f0 + 2*pi*w*t + c0 sin(2*pi*t) + c1 (cos(2*pi*t)-1)
  //                      + c2 sin(4*pi*t) + c3 (cos(4*pi*t)-1)
  static std::function<double(double)> harmonic(double f0, int w, std::array<double, 4> c) {
    return [f0, w, c](double t) {
      const double u = two_pi<double> * t;
      return f0 + two_pi<double> * w * t + c[0] * std::sin(u) + c[1] * (std::cos(u) - 1.0) +
             c[2] * std::sin(2.0 * u) + c[3] * (std::cos(2.0 * u) - 1.0);
    };
  }

  static std::function<double(double)> harmonic_dot(int w, std::array<double, 4> c) {
    return [w, c](double t) {
      const double u = two_pi<double> * t;
      return two_pi<double> * w +
             two_pi<double> * (c[0] * std::cos(u) - c[1] * std::sin(u) +
                               2.0 * c[2] * std::cos(2.0 * u) - 2.0 * c[3] * std::sin(2.0 * u));
    };
  }

  std::mt19937_64 rng_;
};

/// Smooth single-valued gauge field: degree-(1,1) trigonometric polynomial
/// with random coefficients and analytic partials.
inline GaugeField<double> random_trig_gauge(std::mt19937_64& rng, double scale = 0.5) {
  std::uniform_real_distribution<double> coeff(-scale, scale);
  std::array<double, 9> c{};
  for (double& x : c) x = coeff(rng);
  return GaugeField<double>{
      [c](double th, double ps) {
        const double sth = std::sin(th), cth = std::cos(th);
        const double sps = std::sin(ps), cps = std::cos(ps);
        return c[0] + c[1] * sth + c[2] * cth + c[3] * sps + c[4] * cps + c[5] * sth * sps +
               c[6] * sth * cps + c[7] * cth * sps + c[8] * cth * cps;
      },
      [c](double th, double ps) {
        const double sth = std::sin(th), cth = std::cos(th);
        const double sps = std::sin(ps), cps = std::cos(ps);
        return c[1] * cth - c[2] * sth + c[5] * cth * sps + c[6] * cth * cps -
               c[7] * sth * sps - c[8] * sth * cps;
      },
      [c](double th, double ps) {
        const double sth = std::sin(th), cth = std::cos(th);
        const double sps = std::sin(ps), cps = std::cos(ps);
        return c[3] * cps - c[4] * sps + c[5] * sth * cps - c[6] * sth * sps +
               c[7] * cth * cps - c[8] * cth * sps;
      }};
}

inline ParamPointd random_point(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> angle(0.0, two_pi<double>);
  const double theta = angle(rng);
  const double psi = angle(rng);
  return ParamPointd(theta, psi);
}

/// Order of convergence from errors at two step sizes h and h/ratio.
inline double measured_order(double err_coarse, double err_fine, double ratio) {
  return std::log(err_coarse / err_fine) / std::log(ratio);
}

}  // namespace torusphase::testing
