#pragma once

#include "torusphase/geometry.hpp"

#include <cmath>
#include <string>

namespace torusphase {

/// Closed parametric surface described point-wise on the 2*pi-periodic
/// (theta, psi) chart: Gaussian curvature K and the area-element coefficient
/// dsigma, both per dtheta*dpsi. dsigma >= 0 everywhere (isolated zeros are
/// fine, e.g. sphere poles).
template <typename Scalar>
struct ClosedSurface {
  std::string name;
  std::function<Scalar(Scalar, Scalar)> gaussian_curvature;
  std::function<Scalar(Scalar, Scalar)> area_element;
};

template <typename Scalar>
struct TopologyReport {
  Scalar total_curvature;
  Scalar genus_estimate;  // 1 - total_curvature/(4*pi)
  int genus;              // nearest integer
  bool converged;         // |genus_estimate - genus| < 0.01
};

/// Integral of K dsigma split by the sign of K.
template <typename Scalar>
struct CurvatureSplit {
  Scalar positive;
  Scalar negative;
};

template <typename Scalar>
ClosedSurface<Scalar> torus_surface(const TorusShape<Scalar>& shape) {
  return {"torus",
          [shape](Scalar theta, Scalar psi) {
            return gaussian_curvature(shape, ParamPoint<Scalar>(theta, psi));
          },
          [shape](Scalar theta, Scalar psi) {
            return area_elements(shape, ParamPoint<Scalar>(theta, psi)).surface;
          }};
}

/// Round sphere on the periodic chart. psi drives the latitude through
/// lambda = (pi/2) sin(psi), which sweeps the sphere twice per period; the
/// area element r^2 cos(lambda) |dlambda/dpsi| is halved to compensate.
/// It vanishes to third order at the folds (the poles), so the periodic
/// trapezoid rule keeps near-spectral accuracy across them.
template <typename Scalar>
ClosedSurface<Scalar> sphere_surface(Scalar radius) {
  if (!(radius > Scalar(0))) {
    throw std::invalid_argument("sphere_surface: radius must be positive");
  }
  const Scalar half_pi = pi<Scalar> / Scalar(2);
  return {"sphere", [radius](Scalar, Scalar) { return Scalar(1) / (radius * radius); },
          [radius, half_pi](Scalar, Scalar psi) {
            const Scalar lambda = half_pi * std::sin(psi);
            const Scalar dlambda = half_pi * std::abs(std::cos(psi));
            return radius * radius * std::cos(lambda) * dlambda / Scalar(2);
          }};
}

/// Tensor-product periodic trapezoid sum of K dsigma over a uniform grid,
/// accumulated in fixed row-major order (theta outer, psi inner) so results
/// are bitwise reproducible.
template <typename Scalar>
Scalar integrate_curvature(const ClosedSurface<Scalar>& surface, int grid_n) {
  if (grid_n < 8) {
    throw std::invalid_argument("integrate_curvature: grid_n must be at least 8");
  }
  const Scalar h = two_pi<Scalar> / Scalar(grid_n);
  const Scalar cell = h * h;
  Scalar total = Scalar(0);
  for (int i = 0; i < grid_n; ++i) {
    const Scalar theta = h * Scalar(i);
    for (int j = 0; j < grid_n; ++j) {
      const Scalar psi = h * Scalar(j);
      total += surface.gaussian_curvature(theta, psi) * surface.area_element(theta, psi) * cell;
    }
  }
  return total;
}

/// Genus from the total-curvature identity: integral of K dsigma = 4*pi*(1-g).
template <typename Scalar>
TopologyReport<Scalar> genus_of(const ClosedSurface<Scalar>& surface, int grid_n) {
  TopologyReport<Scalar> report;
  report.total_curvature = integrate_curvature(surface, grid_n);
  report.genus_estimate = Scalar(1) - report.total_curvature / (Scalar(4) * pi<Scalar>);
  report.genus = static_cast<int>(std::llround(report.genus_estimate));
  report.converged = std::abs(report.genus_estimate - Scalar(report.genus)) < Scalar(0.01);
  return report;
}

/// Diagnostic split of the torus total curvature into its positive part
/// (outer half, cos(psi) > 0) and negative part (inner half). Same grid and
/// summation order as integrate_curvature, so the parts add up to the total.
template <typename Scalar>
CurvatureSplit<Scalar> curvature_sign_regions(const TorusShape<Scalar>& shape, int grid_n) {
  if (grid_n < 8) {
    throw std::invalid_argument("curvature_sign_regions: grid_n must be at least 8");
  }
  const Scalar h = two_pi<Scalar> / Scalar(grid_n);
  const Scalar cell = h * h;
  CurvatureSplit<Scalar> split{Scalar(0), Scalar(0)};
  for (int i = 0; i < grid_n; ++i) {
    const Scalar theta = h * Scalar(i);
    for (int j = 0; j < grid_n; ++j) {
      const ParamPoint<Scalar> p(theta, h * Scalar(j));
      const Scalar k = gaussian_curvature(shape, p);
      const Scalar contribution = k * area_elements(shape, p).surface * cell;
      if (k > Scalar(0)) {
        split.positive += contribution;
      } else if (k < Scalar(0)) {
        split.negative += contribution;
      }
    }
  }
  return split;
}

}  // namespace torusphase
