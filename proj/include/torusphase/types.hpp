#pragma once

#include <Eigen/Core>

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>

namespace torusphase {

template <typename Scalar> using Vec2 = Eigen::Matrix<Scalar, 2, 1>;
template <typename Scalar> using Vec3 = Eigen::Matrix<Scalar, 3, 1>;
template <typename Scalar> using Mat2 = Eigen::Matrix<Scalar, 2, 2>;
template <typename Scalar> using CVec3 = Eigen::Matrix<std::complex<Scalar>, 3, 1>;
template <typename Scalar> using CMat2 = Eigen::Matrix<std::complex<Scalar>, 2, 2>;

template <typename Scalar>
inline constexpr Scalar pi = std::numbers::pi_v<Scalar>;

template <typename Scalar>
inline constexpr Scalar two_pi = Scalar(2) * std::numbers::pi_v<Scalar>;

/// Canonical representative of an angle in [0, 2*pi).
template <typename Scalar>
Scalar wrap_angle(Scalar x) {
  Scalar r = std::fmod(x, two_pi<Scalar>);
  if (r < Scalar(0)) r += two_pi<Scalar>;
  // adding the period to a tiny negative value can round back up to 2*pi
  return r == two_pi<Scalar> ? Scalar(0) : r;
}

/// Distance between two angles on a circle of the given period.
template <typename Scalar>
Scalar angle_distance(Scalar x, Scalar y, Scalar period = two_pi<Scalar>) {
  return std::abs(std::remainder(x - y, period));
}

/// Torus radii. The tube circle has radius `minor_radius` and its center
/// sits `major_radius` away from the symmetry axis.
template <typename Scalar>
struct TorusShape {
  Scalar minor_radius;  // a
  Scalar major_radius;  // b, with b > a > 0

  TorusShape(Scalar minor, Scalar major)
      : minor_radius(minor), major_radius(major) {
    if (!(minor > Scalar(0)) || !(major > minor)) {
      throw std::invalid_argument(
          "TorusShape: requires major_radius > minor_radius > 0");
    }
  }
};

/// Point on the parameter torus. Angles are stored as the canonical
/// representative in [0, 2*pi); raw (unwrapped) angles live only in path
/// callables, where winding matters.
template <typename Scalar>
struct ParamPoint {
  Scalar theta;
  Scalar psi;

  ParamPoint(Scalar theta_raw, Scalar psi_raw)
      : theta(wrap_angle(theta_raw)), psi(wrap_angle(psi_raw)) {}
};

using TorusShaped = TorusShape<double>;
using ParamPointd = ParamPoint<double>;

}  // namespace torusphase
