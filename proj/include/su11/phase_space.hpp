#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <stdexcept>

namespace su11 {

inline constexpr double kPi = 3.14159265358979323846264338327950288;

/// Normalizes an angle into (-pi, pi].
inline double normalize_angle(double chi) {
  if (!std::isfinite(chi)) throw std::invalid_argument("angle must be finite");
  double r = std::remainder(chi, 2.0 * kPi);  // lands in [-pi, pi]
  if (r <= -kPi) r += 2.0 * kPi;
  return r;
}

/// Point on the upper sheet of the two-sheeted hyperboloid, in polar form:
/// tau >= 0 is the hyperbolic polar angle, chi in (-pi, pi] the azimuth.
/// At tau = 0 the azimuth is canonically 0.
struct HyperboloidPoint {
  double tau = 0.0;
  double chi = 0.0;

  HyperboloidPoint() = default;
  HyperboloidPoint(double tau_, double chi_) {
    if (!(tau_ >= 0.0)) throw std::invalid_argument("HyperboloidPoint: tau must be >= 0");
    tau = tau_;
    chi = (tau_ == 0.0) ? 0.0 : normalize_angle(chi_);
  }
};

/// Point of the open unit disk; |xi| < 1 strictly.
struct DiskPoint {
  std::complex<double> xi{0.0, 0.0};

  DiskPoint() = default;
  explicit DiskPoint(std::complex<double> xi_) {
    if (!(std::abs(xi_) < 1.0)) throw std::invalid_argument("DiskPoint: |xi| must be < 1");
    xi = xi_;
  }
};

/// Squeeze parameter zeta = (tau/2) e^{i chi} associated with a hyperboloid point.
struct SqueezeParameter {
  std::complex<double> zeta{0.0, 0.0};

  SqueezeParameter() = default;
  explicit SqueezeParameter(std::complex<double> z) : zeta(z) {}
  explicit SqueezeParameter(const HyperboloidPoint& p)
      : zeta(std::polar(p.tau / 2.0, p.chi)) {}

  HyperboloidPoint point() const {
    double a = std::abs(zeta);
    return HyperboloidPoint(2.0 * a, a == 0.0 ? 0.0 : std::arg(zeta));
  }
};

/// xi = tanh(tau/2) e^{i chi}  (stereographic projection onto the unit disk).
inline DiskPoint hyperboloid_to_disk(const HyperboloidPoint& p) {
  double r = std::tanh(p.tau / 2.0);
  return DiskPoint(std::polar(r, p.chi));
}

/// Inverse of hyperboloid_to_disk: tau = 2 artanh|xi|, chi = arg(xi), chi = 0 at xi = 0.
inline HyperboloidPoint disk_to_hyperboloid(const DiskPoint& p) {
  double r = std::abs(p.xi);
  if (r == 0.0) return HyperboloidPoint(0.0, 0.0);
  return HyperboloidPoint(2.0 * std::atanh(r), std::arg(p.xi));
}

/// Minkowski unit vector n = (cosh tau, sinh tau cos chi, sinh tau sin chi),
/// n0^2 - n1^2 - n2^2 = 1.
inline std::array<double, 3> minkowski_vector(const HyperboloidPoint& p) {
  double sh = std::sinh(p.tau);
  return {std::cosh(p.tau), sh * std::cos(p.chi), sh * std::sin(p.chi)};
}

}  // namespace su11
