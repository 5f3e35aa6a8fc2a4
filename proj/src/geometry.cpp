#include "su11/geometry.hpp"

#include <cmath>
#include <stdexcept>

namespace su11 {

GroupElement::GroupElement(Complex alpha_, Complex beta_) : alpha(alpha_), beta(beta_) {
  double det = std::norm(alpha) - std::norm(beta);
  double drift = std::abs(det - 1.0);
  if (drift > 1e-9)
    throw std::invalid_argument("GroupElement: |alpha|^2 - |beta|^2 deviates from 1 by " +
                                std::to_string(drift));
  if (det <= 0.0) throw std::invalid_argument("GroupElement: non-positive determinant");
  if (drift > 0.0) {
    double s = 1.0 / std::sqrt(det);
    alpha *= s;
    beta *= s;
  }
}

GroupElement compose(const GroupElement& g1, const GroupElement& g2) {
  Complex alpha = g1.alpha * g2.alpha + g1.beta * std::conj(g2.beta);
  Complex beta = g1.alpha * g2.beta + g1.beta * std::conj(g2.alpha);
  return GroupElement(alpha, beta);
}

DiskPoint mobius_apply_inverse(const GroupElement& g, const DiskPoint& p) {
  Complex den = std::conj(g.beta) * p.xi - g.alpha;
  // |alpha| >= 1 > |beta* xi| inside the disk, so the denominator cannot vanish.
  if (std::abs(den) == 0.0)
    throw std::runtime_error("mobius_apply_inverse: vanishing denominator");
  Complex num = -std::conj(g.alpha) * p.xi + g.beta;
  return DiskPoint(num / den);
}

GroupElement interferometer_element(double gain, double pump_phase, double total_phase) {
  if (!(gain >= 0.0)) throw std::invalid_argument("interferometer_element: gain must be >= 0");
  double tau_g = 2.0 * gain;
  double ch = std::cosh(tau_g);
  double sh = std::sinh(tau_g);
  double c = std::cos(total_phase / 2.0);
  double s = std::sin(total_phase / 2.0);
  Complex alpha(c, s * ch);
  Complex beta = Complex(0.0, -1.0) * std::polar(s * sh, pump_phase);
  return GroupElement(alpha, beta);
}

}  // namespace su11
