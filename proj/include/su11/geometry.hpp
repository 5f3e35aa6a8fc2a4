#pragma once

#include "su11/phase_space.hpp"
#include "su11/two_mode_state.hpp"

namespace su11 {

/// SU(1,1) group element ((alpha, beta), (beta*, alpha*)) with
/// |alpha|^2 - |beta|^2 = 1. Construction rescales determinant drift up to
/// 1e-9 and rejects anything larger.
struct GroupElement {
  Complex alpha{1.0, 0.0};
  Complex beta{0.0, 0.0};

  GroupElement() = default;
  GroupElement(Complex alpha_, Complex beta_);

  static GroupElement identity() { return {}; }
  GroupElement inverse() const { return GroupElement(std::conj(alpha), -beta); }
  double determinant() const { return std::norm(alpha) - std::norm(beta); }
};

/// Matrix product in the (alpha, beta) parametrization.
GroupElement compose(const GroupElement& g1, const GroupElement& g2);

/// Fractional-linear action of g^{-1} on the disk:
/// g^{-1} xi = (-alpha* xi + beta) / (beta* xi - alpha).
DiskPoint mobius_apply_inverse(const GroupElement& g, const DiskPoint& p);

/// Group element of the balanced interferometer T = S(zeta) e^{i Phi K0} S†(zeta),
/// zeta = gain·e^{i pump_phase}: alpha = cos(Phi/2) + i sin(Phi/2) cosh(tau_g),
/// beta = -i e^{i pump_phase} sin(Phi/2) sinh(tau_g), with tau_g = 2·gain.
GroupElement interferometer_element(double gain, double pump_phase, double total_phase);

}  // namespace su11
