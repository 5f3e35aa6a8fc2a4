#pragma once

#include "su11/geometry.hpp"
#include "su11/two_mode_state.hpp"
#include "su11/wigner.hpp"

namespace su11 {

/// Balanced SU(1,1) interferometer: two OPAs with equal gain and a pi pump
/// offset around a total phase shift Phi, T = S(zeta) e^{i Phi K0} S†(zeta)
/// with zeta = gain·e^{i pump_phase}.
struct InterferometerConfig {
  double gain = 0.0;
  double pump_phase = 0.0;
  double total_phase = 0.0;
};

/// Output Wigner field via Möbius covariance: W_out(xi) = W_in(g^{-1} xi)
/// with g = interferometer_element(cfg).
WignerField output_wigner_covariant(const DecomposedState& state, const InterferometerConfig& cfg,
                                    const GridSpec& grid, PhaseConvention conv);

/// Direct route: applies S†, the K0 phases, then S through the truncated
/// Fock sectors. sector_depth (default: 2x the state cutoff + 40) gives the
/// squeeze headroom; the truncation-leak gate applies to both squeezes.
TwoModeState output_state_direct(const TwoModeState& state, const InterferometerConfig& cfg,
                                 int sector_depth = -1);

/// Exact per-weight phase map Psi_{k mu} -> e^{i Phi mu} Psi_{k mu}
/// (the gain-0 interferometer).
DecomposedState apply_rotation(const DecomposedState& state, double phi);

}  // namespace su11
