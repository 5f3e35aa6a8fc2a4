#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "su11/phase_space.hpp"
#include "su11/two_mode_state.hpp"

namespace su11 {

/// Two-mode squeezed vacuum, c_{nn} = sqrt(1-|xi|^2) xi^n, renormalized after
/// truncation; the geometric tail |xi|^{2(cutoff+1)} is recorded as tail mass.
TwoModeState build_tmsv(Complex xi, int cutoff);

/// Product of a coherent state in mode a and a single-mode squeezed vacuum in
/// mode b. Both Fock expansions come from applying the truncated operator
/// exponentials exp(alpha a† - alpha* a) and exp((zeta b†b† - zeta* b b)/2)
/// to vacuum; no closed-form coefficients are hard-coded. `zeta_sq` is the
/// squeeze parameter of the exponential (|zeta_sq| is the squeeze strength,
/// not a disk coordinate).
TwoModeState build_coherent_squeezed(Complex alpha, Complex zeta_sq, int cutoff);

/// SU(1,1) coherent state |xi, k> = S(zeta)|k,k>: the truncated-Fock sector
/// squeeze applied to the lowest-weight state n_a = 2k-1, n_b = 0, then
/// decomposed. Single block, n_a >= n_b ordering.
DecomposedState build_su11_coherent(HalfInteger k, const DiskPoint& xi, int cutoff);

/// Irrep expansion of a product state |a> x |b> without materializing the
/// square amplitude array; the per-mode cutoffs can differ by orders of
/// magnitude (a strongly squeezed mode b next to a small coherent mode a).
/// Entries below prune * max|amplitude| are dropped.
DecomposedState decompose_product(const std::vector<Complex>& mode_a,
                                  const std::vector<Complex>& mode_b, double prune = 1e-16);

/// decompose_product of the two truncated factor expansions, normalized.
/// boundary_mass_out (when given) receives the factors' boundary two-shell
/// mass, the truncation-quality gate for this construction.
DecomposedState build_coherent_squeezed_blocks(Complex alpha, Complex zeta_sq, int cutoff_a,
                                               int cutoff_b, double* boundary_mass_out = nullptr);

/// Declarative state description (the CLI's JSON schema mirrors this).
struct StateSpec {
  struct Tmsv {
    Complex xi;
  };
  struct CoherentTimesSqueezed {
    Complex alpha;
    Complex zeta_sq;
  };
  struct Su11Coherent {
    HalfInteger k;
    Complex xi;
  };
  struct RawAmplitudes {
    struct Entry {
      int n_a;
      int n_b;
      Complex c;
    };
    std::vector<Entry> entries;
  };

  std::variant<Tmsv, CoherentTimesSqueezed, Su11Coherent, RawAmplitudes> params;
  std::optional<int> cutoff;  // builder default when absent

  std::string variant_name() const;
  int effective_cutoff() const;

  /// Default cutoffs: tmsv 60, coherent_times_squeezed 80, su11_coherent 60+2k.
  static int default_cutoff(const StateSpec& spec);
};

/// Builds the state described by the spec (raw_amplitudes is validated and
/// normalized against tol_norm).
TwoModeState build_state(const StateSpec& spec);

}  // namespace su11
