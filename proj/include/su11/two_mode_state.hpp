#pragma once

#include <complex>
#include <cstddef>
#include <string>
#include <vector>

#include "su11/half_integer.hpp"

namespace su11 {

using Complex = std::complex<double>;

/// Pure two-mode state truncated to 0 <= n_a, n_b <= cutoff, amplitudes
/// stored row-major with index n_a * (cutoff + 1) + n_b.
///
/// Construction records the mass removed by truncation (tail_mass, estimated
/// by the builder) and the mass sitting on the boundary shells n_a = cutoff
/// or n_b = cutoff. tail_warning is set when tail_mass exceeds 1e-6.
struct TwoModeState {
  int cutoff = 0;
  std::vector<Complex> amplitudes;
  double tail_mass = 0.0;
  double boundary_mass = 0.0;
  bool tail_warning = false;
  double tol_norm = 1e-8;

  TwoModeState() = default;
  TwoModeState(int cutoff_, std::vector<Complex> amps, double tail_mass_ = 0.0,
               double tol_norm_ = 1e-8);

  int dim() const { return cutoff + 1; }
  Complex& at(int n_a, int n_b) { return amplitudes[static_cast<std::size_t>(n_a) * dim() + n_b]; }
  const Complex& at(int n_a, int n_b) const {
    return amplitudes[static_cast<std::size_t>(n_a) * dim() + n_b];
  }

  double squared_norm() const;
  /// Mass on the two outermost shells (n_a or n_b in {cutoff-1, cutoff}).
  double outer_shell_mass() const;

  void renormalize();
};

/// One irrep block of the SU(1,1)-invariant expansion. Two-mode Fock states
/// with n_a >= n_b and n_a < n_b carry equivalent irreps on orthogonal
/// subspaces; `mirror` distinguishes them (false: n_a >= n_b). psi[j] is the
/// amplitude at weight mu = k + j.
struct IrrepBlock {
  HalfInteger k;
  bool mirror = false;
  std::vector<Complex> psi;

  IrrepBlock() = default;
  IrrepBlock(HalfInteger k_, bool mirror_, std::vector<Complex> psi_);

  int mu_count() const { return static_cast<int>(psi.size()); }
  HalfInteger mu_at(int j) const { return k + HalfInteger::from_int(j); }
};

/// How mirrored Fock pairs (n_a, n_b) and (n_b, n_a) are assigned to blocks.
///
///   sectors   - keep both orderings as separate equivalent-irrep blocks
///               (faithful: preserves norm and every expectation value)
///   symmetric - fold mirrored amplitudes into one block as (c+ + c-)/sqrt(2);
///               lossy for states without mirror symmetry
///   upper     - keep only n_a >= n_b and discard the mirror mass
enum class FoldMode { sectors, symmetric, upper };

/// State expanded over irrep blocks, sorted by increasing k (the n_a >= n_b
/// block first where both orderings are populated).
struct DecomposedState {
  std::vector<IrrepBlock> blocks;

  double squared_norm() const;
};

/// Expands a two-mode state over SU(1,1) irreps via
/// k = (|n_a - n_b| + 1)/2, mu = (n_a + n_b + 1)/2.
DecomposedState decompose(const TwoModeState& s, FoldMode fold = FoldMode::sectors);

/// Exact inverse of decompose(..., FoldMode::sectors).
TwoModeState reconstruct(const DecomposedState& d, int cutoff);

}  // namespace su11
