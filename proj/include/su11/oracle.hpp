#pragma once

#include <Eigen/Dense>
#include <memory>
#include <vector>

#include "su11/half_integer.hpp"
#include "su11/phase_space.hpp"
#include "su11/two_mode_state.hpp"

namespace su11 {

/// Mass at the truncation boundary above which squeezed results are rejected.
inline constexpr double kLeakTolerance = 1e-8;

/// Dense two-mode operator matrices over the (cutoff+1)^2 Fock basis,
/// row-major index n_a * (cutoff+1) + n_b. K+, K-, K0 are built as the
/// literal products a†b†, ab, (a†a + b†b + 1)/2, so those identities hold
/// entrywise by construction. Desk scale: cutoffs up to ~40 are practical
/// for the dense representation.
struct OperatorSet {
  int cutoff = 0;
  Eigen::MatrixXcd a, a_dag, b, b_dag;
  Eigen::MatrixXcd k_plus, k_minus, k_zero, n_total;

  int dim() const { return (cutoff + 1) * (cutoff + 1); }
  int index(int n_a, int n_b) const { return n_a * (cutoff + 1) + n_b; }
};

OperatorSet build_operators(int cutoff);

/// S(zeta) = exp(zeta K+ - zeta* K-) over the full two-mode space, computed
/// by dense scaling-and-squaring. The truncated generator stays
/// anti-Hermitian, so the matrix is unitary to rounding; truncation shows up
/// as corrupted amplitudes near the rim instead. The leak metric is the
/// boundary two-shell mass of the squeezed vacuum column (excited columns
/// spread to the rim at any desk cutoff; callers squeezing excited states
/// gate on their own image). When leak_out is null a metric above
/// kLeakTolerance throws.
Eigen::MatrixXcd squeeze_matrix(const OperatorSet& ops, Complex zeta, double* leak_out = nullptr);

/// Displaced-parity kernel w = 2 S(zeta) e^{i pi K0} S†(zeta) at the given
/// phase-space point, with zeta = (tau/2) e^{i chi}. e^{i pi K0} is applied
/// on the diagonal with exact unit phases.
Eigen::MatrixXcd wigner_kernel_matrix(const OperatorSet& ops, const HyperboloidPoint& point,
                                      double* leak_out = nullptr);

/// <k,mu| w |k,mu'> from the Gauss-factorized kernel
/// e^{g+ K+} e^{i pi K0} e^{ln g0 K0} e^{g- K-},  g± = e^{±i chi} tanh(tau),
/// g0 = 1/cosh^2(tau), expanded over the discrete basis with the ladder
/// actions K±|k,mu> = sqrt((mu±k)(mu∓k±1))|k,mu±1>. Both ladder series
/// terminate against the lowest weight, so the element is a finite sum,
/// accumulated with compensated summation in log-magnitude form. Includes
/// the factor 2 of the displaced-parity normalization.
Complex disentangled_kernel_element(HalfInteger k, HalfInteger mu, HalfInteger mu_prime,
                                    const HyperboloidPoint& point);

/// Parameters gamma± and gamma0 of the factorized kernel at a point.
struct DisentangledKernelParams {
  Complex gamma_plus;
  Complex gamma_minus;
  double gamma_zero;
};
DisentangledKernelParams disentangled_params(const HyperboloidPoint& point);

/// su(1,1) machinery restricted to one difference sector n_a - n_b = ±d.
/// The squeeze generator is block-diagonal over these sectors, so one
/// Hermitian eigendecomposition per sector serves every zeta; both mirror
/// orderings share identical matrix elements.
class SectorSqueezer {
public:
  /// d >= 0; size = number of kept levels m = min(n_a, n_b) = 0..size-1.
  SectorSqueezer(int d, int size);

  int d() const { return d_; }
  int size() const { return size_; }
  HalfInteger k() const { return HalfInteger::from_twice(d_ + 1); }
  HalfInteger mu_at(int m) const { return HalfInteger::from_twice(2 * m + d_ + 1); }

  /// S(zeta) v, or S(zeta)† v when adjoint is true.
  Eigen::VectorXcd apply(const Eigen::VectorXcd& v, Complex zeta, bool adjoint = false) const;
  Eigen::MatrixXcd matrix(Complex zeta) const;

  /// 2 S(zeta) e^{i pi K0} S†(zeta) restricted to the sector.
  Eigen::MatrixXcd kernel_matrix(const HyperboloidPoint& point) const;
  Complex kernel_element(int m, int m_prime, const HyperboloidPoint& point) const;

  /// Top-left rows x rows block of kernel_matrix(point), without forming the
  /// full matrix. A squeezed level m carries weight out to roughly
  /// m cosh(tau), so `size` needs that much headroom above `rows`.
  Eigen::MatrixXcd kernel_block(const HyperboloidPoint& point, int rows) const;

private:
  int d_ = 0, size_ = 0;
  Eigen::MatrixXcd vecs_;   // eigenvectors of i(K+ - K-)
  Eigen::VectorXd evals_;   // its (real) eigenvalues
};

/// Mass in the last two levels of a sector vector.
double sector_boundary_mass(const Eigen::VectorXcd& v);

/// <Psi| w(point) |Psi> by brute force: gathers the state into difference
/// sectors, applies S† via the sector eigendecompositions and sums the
/// parity phases. `leak` is the total boundary two-shell mass of S†|Psi>
/// (the truncation-leak gate applies to it).
class KernelExpectationEngine {
public:
  /// sector_depth: levels kept per sector (headroom above the state support).
  KernelExpectationEngine(const TwoModeState& state, int sector_depth);

  struct Result {
    Complex value;
    double leak;
  };
  Result eval(const HyperboloidPoint& point) const;

  /// eval() with the leak gate enforced.
  Complex eval_gated(const HyperboloidPoint& point) const;

private:
  struct SectorData {
    std::shared_ptr<SectorSqueezer> squeezer;
    Eigen::VectorXcd psi;
  };
  std::vector<SectorData> sectors_;
};

/// exp(alpha a† - alpha* a)|0> on a single mode, truncated at `cutoff`.
/// Sub-stepped Taylor application of the banded generator.
std::vector<Complex> coherent_vector(Complex alpha, int cutoff);

/// exp((zeta a†a† - zeta* a a)/2)|0> on a single mode, truncated at `cutoff`.
std::vector<Complex> squeezed_vacuum_vector(Complex zeta, int cutoff);

}  // namespace su11
