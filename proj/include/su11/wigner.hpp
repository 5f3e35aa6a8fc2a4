#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "su11/special_functions.hpp"
#include "su11/two_mode_state.hpp"
#include "su11/phase_space.hpp"

namespace su11 {

/// literal: the kernel expectation as written, complex in general (integer-k
/// blocks contribute to the real part, half-integer-k blocks to the
/// imaginary part). per_irrep_normalized: each irrep-k contribution is
/// multiplied by e^{-i pi k}, which makes single-irrep fields real.
enum class PhaseConvention { literal, per_irrep_normalized };

PhaseConvention parse_convention(const std::string& name);
std::string convention_name(PhaseConvention conv);

/// Restrict evaluation to one of the two irrep families.
enum class IrrepFamily { all, integer_k, half_integer_k };

/// Rectangular sampling of phase space, either cartesian on the unit disk
/// (points with |xi| > disk_limit are masked out) or polar on the
/// hyperboloid sheet.
struct GridSpec {
  enum class Kind { disk_cartesian, hyperboloid_polar };
  Kind kind = Kind::disk_cartesian;

  double x_min = -0.99, x_max = 0.99;
  double y_min = -0.99, y_max = 0.99;
  int nx = 201, ny = 201;
  double disk_limit = 1.0 - 1e-9;

  double tau_max = 3.0;
  int n_tau = 65, n_chi = 64;

  static GridSpec disk(int nx, int ny, double half_width);
  static GridSpec polar(int n_tau, int n_chi, double tau_max);

  double cell_dx() const;
  double cell_dy() const;
};

struct GridPoint {
  DiskPoint xi;
  HyperboloidPoint h;
  int ix = 0, iy = 0;  // lattice coordinates within the generating grid
};

std::vector<GridPoint> enumerate_grid(const GridSpec& spec);

/// Sampled Wigner data plus the metadata that went into it.
struct WignerField {
  GridSpec grid;
  std::vector<GridPoint> points;
  std::vector<Complex> values;
  PhaseConvention convention = PhaseConvention::per_irrep_normalized;
  std::map<std::string, std::string> metadata;

  std::size_t argmax_abs() const;
};

/// Strict 8-neighbor local maxima of |value| over the grid lattice, counted
/// only where all eight neighbors exist (rim points are not eligible) and
/// the value exceeds rel_threshold times the global maximum.
std::vector<std::size_t> local_maxima_abs(const WignerField& field, double rel_threshold);

/// Compiled form of a decomposed state for repeated point evaluations.
/// Amplitudes below prune_rel times the largest amplitude are dropped
/// (|W| error bounded by 2·dropped·total amplitude mass, recorded).
class WignerEvaluator {
public:
  explicit WignerEvaluator(const DecomposedState& state, IrrepFamily family = IrrepFamily::all,
                           double prune_rel = 1e-15);

  Complex eval(const HyperboloidPoint& point, PhaseConvention conv) const;
  double prune_error_bound() const { return prune_error_bound_; }

private:
  struct Block {
    HalfInteger k;
    Complex family_phase;   // e^{i pi k}
    std::vector<int> m;     // populated weight offsets, ascending
    std::vector<Complex> amp;
    double abs_sum = 0.0;   // sum of |amp|, feeds the block skip bound
  };
  std::vector<Block> blocks_;
  LogGammaTable table_;
  double prune_error_bound_ = 0.0;
};

/// W(point) = <Psi| w(point) |Psi> evaluated from the irrep expansion:
/// 2 sum_k e^{i pi k} sum_{mu mu'} conj(Psi_mu) Psi_mu' d^{(k)}_{mu mu'}(2 tau)
///   (-1)^{mu'-k} e^{i (mu-mu') chi},
/// with the factor-2 displaced-parity normalization and the e^{-i pi k}
/// per-block factor applied under per_irrep_normalized.
Complex wigner_point(const DecomposedState& state, const HyperboloidPoint& point,
                     PhaseConvention conv);

/// Pointwise wigner_point over a grid; deterministic and order-independent,
/// evaluated in parallel across points.
WignerField wigner_grid(const DecomposedState& state, const GridSpec& grid, PhaseConvention conv,
                        IrrepFamily family = IrrepFamily::all);

/// decompose then wigner_point.
Complex wigner_of_two_mode(const TwoModeState& state, const HyperboloidPoint& point,
                           PhaseConvention conv);

}  // namespace su11
