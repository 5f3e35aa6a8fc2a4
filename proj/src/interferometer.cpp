#include "su11/interferometer.hpp"

#include <cmath>
#include <cstdio>
#include <map>
#include <stdexcept>

#include "su11/oracle.hpp"
#include "su11/parallel.hpp"

namespace su11 {

namespace {

std::string format_leak(double leak) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.3e", leak);
  return buf;
}

}  // namespace

WignerField output_wigner_covariant(const DecomposedState& state, const InterferometerConfig& cfg,
                                    const GridSpec& grid, PhaseConvention conv) {
  GroupElement g = interferometer_element(cfg.gain, cfg.pump_phase, cfg.total_phase);
  WignerEvaluator evaluator(state);
  WignerField field;
  field.grid = grid;
  field.points = enumerate_grid(grid);
  field.values.assign(field.points.size(), Complex{0.0, 0.0});
  field.convention = conv;
  parallel_for(field.points.size(), [&](std::size_t i) {
    DiskPoint pulled = mobius_apply_inverse(g, field.points[i].xi);
    field.values[i] = evaluator.eval(disk_to_hyperboloid(pulled), conv);
  });
  field.metadata["convention"] = convention_name(conv);
  field.metadata["route"] = "covariant";
  field.metadata["gain"] = std::to_string(cfg.gain);
  field.metadata["pump_phase"] = std::to_string(cfg.pump_phase);
  field.metadata["total_phase"] = std::to_string(cfg.total_phase);
  return field;
}

TwoModeState output_state_direct(const TwoModeState& state, const InterferometerConfig& cfg,
                                 int sector_depth) {
  if (sector_depth < 0) sector_depth = 2 * state.cutoff + 40;
  if (sector_depth < state.cutoff)
    throw std::invalid_argument("output_state_direct: sector_depth below state support");
  Complex zeta = std::polar(cfg.gain, cfg.pump_phase);
  int size = sector_depth + 1;

  std::map<int, Eigen::VectorXcd> gathered;  // key: n_a - n_b
  int n = state.dim();
  for (int na = 0; na < n; ++na)
    for (int nb = 0; nb < n; ++nb) {
      Complex c = state.at(na, nb);
      if (c == Complex{}) continue;
      auto [it, inserted] = gathered.try_emplace(na - nb, Eigen::VectorXcd::Zero(size));
      it->second(std::min(na, nb)) = c;
    }

  std::map<int, SectorSqueezer> squeezers;
  int out_cutoff = sector_depth;
  std::vector<Complex> amps(static_cast<std::size_t>(out_cutoff + 1) * (out_cutoff + 1));
  double leak = 0.0;
  for (auto& [diff, psi] : gathered) {
    int d = std::abs(diff);
    auto it = squeezers.find(d);
    if (it == squeezers.end()) it = squeezers.emplace(d, SectorSqueezer(d, size)).first;
    const SectorSqueezer& sq = it->second;

    Eigen::VectorXcd v = sq.apply(psi, zeta, /*adjoint=*/true);
    leak += sector_boundary_mass(v);
    for (int m = 0; m < size; ++m) {
      double mu = (2.0 * m + d + 1.0) / 2.0;
      v(m) *= std::polar(1.0, cfg.total_phase * mu);
    }
    v = sq.apply(v, zeta, /*adjoint=*/false);
    leak += sector_boundary_mass(v);

    for (int m = 0; m < size; ++m) {
      int na = diff >= 0 ? m + d : m;
      int nb = diff >= 0 ? m : m + d;
      if (na <= out_cutoff && nb <= out_cutoff)
        amps[static_cast<std::size_t>(na) * (out_cutoff + 1) + nb] += v(m);
    }
  }
  if (leak > kLeakTolerance)
    throw std::runtime_error("output_state_direct: truncation-leak gate failed (leak " +
                             format_leak(leak) + ")");
  double norm2 = 0.0;
  for (const Complex& c : amps) norm2 += std::norm(c);
  double scale = 1.0 / std::sqrt(norm2);
  for (Complex& c : amps) c *= scale;
  return TwoModeState(out_cutoff, std::move(amps), leak);
}

DecomposedState apply_rotation(const DecomposedState& state, double phi) {
  DecomposedState out = state;
  for (IrrepBlock& b : out.blocks)
    for (int j = 0; j < b.mu_count(); ++j)
      b.psi[static_cast<std::size_t>(j)] *= std::polar(1.0, phi * b.mu_at(j).value());
  return out;
}

}  // namespace su11
