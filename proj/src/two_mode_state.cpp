#include "su11/two_mode_state.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

namespace su11 {

TwoModeState::TwoModeState(int cutoff_, std::vector<Complex> amps, double tail_mass_,
                           double tol_norm_)
    : cutoff(cutoff_), amplitudes(std::move(amps)), tail_mass(tail_mass_), tol_norm(tol_norm_) {
  if (cutoff < 0) throw std::invalid_argument("TwoModeState: cutoff must be >= 0");
  std::size_t expected = static_cast<std::size_t>(cutoff + 1) * (cutoff + 1);
  if (amplitudes.size() != expected)
    throw std::invalid_argument("TwoModeState: amplitude array size does not match cutoff");
  double n2 = squared_norm();
  // n2 == 0 is the degenerate empty state (its Wigner function is 0 everywhere)
  if (n2 != 0.0 && std::abs(n2 - 1.0) > tol_norm)
    throw std::invalid_argument("TwoModeState: squared norm " + std::to_string(n2) +
                                " outside [1-tol, 1+tol]");
  boundary_mass = outer_shell_mass();
  tail_warning = tail_mass > 1e-6;
}

double TwoModeState::squared_norm() const {
  double s = 0.0;
  for (const Complex& c : amplitudes) s += std::norm(c);
  return s;
}

double TwoModeState::outer_shell_mass() const {
  double s = 0.0;
  int n = dim();
  for (int na = 0; na < n; ++na)
    for (int nb = 0; nb < n; ++nb)
      if (na >= n - 2 || nb >= n - 2) s += std::norm(at(na, nb));
  return s;
}

void TwoModeState::renormalize() {
  double n2 = squared_norm();
  if (n2 <= 0.0) throw std::runtime_error("TwoModeState: cannot renormalize a zero state");
  double scale = 1.0 / std::sqrt(n2);
  for (Complex& c : amplitudes) c *= scale;
}

IrrepBlock::IrrepBlock(HalfInteger k_, bool mirror_, std::vector<Complex> psi_)
    : k(k_), mirror(mirror_), psi(std::move(psi_)) {
  if (k.twice() < 1) throw std::invalid_argument("IrrepBlock: requires k >= 1/2");
}

double DecomposedState::squared_norm() const {
  double s = 0.0;
  for (const IrrepBlock& b : blocks)
    for (const Complex& c : b.psi) s += std::norm(c);
  return s;
}

DecomposedState decompose(const TwoModeState& s, FoldMode fold) {
  // key: (twice k, mirror)
  std::map<std::pair<std::int64_t, bool>, std::vector<Complex>> blocks;
  int n = s.dim();
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  for (int na = 0; na < n; ++na) {
    for (int nb = 0; nb < n; ++nb) {
      Complex c = s.at(na, nb);
      std::int64_t k2 = std::abs(na - nb) + 1;
      int m = std::min(na, nb);
      bool mirror = nb > na;
      Complex value = c;
      switch (fold) {
        case FoldMode::sectors:
          break;
        case FoldMode::symmetric:
          if (na == nb) break;
          if (mirror) continue;  // handled together with the (na, nb) partner
          value = (c + s.at(nb, na)) * inv_sqrt2;
          mirror = false;
          break;
        case FoldMode::upper:
          if (mirror) continue;
          break;
      }
      if (value == Complex{}) continue;  // zero slots never extend a block
      auto& vec = blocks[{k2, mirror}];
      if (static_cast<int>(vec.size()) <= m) vec.resize(static_cast<std::size_t>(m) + 1);
      vec[static_cast<std::size_t>(m)] = value;
    }
  }

  DecomposedState out;
  out.blocks.reserve(blocks.size());
  for (auto& [key, psi] : blocks) {
    bool empty = std::all_of(psi.begin(), psi.end(), [](Complex c) { return c == Complex{}; });
    if (empty) continue;
    out.blocks.emplace_back(HalfInteger::from_twice(key.first), key.second, std::move(psi));
  }
  return out;
}

TwoModeState reconstruct(const DecomposedState& d, int cutoff) {
  std::vector<Complex> amps(static_cast<std::size_t>(cutoff + 1) * (cutoff + 1));
  TwoModeState out;
  out.cutoff = cutoff;
  for (const IrrepBlock& b : d.blocks) {
    int diff = static_cast<int>(b.k.twice() - 1);
    for (int j = 0; j < b.mu_count(); ++j) {
      int na = b.mirror ? j : j + diff;
      int nb = b.mirror ? j + diff : j;
      if (na > cutoff || nb > cutoff)
        throw std::invalid_argument("reconstruct: cutoff too small for the decomposed state");
      amps[static_cast<std::size_t>(na) * (cutoff + 1) + nb] = b.psi[static_cast<std::size_t>(j)];
    }
  }
  return TwoModeState(cutoff, std::move(amps));
}

}  // namespace su11
