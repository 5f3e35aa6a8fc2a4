#include "su11/state_builders.hpp"

#include <cmath>
#include <map>
#include <stdexcept>

#include "su11/oracle.hpp"

namespace su11 {

TwoModeState build_tmsv(Complex xi, int cutoff) {
  double r = std::abs(xi);
  if (!(r < 1.0)) throw std::invalid_argument("build_tmsv: requires |xi| < 1");
  if (cutoff < 0) throw std::invalid_argument("build_tmsv: cutoff must be >= 0");
  int n = cutoff + 1;
  std::vector<Complex> amps(static_cast<std::size_t>(n) * n);
  double pref = std::sqrt(1.0 - r * r);
  Complex c = pref;
  double kept = 0.0;
  for (int m = 0; m < n; ++m) {
    amps[static_cast<std::size_t>(m) * n + m] = c;
    kept += std::norm(c);
    c *= xi;
  }
  double tail = std::pow(r, 2.0 * (cutoff + 1));  // geometric remainder
  double scale = 1.0 / std::sqrt(kept);
  for (Complex& amp : amps) amp *= scale;
  return TwoModeState(cutoff, std::move(amps), tail);
}

namespace {

double vector_mass(const std::vector<Complex>& v) {
  double s = 0.0;
  for (const Complex& c : v) s += std::norm(c);
  return s;
}

// last two entries; the truncated generator evolves unitarily, so truncation
// damage piles up here rather than as a norm deficit
double vector_boundary_mass(const std::vector<Complex>& v) {
  double s = 0.0;
  for (std::size_t i = v.size() >= 2 ? v.size() - 2 : 0; i < v.size(); ++i) s += std::norm(v[i]);
  return s;
}

}  // namespace

TwoModeState build_coherent_squeezed(Complex alpha, Complex zeta_sq, int cutoff) {
  if (cutoff < 0) throw std::invalid_argument("build_coherent_squeezed: cutoff must be >= 0");
  std::vector<Complex> va = coherent_vector(alpha, cutoff);
  std::vector<Complex> vb = squeezed_vacuum_vector(zeta_sq, cutoff);

  double kept_a = vector_mass(va);
  double kept_b = vector_mass(vb);
  double tail = std::max(0.0, 1.0 - kept_a * kept_b) + vector_boundary_mass(va) +
                vector_boundary_mass(vb);
  double sa = 1.0 / std::sqrt(kept_a);
  double sb = 1.0 / std::sqrt(kept_b);

  int n = cutoff + 1;
  std::vector<Complex> amps(static_cast<std::size_t>(n) * n);
  for (int na = 0; na < n; ++na) {
    Complex ca = va[static_cast<std::size_t>(na)] * sa;
    for (int nb = 0; nb < n; ++nb)
      amps[static_cast<std::size_t>(na) * n + nb] = ca * vb[static_cast<std::size_t>(nb)] * sb;
  }
  return TwoModeState(cutoff, std::move(amps), tail);
}

DecomposedState decompose_product(const std::vector<Complex>& mode_a,
                                  const std::vector<Complex>& mode_b, double prune) {
  double peak = 0.0;
  for (const Complex& ca : mode_a)
    for (const Complex& cb : mode_b) peak = std::max(peak, std::abs(ca) * std::abs(cb));
  double threshold = prune * peak;

  std::map<std::pair<std::int64_t, bool>, std::vector<Complex>> blocks;
  for (int na = 0; na < static_cast<int>(mode_a.size()); ++na) {
    for (int nb = 0; nb < static_cast<int>(mode_b.size()); ++nb) {
      Complex c = mode_a[static_cast<std::size_t>(na)] * mode_b[static_cast<std::size_t>(nb)];
      if (std::abs(c) <= threshold) continue;
      std::int64_t k2 = std::abs(na - nb) + 1;
      int m = std::min(na, nb);
      auto& vec = blocks[{k2, nb > na}];
      if (static_cast<int>(vec.size()) <= m) vec.resize(static_cast<std::size_t>(m) + 1);
      vec[static_cast<std::size_t>(m)] = c;
    }
  }
  DecomposedState out;
  out.blocks.reserve(blocks.size());
  for (auto& [key, psi] : blocks)
    out.blocks.emplace_back(HalfInteger::from_twice(key.first), key.second, std::move(psi));
  return out;
}

DecomposedState build_coherent_squeezed_blocks(Complex alpha, Complex zeta_sq, int cutoff_a,
                                               int cutoff_b, double* boundary_mass_out) {
  std::vector<Complex> va = coherent_vector(alpha, cutoff_a);
  std::vector<Complex> vb = squeezed_vacuum_vector(zeta_sq, cutoff_b);
  double sa = 1.0 / std::sqrt(vector_mass(va));
  double sb = 1.0 / std::sqrt(vector_mass(vb));
  for (Complex& c : va) c *= sa;
  for (Complex& c : vb) c *= sb;
  if (boundary_mass_out)
    *boundary_mass_out = vector_boundary_mass(va) + vector_boundary_mass(vb);
  return decompose_product(va, vb);
}

DecomposedState build_su11_coherent(HalfInteger k, const DiskPoint& xi, int cutoff) {
  if (k.twice() < 1) throw std::invalid_argument("build_su11_coherent: requires 2k >= 1");
  if (cutoff < 0) throw std::invalid_argument("build_su11_coherent: cutoff must be >= 0");
  int d = static_cast<int>(k.twice() - 1);  // n_a - n_b of the lowest weight

  HyperboloidPoint p = disk_to_hyperboloid(xi);
  Complex zeta = SqueezeParameter(p).zeta;

  SectorSqueezer squeezer(d, cutoff + 1);
  Eigen::VectorXcd lowest = Eigen::VectorXcd::Zero(cutoff + 1);
  lowest(0) = 1.0;
  Eigen::VectorXcd psi = squeezer.apply(lowest, zeta);

  double leak = sector_boundary_mass(psi);
  double norm2 = psi.squaredNorm();

  IrrepBlock block(k, false, std::vector<Complex>(psi.data(), psi.data() + psi.size()));
  double scale = 1.0 / std::sqrt(norm2);
  for (Complex& c : block.psi) c *= scale;

  DecomposedState out;
  out.blocks.push_back(std::move(block));
  if (leak > 1e-6)
    throw std::runtime_error("build_su11_coherent: boundary mass " + std::to_string(leak) +
                             " too large; raise the cutoff or reduce |xi|");
  return out;
}

std::string StateSpec::variant_name() const {
  switch (params.index()) {
    case 0: return "tmsv";
    case 1: return "coherent_times_squeezed";
    case 2: return "su11_coherent";
    default: return "raw_amplitudes";
  }
}

int StateSpec::default_cutoff(const StateSpec& spec) {
  if (std::holds_alternative<Tmsv>(spec.params)) return 60;
  if (std::holds_alternative<CoherentTimesSqueezed>(spec.params)) return 80;
  if (const auto* su = std::get_if<Su11Coherent>(&spec.params))
    return 60 + static_cast<int>(su->k.twice() - 1);
  const auto& raw = std::get<RawAmplitudes>(spec.params);
  int m = 0;
  for (const auto& e : raw.entries) m = std::max({m, e.n_a, e.n_b});
  return m;
}

int StateSpec::effective_cutoff() const { return cutoff ? *cutoff : default_cutoff(*this); }

TwoModeState build_state(const StateSpec& spec) {
  int n_cut = spec.effective_cutoff();
  if (const auto* t = std::get_if<StateSpec::Tmsv>(&spec.params)) {
    return build_tmsv(t->xi, n_cut);
  }
  if (const auto* cs = std::get_if<StateSpec::CoherentTimesSqueezed>(&spec.params)) {
    return build_coherent_squeezed(cs->alpha, cs->zeta_sq, n_cut);
  }
  if (const auto* su = std::get_if<StateSpec::Su11Coherent>(&spec.params)) {
    DecomposedState d = build_su11_coherent(su->k, DiskPoint(su->xi), n_cut);
    return reconstruct(d, n_cut + static_cast<int>(su->k.twice() - 1));
  }
  const auto& raw = std::get<StateSpec::RawAmplitudes>(spec.params);
  std::vector<Complex> amps(static_cast<std::size_t>(n_cut + 1) * (n_cut + 1));
  for (const auto& e : raw.entries) {
    if (e.n_a < 0 || e.n_b < 0 || e.n_a > n_cut || e.n_b > n_cut)
      throw std::invalid_argument("raw_amplitudes: index outside the cutoff");
    amps[static_cast<std::size_t>(e.n_a) * (n_cut + 1) + e.n_b] = e.c;
  }
  TwoModeState out(n_cut, std::move(amps));
  return out;
}

}  // namespace su11
