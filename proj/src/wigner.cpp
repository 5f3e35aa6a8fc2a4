#include "su11/wigner.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "su11/parallel.hpp"

namespace su11 {

PhaseConvention parse_convention(const std::string& name) {
  if (name == "literal") return PhaseConvention::literal;
  if (name == "per-irrep-normalized" || name == "per_irrep_normalized")
    return PhaseConvention::per_irrep_normalized;
  throw std::invalid_argument("unknown phase convention '" + name + "'");
}

std::string convention_name(PhaseConvention conv) {
  return conv == PhaseConvention::literal ? "literal" : "per_irrep_normalized";
}

GridSpec GridSpec::disk(int nx, int ny, double half_width) {
  GridSpec g;
  g.kind = Kind::disk_cartesian;
  g.nx = nx;
  g.ny = ny;
  g.x_min = -half_width;
  g.x_max = half_width;
  g.y_min = -half_width;
  g.y_max = half_width;
  return g;
}

GridSpec GridSpec::polar(int n_tau, int n_chi, double tau_max) {
  GridSpec g;
  g.kind = Kind::hyperboloid_polar;
  g.n_tau = n_tau;
  g.n_chi = n_chi;
  g.tau_max = tau_max;
  return g;
}

double GridSpec::cell_dx() const {
  return nx > 1 ? (x_max - x_min) / (nx - 1) : 0.0;
}
double GridSpec::cell_dy() const {
  return ny > 1 ? (y_max - y_min) / (ny - 1) : 0.0;
}

std::vector<GridPoint> enumerate_grid(const GridSpec& spec) {
  std::vector<GridPoint> pts;
  if (spec.kind == GridSpec::Kind::disk_cartesian) {
    if (spec.nx < 1 || spec.ny < 1) throw std::invalid_argument("grid: needs nx, ny >= 1");
    for (int iy = 0; iy < spec.ny; ++iy) {
      double y = spec.ny > 1 ? spec.y_min + iy * spec.cell_dy() : spec.y_min;
      for (int ix = 0; ix < spec.nx; ++ix) {
        double x = spec.nx > 1 ? spec.x_min + ix * spec.cell_dx() : spec.x_min;
        Complex xi(x, y);
        if (std::abs(xi) > spec.disk_limit) continue;
        GridPoint p;
        p.xi = DiskPoint(xi);
        p.h = disk_to_hyperboloid(p.xi);
        p.ix = ix;
        p.iy = iy;
        pts.push_back(p);
      }
    }
  } else {
    if (spec.n_tau < 1 || spec.n_chi < 1) throw std::invalid_argument("grid: needs counts >= 1");
    if (!(spec.tau_max >= 0.0)) throw std::invalid_argument("grid: tau_max must be >= 0");
    for (int it = 0; it < spec.n_tau; ++it) {
      double tau = spec.n_tau > 1 ? spec.tau_max * it / (spec.n_tau - 1) : 0.0;
      for (int ic = 0; ic < spec.n_chi; ++ic) {
        double chi = -kPi + 2.0 * kPi * (ic + 1) / spec.n_chi;  // lands in (-pi, pi]
        GridPoint p;
        p.h = HyperboloidPoint(tau, chi);
        p.xi = hyperboloid_to_disk(p.h);
        p.ix = ic;
        p.iy = it;
        pts.push_back(p);
      }
    }
  }
  return pts;
}

std::size_t WignerField::argmax_abs() const {
  if (values.empty()) throw std::runtime_error("WignerField: empty field");
  std::size_t best = 0;
  double best_v = -1.0;
  for (std::size_t i = 0; i < values.size(); ++i) {
    double v = std::abs(values[i]);
    if (v > best_v) {
      best_v = v;
      best = i;
    }
  }
  return best;
}

std::vector<std::size_t> local_maxima_abs(const WignerField& field, double rel_threshold) {
  // lattice lookup: (ix, iy) -> point index
  std::map<std::pair<int, int>, std::size_t> lattice;
  for (std::size_t i = 0; i < field.points.size(); ++i)
    lattice[{field.points[i].ix, field.points[i].iy}] = i;
  double global = 0.0;
  for (const Complex& v : field.values) global = std::max(global, std::abs(v));
  std::vector<std::size_t> maxima;
  for (std::size_t i = 0; i < field.points.size(); ++i) {
    double v = std::abs(field.values[i]);
    if (v < rel_threshold * global) continue;
    bool ok = true;
    for (int dy = -1; dy <= 1 && ok; ++dy) {
      for (int dx = -1; dx <= 1 && ok; ++dx) {
        if (dx == 0 && dy == 0) continue;
        auto it = lattice.find({field.points[i].ix + dx, field.points[i].iy + dy});
        if (it == lattice.end()) {
          ok = false;  // rim point, not eligible
        } else if (std::abs(field.values[it->second]) >= v) {
          ok = false;
        }
      }
    }
    if (ok) maxima.push_back(i);
  }
  return maxima;
}

WignerEvaluator::WignerEvaluator(const DecomposedState& state, IrrepFamily family,
                                 double prune_rel) {
  double max_amp = 0.0;
  double total_amp = 0.0;
  for (const IrrepBlock& b : state.blocks)
    for (const Complex& c : b.psi) {
      max_amp = std::max(max_amp, std::abs(c));
      total_amp += std::abs(c);
    }
  double threshold = prune_rel * max_amp;

  std::int64_t max_twice = 4;
  double dropped_amp = 0.0;
  for (const IrrepBlock& b : state.blocks) {
    bool integer_k = b.k.is_integer();
    if (family == IrrepFamily::integer_k && !integer_k) continue;
    if (family == IrrepFamily::half_integer_k && integer_k) continue;
    Block blk;
    blk.k = b.k;
    blk.family_phase = exp_i_pi(b.k);
    for (int j = 0; j < b.mu_count(); ++j) {
      double a = std::abs(b.psi[static_cast<std::size_t>(j)]);
      if (a == 0.0) continue;
      if (a < threshold) {
        dropped_amp += a;
        continue;
      }
      blk.m.push_back(j);
      blk.amp.push_back(b.psi[static_cast<std::size_t>(j)]);
      blk.abs_sum += a;
    }
    if (blk.m.empty()) continue;
    max_twice = std::max(max_twice, 2 * b.k.twice() + 4 * static_cast<std::int64_t>(blk.m.back()) + 4);
    blocks_.push_back(std::move(blk));
  }
  prune_error_bound_ = 2.0 * dropped_amp * total_amp;
  table_.extend(max_twice);
}

namespace {

// Jacobi polynomial by the three-term recurrence; the same evaluation the
// d-function uses, inlined here for the grid hot path.
double jacobi_recurrence(int n, double alpha, double beta, double x) {
  if (n == 0) return 1.0;
  double pm1 = 1.0;
  double p = (alpha + 1.0) + 0.5 * (alpha + beta + 2.0) * (x - 1.0);
  for (int m = 2; m <= n; ++m) {
    double dm = static_cast<double>(m);
    double s = 2.0 * dm + alpha + beta;
    double c0 = 2.0 * dm * (dm + alpha + beta) * (s - 2.0);
    double c1 = (s - 1.0) * (s * (s - 2.0) * x + alpha * alpha - beta * beta);
    double c2 = 2.0 * (dm + alpha - 1.0) * (dm + beta - 1.0) * s;
    double next = (c1 * p - c2 * pm1) / c0;
    pm1 = p;
    p = next;
  }
  return p;
}

}  // namespace

Complex WignerEvaluator::eval(const HyperboloidPoint& point, PhaseConvention conv) const {
  Complex total{0.0, 0.0};

  if (point.tau == 0.0) {
    // d(0) is the Kronecker delta: only the parity-weighted diagonal survives
    for (const Block& blk : blocks_) {
      double block_sum = 0.0;
      for (std::size_t i = 0; i < blk.m.size(); ++i) {
        double sign = (blk.m[i] % 2 == 0) ? 1.0 : -1.0;
        block_sum += std::norm(blk.amp[i]) * sign;
      }
      total += (conv == PhaseConvention::literal ? blk.family_phase : Complex{1.0, 0.0}) *
               (2.0 * block_sum);
    }
    return total;
  }

  // d-functions are evaluated at 2 tau, so their half-angle factors live at tau
  double tanh_tau = std::tanh(point.tau);
  double log_tanh = std::log(tanh_tau);
  double log_cosh = std::log(std::cosh(point.tau));
  double x = 1.0 - 2.0 * tanh_tau * tanh_tau;

  int max_alpha = 0, max_m = 0;
  for (const Block& blk : blocks_) {
    max_alpha = std::max(max_alpha, blk.m.back() - blk.m.front());
    max_m = std::max(max_m, blk.m.back());
  }
  std::vector<double> tanh_pow(static_cast<std::size_t>(max_alpha) + 1);
  tanh_pow[0] = 1.0;
  for (int a = 1; a <= max_alpha; ++a) tanh_pow[static_cast<std::size_t>(a)] =
      tanh_pow[static_cast<std::size_t>(a - 1)] * tanh_tau;
  std::vector<Complex> chi_pow(static_cast<std::size_t>(max_alpha) + 1);
  chi_pow[0] = Complex{1.0, 0.0};
  Complex chi_step = std::polar(1.0, point.chi);
  for (int a = 1; a <= max_alpha; ++a)
    chi_pow[static_cast<std::size_t>(a)] = chi_pow[static_cast<std::size_t>(a - 1)] * chi_step;

  constexpr double kSkipLog = -41.0;  // e^-41 ~ 1e-18 of the field scale

  for (const Block& blk : blocks_) {
    double kv = blk.k.value();
    double k2v = 2.0 * kv;
    double beta = k2v - 1.0;
    int m_lo = blk.m.front(), m_hi = blk.m.back();

    // conservative bound on the largest pair term: |P_n| <= C(n+max(alpha,beta), n)
    // with n up to m_hi (the diagonal pairs), the Gamma ratio <= (mu+k)^alpha,
    // and tanh powers only shrink it
    double alpha_max = static_cast<double>(m_hi - m_lo);
    double n_max = static_cast<double>(m_hi);
    double bound = std::log(2.0 * blk.abs_sum * blk.abs_sum + 1e-300) - k2v * log_cosh +
                   0.5 * alpha_max * std::log(k2v + m_hi + 1.0) +
                   n_max * std::log(std::max(k2v, alpha_max) + n_max + 1.0);
    if (bound < kSkipLog) continue;

    double cosh_factor = std::exp(-k2v * log_cosh);
    const std::size_t count = blk.m.size();
    double block_sum = 0.0;
    for (std::size_t i = 0; i < count; ++i) {
      int mi = blk.m[i];
      double sign_i = (mi % 2 == 0) ? 1.0 : -1.0;
      // diagonal: alpha = 0, prefactor collapses to cosh^{-2k}
      double d_ii = jacobi_recurrence(mi, 0.0, beta, x) * cosh_factor;
      block_sum += std::norm(blk.amp[i]) * sign_i * d_ii;
      for (std::size_t j = 0; j < i; ++j) {
        int mj = blk.m[j];
        int alpha = mi - mj;
        double pref;
        if (alpha <= 40) {
          // Gamma ratios are short products of nearby integers
          double r1 = 1.0, r2 = 1.0;
          for (int l = 0; l < alpha; ++l) {
            r1 *= k2v + mj + l;
            r2 *= mj + 1.0 + l;
          }
          pref = std::sqrt(r1 / r2) * tanh_pow[static_cast<std::size_t>(alpha)] * cosh_factor;
        } else {
          double lp = 0.5 * (table_.at_twice(2 * blk.k.twice() + 2 * mi) -
                             table_.at_twice(2 * blk.k.twice() + 2 * mj) +
                             table_.at_twice(2 * mj + 2) - table_.at_twice(2 * mi + 2)) +
                      alpha * log_tanh - k2v * log_cosh;
          pref = std::exp(lp);
        }
        double d_ij = jacobi_recurrence(mj, static_cast<double>(alpha), beta, x) * pref;
        double sign_j = (mj % 2 == 0) ? 1.0 : -1.0;
        Complex cross = std::conj(blk.amp[i]) * blk.amp[j] * chi_pow[static_cast<std::size_t>(alpha)];
        block_sum += 2.0 * cross.real() * d_ij * sign_j;
      }
    }
    total += (conv == PhaseConvention::literal ? blk.family_phase : Complex{1.0, 0.0}) *
             (2.0 * block_sum);
  }
  return total;
}

Complex wigner_point(const DecomposedState& state, const HyperboloidPoint& point,
                     PhaseConvention conv) {
  return WignerEvaluator(state).eval(point, conv);
}

WignerField wigner_grid(const DecomposedState& state, const GridSpec& grid, PhaseConvention conv,
                        IrrepFamily family) {
  WignerEvaluator evaluator(state, family);
  WignerField field;
  field.grid = grid;
  field.points = enumerate_grid(grid);
  field.values.assign(field.points.size(), Complex{0.0, 0.0});
  field.convention = conv;
  parallel_for(field.points.size(), [&](std::size_t i) {
    field.values[i] = evaluator.eval(field.points[i].h, conv);
  });
  field.metadata["convention"] = convention_name(conv);
  field.metadata["prune_error_bound"] = std::to_string(evaluator.prune_error_bound());
  return field;
}

Complex wigner_of_two_mode(const TwoModeState& state, const HyperboloidPoint& point,
                           PhaseConvention conv) {
  return wigner_point(decompose(state), point, conv);
}

}  // namespace su11
