#include "su11/oracle.hpp"

#include <unsupported/Eigen/MatrixFunctions>

#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <stdexcept>

#include "su11/special_functions.hpp"

namespace su11 {

OperatorSet build_operators(int cutoff) {
  if (cutoff < 1) throw std::invalid_argument("build_operators: cutoff must be >= 1");
  OperatorSet ops;
  ops.cutoff = cutoff;
  int n = cutoff + 1;
  int dim = n * n;
  ops.a = Eigen::MatrixXcd::Zero(dim, dim);
  ops.b = Eigen::MatrixXcd::Zero(dim, dim);
  for (int na = 0; na < n; ++na) {
    for (int nb = 0; nb < n; ++nb) {
      int col = ops.index(na, nb);
      if (na > 0) ops.a(ops.index(na - 1, nb), col) = std::sqrt(static_cast<double>(na));
      if (nb > 0) ops.b(ops.index(na, nb - 1), col) = std::sqrt(static_cast<double>(nb));
    }
  }
  ops.a_dag = ops.a.adjoint();
  ops.b_dag = ops.b.adjoint();
  ops.k_plus = ops.a_dag * ops.b_dag;
  ops.k_minus = ops.a * ops.b;
  ops.k_zero = 0.5 * (ops.a_dag * ops.a + ops.b_dag * ops.b +
                      Eigen::MatrixXcd::Identity(dim, dim));
  ops.n_total = Eigen::MatrixXcd::Zero(dim, dim);
  for (int na = 0; na < n; ++na)
    for (int nb = 0; nb < n; ++nb)
      ops.n_total(ops.index(na, nb), ops.index(na, nb)) = static_cast<double>(na + nb);
  return ops;
}

namespace {

std::string format_leak(double leak) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.3e", leak);
  return buf;
}

// Boundary two-shell mass of the squeezed vacuum column. Excited columns
// spread toward the rim at any desk cutoff, so the matrix-level gate probes
// the vacuum; callers squeezing excited states gate on their own image.
double vacuum_column_leak(const OperatorSet& ops, const Eigen::MatrixXcd& s) {
  int n = ops.cutoff + 1;
  int col = ops.index(0, 0);
  double mass = 0.0;
  for (int ma = 0; ma < n; ++ma)
    for (int mb = 0; mb < n; ++mb)
      if (ma >= n - 2 || mb >= n - 2) mass += std::norm(s(ops.index(ma, mb), col));
  return mass;
}

}  // namespace

Eigen::MatrixXcd squeeze_matrix(const OperatorSet& ops, Complex zeta, double* leak_out) {
  Eigen::MatrixXcd gen = zeta * ops.k_plus - std::conj(zeta) * ops.k_minus;
  Eigen::MatrixXcd s = gen.exp();
  double leak = vacuum_column_leak(ops, s);
  if (leak_out)
    *leak_out = leak;
  else if (leak > kLeakTolerance)
    throw std::runtime_error("squeeze_matrix: truncation-leak gate failed (leak " +
                             format_leak(leak) + ")");
  return s;
}

Eigen::MatrixXcd wigner_kernel_matrix(const OperatorSet& ops, const HyperboloidPoint& point,
                                      double* leak_out) {
  Complex zeta = SqueezeParameter(point).zeta;
  Eigen::MatrixXcd s = squeeze_matrix(ops, zeta, leak_out);
  int n = ops.cutoff + 1;
  Eigen::VectorXcd parity(ops.dim());
  for (int na = 0; na < n; ++na)
    for (int nb = 0; nb < n; ++nb)
      parity(ops.index(na, nb)) = exp_i_pi(HalfInteger::from_twice(na + nb + 1));
  return 2.0 * s * parity.asDiagonal() * s.adjoint();
}

DisentangledKernelParams disentangled_params(const HyperboloidPoint& point) {
  double t = std::tanh(point.tau);
  double c = std::cosh(point.tau);
  return {std::polar(t, point.chi), std::polar(t, -point.chi), 1.0 / (c * c)};
}

Complex disentangled_kernel_element(HalfInteger k, HalfInteger mu, HalfInteger mu_prime,
                                    const HyperboloidPoint& point) {
  if (k.twice() < 1) throw std::invalid_argument("disentangled_kernel_element: requires k >= 1/2");
  if (mu < k || mu_prime < k)
    throw std::invalid_argument("disentangled_kernel_element: requires mu, mu' >= k");
  if ((mu.twice() - k.twice()) % 2 != 0 || (mu_prime.twice() - k.twice()) % 2 != 0)
    throw std::invalid_argument("disentangled_kernel_element: mu - k, mu' - k must be integers");

  if (point.tau == 0.0) {
    if (mu != mu_prime) return {0.0, 0.0};
    return 2.0 * exp_i_pi(mu);
  }

  double log_tanh = std::log(std::tanh(point.tau));
  double log_cosh = std::log(std::cosh(point.tau));

  long n_mu = (mu.twice() - k.twice()) / 2;        // mu - k
  long n_mup = (mu_prime.twice() - k.twice()) / 2; // mu' - k
  LogGammaTable table(mu.twice() + mu_prime.twice() + 2 * k.twice() + 4);

  double shared = 0.5 * (table.at_twice(mu.twice() + k.twice()) +
                         table.at_twice(mu.twice() - k.twice() + 2) +
                         table.at_twice(mu_prime.twice() + k.twice()) +
                         table.at_twice(mu_prime.twice() - k.twice() + 2));

  // nu = k + j, j = 0..min(mu,mu')-k; terms alternate through e^{i pi nu}.
  long j_max = std::min(n_mu, n_mup);
  double sum = 0.0, comp = 0.0;
  for (long j = 0; j <= j_max; ++j) {
    std::int64_t nu2 = k.twice() + 2 * j;
    long pow_tanh = (n_mu - j) + (n_mup - j);
    double m = shared - table.at_twice(nu2 + k.twice()) - table.at_twice(nu2 - k.twice() + 2) -
               table.at_twice(2 * (n_mu - j) + 2) - table.at_twice(2 * (n_mup - j) + 2) -
               static_cast<double>(nu2) * log_cosh;
    if (pow_tanh != 0) m += static_cast<double>(pow_tanh) * log_tanh;
    double term = ((j % 2 == 0) ? 1.0 : -1.0) * std::exp(m);
    double t = sum + term;
    if (std::abs(sum) >= std::abs(term))
      comp += (sum - t) + term;
    else
      comp += (term - t) + sum;
    sum = t;
  }
  double real_sum = sum + comp;

  Complex chi_phase = std::polar(1.0, point.chi * static_cast<double>(n_mu - n_mup));
  return 2.0 * chi_phase * exp_i_pi(k) * real_sum;
}

SectorSqueezer::SectorSqueezer(int d, int size) : d_(d), size_(size) {
  if (d < 0) throw std::invalid_argument("SectorSqueezer: d must be >= 0");
  if (size < 1) throw std::invalid_argument("SectorSqueezer: size must be >= 1");
  // Hermitian i(K+ - K-) restricted to the sector (tridiagonal).
  Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(size, size);
  for (int m = 0; m + 1 < size; ++m) {
    double sp = std::sqrt(static_cast<double>(m + d + 1) * (m + 1));
    h(m + 1, m) = Complex(0.0, sp);
    h(m, m + 1) = Complex(0.0, -sp);
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h);
  if (es.info() != Eigen::Success)
    throw std::runtime_error("SectorSqueezer: eigendecomposition failed");
  vecs_ = es.eigenvectors();
  evals_ = es.eigenvalues();
}

Eigen::VectorXcd SectorSqueezer::apply(const Eigen::VectorXcd& v, Complex zeta,
                                       bool adjoint) const {
  if (v.size() != size_) throw std::invalid_argument("SectorSqueezer::apply: size mismatch");
  double amp = std::abs(zeta);
  if (amp == 0.0) return v;
  double chi = std::arg(zeta);
  // S(zeta) = R(chi) exp(-i amp H) R(-chi) with H = i(K+ - K-); the adjoint
  // conjugates only the middle factor. Only m-differences enter R.
  double mid_sign = adjoint ? 1.0 : -1.0;

  Eigen::VectorXcd w(size_);
  for (int m = 0; m < size_; ++m) w(m) = v(m) * std::polar(1.0, -chi * m);
  Eigen::VectorXcd y = vecs_.adjoint() * w;
  for (int m = 0; m < size_; ++m) y(m) *= std::polar(1.0, mid_sign * amp * evals_(m));
  w = vecs_ * y;
  for (int m = 0; m < size_; ++m) w(m) *= std::polar(1.0, chi * m);
  return w;
}

Eigen::MatrixXcd SectorSqueezer::matrix(Complex zeta) const {
  Eigen::MatrixXcd out(size_, size_);
  Eigen::VectorXcd e = Eigen::VectorXcd::Zero(size_);
  for (int j = 0; j < size_; ++j) {
    e(j) = 1.0;
    out.col(j) = apply(e, zeta);
    e(j) = 0.0;
  }
  return out;
}

Eigen::MatrixXcd SectorSqueezer::kernel_matrix(const HyperboloidPoint& point) const {
  Eigen::MatrixXcd s = matrix(SqueezeParameter(point).zeta);
  Eigen::VectorXcd parity(size_);
  for (int m = 0; m < size_; ++m) parity(m) = exp_i_pi(mu_at(m));
  return 2.0 * s * parity.asDiagonal() * s.adjoint();
}

Complex SectorSqueezer::kernel_element(int m, int m_prime, const HyperboloidPoint& point) const {
  Complex zeta = SqueezeParameter(point).zeta;
  Eigen::VectorXcd e = Eigen::VectorXcd::Zero(size_);
  e(m_prime) = 1.0;
  Eigen::VectorXcd right = apply(e, zeta, /*adjoint=*/true);
  for (int j = 0; j < size_; ++j) right(j) *= exp_i_pi(mu_at(j));
  Eigen::VectorXcd full = apply(right, zeta, /*adjoint=*/false);
  return 2.0 * full(m);
}

Eigen::MatrixXcd SectorSqueezer::kernel_block(const HyperboloidPoint& point, int rows) const {
  if (rows < 1 || rows > size_)
    throw std::invalid_argument("SectorSqueezer::kernel_block: rows outside the sector");
  Complex zeta = SqueezeParameter(point).zeta;
  // w_{m m'} = 2 sum_j conj(u^m_j) e^{i pi mu_j} u^{m'}_j with u^m = S† e_m
  Eigen::MatrixXcd u(size_, rows);
  Eigen::VectorXcd e = Eigen::VectorXcd::Zero(size_);
  for (int m = 0; m < rows; ++m) {
    e(m) = 1.0;
    u.col(m) = apply(e, zeta, /*adjoint=*/true);
    e(m) = 0.0;
  }
  Eigen::VectorXcd parity(size_);
  for (int j = 0; j < size_; ++j) parity(j) = exp_i_pi(mu_at(j));
  return 2.0 * (u.adjoint() * parity.asDiagonal() * u);
}

double sector_boundary_mass(const Eigen::VectorXcd& v) {
  double mass = 0.0;
  for (int i = std::max<int>(0, static_cast<int>(v.size()) - 2); i < v.size(); ++i)
    mass += std::norm(v(i));
  return mass;
}

KernelExpectationEngine::KernelExpectationEngine(const TwoModeState& state, int sector_depth) {
  if (sector_depth < state.cutoff)
    throw std::invalid_argument("KernelExpectationEngine: sector_depth below state support");
  int size = sector_depth + 1;
  std::map<int, std::shared_ptr<SectorSqueezer>> squeezers;
  // key: signed difference n_a - n_b
  std::map<int, Eigen::VectorXcd> gathered;
  int n = state.dim();
  for (int na = 0; na < n; ++na) {
    for (int nb = 0; nb < n; ++nb) {
      Complex c = state.at(na, nb);
      if (c == Complex{}) continue;
      int diff = na - nb;
      auto [it, inserted] = gathered.try_emplace(diff, Eigen::VectorXcd::Zero(size));
      it->second(std::min(na, nb)) = c;
    }
  }
  for (auto& [diff, psi] : gathered) {
    int d = std::abs(diff);
    auto& sq = squeezers[d];
    if (!sq) sq = std::make_shared<SectorSqueezer>(d, size);
    sectors_.push_back({sq, std::move(psi)});
  }
}

KernelExpectationEngine::Result KernelExpectationEngine::eval(const HyperboloidPoint& point) const {
  Complex zeta = SqueezeParameter(point).zeta;
  Complex total{0.0, 0.0};
  double leak = 0.0;
  for (const SectorData& sec : sectors_) {
    Eigen::VectorXcd u = sec.squeezer->apply(sec.psi, zeta, /*adjoint=*/true);
    leak += sector_boundary_mass(u);
    Complex acc{0.0, 0.0};
    for (int m = 0; m < u.size(); ++m)
      acc += exp_i_pi(sec.squeezer->mu_at(m)) * std::norm(u(m));
    total += 2.0 * acc;
  }
  return {total, leak};
}

Complex KernelExpectationEngine::eval_gated(const HyperboloidPoint& point) const {
  Result r = eval(point);
  if (r.leak > kLeakTolerance)
    throw std::runtime_error("kernel expectation: truncation-leak gate failed (leak " +
                             std::to_string(r.leak) + ")");
  return r.value;
}

namespace {

// exp(G)|0> for a banded single-mode generator, by sub-stepped Taylor with
// step norm held near 1.
std::vector<Complex> expm_apply_vacuum(int dim, double norm_bound,
                                       const std::function<void(const std::vector<Complex>&,
                                                                std::vector<Complex>&)>& matvec) {
  std::vector<Complex> v(static_cast<std::size_t>(dim), Complex{0.0, 0.0});
  v[0] = 1.0;
  long steps = std::max<long>(1, static_cast<long>(std::ceil(norm_bound)));
  std::vector<Complex> term(v.size()), next(v.size());
  for (long s = 0; s < steps; ++s) {
    term = v;
    double v_norm2 = 1e-300;
    for (const Complex& c : v) v_norm2 += std::norm(c);
    for (int it = 1; it < 400; ++it) {
      matvec(term, next);
      double scale = 1.0 / (static_cast<double>(steps) * it);
      double t_norm2 = 0.0;
      for (std::size_t i = 0; i < v.size(); ++i) {
        term[i] = next[i] * scale;
        v[i] += term[i];
        t_norm2 += std::norm(term[i]);
      }
      v_norm2 = 0.0;
      for (const Complex& c : v) v_norm2 += std::norm(c);
      if (t_norm2 < 1e-36 * std::max(v_norm2, 1e-300)) break;
    }
  }
  return v;
}

}  // namespace

std::vector<Complex> coherent_vector(Complex alpha, int cutoff) {
  if (cutoff < 0) throw std::invalid_argument("coherent_vector: cutoff must be >= 0");
  int dim = cutoff + 1;
  double norm_bound = 2.0 * std::abs(alpha) * std::sqrt(static_cast<double>(dim));
  Complex ac = std::conj(alpha);
  auto matvec = [&](const std::vector<Complex>& x, std::vector<Complex>& y) {
    for (int m = 0; m < dim; ++m) {
      Complex acc{0.0, 0.0};
      if (m > 0) acc += alpha * std::sqrt(static_cast<double>(m)) * x[m - 1];
      if (m + 1 < dim) acc -= ac * std::sqrt(static_cast<double>(m + 1)) * x[m + 1];
      y[static_cast<std::size_t>(m)] = acc;
    }
  };
  return expm_apply_vacuum(dim, norm_bound, matvec);
}

std::vector<Complex> squeezed_vacuum_vector(Complex zeta, int cutoff) {
  if (cutoff < 0) throw std::invalid_argument("squeezed_vacuum_vector: cutoff must be >= 0");
  int dim = cutoff + 1;
  double norm_bound = std::abs(zeta) * (cutoff + 2.0);
  Complex zc = std::conj(zeta);
  auto matvec = [&](const std::vector<Complex>& x, std::vector<Complex>& y) {
    for (int m = 0; m < dim; ++m) {
      Complex acc{0.0, 0.0};
      if (m >= 2)
        acc += 0.5 * zeta * std::sqrt(static_cast<double>(m) * (m - 1)) * x[m - 2];
      if (m + 2 < dim)
        acc -= 0.5 * zc * std::sqrt(static_cast<double>(m + 1) * (m + 2)) * x[m + 2];
      y[static_cast<std::size_t>(m)] = acc;
    }
  };
  return expm_apply_vacuum(dim, norm_bound, matvec);
}

}  // namespace su11
