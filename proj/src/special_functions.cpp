#include "su11/special_functions.hpp"

#include <cmath>
#include <stdexcept>

#include "su11/phase_space.hpp"

namespace su11 {

namespace {

// Lanczos, g = 7, 9 terms.
constexpr double kLanczos[9] = {
    0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
    771.32342877765313,   -176.61502916214059,   12.507343278686905,
    -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};

constexpr double kHalfLog2Pi = 0.91893853320467274178032973640562;

}  // namespace

double log_gamma(double x) {
  if (!(x > 0.0)) throw std::invalid_argument("log_gamma: requires x > 0");
  if (x < 0.5) {
    // Reflection keeps the Lanczos sum in its accurate range.
    return std::log(kPi / std::sin(kPi * x)) - log_gamma(1.0 - x);
  }
  double z = x - 1.0;
  double acc = kLanczos[0];
  for (int i = 1; i < 9; ++i) acc += kLanczos[i] / (z + i);
  double t = z + 7.5;
  return kHalfLog2Pi + (z + 0.5) * std::log(t) - t + std::log(acc);
}

void LogGammaTable::extend(std::int64_t max_twice) {
  std::int64_t old = static_cast<std::int64_t>(values_.size());
  if (max_twice + 1 <= old) return;
  values_.resize(static_cast<std::size_t>(max_twice + 1));
  for (std::int64_t t = std::max<std::int64_t>(old, 1); t <= max_twice; ++t)
    values_[static_cast<std::size_t>(t)] = log_gamma(static_cast<double>(t) / 2.0);
}

double LogGammaTable::at_twice(std::int64_t twice) const {
  if (twice < 1 || twice >= static_cast<std::int64_t>(values_.size()))
    throw std::out_of_range("LogGammaTable: argument outside the prepared range");
  return values_[static_cast<std::size_t>(twice)];
}

double gauss_2f1_terminating(double a, double b, double c, double z) {
  double ar = std::nearbyint(a);
  if (!(std::abs(a - ar) <= 1e-9) || ar > 0.0)
    throw std::invalid_argument("gauss_2f1_terminating: a must be a nonpositive integer");
  if (!(z >= 0.0 && z < 1.0))
    throw std::invalid_argument("gauss_2f1_terminating: z must lie in [0, 1)");
  long n_terms = static_cast<long>(-ar) + 1;
  double cr = std::nearbyint(c);
  if (std::abs(c - cr) <= 1e-12 && cr <= 0.0 && -cr <= static_cast<double>(n_terms - 2))
    throw std::invalid_argument("gauss_2f1_terminating: c hits a nonpositive integer before termination");

  // Neumaier compensated sum of the exact finite series.
  double term = 1.0;
  double sum = 0.0, comp = 0.0;
  for (long n = 0; n < n_terms; ++n) {
    double t = sum + term;
    if (std::abs(sum) >= std::abs(term))
      comp += (sum - t) + term;
    else
      comp += (term - t) + sum;
    sum = t;
    double dn = static_cast<double>(n);
    term *= (a + dn) * (b + dn) / ((c + dn) * (dn + 1.0)) * z;
  }
  return sum + comp;
}

namespace {

// P_n^{(alpha,beta)}(x) by the three-term recurrence; alpha, beta >= 0 here,
// so the n >= 2 leading coefficient never vanishes.
double jacobi_poly(long n, double alpha, double beta, double x) {
  if (n == 0) return 1.0;
  double pm1 = 1.0;
  double p = (alpha + 1.0) + 0.5 * (alpha + beta + 2.0) * (x - 1.0);
  for (long m = 2; m <= n; ++m) {
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

void validate_query(const DFunctionQuery& q) {
  if (q.k.twice() < 1) throw std::invalid_argument("dfunction: requires k >= 1/2");
  if (q.mu < q.k || q.mu_prime < q.k)
    throw std::invalid_argument("dfunction: requires mu >= k and mu' >= k");
  if ((q.mu.twice() - q.k.twice()) % 2 != 0 || (q.mu_prime.twice() - q.k.twice()) % 2 != 0)
    throw std::invalid_argument("dfunction: mu - k and mu' - k must be nonnegative integers");
  if (!(q.tau >= 0.0) || !std::isfinite(q.tau))
    throw std::invalid_argument("dfunction: requires finite tau >= 0");
}

double dfunction_reduced(HalfInteger k, HalfInteger mu, HalfInteger mu_prime, double tau,
                         const LogGammaTable& table) {
  // Assumes mu >= mu_prime >= k, tau > 0.
  long n = (mu_prime.twice() - k.twice()) / 2;
  double alpha = static_cast<double>((mu.twice() - mu_prime.twice()) / 2);
  double beta = static_cast<double>(k.twice() - 1);
  double th = std::tanh(tau / 2.0);
  double x = 1.0 - 2.0 * th * th;

  double log_pref =
      0.5 * (table.at_twice(mu.twice() + k.twice()) - table.at_twice(mu_prime.twice() + k.twice()) +
             table.at_twice(mu_prime.twice() - k.twice() + 2) -
             table.at_twice(mu.twice() - k.twice() + 2)) +
      alpha * std::log(th) - k.value() * 2.0 * std::log(std::cosh(tau / 2.0));

  return jacobi_poly(n, alpha, beta, x) * std::exp(log_pref);
}

}  // namespace

double dfunction(const DFunctionQuery& q, const LogGammaTable& table) {
  validate_query(q);
  if (q.tau == 0.0) return q.mu == q.mu_prime ? 1.0 : 0.0;
  if (q.mu >= q.mu_prime) return dfunction_reduced(q.k, q.mu, q.mu_prime, q.tau, table);
  return parity_sign(q.mu, q.mu_prime) * dfunction_reduced(q.k, q.mu_prime, q.mu, q.tau, table);
}

double dfunction(const DFunctionQuery& q) {
  validate_query(q);
  if (q.tau == 0.0) return q.mu == q.mu_prime ? 1.0 : 0.0;
  LogGammaTable table(std::max(q.mu.twice(), q.mu_prime.twice()) + q.k.twice() + 2);
  return dfunction(q, table);
}

std::vector<double> dfunction_row(HalfInteger k, HalfInteger mu, double tau, int count) {
  if (count < 1) throw std::invalid_argument("dfunction_row: count must be >= 1");
  LogGammaTable table(mu.twice() + k.twice() + 2 * count + 2);
  std::vector<double> row(static_cast<std::size_t>(count));
  for (int j = 0; j < count; ++j) {
    HalfInteger mu_prime = k + HalfInteger::from_int(j);
    row[static_cast<std::size_t>(j)] = dfunction({k, mu, mu_prime, tau}, table);
  }
  return row;
}

}  // namespace su11
