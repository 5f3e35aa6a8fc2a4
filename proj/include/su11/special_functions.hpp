#pragma once

#include <vector>

#include "su11/half_integer.hpp"

namespace su11 {

/// Natural log of Gamma(x) for x > 0. Lanczos approximation, accurate to a
/// few ulp over the working range. Rejects x <= 0.
double log_gamma(double x);

/// Memoized log_gamma on the half-integer grid: entry j holds log_gamma(j/2).
/// One table is shared across a d-function row or a whole grid evaluation.
class LogGammaTable {
public:
  explicit LogGammaTable(std::int64_t max_twice = 0) { extend(max_twice); }

  void extend(std::int64_t max_twice);

  /// log_gamma(h) with h = twice/2 > 0.
  double at_twice(std::int64_t twice) const;

private:
  std::vector<double> values_;  // index = twice, values_[0] unused
};

/// Terminating Gauss hypergeometric series 2F1(a, b; c; z) with a a
/// nonpositive integer. Evaluated as the exact finite sum with Neumaier
/// compensated summation. Rejects non-terminating a, z outside [0, 1), and
/// c a nonpositive integer reached before the series terminates.
double gauss_2f1_terminating(double a, double b, double c, double z);

/// Query for the SU(1,1) d-function d^{(k)}_{mu mu'}(tau) on the positive
/// discrete series: mu, mu' in {k, k+1, ...}, tau >= 0.
struct DFunctionQuery {
  HalfInteger k;
  HalfInteger mu;
  HalfInteger mu_prime;
  double tau = 0.0;
};

/// d^{(k)}_{mu mu'}(tau), real.
///
/// At tau = 0 this is the Kronecker delta as an exact branch. For mu < mu'
/// the query is transposed through d_{mu mu'} = (-1)^{mu'-mu} d_{mu' mu},
/// so the Gamma-ratio prefactor and sinh power are always well posed. The
/// gamma ratios and cosh/sinh powers are combined in log space; the
/// polynomial part is evaluated by the Jacobi three-term recurrence, which
/// is algebraically identical to the terminating 2F1 form but does not
/// cancel catastrophically at large mu - k.
double dfunction(const DFunctionQuery& q);
double dfunction(const DFunctionQuery& q, const LogGammaTable& table);

/// Row d^{(k)}_{mu, k+j}(tau), j = 0..count-1, sharing one log-gamma table.
/// Entry j equals dfunction({k, mu, k+j, tau}) to within rounding.
std::vector<double> dfunction_row(HalfInteger k, HalfInteger mu, double tau, int count);

}  // namespace su11
