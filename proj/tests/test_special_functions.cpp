#include <doctest.h>

#include <cmath>
#include <random>

#include "su11/phase_space.hpp"
#include "su11/special_functions.hpp"

using namespace su11;

namespace {

double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// plain left-to-right summation, no compensation: the independent check
double gauss_2f1_plain(double a, double b, double c, double z) {
  long n_terms = static_cast<long>(-std::nearbyint(a)) + 1;
  double term = 1.0, sum = 0.0;
  for (long n = 0; n < n_terms; ++n) {
    sum += term;
    term *= (a + n) * (b + n) / ((c + n) * (n + 1.0)) * z;
  }
  return sum;
}

}  // namespace

TEST_CASE("log_gamma known values") {
  CHECK(std::abs(log_gamma(1.0)) <= 1e-15);
  CHECK(std::abs(log_gamma(2.0)) <= 1e-15);
  CHECK(log_gamma(0.5) == doctest::Approx(0.5 * std::log(kPi)).epsilon(1e-15));
  double ln_10_fact = std::log(3628800.0);
  CHECK(std::abs(log_gamma(11.0) - ln_10_fact) <= 1e-13);
  CHECK_THROWS_AS(log_gamma(0.0), std::invalid_argument);
  CHECK_THROWS_AS(log_gamma(-3.0), std::invalid_argument);
}

TEST_CASE("log_gamma accuracy against long-double lgamma") {
  // absolute error where the magnitude allows it, relative error further out
  for (double x = 0.5; x <= 30.0; x += 0.25)
    CHECK(std::abs(log_gamma(x) - static_cast<double>(std::lgammal(x))) <= 1e-13);
  for (double x : {50.0, 123.25, 500.5, 1000.0, 4321.75, 10000.0}) {
    double ref = static_cast<double>(std::lgammal(x));
    CHECK(std::abs(log_gamma(x) - ref) <= 1e-13 * std::max(1.0, std::abs(ref)));
  }
}

TEST_CASE("log-gamma table matches the scalar function") {
  LogGammaTable table(41);
  for (std::int64_t t = 1; t <= 41; ++t)
    CHECK(table.at_twice(t) == log_gamma(static_cast<double>(t) / 2.0));
  CHECK_THROWS_AS(table.at_twice(0), std::out_of_range);
  CHECK_THROWS_AS(table.at_twice(42), std::out_of_range);
}

TEST_CASE("terminating 2F1 small cases") {
  CHECK(gauss_2f1_terminating(0.0, 3.7, 1.2, 0.9) == 1.0);
  // two-term series: 1 - (b/c) z
  CHECK(gauss_2f1_terminating(-1.0, 2.0, 4.0, 0.5) ==
        doctest::Approx(1.0 - 2.0 / 4.0 * 0.5).epsilon(1e-15));
  // hand-expanded three-term series
  CHECK(gauss_2f1_terminating(-2.0, 3.0, 2.0, 0.25) == doctest::Approx(0.375).epsilon(1e-15));
}

TEST_CASE("terminating 2F1 agrees with plain summation") {
  std::mt19937_64 rng(123);
  for (int trial = 0; trial < 500; ++trial) {
    double a = -static_cast<double>(rng() % 12);
    double b = 10.0 * uniform01(rng);
    double c = 0.5 + 10.0 * uniform01(rng);
    double z = 0.95 * uniform01(rng);
    double lhs = gauss_2f1_terminating(a, b, c, z);
    double rhs = gauss_2f1_plain(a, b, c, z);
    CHECK(std::abs(lhs - rhs) <= 1e-10 * std::max(1.0, std::abs(rhs)));
  }
}

TEST_CASE("terminating 2F1 rejections") {
  CHECK_THROWS_AS(gauss_2f1_terminating(-1.5, 1.0, 1.0, 0.5), std::invalid_argument);
  CHECK_THROWS_AS(gauss_2f1_terminating(0.5, 1.0, 1.0, 0.5), std::invalid_argument);
  CHECK_THROWS_AS(gauss_2f1_terminating(-1.0, 1.0, 1.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(gauss_2f1_terminating(-1.0, 1.0, 1.0, -0.1), std::invalid_argument);
  // c = -1 is reached at the third term of a length-4 series
  CHECK_THROWS_AS(gauss_2f1_terminating(-3.0, 1.0, -1.0, 0.5), std::invalid_argument);
  // but c = -5 is never reached by a length-3 series
  CHECK_NOTHROW(gauss_2f1_terminating(-2.0, 1.0, -5.0, 0.5));
}

TEST_CASE("d-function is the Kronecker delta at tau = 0 (exact branch)") {
  for (std::int64_t k2 : {1, 2, 3, 8}) {
    HalfInteger k = HalfInteger::from_twice(k2);
    for (int m = 0; m <= 8; ++m) {
      for (int mp = 0; mp <= 8; ++mp) {
        double d = dfunction({k, k + HalfInteger::from_int(m), k + HalfInteger::from_int(mp), 0.0});
        CHECK(d == (m == mp ? 1.0 : 0.0));
      }
    }
  }
}

TEST_CASE("d-function closed forms for k = 1/2") {
  HalfInteger half = HalfInteger::from_twice(1);
  for (double tau : {0.1, 0.5, 1.0, 2.0, 5.0}) {
    // lowest-weight diagonal element collapses to sech(tau/2)
    CHECK(dfunction({half, half, half, tau}) ==
          doctest::Approx(1.0 / std::cosh(tau / 2)).epsilon(1e-14));
    // first off-diagonal: sinh(tau/2) / cosh^2(tau/2)
    HalfInteger mu32 = HalfInteger::from_twice(3);
    CHECK(dfunction({half, mu32, half, tau}) ==
          doctest::Approx(std::sinh(tau / 2) / std::pow(std::cosh(tau / 2), 2)).epsilon(1e-14));
    CHECK(dfunction({half, half, mu32, tau}) ==
          doctest::Approx(-std::sinh(tau / 2) / std::pow(std::cosh(tau / 2), 2)).epsilon(1e-14));
  }
}

TEST_CASE("d-function matches the literal 2F1 form where the series is benign") {
  // small mu - k, so the alternating series loses nothing
  LogGammaTable table(200);
  std::mt19937_64 rng(321);
  for (int trial = 0; trial < 400; ++trial) {
    HalfInteger k = HalfInteger::from_twice(1 + static_cast<std::int64_t>(rng() % 6));
    int mp = static_cast<int>(rng() % 4);
    int m = mp + static_cast<int>(rng() % 5);  // mu >= mu'
    double tau = 0.05 + 2.0 * uniform01(rng);
    HalfInteger mu = k + HalfInteger::from_int(m);
    HalfInteger mup = k + HalfInteger::from_int(mp);

    double kv = k.value(), muv = mu.value(), mupv = mup.value();
    double z = std::pow(std::tanh(tau / 2), 2);
    double f = gauss_2f1_terminating(kv - mupv, kv + muv, muv - mupv + 1.0, z);
    double lit = std::exp(0.5 * (log_gamma(muv + kv) + log_gamma(muv - kv + 1.0) -
                                 log_gamma(mupv + kv) - log_gamma(mupv - kv + 1.0)) -
                          log_gamma(muv - mupv + 1.0) +
                          (mupv - muv - 2.0 * kv) * std::log(std::cosh(tau / 2)) +
                          (muv - mupv) * std::log(std::sinh(tau / 2))) *
                 f;
    double d = dfunction({k, mu, mup, tau}, table);
    CHECK(d == doctest::Approx(lit).epsilon(1e-11));
  }
}

TEST_CASE("d-function symmetry relation") {
  std::mt19937_64 rng(99);
  double worst = 0.0;
  for (int trial = 0; trial < 500; ++trial) {
    HalfInteger k = HalfInteger::from_twice(1 + static_cast<std::int64_t>(rng() % 8));
    HalfInteger mu = k + HalfInteger::from_int(static_cast<int>(rng() % 31));
    HalfInteger mup = k + HalfInteger::from_int(static_cast<int>(rng() % 31));
    double tau = 5.0 * uniform01(rng);
    double d1 = dfunction({k, mu, mup, tau});
    double d2 = dfunction({k, mup, mu, tau});
    double denom = std::max({std::abs(d1), std::abs(d2), 1e-300});
    worst = std::max(worst, std::abs(d1 - parity_sign(mu, mup) * d2) / denom);
  }
  CHECK(worst <= 1e-10);
}

TEST_CASE("d-function stays finite far out in the weight ladder") {
  for (std::int64_t k2 : {1, 4, 8}) {
    HalfInteger k = HalfInteger::from_twice(k2);
    for (double tau : {0.5, 5.0, 20.0}) {
      for (int m : {0, 40, 100}) {
        for (int mp : {0, 17, 100}) {
          double d =
              dfunction({k, k + HalfInteger::from_int(m), k + HalfInteger::from_int(mp), tau});
          CHECK(std::isfinite(d));
          CHECK(std::abs(d) <= 1.0 + 1e-12);  // matrix element of a unitary
        }
      }
    }
  }
}

TEST_CASE("d-function row agrees with scalar evaluation") {
  HalfInteger k = HalfInteger::from_twice(3);
  HalfInteger mu = k + HalfInteger::from_int(5);
  for (double tau : {0.0, 0.9, 3.3}) {
    auto row = dfunction_row(k, mu, tau, 24);
    REQUIRE(row.size() == 24);
    for (int j = 0; j < 24; ++j) {
      double scalar = dfunction({k, mu, k + HalfInteger::from_int(j), tau});
      CHECK(std::abs(row[static_cast<std::size_t>(j)] - scalar) <= 1e-13);
    }
  }
  // tau = 0 row is the indicator of mu' = mu
  auto row0 = dfunction_row(k, mu, 0.0, 12);
  for (int j = 0; j < 12; ++j) CHECK(row0[static_cast<std::size_t>(j)] == (j == 5 ? 1.0 : 0.0));
}

TEST_CASE("truncated column orthonormality improves with range") {
  HalfInteger k = HalfInteger::from_twice(2);
  double tau = 2.0;
  for (int mp : {0, 3}) {
    for (int ms : {0, 3, 5}) {
      double acc = 0.0;
      for (int m = 0; m <= 150; ++m) {
        HalfInteger mu = k + HalfInteger::from_int(m);
        acc += dfunction({k, mu, k + HalfInteger::from_int(mp), tau}) *
               dfunction({k, mu, k + HalfInteger::from_int(ms), tau});
      }
      CHECK(std::abs(acc - (mp == ms ? 1.0 : 0.0)) <= 1e-8);
    }
  }
}

TEST_CASE("d-function rejections") {
  HalfInteger k = HalfInteger::from_int(1);
  HalfInteger mu = HalfInteger::from_twice(1);  // 1/2 < k
  CHECK_THROWS_AS(dfunction({k, mu, k, 1.0}), std::invalid_argument);
  CHECK_THROWS_AS(dfunction({k, k, mu, 1.0}), std::invalid_argument);
  // mu - k not an integer
  CHECK_THROWS_AS(dfunction({k, k + HalfInteger::from_twice(1), k, 1.0}), std::invalid_argument);
  CHECK_THROWS_AS(dfunction({k, k, k, -1.0}), std::invalid_argument);
  CHECK_THROWS_AS(dfunction({HalfInteger::from_int(0), k, k, 1.0}), std::invalid_argument);
}
