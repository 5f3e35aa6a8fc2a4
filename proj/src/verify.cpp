#include "su11/verify.hpp"

#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <random>
#include <sstream>
#include <stdexcept>

#include "su11/interferometer.hpp"
#include "su11/oracle.hpp"
#include "su11/special_functions.hpp"
#include "su11/state_builders.hpp"
#include "su11/wigner.hpp"

namespace su11 {

bool SuiteResult::passed() const {
  if (!gate.passed) return false;
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

double SuiteResult::max_residual() const {
  double r = 0.0;
  for (const CheckResult& c : checks) r = std::max(r, c.residual);
  return r;
}

namespace {

double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

struct Timer {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  }
};

CheckResult make_check(const std::string& name, double residual, double tolerance,
                       const std::string& worst) {
  return {name, residual, tolerance, residual <= tolerance, worst};
}

std::string describe_query(HalfInteger k, HalfInteger mu, HalfInteger mup, double tau,
                           double chi = 0.0) {
  std::ostringstream ss;
  ss << "k=" << k.str() << " mu=" << mu.str() << " mu'=" << mup.str() << " tau=" << tau;
  if (chi != 0.0) ss << " chi=" << chi;
  return ss.str();
}

}  // namespace

SuiteResult run_dfunc_suite() {
  Timer timer;
  SuiteResult suite;
  suite.name = "dfunc";

  {  // Kronecker delta at tau = 0, exact
    double worst = 0.0;
    std::string worst_case;
    for (std::int64_t k2 = 1; k2 <= 8; ++k2) {
      HalfInteger k = HalfInteger::from_twice(k2);
      for (int m = 0; m <= 30; ++m) {
        for (int mp = 0; mp <= 30; ++mp) {
          HalfInteger mu = k + HalfInteger::from_int(m);
          HalfInteger mup = k + HalfInteger::from_int(mp);
          double d = dfunction({k, mu, mup, 0.0});
          double r = std::abs(d - (m == mp ? 1.0 : 0.0));
          if (r > worst) {
            worst = r;
            worst_case = describe_query(k, mu, mup, 0.0);
          }
        }
      }
    }
    suite.checks.push_back(make_check("delta_at_zero", worst, 0.0, worst_case));
  }

  {  // symmetry relation over random queries
    std::mt19937_64 rng(0x511D0001ULL);
    double worst = 0.0;
    std::string worst_case;
    for (int trial = 0; trial < 10000; ++trial) {
      HalfInteger k = HalfInteger::from_twice(1 + static_cast<std::int64_t>(rng() % 8));
      int m = static_cast<int>(rng() % 31);
      int mp = static_cast<int>(rng() % 31);
      double tau = 5.0 * uniform01(rng);
      HalfInteger mu = k + HalfInteger::from_int(m);
      HalfInteger mup = k + HalfInteger::from_int(mp);
      double d1 = dfunction({k, mu, mup, tau});
      double d2 = dfunction({k, mup, mu, tau});
      double expected = parity_sign(mu, mup) * d2;
      double denom = std::max({std::abs(d1), std::abs(d2), 1e-300});
      double r = std::abs(d1 - expected) / denom;
      if (r > worst) {
        worst = r;
        worst_case = describe_query(k, mu, mup, tau);
      }
    }
    suite.checks.push_back(make_check("symmetry", worst, 1e-10, worst_case));
  }

  {  // row evaluation consistent with scalar calls
    double worst = 0.0;
    std::string worst_case;
    for (std::int64_t k2 : {1, 2, 4}) {
      HalfInteger k = HalfInteger::from_twice(k2);
      for (double tau : {0.0, 0.8, 2.7}) {
        for (int m : {0, 3, 11}) {
          HalfInteger mu = k + HalfInteger::from_int(m);
          std::vector<double> row = dfunction_row(k, mu, tau, 16);
          for (int j = 0; j < 16; ++j) {
            HalfInteger mup = k + HalfInteger::from_int(j);
            double r = std::abs(row[static_cast<std::size_t>(j)] - dfunction({k, mu, mup, tau}));
            if (r > worst) {
              worst = r;
              worst_case = describe_query(k, mu, mup, tau);
            }
          }
        }
      }
    }
    suite.checks.push_back(make_check("row_consistency", worst, 1e-13, worst_case));
  }

  {  // factorized kernel reproduces the d-function at doubled argument
    double worst = 0.0;
    std::string worst_case;
    for (std::int64_t k2 : {1, 2, 3, 4}) {
      HalfInteger k = HalfInteger::from_twice(k2);
      for (double tau : {0.3, 0.9, 1.6}) {
        for (double chi : {0.0, 0.7}) {
          HyperboloidPoint point(tau, chi);
          for (int m = 0; m <= 10; ++m) {
            for (int mp = 0; mp <= 10; ++mp) {
              HalfInteger mu = k + HalfInteger::from_int(m);
              HalfInteger mup = k + HalfInteger::from_int(mp);
              Complex element = disentangled_kernel_element(k, mu, mup, point);
              Complex expected = 2.0 * std::polar(1.0, chi * static_cast<double>(m - mp)) *
                                 exp_i_pi(mup) * dfunction({k, mu, mup, 2.0 * tau});
              double r = std::abs(element - expected);
              if (r > worst) {
                worst = r;
                worst_case = describe_query(k, mu, mup, tau, chi);
              }
            }
          }
        }
      }
    }
    suite.checks.push_back(make_check("kernel_element_vs_dfunction", worst, 1e-8, worst_case));
  }

  {  // truncated column orthonormality (unitarity of the boost)
    double worst = 0.0;
    std::string worst_case;
    for (std::int64_t k2 : {1, 4}) {
      HalfInteger k = HalfInteger::from_twice(k2);
      for (double tau : {0.5, 2.0}) {
        for (int mp = 0; mp <= 6; ++mp) {
          for (int ms = 0; ms <= 6; ++ms) {
            HalfInteger mup = k + HalfInteger::from_int(mp);
            HalfInteger mus = k + HalfInteger::from_int(ms);
            double acc = 0.0;
            for (int m = 0; m <= 150; ++m) {
              HalfInteger mu = k + HalfInteger::from_int(m);
              acc += dfunction({k, mu, mup, tau}) * dfunction({k, mu, mus, tau});
            }
            double r = std::abs(acc - (mp == ms ? 1.0 : 0.0));
            if (r > worst) {
              worst = r;
              worst_case = describe_query(k, mup, mus, tau);
            }
          }
        }
      }
    }
    suite.checks.push_back(make_check("column_orthonormality", worst, 1e-8, worst_case));
  }

  {  // gate: Fock-route kernel elements stable under cutoff doubling
    double delta = 0.0;
    for (std::int64_t k2 : {1, 4}) {
      int d = static_cast<int>(k2 - 1);
      SectorSqueezer small(d, 200), big(d, 400);
      for (double tau : {0.5, 2.0}) {
        HyperboloidPoint point(tau, 0.9);
        Eigen::MatrixXcd ks = small.kernel_block(point, 9);
        Eigen::MatrixXcd kb = big.kernel_block(point, 9);
        delta = std::max(delta, (ks - kb).cwiseAbs().maxCoeff());
      }
    }
    suite.gate = {delta, 1e-8, delta <= 1e-8, "sector kernel elements, depth 199 vs 399"};
  }

  suite.seconds = timer.seconds();
  return suite;
}

SuiteResult run_kernel_suite() {
  Timer timer;
  SuiteResult suite;
  suite.name = "kernel";

  // a squeezed level m at tau = 2.5 carries weight out to ~350 levels
  // (peak near m cosh(tau), slow tanh^2 tail); 400 converges to ~1e-14
  double worst = 0.0, delta = 0.0;
  std::string worst_case;
  for (std::int64_t k2 = 1; k2 <= 6; ++k2) {
    HalfInteger k = HalfInteger::from_twice(k2);
    int d = static_cast<int>(k2 - 1);
    SectorSqueezer sector(d, 400), doubled(d, 800);
    for (double tau : {0.5, 1.5, 2.5}) {
      for (double chi : {0.0, 2.0, -2.7}) {
        HyperboloidPoint point(tau, chi);
        Eigen::MatrixXcd fock = sector.kernel_block(point, 16);
        Eigen::MatrixXcd fock2 = doubled.kernel_block(point, 16);
        for (int m = 0; m <= 15; ++m) {
          for (int mp = 0; mp <= 15; ++mp) {
            HalfInteger mu = k + HalfInteger::from_int(m);
            HalfInteger mup = k + HalfInteger::from_int(mp);
            Complex series = disentangled_kernel_element(k, mu, mup, point);
            double r = std::abs(series - fock(m, mp));
            if (r > worst) {
              worst = r;
              worst_case = describe_query(k, mu, mup, tau, chi);
            }
            delta = std::max(delta, std::abs(fock(m, mp) - fock2(m, mp)));
          }
        }
      }
    }
  }
  suite.checks.push_back(make_check("disentangled_vs_fock", worst, 1e-8, worst_case));
  suite.gate = {delta, 1e-8, delta <= 1e-8, "boxed-kernel elements, depth 399 vs 799"};
  suite.seconds = timer.seconds();
  return suite;
}

namespace {

struct WignerCase {
  std::string name;
  TwoModeState state;
};

std::vector<WignerCase> wigner_suite_states() {
  std::vector<WignerCase> cases;
  cases.push_back({"tmsv_xi_0.3", build_tmsv(Complex(0.3, 0.0), 60)});
  cases.push_back({"tmsv_xi_0.485", build_tmsv(Complex(0.485, 0.0), 60)});
  cases.push_back({"tmsv_xi_0.6", build_tmsv(Complex(0.6, 0.0), 60)});
  {
    DecomposedState d = build_su11_coherent(HalfInteger::from_int(1),
                                            DiskPoint(Complex(0.4, 0.25)), 60);
    cases.push_back({"su11_k_1", reconstruct(d, 61)});
  }
  {
    DecomposedState d = build_su11_coherent(HalfInteger::from_twice(3),
                                            DiskPoint(Complex(-0.35, 0.1)), 60);
    cases.push_back({"su11_k_3/2", reconstruct(d, 62)});
  }
  return cases;
}

}  // namespace

SuiteResult run_wigner_suite() {
  Timer timer;
  SuiteResult suite;
  suite.name = "wigner";

  double worst = 0.0, delta = 0.0, worst_leak = 0.0;
  std::string worst_case;
  std::mt19937_64 rng(0x511D0002ULL);
  for (const WignerCase& wc : wigner_suite_states()) {
    KernelExpectationEngine oracle(wc.state, 150);
    KernelExpectationEngine oracle2(wc.state, 300);
    WignerEvaluator evaluator(decompose(wc.state));
    for (int trial = 0; trial < 200; ++trial) {
      double tau = 2.0 * uniform01(rng);
      double chi = -kPi + 2.0 * kPi * uniform01(rng);
      HyperboloidPoint point(tau, chi);
      auto fock = oracle.eval(point);
      auto fock2 = oracle2.eval(point);
      worst_leak = std::max(worst_leak, fock.leak);
      Complex analytic = evaluator.eval(point, PhaseConvention::literal);
      double r = std::abs(analytic - fock.value) / std::max(1.0, std::abs(fock.value));
      if (r > worst) {
        worst = r;
        std::ostringstream ss;
        ss << wc.name << " tau=" << tau << " chi=" << chi;
        worst_case = ss.str();
      }
      delta = std::max(delta, std::abs(fock.value - fock2.value));
    }
  }
  suite.checks.push_back(make_check("analytic_vs_fock", worst, 1e-6, worst_case));
  suite.checks.push_back(make_check("oracle_leak", worst_leak, kLeakTolerance, "boundary mass"));
  suite.gate = {delta, 1e-8, delta <= 1e-8, "kernel expectations, sector depth 150 vs 300"};
  suite.seconds = timer.seconds();
  return suite;
}

SuiteResult run_interferometer_suite() {
  Timer timer;
  SuiteResult suite;
  suite.name = "interferometer";

  TwoModeState input = build_tmsv(Complex(0.5, 0.0), 80);
  InterferometerConfig cfg{0.5, 0.0, kPi / 2.0};
  GridSpec grid = GridSpec::disk(101, 101, 0.98);

  DecomposedState input_blocks = decompose(input);
  WignerField covariant =
      output_wigner_covariant(input_blocks, cfg, grid, PhaseConvention::per_irrep_normalized);

  TwoModeState direct = output_state_direct(input, cfg, 180);
  TwoModeState direct2 = output_state_direct(input, cfg, 360);
  WignerField direct_field =
      wigner_grid(decompose(direct), grid, PhaseConvention::per_irrep_normalized);

  double worst = 0.0;
  std::string worst_case;
  for (std::size_t i = 0; i < covariant.values.size(); ++i) {
    double r = std::abs(covariant.values[i] - direct_field.values[i]) /
               std::max(1.0, std::abs(direct_field.values[i]));
    if (r > worst) {
      worst = r;
      std::ostringstream ss;
      ss << "xi = (" << covariant.points[i].xi.xi.real() << ", " << covariant.points[i].xi.xi.imag()
         << ")";
      worst_case = ss.str();
    }
  }
  suite.checks.push_back(make_check("covariant_vs_direct", worst, 1e-6, worst_case));

  double delta = 0.0;
  for (int na = 0; na <= direct.cutoff; ++na)
    for (int nb = 0; nb <= direct.cutoff; ++nb)
      delta = std::max(delta, std::abs(direct.at(na, nb) - direct2.at(na, nb)));
  suite.gate = {delta, 1e-8, delta <= 1e-8, "direct-route amplitudes, sector depth 180 vs 360"};
  suite.seconds = timer.seconds();
  return suite;
}

std::vector<SuiteResult> run_suites(const std::string& suite) {
  std::vector<SuiteResult> out;
  if (suite == "dfunc" || suite == "all") out.push_back(run_dfunc_suite());
  if (suite == "kernel" || suite == "all") out.push_back(run_kernel_suite());
  if (suite == "wigner" || suite == "all") out.push_back(run_wigner_suite());
  if (suite == "interferometer" || suite == "all") out.push_back(run_interferometer_suite());
  if (out.empty()) throw std::invalid_argument("unknown verify suite '" + suite + "'");
  return out;
}

std::string report_to_json(const std::vector<SuiteResult>& results) {
  nlohmann::json suites = nlohmann::json::object();
  bool all = true;
  for (const SuiteResult& s : results) {
    nlohmann::json checks = nlohmann::json::object();
    for (const CheckResult& c : s.checks) {
      checks[c.name] = {{"residual", c.residual},
                        {"tolerance", c.tolerance},
                        {"passed", c.passed},
                        {"worst_case", c.worst_case}};
    }
    suites[s.name] = {{"passed", s.passed()},
                      {"max_residual", s.max_residual()},
                      {"checks", checks},
                      {"convergence_gate",
                       {{"delta", s.gate.delta},
                        {"tolerance", s.gate.tolerance},
                        {"passed", s.gate.passed},
                        {"detail", s.gate.detail}}},
                      {"seconds", s.seconds}};
    all = all && s.passed();
  }
  nlohmann::json root = {{"suites", suites}, {"all_passed", all}};
  return root.dump(2);
}

}  // namespace su11
