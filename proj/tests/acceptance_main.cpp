// Acceptance suite: one pass/fail line per criterion, exit 0 only if all pass.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "su11/geometry.hpp"
#include "su11/interferometer.hpp"
#include "su11/oracle.hpp"
#include "su11/special_functions.hpp"
#include "su11/state_builders.hpp"
#include "su11/verify.hpp"
#include "su11/wigner.hpp"

using namespace su11;

namespace {

int g_failed = 0;

struct Timer {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  }
};

void report(int criterion, const std::string& name, bool passed, const std::string& metric,
            double seconds) {
  std::printf("[%s] criterion %d: %s (%s, %.1f s)\n", passed ? "PASS" : "FAIL", criterion,
              name.c_str(), metric.c_str(), seconds);
  std::fflush(stdout);
  if (!passed) ++g_failed;
}

std::string fmt(const char* pattern, double value) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), pattern, value);
  return buf;
}

double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

const CheckResult* find_check(const SuiteResult& suite, const std::string& name) {
  for (const CheckResult& c : suite.checks)
    if (c.name == name) return &c;
  return nullptr;
}

}  // namespace

int main() {
  std::vector<SuiteResult> gates;

  // 1 & 2: d-function identity at tau = 0 and the symmetry relation
  Timer t_dfunc;
  SuiteResult dfunc = run_dfunc_suite();
  gates.push_back(dfunc);
  {
    const CheckResult* delta = find_check(dfunc, "delta_at_zero");
    report(1, "d(0) = Kronecker delta, exact, k <= 4, mu <= k+30", delta && delta->passed,
           delta ? fmt("max residual %.1e", delta->residual) : "check missing",
           t_dfunc.seconds());
    const CheckResult* sym = find_check(dfunc, "symmetry");
    report(2, "d-function symmetry relation, 1e4 random queries, tau in [0,5]",
           sym && sym->passed && sym->tolerance == 1e-10,
           sym ? fmt("max relative residual %.1e vs 1e-10", sym->residual) : "check missing",
           t_dfunc.seconds());
  }

  // 3: kernel cross-validation (disentangled series vs truncated-Fock boxed form)
  {
    Timer t;
    SuiteResult kernel = run_kernel_suite();
    gates.push_back(kernel);
    const CheckResult* c = find_check(kernel, "disentangled_vs_fock");
    report(3, "kernel cross-validation, k <= 3, mu <= k+15, tau <= 2.5",
           c && c->passed && kernel.gate.passed,
           c ? fmt("max |series - fock| %.1e vs 1e-8", c->residual) : "check missing",
           t.seconds());
  }

  // 4: Wigner oracle equivalence on random points
  {
    Timer t;
    SuiteResult wigner = run_wigner_suite();
    gates.push_back(wigner);
    const CheckResult* c = find_check(wigner, "analytic_vs_fock");
    report(4, "Wigner closed form vs Fock oracle, TMSV {0.3, 0.485, 0.6} and k in {1, 3/2}",
           c && c->passed && wigner.gate.passed,
           c ? fmt("max relative residual %.1e vs 1e-6", c->residual) : "check missing",
           t.seconds());
  }

  // 5: TMSV xi = 0.485 argmax on a 201x201 disk grid
  {
    Timer t;
    TwoModeState tmsv = build_tmsv(Complex(0.485, 0.0), 60);
    GridSpec grid = GridSpec::disk(201, 201, 0.99);
    WignerField field =
        wigner_grid(decompose(tmsv), grid, PhaseConvention::per_irrep_normalized);
    std::size_t best = field.argmax_abs();
    double dx = std::abs(field.points[best].xi.xi.real() - 0.485);
    double dy = std::abs(field.points[best].xi.xi.imag() - 0.0);
    bool ok = dx <= grid.cell_dx() + 1e-12 && dy <= grid.cell_dy() + 1e-12;
    report(5, "TMSV xi = 0.485: |W| argmax within one cell of (0.485, 0)", ok,
           fmt("offset %.4f vs cell 0.0099", std::max(dx, dy)), t.seconds());
  }

  // 6: factorized coherent x squeezed state shows exactly two local maxima
  {
    Timer t;
    double boundary = 0.0;
    DecomposedState state =
        build_coherent_squeezed_blocks(Complex(1.0, 0.0), Complex(4.0, 0.5), 30, 4000, &boundary);
    GridSpec grid = GridSpec::disk(195, 195, 0.97);
    WignerField field = wigner_grid(state, grid, PhaseConvention::per_irrep_normalized);
    std::vector<std::size_t> maxima = local_maxima_abs(field, 0.10);
    bool two = maxima.size() == 2;
    bool separated = false;
    if (two) {
      Complex a = field.points[maxima[0]].xi.xi;
      Complex b = field.points[maxima[1]].xi.xi;
      separated = std::abs(a - b) > 2.5 * grid.cell_dx();
    }

    // the splitting arises from combining the two irrep families: each family
    // alone peaks once, at the origin
    GridSpec window = GridSpec::disk(61, 61, 0.3);
    bool families_single = true;
    for (IrrepFamily fam : {IrrepFamily::integer_k, IrrepFamily::half_integer_k}) {
      WignerField ff = wigner_grid(state, window, PhaseConvention::per_irrep_normalized, fam);
      std::vector<std::size_t> fm = local_maxima_abs(ff, 0.30);
      if (fm.size() != 1 || std::abs(ff.points[fm[0]].xi.xi) > 2.5 * window.cell_dx())
        families_single = false;
    }

    // structure stable under doubling the squeezed-mode cutoff
    DecomposedState twice =
        build_coherent_squeezed_blocks(Complex(1.0, 0.0), Complex(4.0, 0.5), 30, 8000, nullptr);
    WignerField fine = wigner_grid(state, window, PhaseConvention::per_irrep_normalized);
    WignerField fine2 = wigner_grid(twice, window, PhaseConvention::per_irrep_normalized);
    std::vector<std::size_t> m1 = local_maxima_abs(fine, 0.10);
    std::vector<std::size_t> m2 = local_maxima_abs(fine2, 0.10);
    bool stable = m1.size() == 2 && m2.size() == 2;
    if (stable) {
      for (int i = 0; i < 2; ++i) {
        double dist = std::abs(fine.points[m1[i]].xi.xi - fine2.points[m2[i]].xi.xi);
        if (dist > 1.5 * window.cell_dx() + 1e-12) stable = false;
      }
    }

    bool ok = two && separated && families_single && stable;
    char metric[160];
    std::snprintf(metric, sizeof(metric),
                  "%zu maxima, families single-peaked: %s, doubled-cutoff stable: %s",
                  maxima.size(), families_single ? "yes" : "no", stable ? "yes" : "no");
    report(6, "coherent x squeezed (alpha = 1, zeta = 4 + i/2): two peaks from the two families",
           ok, metric, t.seconds());
  }

  // 7: interferometer covariance at the gain 0.5, Phi = pi/2 configuration
  {
    Timer t;
    SuiteResult intf = run_interferometer_suite();
    gates.push_back(intf);
    const CheckResult* c = find_check(intf, "covariant_vs_direct");
    report(7, "Moebius route vs direct propagation, xi = 0.5, gain 0.5, Phi = pi/2, 101x101",
           c && c->passed && intf.gate.passed,
           c ? fmt("max pointwise residual %.1e vs 1e-6", c->residual) : "check missing",
           t.seconds());
  }

  // 8: unitarity and geometry suite
  {
    Timer t;
    std::mt19937_64 rng(0xACCE17ULL);
    double worst_unitary = 0.0;
    {
      SectorSqueezer sq(0, 140);
      Eigen::MatrixXcd s = sq.matrix(Complex(0.45, 0.3));
      Eigen::MatrixXcd gram = s.adjoint() * s;
      for (int m = 0; m <= 60; ++m)
        for (int mp = 0; mp <= 60; ++mp)
          worst_unitary = std::max(
              worst_unitary, std::abs(gram(m, mp) - (m == mp ? Complex(1, 0) : Complex(0, 0))));
    }
    double worst_disk = 0.0, worst_group = 0.0, worst_mink = 0.0;
    for (int trial = 0; trial < 2000; ++trial) {
      double tpar = 1.2 * uniform01(rng);
      GroupElement g(std::polar(std::cosh(tpar), 2 * kPi * uniform01(rng) - kPi),
                     std::polar(std::sinh(tpar), 2 * kPi * uniform01(rng) - kPi));
      double r = (1.0 - 1e-9) * std::sqrt(uniform01(rng));
      DiskPoint xi(std::polar(r, 2 * kPi * uniform01(rng) - kPi));
      DiskPoint image = mobius_apply_inverse(g, xi);
      if (!(std::abs(image.xi) < 1.0)) worst_disk = 1.0;
      DiskPoint back = mobius_apply_inverse(g.inverse(), image);
      worst_group = std::max(worst_group, std::abs(back.xi - xi.xi));
      GroupElement gg = compose(g, g.inverse());
      worst_group = std::max({worst_group, std::abs(gg.alpha - Complex(1, 0)), std::abs(gg.beta)});
      HyperboloidPoint h(5.0 * uniform01(rng), 2 * kPi * uniform01(rng) - kPi);
      auto n = minkowski_vector(h);
      worst_mink = std::max(worst_mink, std::abs(n[0] * n[0] - n[1] * n[1] - n[2] * n[2] - 1.0));
    }
    bool ok = worst_unitary <= 1e-8 && worst_disk == 0.0 && worst_group <= 1e-12 &&
              worst_mink <= 1e-10;
    char metric[160];
    std::snprintf(metric, sizeof(metric),
                  "unitarity %.1e, group %.1e, minkowski %.1e, disk preserved: %s", worst_unitary,
                  worst_group, worst_mink, worst_disk == 0.0 ? "yes" : "no");
    report(8, "unitarity and geometry identities", ok, metric, t.seconds());
  }

  // 9: convergence gate across every suite
  {
    Timer t;
    bool ok = true;
    double worst = 0.0;
    for (const SuiteResult& s : gates) {
      ok = ok && s.gate.passed;
      worst = std::max(worst, s.gate.delta);
    }
    report(9, "cutoff-doubling gate for all oracle-derived ground truths", ok,
           fmt("max gate delta %.1e vs 1e-8", worst), t.seconds());
  }

  std::printf("%s\n", g_failed == 0 ? "ACCEPTANCE: ALL CRITERIA PASSED"
                                    : "ACCEPTANCE: FAILURES PRESENT");
  return g_failed == 0 ? 0 : 1;
}
