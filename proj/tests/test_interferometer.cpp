#include <doctest.h>

#include <cmath>
#include <random>

#include "su11/interferometer.hpp"
#include "su11/oracle.hpp"
#include "su11/state_builders.hpp"

using namespace su11;

namespace {

double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace

TEST_CASE("zero phase leaves everything in place") {
  TwoModeState tmsv = build_tmsv(Complex(0.45, 0.1), 50);
  DecomposedState d = decompose(tmsv);
  GridSpec grid = GridSpec::disk(31, 31, 0.9);
  InterferometerConfig idle{0.7, 0.4, 0.0};

  // covariant route: the group element is exactly the identity, so the
  // output field is bit-for-bit the input field
  WignerField in = wigner_grid(d, grid, PhaseConvention::per_irrep_normalized);
  WignerField out = output_wigner_covariant(d, idle, grid, PhaseConvention::per_irrep_normalized);
  REQUIRE(in.values.size() == out.values.size());
  for (std::size_t i = 0; i < in.values.size(); ++i) CHECK(in.values[i] == out.values[i]);

  // direct route: S S† collapses, the state is unchanged
  TwoModeState direct = output_state_direct(tmsv, idle, 120);
  for (int na = 0; na <= 50; ++na)
    for (int nb = 0; nb <= 50; ++nb) CHECK(std::abs(direct.at(na, nb) - tmsv.at(na, nb)) <= 1e-10);
}

TEST_CASE("zero gain reduces to per-weight phases") {
  TwoModeState prod = build_coherent_squeezed(Complex(0.8, 0.0), Complex(0.4, 0.1), 24);
  double phi = 1.234;
  TwoModeState direct = output_state_direct(prod, {0.0, 0.9, phi}, 60);
  for (int na = 0; na <= 24; ++na)
    for (int nb = 0; nb <= 24; ++nb) {
      Complex want = prod.at(na, nb) * std::polar(1.0, phi * (na + nb + 1) / 2.0);
      CHECK(std::abs(direct.at(na, nb) - want) <= 1e-12);
    }
}

TEST_CASE("direct propagation is unitary after the leak gate") {
  TwoModeState tmsv = build_tmsv(Complex(0.5, 0.0), 70);
  TwoModeState out = output_state_direct(tmsv, {0.5, 0.0, kPi / 2}, 200);
  CHECK(std::abs(out.squared_norm() - 1.0) <= 1e-8);
  CHECK(out.tail_mass <= 1e-8);
}

TEST_CASE("covariant and direct routes agree pointwise") {
  std::mt19937_64 rng(8811);
  std::vector<TwoModeState> states;
  states.push_back(build_tmsv(Complex(0.5, 0.0), 60));
  states.push_back(build_tmsv(Complex(-0.28, 0.33), 60));
  states.push_back(reconstruct(
      build_su11_coherent(HalfInteger::from_int(1), DiskPoint({0.35, -0.2}), 60), 61));
  states.push_back(reconstruct(
      build_su11_coherent(HalfInteger::from_int(2), DiskPoint({0.1, 0.4}), 60), 63));

  for (const TwoModeState& state : states) {
    InterferometerConfig cfg{0.15 + 0.65 * uniform01(rng), 2.0 * kPi * uniform01(rng) - kPi,
                             2.0 * kPi * uniform01(rng) - kPi};
    DecomposedState blocks = decompose(state);
    WignerEvaluator in_eval(blocks);
    GroupElement g = interferometer_element(cfg.gain, cfg.pump_phase, cfg.total_phase);
    TwoModeState propagated = output_state_direct(state, cfg, 260);
    WignerEvaluator out_eval(decompose(propagated));
    for (int trial = 0; trial < 25; ++trial) {
      double r = 0.93 * std::sqrt(uniform01(rng));
      DiskPoint xi(std::polar(r, 2.0 * kPi * uniform01(rng) - kPi));
      Complex covariant =
          in_eval.eval(disk_to_hyperboloid(mobius_apply_inverse(g, xi)), PhaseConvention::literal);
      Complex direct = out_eval.eval(disk_to_hyperboloid(xi), PhaseConvention::literal);
      CHECK(std::abs(covariant - direct) / std::max(1.0, std::abs(direct)) <= 1e-6);
    }
  }
}

TEST_CASE("two interferometers at equal gain compose their phases") {
  DecomposedState su = build_su11_coherent(HalfInteger::from_twice(3), DiskPoint({0.3, 0.1}), 50);
  TwoModeState state = reconstruct(su, 52);
  double phi1 = 0.8, phi2 = -1.7;
  InterferometerConfig c1{0.4, 0.2, phi1}, c2{0.4, 0.2, phi2}, c12{0.4, 0.2, phi1 + phi2};

  TwoModeState once = output_state_direct(output_state_direct(state, c1, 240), c2, 240);
  TwoModeState both = output_state_direct(state, c12, 240);
  WignerEvaluator ea(decompose(once)), eb(decompose(both));
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 30; ++trial) {
    HyperboloidPoint p(2.0 * uniform01(rng), 2.0 * kPi * uniform01(rng) - kPi);
    Complex wa = ea.eval(p, PhaseConvention::literal);
    Complex wb = eb.eval(p, PhaseConvention::literal);
    CHECK(std::abs(wa - wb) <= 1e-8);
  }
}

TEST_CASE("pure-rotation interferometer rotates the argmax") {
  TwoModeState tmsv = build_tmsv(Complex(0.5, 0.0), 60);
  DecomposedState d = decompose(tmsv);
  GridSpec grid = GridSpec::disk(81, 81, 0.9);
  double phi = kPi / 2;
  WignerField out =
      output_wigner_covariant(d, {0.0, 0.0, phi}, grid, PhaseConvention::per_irrep_normalized);
  std::size_t best = out.argmax_abs();
  // input peak at (0.5, 0) moves to 0.5 e^{i phi}
  Complex expected = std::polar(0.5, phi);
  CHECK(std::abs(out.points[best].xi.xi - expected) <=
        std::hypot(grid.cell_dx(), grid.cell_dy()) + 1e-12);
}

TEST_CASE("sector depth guard") {
  TwoModeState tmsv = build_tmsv(Complex(0.4, 0.0), 30);
  CHECK_THROWS_AS(output_state_direct(tmsv, {0.3, 0.0, 1.0}, 10), std::invalid_argument);
}
