#include <doctest.h>

#include <cmath>
#include <random>

#include "sbsramsey/error.hpp"
#include "sbsramsey/model.hpp"
#include "sbsramsey/units.hpp"

using namespace sbsramsey;
using units::kTwoPi;

namespace {

PulseSchedule fig_schedule() { return {4.0, 4.0, 0.1, kTwoPi * 1000.0, kTwoPi * 1.0}; }

PhysicalParams fig_params(double kappa_mhz) {
  PhysicalParams p;
  p.omega_m = kTwoPi * 42.3;
  p.modulation = p.omega_m;
  p.kappa_a = p.kappa_c = kTwoPi * kappa_mhz;
  p.gamma_m = kTwoPi * 0.02;
  p.g = kTwoPi * 0.0232;
  return p;
}

CouplingRequest effective(double mhz) { return {ConfigMode::Effective, kTwoPi * mhz}; }

}  // namespace

TEST_CASE("drive strength from power") {
  CHECK(drive_strength_from_power(0.0, 1.0, 1.0) == 0.0);

  const double k = kTwoPi * 40.0;
  const double w = kTwoPi * 200e12;
  const double e1 = drive_strength_from_power(1e-3, k, w);
  CHECK(drive_strength_from_power(4e-3, k, w) == doctest::Approx(2.0 * e1).epsilon(1e-14));

  // sqrt(2 kappa P / (hbar omega_l)) evaluated by hand in SI, converted to rad/us.
  CHECK(e1 == doctest::Approx(1947564.809821576).epsilon(1e-12));

  CHECK_THROWS_AS(drive_strength_from_power(1e-3, 0.0, w), InvalidParameter);
  CHECK_THROWS_AS(drive_strength_from_power(1e-3, k, -1.0), InvalidParameter);
}

TEST_CASE("pulse envelope follows the square schedule") {
  const PulseSchedule s = fig_schedule();
  CHECK(pulse_envelope(s, 3.0, s.tau1 / 2) == 3.0);
  CHECK(pulse_envelope(s, 3.0, s.tau1 + s.t_free / 2) == 0.0);
  CHECK(pulse_envelope(s, 3.0, s.tau1 + s.t_free + s.tau2 / 2) == 3.0);
  CHECK(pulse_envelope(s, 3.0, s.total() + 1.0) == 0.0);
  CHECK(pulse_envelope(s, 3.0, s.tau1) == 0.0);
  CHECK(pulse_envelope(s, 3.0, s.tau1 + s.t_free) == 3.0);
  CHECK_THROWS_AS(pulse_envelope(s, 3.0, -1e-9), InvalidParameter);

  // Piecewise integral (exact per stage) equals amplitude * (tau1 + tau2).
  const double amp = 2.5;
  const double integral = pulse_envelope(s, amp, 0.0) * s.tau1 +
                          pulse_envelope(s, amp, s.tau1) * s.t_free +
                          pulse_envelope(s, amp, s.tau1 + s.t_free) * s.tau2;
  CHECK(integral == doctest::Approx(amp * (s.tau1 + s.tau2)));
}

TEST_CASE("control steady amplitude") {
  CHECK(control_steady_amplitude(4, 2, 0) == cplx(2, 0));
  CHECK(control_steady_amplitude(0, 2, 5) == cplx(0, 0));
  const cplx a = control_steady_amplitude(3, 1, 1);
  CHECK(a.real() == doctest::Approx(1.5));
  CHECK(a.imag() == doctest::Approx(-1.5));
  CHECK_THROWS_AS(control_steady_amplitude(1, 0, 0), InvalidParameter);

  std::mt19937 rng(7);
  std::uniform_real_distribution<double> u(-5, 5), pos(0.1, 5);
  for (int i = 0; i < 200; ++i) {
    const double eps = pos(rng), kappa = pos(rng), detune = u(rng);
    const cplx z = control_steady_amplitude(eps, kappa, detune);
    CHECK(std::abs(z) == doctest::Approx(eps / std::hypot(kappa, detune)));
    CHECK(std::arg(z) == doctest::Approx(-std::atan2(detune, kappa)));
  }
}

TEST_CASE("derive: effective rates from the figure captions") {
  SUBCASE("RWA, kappa_c = 2pi x 40 MHz") {
    const DerivedParams dp = derive(fig_params(40), fig_schedule(), Regime::Rwa, effective(0.58));
    CHECK(dp.gamma_eff / kTwoPi == doctest::Approx(0.01841).epsilon(1e-10));
    CHECK(dp.omega_x == 0.0);
    CHECK(std::abs(dp.coupling) / kTwoPi == doctest::Approx(0.58));
    CHECK(dp.coupling == dp.control_amp * fig_params(40).g);
  }
  SUBCASE("anti-RWA, kappa_a = 2pi x 30 MHz gives gain") {
    const DerivedParams dp =
        derive(fig_params(30), fig_schedule(), Regime::AntiRwa, effective(0.58));
    CHECK(dp.gamma_eff / kTwoPi == doctest::Approx(-0.001213333333).epsilon(1e-9));
    CHECK(dp.gamma_eff < 0.0);
  }
  SUBCASE("microscopic: G = g alpha") {
    const DerivedParams dp =
        derive(fig_params(40), fig_schedule(), Regime::Rwa, {ConfigMode::Microscopic, {}});
    CHECK(dp.control_amp.real() == doctest::Approx(25.0));
    CHECK(std::abs(dp.coupling) / kTwoPi == doctest::Approx(0.58));
    CHECK(dp.coupling == fig_params(40).g * dp.control_amp);
  }
  SUBCASE("microscopic with g = 0 and a requested coupling is inconsistent") {
    PhysicalParams p = fig_params(40);
    p.g = 0.0;
    CHECK_THROWS_AS(derive(p, fig_schedule(), Regime::Rwa, {ConfigMode::Microscopic, 1.0}),
                    InconsistencyError);
  }
  SUBCASE("omega_x from the modulation frequency") {
    PhysicalParams p = fig_params(40);
    p.modulation = p.omega_m - 0.7;
    CHECK(derive(p, fig_schedule(), Regime::Rwa, effective(0.58)).omega_x ==
          doctest::Approx(0.7));
  }
  SUBCASE("invalid parameters are refused") {
    PhysicalParams p = fig_params(40);
    p.kappa_c = 0.0;
    CHECK_THROWS_AS(derive(p, fig_schedule(), Regime::Rwa, effective(0.58)), InvalidParameter);
    PulseSchedule s = fig_schedule();
    s.tau1 = 0.0;
    CHECK_THROWS_AS(derive(fig_params(40), s, Regime::Rwa, effective(0.58)), InvalidParameter);
  }
}

TEST_CASE("effective phonon rate properties") {
  std::mt19937 rng(11);
  std::uniform_real_distribution<double> pos(0.0, 10.0), kap(0.5, 400.0);
  for (int i = 0; i < 500; ++i) {
    const double gm = pos(rng), G = pos(rng), k = kap(rng);
    const double gr = effective_phonon_rate(Regime::Rwa, gm, G, k);
    const double gb = effective_phonon_rate(Regime::AntiRwa, gm, G, k);
    CHECK(gr - gm / 2 == doctest::Approx(G * G / k));
    CHECK(gb - gm / 2 == doctest::Approx(-G * G / k));
    CHECK(gr >= gm / 2);
    CHECK(gb <= gm / 2);
  }
  const double k = kTwoPi * 30, gm = kTwoPi * 0.02;
  const double th = gain_threshold(k, gm);
  CHECK(th / kTwoPi == doctest::Approx(0.5477225575051661));
  CHECK(effective_phonon_rate(Regime::AntiRwa, gm, th, k) == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(effective_phonon_rate(Regime::AntiRwa, gm, th * 0.999, k) > 0.0);
  CHECK(effective_phonon_rate(Regime::AntiRwa, gm, th * 1.001, k) < 0.0);
}

TEST_CASE("phase parameters") {
  const DerivedParams dp = derive(fig_params(40), fig_schedule(), Regime::Rwa, effective(0.58));
  const PhaseParams ph = phase_params(dp, fig_schedule());
  CHECK(ph.phi == 0.0);
  CHECK(ph.theta == doctest::Approx(kTwoPi * 0.01 * 4 + dp.gamma_eff * 0.1));
  DerivedParams shifted = dp;
  shifted.omega_x = 2.0;
  CHECK(phase_params(shifted, fig_schedule()).phi == doctest::Approx(2.0 * 4.1));
  CHECK(phase_params(shifted, fig_schedule()).theta == ph.theta);
}

TEST_CASE("absolute frequencies map onto detunings") {
  const PhysicalParams p =
      PhysicalParams::from_absolute(1000.0, 1300.0, 300.0, 990.0, 1289.0, 0.1, 1, 2, 0.01);
  CHECK(p.delta_a == 10.0);
  CHECK(p.delta_c == 11.0);
  CHECK(p.modulation == 299.0);
  CHECK(p.omega_x() == 1.0);
}
