#include <doctest.h>

#include <cmath>
#include <random>

#include "oracle.hpp"
#include "sbsramsey/analytic.hpp"
#include "sbsramsey/units.hpp"

using namespace sbsramsey;
using namespace sbsramsey::analytic;
using units::kTwoPi;

namespace {

PulseSchedule schedule(double tau1 = 4, double t_free = 4, double tau2 = 0.1, double eps = 1.0) {
  return {tau1, t_free, tau2, kTwoPi * 1000.0, kTwoPi * eps};
}

DerivedParams derived(Regime r, double kappa_mhz, double G_mhz, double omega_x_mhz,
                      double gamma_mhz = 0.02) {
  DerivedParams dp;
  dp.regime = r;
  dp.kappa = kTwoPi * kappa_mhz;
  dp.gamma_m = kTwoPi * gamma_mhz;
  dp.coupling = kTwoPi * G_mhz;
  dp.omega_x = kTwoPi * omega_x_mhz;
  dp.gamma_eff = effective_phonon_rate(r, dp.gamma_m, std::abs(dp.coupling), dp.kappa);
  return dp;
}

oracle::Fringe as_oracle(const DerivedParams& dp, const PulseSchedule& s) {
  return {std::abs(dp.coupling), dp.kappa, dp.gamma_m, dp.omega_x, s.eps_probe,
          s.tau1, s.t_free, s.tau2};
}

}  // namespace

TEST_CASE("ramp factor is continuous through z = 0") {
  CHECK(ramp_factor({0, 0}, 2.5) == cplx(2.5, 0));
  const cplx tiny(1e-9, -2e-9);
  const cplx direct = (1.0 - std::exp(-tiny * 3.0)) / tiny;
  CHECK(std::abs(ramp_factor(tiny, 3.0) - 3.0) < 2e-8);
  CHECK(std::abs(ramp_factor(tiny, 3.0) - direct) < 1e-6);
  const cplx z(0.3, 0.7);
  CHECK(std::abs(ramp_factor(z, 2.0) - (1.0 - std::exp(-z * 2.0)) / z) < 1e-15);
}

TEST_CASE("first pulse") {
  const DerivedParams dp = derived(Regime::Rwa, 40, 0.58, 0);
  CHECK(phonon_after_first_pulse(dp, kTwoPi, 0.0) == cplx(0, 0));
  CHECK(phonon_after_first_pulse(dp, 0.0, 4.0) == cplx(0, 0));
  // |b(tau1)| with Gamma_r = 2pi x 0.01841 MHz.
  CHECK(std::abs(phonon_after_first_pulse(dp, kTwoPi, 4.0)) ==
        doctest::Approx(0.2917442504189839).epsilon(1e-12));
}

TEST_CASE("free evolution") {
  const DerivedParams dp = derived(Regime::Rwa, 40, 0.58, 0.3);
  const cplx b(0.2, -0.1);
  CHECK(phonon_after_free_evolution(b, dp, 0.0) == b);

  DerivedParams lossless = dp;
  lossless.gamma_m = 0.0;
  const cplx out = phonon_after_free_evolution(b, lossless, 2.0);
  CHECK(std::abs(out) == doctest::Approx(std::abs(b)));
  CHECK(std::remainder(std::arg(out) - std::arg(b) + dp.omega_x * 2.0, kTwoPi) ==
        doctest::Approx(0.0).epsilon(1e-12));

  const DerivedParams on_res = derived(Regime::Rwa, 40, 0.58, 0);
  CHECK(std::abs(phonon_after_free_evolution(0.292, on_res, 4.0)) ==
        doctest::Approx(0.2271081623181624).epsilon(1e-12));
}

TEST_CASE("RWA fringe agrees with the printed optical-mode solution") {
  const PulseSchedule s = schedule();
  for (double wx : {-1.0, -0.37, 0.0, 0.12, 0.5, 0.99}) {
    const DerivedParams dp = derived(Regime::Rwa, 40, 0.58, wx);
    const FringePoint fp = fringe_rwa(dp, s);
    const cplx ref = oracle::rwa_mode(as_oracle(dp, s));
    CHECK(std::abs(fp.mode_amp - ref) < 1e-13 * std::abs(ref));
    CHECK(fp.out_field == 2.0 * dp.kappa * fp.mode_amp - s.eps_probe);
  }
}

TEST_CASE("anti-RWA fringe agrees with the substituted phonon solution") {
  const PulseSchedule s = schedule();
  for (double kappa : {30.0, 40.0}) {
    for (double wx : {-0.8, -0.27, 0.0, 0.05, 0.6}) {
      const DerivedParams dp = derived(Regime::AntiRwa, kappa, 0.58, wx);
      const FringePoint fp = fringe_arwa(dp, s);
      const cplx ref = oracle::arwa_mode(as_oracle(dp, s));
      CHECK(std::abs(fp.mode_amp - ref) < 1e-12 * std::abs(ref));
      CHECK(fp.out_field == 2.0 * dp.kappa * fp.mode_amp - s.eps_probe);
    }
  }
}

TEST_CASE("decoupled limit: output equals the probe exactly") {
  const PulseSchedule s = schedule();
  for (Regime r : {Regime::Rwa, Regime::AntiRwa}) {
    const DerivedParams dp = derived(r, 40, 0.0, 0.4);
    const FringePoint fp = fringe(dp, s);
    CHECK(fp.out_field == cplx(s.eps_probe, 0.0));
    CHECK(fp.phonon_amp == cplx(0, 0));
  }
}

TEST_CASE("linearity in the probe strength") {
  std::mt19937 rng(3);
  std::uniform_real_distribution<double> u(0.1, 3.0);
  for (Regime r : {Regime::Rwa, Regime::AntiRwa}) {
    for (int i = 0; i < 20; ++i) {
      const DerivedParams dp = derived(r, 40, 0.58, u(rng) - 1.5);
      const double scale = u(rng);
      const FringePoint a = fringe(dp, schedule(4, 4, 0.1, 1.0));
      const FringePoint b = fringe(dp, schedule(4, 4, 0.1, scale));
      CHECK(std::abs(b.phonon_amp - scale * a.phonon_amp) < 1e-12 * std::abs(b.phonon_amp));
    }
  }
}

TEST_CASE("symmetry about omega_x = 0 for a real control amplitude") {
  for (Regime r : {Regime::Rwa, Regime::AntiRwa}) {
    for (double wx : {0.1, 0.27, 0.63}) {
      const double p = std::abs(fringe(derived(r, 40, 0.58, wx), schedule()).out_field);
      const double m = std::abs(fringe(derived(r, 40, 0.58, -wx), schedule()).out_field);
      CHECK(p == doctest::Approx(m).epsilon(1e-13));
    }
  }
}

TEST_CASE("tau2 -> 0 leaves the free-evolved first pulse") {
  for (Regime r : {Regime::Rwa, Regime::AntiRwa}) {
    const DerivedParams dp = derived(r, 40, 0.58, 0.31);
    const PulseSchedule s = schedule(4, 3, 0.0);
    const cplx expect =
        phonon_after_free_evolution(phonon_after_first_pulse(dp, s.eps_probe, 4), dp, 3);
    CHECK(fringe(dp, s).phonon_amp == expect);
  }
}

TEST_CASE("theta sign and amplification") {
  const DerivedParams rwa = derived(Regime::Rwa, 30, 2.0, 0);
  CHECK(phase_params(rwa, schedule()).theta > 0);
  const DerivedParams gain = derived(Regime::AntiRwa, 30, 1.5, 0);
  const double theta = phase_params(gain, schedule(4, 0.1, 2.0)).theta;
  CHECK(theta < 0);
  CHECK(std::exp(-theta) > 1.0);
}

TEST_CASE("RWA fringes are inverse: dips where the phonon term is strongest") {
  // On resonance the replayed phonon adds in phase and pulls the output down.
  const double at0 = std::abs(fringe(derived(Regime::Rwa, 40, 0.58, 0), schedule()).out_field);
  const double off = std::abs(fringe(derived(Regime::Rwa, 40, 0.58, 0.5 / 4.1), schedule()).out_field);
  CHECK(at0 < kTwoPi);
  CHECK(at0 < off);
}

TEST_CASE("anti-RWA fringe amplitude exceeds RWA at identical schedule with gain") {
  double span_rwa = 0, span_arwa = 0;
  double lo_r = 1e300, hi_r = 0, lo_a = 1e300, hi_a = 0;
  for (int i = 0; i <= 400; ++i) {
    const double wx = -1.0 + 2.0 * i / 400;
    const double r = std::abs(fringe(derived(Regime::Rwa, 30, 0.58, wx), schedule()).out_field);
    const double a = std::abs(fringe(derived(Regime::AntiRwa, 30, 0.58, wx), schedule()).out_field);
    lo_r = std::min(lo_r, r);
    hi_r = std::max(hi_r, r);
    lo_a = std::min(lo_a, a);
    hi_a = std::max(hi_a, a);
  }
  span_rwa = hi_r - lo_r;
  span_arwa = hi_a - lo_a;
  CHECK(span_arwa > span_rwa);
}
