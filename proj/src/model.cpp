#include "sbsramsey/model.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "sbsramsey/error.hpp"
#include "sbsramsey/units.hpp"

namespace sbsramsey {

std::string_view to_string(Regime r) { return r == Regime::Rwa ? "rwa" : "anti_rwa"; }

Regime parse_regime(std::string_view s) {
  if (s == "rwa") return Regime::Rwa;
  if (s == "anti_rwa" || s == "arwa") return Regime::AntiRwa;
  throw ConfigError("unknown regime '" + std::string(s) + "' (expected rwa|anti_rwa)");
}

std::string_view to_string(ConfigMode m) {
  return m == ConfigMode::Effective ? "effective" : "microscopic";
}

ConfigMode parse_config_mode(std::string_view s) {
  if (s == "effective") return ConfigMode::Effective;
  if (s == "microscopic") return ConfigMode::Microscopic;
  throw ConfigError("unknown config_mode '" + std::string(s) +
                    "' (expected effective|microscopic)");
}

PhysicalParams PhysicalParams::from_absolute(double omega_a, double omega_c, double omega_m,
                                             double omega_la, double omega_lc, double g,
                                             double kappa_a, double kappa_c, double gamma_m) {
  PhysicalParams p;
  p.omega_m = omega_m;
  p.modulation = omega_lc - omega_la;
  p.delta_a = omega_a - omega_la;
  p.delta_c = omega_c - omega_lc;
  p.g = g;
  p.kappa_a = kappa_a;
  p.kappa_c = kappa_c;
  p.gamma_m = gamma_m;
  return p;
}

namespace {

void require(bool ok, const char* what) {
  if (!ok) throw InvalidParameter(what);
}

}  // namespace

void PhysicalParams::validate() const {
  require(std::isfinite(omega_m) && std::isfinite(modulation) && std::isfinite(delta_a) &&
              std::isfinite(delta_c) && std::isfinite(g) && std::isfinite(kappa_a) &&
              std::isfinite(kappa_c) && std::isfinite(gamma_m),
          "physical parameters must be finite");
  require(kappa_a > 0.0, "kappa_a must be > 0");
  require(kappa_c > 0.0, "kappa_c must be > 0");
  require(gamma_m >= 0.0, "gamma_m must be >= 0");
  require(g >= 0.0, "g must be >= 0");
  require(omega_m > 0.0, "omega_m must be > 0");
}

void PulseSchedule::validate() const {
  require(std::isfinite(tau1) && std::isfinite(t_free) && std::isfinite(tau2) &&
              std::isfinite(eps_control) && std::isfinite(eps_probe),
          "schedule values must be finite");
  require(tau1 > 0.0, "tau1 must be > 0");
  require(t_free >= 0.0, "t_free must be >= 0");
  require(tau2 > 0.0, "tau2 must be > 0");
  require(eps_control >= 0.0, "eps_control must be >= 0");
  require(eps_probe >= 0.0, "eps_probe must be >= 0");
}

double drive_strength_from_power(double power_w, double kappa, double omega_l) {
  require(kappa > 0.0, "drive_strength_from_power: kappa must be > 0");
  require(omega_l > 0.0, "drive_strength_from_power: omega_l must be > 0");
  require(power_w >= 0.0, "drive_strength_from_power: power must be >= 0");
  const double kappa_si = units::rad_per_us_to_rad_per_s(kappa);
  const double eps_si = std::sqrt(2.0 * kappa_si * power_w / (units::kHbar * omega_l));
  return units::rad_per_s_to_rad_per_us(eps_si);
}

double pulse_envelope(const PulseSchedule& s, double amplitude, double t) {
  if (!(t >= 0.0)) throw InvalidParameter("pulse_envelope: t must be >= 0");
  if (t < s.tau1) return amplitude;
  const double second_on = s.tau1 + s.t_free;
  if (t < second_on) return 0.0;
  if (t < second_on + s.tau2) return amplitude;
  return 0.0;
}

cplx control_steady_amplitude(double eps, double kappa, double detune) {
  require(kappa > 0.0, "control_steady_amplitude: kappa must be > 0");
  return eps / cplx(kappa, detune);
}

double effective_phonon_rate(Regime regime, double gamma_m, double coupling_abs,
                             double kappa_probe) {
  const double dressing = coupling_abs * coupling_abs / kappa_probe;
  return regime == Regime::Rwa ? 0.5 * gamma_m + dressing : 0.5 * gamma_m - dressing;
}

double gain_threshold(double kappa_a, double gamma_m) {
  return std::sqrt(0.5 * kappa_a * gamma_m);
}

DerivedParams derive(const PhysicalParams& p, const PulseSchedule& s, Regime regime,
                     const CouplingRequest& request) {
  p.validate();
  s.validate();

  // Control sits on a in the RWA regime and on c in the anti-RWA regime; the
  // probe is read out on the other optical mode.
  const bool rwa = regime == Regime::Rwa;
  const double kappa_ctrl = rwa ? p.kappa_a : p.kappa_c;
  const double detune_ctrl = rwa ? p.delta_a : p.delta_c;

  DerivedParams dp;
  dp.regime = regime;
  dp.delta = rwa ? p.delta_c : p.delta_a;
  dp.kappa = rwa ? p.kappa_c : p.kappa_a;
  dp.omega_x = p.omega_x();
  dp.gamma_m = p.gamma_m;

  const cplx steady = control_steady_amplitude(s.eps_control, kappa_ctrl, detune_ctrl);

  if (request.mode == ConfigMode::Effective) {
    if (!request.magnitude) throw ConfigError("effective mode requires a coupling magnitude");
    const double mag = *request.magnitude;
    require(std::isfinite(mag) && mag >= 0.0, "coupling magnitude must be >= 0");
    // The phase of G follows the control amplitude, i.e. -atan2(detune, kappa).
    const double phase = -std::atan2(detune_ctrl, kappa_ctrl);
    dp.coupling = std::polar(mag, phase);
    dp.control_amp = p.g > 0.0 ? dp.coupling / p.g : steady;
  } else {
    dp.control_amp = steady;
    dp.coupling = p.g * steady;
    if (request.magnitude) {
      const double want = *request.magnitude;
      const double got = std::abs(dp.coupling);
      if (p.g == 0.0 && want != 0.0)
        throw InconsistencyError("g = 0 cannot produce the requested nonzero coupling");
      if (std::abs(got - want) > 1e-9 * std::max(got, want))
        throw InconsistencyError("requested coupling disagrees with g * |control amplitude|");
    }
  }

  dp.gamma_eff = effective_phonon_rate(regime, p.gamma_m, std::abs(dp.coupling), dp.kappa);
  return dp;
}

PhaseParams phase_params(const DerivedParams& dp, const PulseSchedule& s) {
  PhaseParams ph;
  ph.phi = dp.omega_x * (s.t_free + s.tau2);
  ph.theta = 0.5 * dp.gamma_m * s.t_free + dp.gamma_eff * s.tau2;
  return ph;
}

}  // namespace sbsramsey
