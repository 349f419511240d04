#pragma once

#include <complex>
#include <optional>
#include <string_view>

namespace sbsramsey {

using cplx = std::complex<double>;

enum class Regime { Rwa, AntiRwa };

std::string_view to_string(Regime r);
Regime parse_regime(std::string_view s);

/// How the effective coupling is obtained.
///  Effective:   |G| is given directly and g * amp is back-filled.
///  Microscopic: G = g * (steady control amplitude).
enum class ConfigMode { Effective, Microscopic };

std::string_view to_string(ConfigMode m);
ConfigMode parse_config_mode(std::string_view s);

/// Fixed physical rates of the a-b-c triplet, all in rad/us.
///
/// Optical frequencies only ever enter through detunings from their lasers and
/// through the modulation frequency omega_lc - omega_la, so those are stored
/// instead of absolute values. Use from_absolute() for lab-frame numbers.
struct PhysicalParams {
  double omega_m = 0.0;     ///< acoustic mode b
  double modulation = 0.0;  ///< omega_lc - omega_la
  double delta_a = 0.0;     ///< omega_a - omega_la
  double delta_c = 0.0;     ///< omega_c - omega_lc
  double g = 0.0;           ///< single-photon Brillouin coupling
  double kappa_a = 1.0;
  double kappa_c = 1.0;
  double gamma_m = 0.0;  ///< phonon energy decay; amplitude decays at gamma_m / 2

  /// omega_x = omega_m - (omega_lc - omega_la)
  double omega_x() const { return omega_m - modulation; }

  static PhysicalParams from_absolute(double omega_a, double omega_c, double omega_m,
                                      double omega_la, double omega_lc, double g,
                                      double kappa_a, double kappa_c, double gamma_m);

  /// Throws InvalidParameter on any violated invariant.
  void validate() const;

  bool operator==(const PhysicalParams&) const = default;
};

/// Three-stage Ramsey timing. Control and probe share the on/off edges.
struct PulseSchedule {
  double tau1 = 0.0;    ///< first pulse [us]
  double t_free = 0.0;  ///< free evolution T [us]
  double tau2 = 0.0;    ///< second pulse [us]
  double eps_control = 0.0;  ///< [rad/us]; eps_a in RWA, eps_c in anti-RWA
  double eps_probe = 0.0;    ///< [rad/us]; eps_c in RWA, eps_a in anti-RWA

  double total() const { return tau1 + t_free + tau2; }
  void validate() const;

  bool operator==(const PulseSchedule&) const = default;
};

/// Regime-resolved effective quantities.
struct DerivedParams {
  Regime regime = Regime::Rwa;
  double delta = 0.0;      ///< probe detuning: Delta_c (RWA) or Delta_a (anti-RWA)
  double omega_x = 0.0;
  cplx control_amp{};      ///< alpha (RWA) or zeta (anti-RWA)
  cplx coupling{};         ///< G_r = g alpha or G_b = g zeta
  double gamma_eff = 0.0;  ///< Gamma_r or Gamma_b
  double kappa = 1.0;      ///< decay of the probed optical mode
  double gamma_m = 0.0;
};

struct PhaseParams {
  double phi = 0.0;    ///< omega_x (T + tau2)
  double theta = 0.0;  ///< (gamma_m / 2) T + Gamma tau2
};

/// Inputs to derive() beyond the raw parameters.
struct CouplingRequest {
  ConfigMode mode = ConfigMode::Microscopic;
  /// |G| in rad/us. Required in Effective mode. In Microscopic mode it is an
  /// optional consistency check against g |amp|.
  std::optional<double> magnitude;
};

/// eps = sqrt(2 kappa P / (hbar omega_l)).
/// power in W, kappa in rad/us, omega_l in rad/s; result in rad/us.
double drive_strength_from_power(double power_w, double kappa, double omega_l);

/// Square-pulse envelope: amplitude on [0, tau1) and [tau1+T, tau1+T+tau2),
/// zero elsewhere (including after the sequence).
double pulse_envelope(const PulseSchedule& schedule, double amplitude, double t);

/// eps / (kappa + i detune)
cplx control_steady_amplitude(double eps, double kappa, double detune);

/// Gamma_r = gamma_m/2 + |G|^2/kappa_c, Gamma_b = gamma_m/2 - |G|^2/kappa_a.
double effective_phonon_rate(Regime regime, double gamma_m, double coupling_abs,
                             double kappa_probe);

/// |G_b| at which Gamma_b changes sign: sqrt(kappa_a gamma_m / 2).
double gain_threshold(double kappa_a, double gamma_m);

DerivedParams derive(const PhysicalParams& params, const PulseSchedule& schedule,
                     Regime regime, const CouplingRequest& request = {});

PhaseParams phase_params(const DerivedParams& dp, const PulseSchedule& schedule);

}  // namespace sbsramsey
