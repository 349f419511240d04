#pragma once

#include "sbsramsey/model.hpp"

// Closed-form Ramsey fringes under adiabatic elimination of the probed
// optical mode (kappa >> |G|, probe on resonance).
namespace sbsramsey::analytic {

struct FringePoint {
  double omega_x = 0.0;
  cplx phonon_amp{};  ///< b at sequence end
  cplx mode_amp{};    ///< c (RWA) or a (anti-RWA) at sequence end
  cplx out_field{};   ///< 2 kappa * mode_amp - eps_probe
};

/// (1 - exp(-z tau)) / z, continuous through z = 0.
cplx ramp_factor(cplx z, double tau);

/// Complex phonon rate during a pulse, Gamma + i omega_x.
cplx pulse_rate(const DerivedParams& dp);

/// b(tau1) starting from b(0) = 0 with the probe and control on.
cplx phonon_after_first_pulse(const DerivedParams& dp, double eps_probe, double tau1);

/// b_in * exp(-(i omega_x + gamma_m / 2) t_free)
cplx phonon_after_free_evolution(cplx b_in, const DerivedParams& dp, double t_free);

FringePoint fringe_rwa(const DerivedParams& dp, const PulseSchedule& schedule);
FringePoint fringe_arwa(const DerivedParams& dp, const PulseSchedule& schedule);

/// Dispatches on dp.regime.
FringePoint fringe(const DerivedParams& dp, const PulseSchedule& schedule);

}  // namespace sbsramsey::analytic
