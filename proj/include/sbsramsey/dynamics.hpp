#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sbsramsey/model.hpp"

// Time-domain integration of the mean-field equations: the linearized
// two-mode systems of each regime and the full three-wave system. Fixed-step
// RK4 with stage boundaries aligned to the square-pulse edges.
namespace sbsramsey::dynamics {

struct IntegratorConfig {
  double dt = 1e-4;              ///< requested step [us]; each stage may shorten it
  std::size_t sample_stride = 100;  ///< keep every N-th step in a ModeTrace

  void validate() const;
};

struct ModeTrace {
  std::vector<std::string> mode_names;  ///< e.g. {"c", "b"}
  std::vector<double> times;            ///< [us], strictly increasing from 0
  std::vector<std::vector<cplx>> amps;  ///< amps[k][m]: mode m at times[k]
  std::vector<cplx> out_field;          ///< [rad/us]

  std::size_t size() const { return times.size(); }
};

/// One stage of the pulse sequence as integrated.
struct StagePlan {
  double start = 0.0;
  double duration = 0.0;
  std::size_t steps = 0;
  double h = 0.0;
  bool drive_on = false;
};

/// n = ceil(duration / dt) steps per stage with h = duration / n.
std::array<StagePlan, 3> plan_stages(const PulseSchedule& schedule, double dt);

/// Seeded amplitudes for the linear system; b is the phonon in both regimes.
struct LinearInitial {
  cplx probe{};
  cplx phonon{};
};

/// Seeded amplitudes for the three-wave system.
struct NonlinearInitial {
  cplx a{}, b{}, c{};
};

/// Final probe-mode and phonon amplitudes of a linear run.
struct LinearFinal {
  cplx probe{};
  cplx phonon{};
  cplx out_field{};
};

/// Throws StabilityError if dt * rate > 0.1.
void check_stability(double dt, double rate, std::string_view what);

ModeTrace evolve_linear(const DerivedParams& dp, const PulseSchedule& schedule,
                        const IntegratorConfig& cfg, const LinearInitial& init = {});

/// Final state only, for up to simd::kLanes points sharing one schedule.
/// Uses the active SIMD kernel; bit-identical to evolve_linear's last sample.
void evolve_linear_final(std::span<const DerivedParams> points, const PulseSchedule& schedule,
                         const IntegratorConfig& cfg, std::span<LinearFinal> out);

LinearFinal evolve_linear_final(const DerivedParams& dp, const PulseSchedule& schedule,
                                const IntegratorConfig& cfg);

/// Three-wave equations in the frame rotating at omega_la (a), omega_lc (c)
/// and omega_lc - omega_la (b). The regime selects which optical mode carries
/// the control (eps_control) and which the probe (eps_probe).
ModeTrace evolve_nonlinear(const PhysicalParams& params, const PulseSchedule& schedule,
                           Regime regime, const IntegratorConfig& cfg,
                           const NonlinearInitial& init = {});

/// out_field at the final instant (end of the second pulse).
cplx readout(const ModeTrace& trace);

struct ConvergenceReport {
  double dt = 0.0;
  cplx readout_dt{};
  cplx readout_half{};
  double relative_delta = 0.0;
  double tolerance = 1e-6;
  bool passed = false;
  std::optional<std::string> error;  ///< integrator refusal, if any
};

/// Runs the linear system at dt and dt/2 and compares the final readouts.
ConvergenceReport convergence_check(const DerivedParams& dp, const PulseSchedule& schedule,
                                    const IntegratorConfig& cfg, double tolerance = 1e-6);

}  // namespace sbsramsey::dynamics
