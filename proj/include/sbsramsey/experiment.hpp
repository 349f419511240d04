#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "sbsramsey/config.hpp"

// Parameter sweeps over the fringe engines and the fringe metrics used to
// compare against the published figures.
namespace sbsramsey::experiment {

using config::AxisName;
using config::AxisRange;
using config::Engine;

struct SweepSpec {
  config::Config base;
  AxisRange axis1;  ///< always omega_x
  std::optional<AxisRange> axis2;
  Engine engine = Engine::Analytic;
  unsigned threads = 0;  ///< 0: hardware concurrency

  static SweepSpec from_config(const config::Config& cfg, unsigned threads = 0);
  void validate() const;
};

struct FringeTrace {
  Regime regime = Regime::Rwa;
  Engine engine = Engine::Analytic;
  std::vector<double> axis;    ///< omega_x / 2pi [MHz]
  std::vector<double> signal;  ///< |eps_out| [rad/us]
  config::Config snapshot;     ///< configuration the row was evaluated with
};

/// Row-major in (axis2, axis1).
struct FringeGrid {
  AxisName axis2_name = AxisName::Kappa;
  std::vector<double> axis2;
  std::vector<FringeTrace> rows;
};

/// Output field of one grid point. Bit-identical to the same point inside a sweep.
cplx evaluate_point(const config::Config& point, Engine engine);

FringeTrace sweep_1d(const SweepSpec& spec);
FringeGrid sweep_2d(const SweepSpec& spec);

/// (max - min) / (max + min) of the signal.
double visibility(std::span<const double> signal);
double visibility(const FringeTrace& trace);

/// max - min of the signal.
double fringe_strength(std::span<const double> signal);

enum class ExtremumKind { Min, Max };

struct Extremum {
  double axis = 0.0;
  double value = 0.0;
  ExtremumKind kind = ExtremumKind::Min;
};

/// Strict interior local extrema with parabolic refinement. Endpoints excluded.
std::vector<Extremum> locate_extrema(std::span<const double> axis, std::span<const double> signal);
std::vector<Extremum> locate_extrema(const FringeTrace& trace);

struct EngineComparison {
  Engine reference = Engine::Analytic;
  Engine candidate = Engine::LinearOde;
  std::vector<double> axis;
  std::vector<double> deviation;  ///< |s_ref - s_cand| / max(s_ref)
  double linf = 0.0;
  double tolerance = 0.0;
  bool passed = false;
};

/// Runs both engines on the spec's axis1 grid (base axis2 value).
EngineComparison compare_engines(const SweepSpec& spec, Engine reference, Engine candidate,
                                 double tolerance);

/// Visibility of both regimes along the axis2 values of a spec.
struct VisibilityCurve {
  AxisName axis2_name = AxisName::Kappa;
  std::vector<double> axis2;
  std::vector<double> rwa;
  std::vector<double> arwa;
};

VisibilityCurve visibility_curve(const SweepSpec& spec);

/// Calls fn(i) for i in [0, n) on up to `threads` workers. Rethrows the first error.
void parallel_for(std::size_t n, unsigned threads, const std::function<void(std::size_t)>& fn);

}  // namespace sbsramsey::experiment
