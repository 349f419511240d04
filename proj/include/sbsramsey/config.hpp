#pragma once

#include <cstddef>
#include <istream>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sbsramsey/dynamics.hpp"
#include "sbsramsey/model.hpp"

// Flat key = value configuration. Every numeric key carries its unit in the
// name (_mhz for ordinary frequencies omega/2pi, _us, _mw, _thz); counts and
// enumerations are unsuffixed. Lines starting with '#' are comments.
namespace sbsramsey::config {

enum class Engine { Analytic, LinearOde, NonlinearOde };

std::string_view to_string(Engine e);
/// Accepts analytic | ode | linear_ode | nonlinear | nonlinear_ode.
Engine parse_engine(std::string_view s);

enum class AxisName { OmegaX, Kappa, Coupling, Tau1, TFree, Tau2 };

std::string_view to_string(AxisName a);
AxisName parse_axis(std::string_view s);
/// "mhz" for frequency-like axes, "us" for durations.
std::string_view axis_unit(AxisName a);

struct AxisRange {
  AxisName name = AxisName::OmegaX;
  double min = 0.0;  ///< user units (MHz or us)
  double max = 0.0;
  std::size_t count = 2;

  std::vector<double> values() const;
  void validate() const;
  bool operator==(const AxisRange&) const = default;
};

/// What sweep2d reports: the raw grid, or visibility of both regimes per axis2 value.
enum class Report { Grid, Visibility };

struct Config {
  Regime regime = Regime::Rwa;
  ConfigMode config_mode = ConfigMode::Effective;
  Engine engine = Engine::Analytic;
  Report report = Report::Grid;

  double omega_m_mhz = 42.3;
  double omega_x_mhz = 0.0;  ///< sets omega_lc - omega_la = omega_m - omega_x
  double delta_a_mhz = 0.0;
  double delta_c_mhz = 0.0;
  double g_mhz = 0.0;
  double kappa_a_mhz = 40.0;
  double kappa_c_mhz = 40.0;
  double gamma_m_mhz = 0.02;
  double coupling_mhz = 0.58;  ///< |G|, used in effective mode

  double tau1_us = 4.0;
  double t_free_us = 4.0;
  double tau2_us = 0.1;
  double eps_control_mhz = 0.0;
  double eps_probe_mhz = 1.0;
  std::optional<double> control_power_mw;  ///< overrides eps_control when set
  double control_laser_thz = 200.0;

  double dt_us = 1e-4;
  std::size_t sample_stride = 100;

  AxisRange axis1{AxisName::OmegaX, -1.0, 1.0, 401};
  std::optional<AxisRange> axis2;

  bool operator==(const Config&) const = default;
};

/// Parses configuration text on top of `base`. Errors name the key and line.
Config parse(std::string_view text, Config base = {});
Config parse_file(const std::string& path, Config base = {});

/// Applies one "key=value" override.
void apply_override(Config& cfg, std::string_view assignment);

/// Canonical text form: every key, fixed order, shortest round-trip numbers.
/// parse(serialize(c)) == c.
std::vector<std::string> serialize(const Config& cfg);
std::string to_text(const Config& cfg);

/// All keys the parser accepts (axis2 bounds listed with both suffixes).
std::vector<std::string> known_keys();

/// Shortest decimal string that parses back to the same double.
std::string format_number(double v);

/// Physical inputs resolved to internal units.
struct ModelInputs {
  PhysicalParams params;
  PulseSchedule schedule;
  Regime regime = Regime::Rwa;
  CouplingRequest request;
  dynamics::IntegratorConfig integrator;
};

ModelInputs to_model(const Config& cfg);

/// Config with one axis set to `value` (user units). In microscopic mode the
/// coupling axis rescales g so that g |control amplitude| equals the value.
Config with_axis(Config cfg, AxisName axis, double value);

}  // namespace sbsramsey::config
