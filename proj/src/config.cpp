#include "sbsramsey/config.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <sstream>

#include "sbsramsey/error.hpp"
#include "sbsramsey/units.hpp"

namespace sbsramsey::config {

std::string_view to_string(Engine e) {
  switch (e) {
    case Engine::Analytic:
      return "analytic";
    case Engine::LinearOde:
      return "ode";
    case Engine::NonlinearOde:
      return "nonlinear";
  }
  return "analytic";
}

Engine parse_engine(std::string_view s) {
  if (s == "analytic") return Engine::Analytic;
  if (s == "ode" || s == "linear_ode") return Engine::LinearOde;
  if (s == "nonlinear" || s == "nonlinear_ode") return Engine::NonlinearOde;
  throw ConfigError("unknown engine '" + std::string(s) + "' (expected analytic|ode|nonlinear)");
}

std::string_view to_string(AxisName a) {
  switch (a) {
    case AxisName::OmegaX:
      return "omega_x";
    case AxisName::Kappa:
      return "kappa";
    case AxisName::Coupling:
      return "coupling";
    case AxisName::Tau1:
      return "tau1";
    case AxisName::TFree:
      return "t_free";
    case AxisName::Tau2:
      return "tau2";
  }
  return "omega_x";
}

AxisName parse_axis(std::string_view s) {
  for (AxisName a : {AxisName::OmegaX, AxisName::Kappa, AxisName::Coupling, AxisName::Tau1,
                     AxisName::TFree, AxisName::Tau2})
    if (to_string(a) == s) return a;
  throw ConfigError("unknown axis '" + std::string(s) +
                    "' (expected omega_x|kappa|coupling|tau1|t_free|tau2)");
}

std::string_view axis_unit(AxisName a) {
  switch (a) {
    case AxisName::Tau1:
    case AxisName::TFree:
    case AxisName::Tau2:
      return "us";
    default:
      return "mhz";
  }
}

std::vector<double> AxisRange::values() const {
  std::vector<double> v(count);
  for (std::size_t i = 0; i < count; ++i)
    v[i] = min + (max - min) * static_cast<double>(i) / static_cast<double>(count - 1);
  if (count > 0) v.back() = max;
  return v;
}

void AxisRange::validate() const {
  if (count < 2) throw ConfigError("axis " + std::string(to_string(name)) + ": count must be >= 2");
  if (!std::isfinite(min) || !std::isfinite(max))
    throw ConfigError("axis " + std::string(to_string(name)) + ": range must be finite");
}

std::string format_number(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

namespace {

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

double to_double(std::string_view s) {
  double v = 0.0;
  const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc() || res.ptr != s.data() + s.size() || !std::isfinite(v))
    throw ConfigError("invalid number '" + std::string(s) + "'");
  return v;
}

std::size_t to_count(std::string_view s) {
  std::size_t v = 0;
  const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc() || res.ptr != s.data() + s.size())
    throw ConfigError("invalid count '" + std::string(s) + "'");
  return v;
}

AxisRange& axis2_of(Config& c) {
  if (!c.axis2) c.axis2 = AxisRange{AxisName::Kappa, 0.0, 0.0, 2};
  return *c.axis2;
}

struct KeySpec {
  std::string_view base;
  std::string_view suffix;  // empty for unitless keys
  std::function<void(Config&, std::string_view)> set;
  std::function<std::optional<std::string>(const Config&)> get;

  std::string key() const {
    return suffix.empty() ? std::string(base) : std::string(base) + "_" + std::string(suffix);
  }
};

#define SBS_REAL(name, suffix, field)                                                  \
  KeySpec {                                                                            \
    name, suffix, [](Config& c, std::string_view v) { c.field = to_double(v); },       \
        [](const Config& c) -> std::optional<std::string> { return format_number(c.field); } \
  }

const std::vector<KeySpec>& schema() {
  static const std::vector<KeySpec> keys = {
      {"regime", "", [](Config& c, std::string_view v) { c.regime = parse_regime(v); },
       [](const Config& c) -> std::optional<std::string> { return std::string(to_string(c.regime)); }},
      {"config_mode", "",
       [](Config& c, std::string_view v) { c.config_mode = parse_config_mode(v); },
       [](const Config& c) -> std::optional<std::string> {
         return std::string(to_string(c.config_mode));
       }},
      {"engine", "", [](Config& c, std::string_view v) { c.engine = parse_engine(v); },
       [](const Config& c) -> std::optional<std::string> { return std::string(to_string(c.engine)); }},
      {"report", "",
       [](Config& c, std::string_view v) {
         if (v == "grid")
           c.report = Report::Grid;
         else if (v == "visibility")
           c.report = Report::Visibility;
         else
           throw ConfigError("invalid report '" + std::string(v) + "' (expected grid|visibility)");
       },
       [](const Config& c) -> std::optional<std::string> {
         return std::string(c.report == Report::Grid ? "grid" : "visibility");
       }},
      SBS_REAL("omega_m", "mhz", omega_m_mhz),
      SBS_REAL("omega_x", "mhz", omega_x_mhz),
      SBS_REAL("delta_a", "mhz", delta_a_mhz),
      SBS_REAL("delta_c", "mhz", delta_c_mhz),
      SBS_REAL("g", "mhz", g_mhz),
      SBS_REAL("kappa_a", "mhz", kappa_a_mhz),
      SBS_REAL("kappa_c", "mhz", kappa_c_mhz),
      SBS_REAL("gamma_m", "mhz", gamma_m_mhz),
      SBS_REAL("coupling", "mhz", coupling_mhz),
      SBS_REAL("tau1", "us", tau1_us),
      SBS_REAL("t_free", "us", t_free_us),
      SBS_REAL("tau2", "us", tau2_us),
      SBS_REAL("eps_control", "mhz", eps_control_mhz),
      SBS_REAL("eps_probe", "mhz", eps_probe_mhz),
      {"control_power", "mw",
       [](Config& c, std::string_view v) {
         if (v == "none")
           c.control_power_mw.reset();
         else
           c.control_power_mw = to_double(v);
       },
       [](const Config& c) -> std::optional<std::string> {
         return c.control_power_mw ? format_number(*c.control_power_mw) : std::string("none");
       }},
      SBS_REAL("control_laser", "thz", control_laser_thz),
      SBS_REAL("dt", "us", dt_us),
      {"sample_stride", "", [](Config& c, std::string_view v) { c.sample_stride = to_count(v); },
       [](const Config& c) -> std::optional<std::string> { return std::to_string(c.sample_stride); }},
      SBS_REAL("axis1_min", "mhz", axis1.min),
      SBS_REAL("axis1_max", "mhz", axis1.max),
      {"axis1_count", "", [](Config& c, std::string_view v) { c.axis1.count = to_count(v); },
       [](const Config& c) -> std::optional<std::string> { return std::to_string(c.axis1.count); }},
      {"axis2", "",
       [](Config& c, std::string_view v) {
         if (v == "none")
           c.axis2.reset();
         else
           axis2_of(c).name = parse_axis(v);
       },
       [](const Config& c) -> std::optional<std::string> {
         return c.axis2 ? std::string(to_string(c.axis2->name)) : std::string("none");
       }},
      // axis2 bounds accept either suffix; the match against axis2 is checked
      // once the whole text has been read.
      {"axis2_min", "mhz", [](Config& c, std::string_view v) { axis2_of(c).min = to_double(v); },
       [](const Config& c) -> std::optional<std::string> {
         if (!c.axis2 || axis_unit(c.axis2->name) != "mhz") return std::nullopt;
         return format_number(c.axis2->min);
       }},
      {"axis2_min", "us", [](Config& c, std::string_view v) { axis2_of(c).min = to_double(v); },
       [](const Config& c) -> std::optional<std::string> {
         if (!c.axis2 || axis_unit(c.axis2->name) != "us") return std::nullopt;
         return format_number(c.axis2->min);
       }},
      {"axis2_max", "mhz", [](Config& c, std::string_view v) { axis2_of(c).max = to_double(v); },
       [](const Config& c) -> std::optional<std::string> {
         if (!c.axis2 || axis_unit(c.axis2->name) != "mhz") return std::nullopt;
         return format_number(c.axis2->max);
       }},
      {"axis2_max", "us", [](Config& c, std::string_view v) { axis2_of(c).max = to_double(v); },
       [](const Config& c) -> std::optional<std::string> {
         if (!c.axis2 || axis_unit(c.axis2->name) != "us") return std::nullopt;
         return format_number(c.axis2->max);
       }},
      {"axis2_count", "", [](Config& c, std::string_view v) { axis2_of(c).count = to_count(v); },
       [](const Config& c) -> std::optional<std::string> {
         if (!c.axis2) return std::nullopt;
         return std::to_string(c.axis2->count);
       }},
  };
  return keys;
}

#undef SBS_REAL

constexpr std::string_view kSuffixes[] = {"mhz", "us", "mw", "thz"};

// Finds the spec for `key`, or explains why the key is rejected.
const KeySpec& lookup(std::string_view key) {
  for (const KeySpec& k : schema())
    if (k.key() == key) return k;

  std::string_view base = key;
  std::string_view suffix;
  for (std::string_view s : kSuffixes) {
    if (key.size() > s.size() + 1 && key.ends_with(s) && key[key.size() - s.size() - 1] == '_') {
      base = key.substr(0, key.size() - s.size() - 1);
      suffix = s;
      break;
    }
  }
  std::string expected;
  for (const KeySpec& k : schema()) {
    if (k.base != base || k.suffix.empty()) continue;
    if (!expected.empty()) expected += " or ";
    expected += k.key();
  }
  if (!expected.empty()) {
    if (suffix.empty())
      throw ConfigError("key '" + std::string(key) + "' is missing its unit suffix (use " +
                        expected + ")");
    throw ConfigError("key '" + std::string(key) + "' has unit suffix _" + std::string(suffix) +
                      " but expects " + expected);
  }
  throw ConfigError("unknown key '" + std::string(key) + "'");
}

struct AxisBoundSeen {
  std::string key;
  std::string where;
};

void check_axis2_units(const Config& c, const std::vector<AxisBoundSeen>& seen) {
  if (!c.axis2) return;
  const std::string_view unit = axis_unit(c.axis2->name);
  for (const AxisBoundSeen& s : seen) {
    if (!s.key.ends_with(unit))
      throw ConfigError(s.where + "key '" + s.key + "' has the wrong unit suffix for axis2 = " +
                        std::string(to_string(c.axis2->name)) + " (expects _" +
                        std::string(unit) + ")");
  }
}

void assign(Config& cfg, std::string_view key, std::string_view value) {
  lookup(key).set(cfg, value);
}

}  // namespace

Config parse(std::string_view text, Config cfg) {
  std::vector<AxisBoundSeen> bounds;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto nl = text.find('\n', pos);
    const std::string_view raw =
        text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;

    const std::string_view line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    const std::string where = "line " + std::to_string(line_no) + ": ";
    const auto eq = line.find('=');
    if (eq == std::string_view::npos)
      throw ConfigError(where + "expected 'key = value', got '" + std::string(line) + "'");
    const std::string_view key = trim(line.substr(0, eq));
    const std::string_view value = trim(line.substr(eq + 1));
    try {
      assign(cfg, key, value);
    } catch (const ConfigError& e) {
      const std::string msg = e.what();
      if (msg.find("key '") != std::string::npos)
        throw ConfigError(where + msg);
      throw ConfigError(where + "key '" + std::string(key) + "': " + msg);
    } catch (const Error& e) {
      throw ConfigError(where + "key '" + std::string(key) + "': " + e.what());
    }
    if (key.starts_with("axis2_min") || key.starts_with("axis2_max"))
      bounds.push_back({std::string(key), where});
  }
  check_axis2_units(cfg, bounds);
  return cfg;
}

Config parse_file(const std::string& path, Config base) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return parse(ss.str(), std::move(base));
  } catch (const ConfigError& e) {
    throw ConfigError(path + ": " + e.what());
  }
}

void apply_override(Config& cfg, std::string_view assignment) {
  const auto eq = assignment.find('=');
  if (eq == std::string_view::npos)
    throw ConfigError("override '" + std::string(assignment) + "' is not key=value");
  const std::string_view key = trim(assignment.substr(0, eq));
  try {
    assign(cfg, key, trim(assignment.substr(eq + 1)));
  } catch (const ConfigError& e) {
    throw ConfigError("override '" + std::string(assignment) + "': " + e.what());
  }
  if (key.starts_with("axis2_min") || key.starts_with("axis2_max"))
    check_axis2_units(cfg, {{std::string(key), "override: "}});
}

std::vector<std::string> serialize(const Config& cfg) {
  std::vector<std::string> out;
  for (const KeySpec& k : schema())
    if (auto v = k.get(cfg)) out.push_back(k.key() + " = " + *v);
  return out;
}

std::string to_text(const Config& cfg) {
  std::string s;
  for (const std::string& line : serialize(cfg)) s += line + "\n";
  return s;
}

std::vector<std::string> known_keys() {
  std::vector<std::string> out;
  for (const KeySpec& k : schema()) out.push_back(k.key());
  return out;
}

namespace {

double control_eps_rad(const Config& c) {
  if (!c.control_power_mw) return units::mhz_to_rad_per_us(c.eps_control_mhz);
  const double kappa_ctrl =
      units::mhz_to_rad_per_us(c.regime == Regime::Rwa ? c.kappa_a_mhz : c.kappa_c_mhz);
  return drive_strength_from_power(units::mw_to_watts(*c.control_power_mw), kappa_ctrl,
                                   units::thz_to_rad_per_s(c.control_laser_thz));
}

}  // namespace

ModelInputs to_model(const Config& c) {
  using units::mhz_to_rad_per_us;
  ModelInputs m;
  m.regime = c.regime;
  PhysicalParams& p = m.params;
  p.omega_m = mhz_to_rad_per_us(c.omega_m_mhz);
  p.modulation = mhz_to_rad_per_us(c.omega_m_mhz - c.omega_x_mhz);
  p.delta_a = mhz_to_rad_per_us(c.delta_a_mhz);
  p.delta_c = mhz_to_rad_per_us(c.delta_c_mhz);
  p.g = mhz_to_rad_per_us(c.g_mhz);
  p.kappa_a = mhz_to_rad_per_us(c.kappa_a_mhz);
  p.kappa_c = mhz_to_rad_per_us(c.kappa_c_mhz);
  p.gamma_m = mhz_to_rad_per_us(c.gamma_m_mhz);

  PulseSchedule& s = m.schedule;
  s.tau1 = c.tau1_us;
  s.t_free = c.t_free_us;
  s.tau2 = c.tau2_us;
  s.eps_control = control_eps_rad(c);
  s.eps_probe = mhz_to_rad_per_us(c.eps_probe_mhz);

  m.request.mode = c.config_mode;
  if (c.config_mode == ConfigMode::Effective) {
    m.request.magnitude = mhz_to_rad_per_us(c.coupling_mhz);
  } else if (c.g_mhz == 0.0 && c.coupling_mhz != 0.0) {
    // Lets derive() report the inconsistency.
    m.request.magnitude = mhz_to_rad_per_us(c.coupling_mhz);
  }

  m.integrator.dt = c.dt_us;
  m.integrator.sample_stride = c.sample_stride;
  return m;
}

Config with_axis(Config c, AxisName axis, double value) {
  switch (axis) {
    case AxisName::OmegaX:
      c.omega_x_mhz = value;
      break;
    case AxisName::Kappa:
      c.kappa_a_mhz = value;
      c.kappa_c_mhz = value;
      break;
    case AxisName::Coupling:
      c.coupling_mhz = value;
      if (c.config_mode == ConfigMode::Microscopic) {
        const bool rwa = c.regime == Regime::Rwa;
        const double kappa = rwa ? c.kappa_a_mhz : c.kappa_c_mhz;
        const double detune = rwa ? c.delta_a_mhz : c.delta_c_mhz;
        const double eps = units::rad_per_us_to_mhz(control_eps_rad(c));
        const double amp = eps / std::hypot(kappa, detune);
        if (!(amp > 0.0))
          throw ConfigError("coupling axis in microscopic mode needs a nonzero control drive");
        c.g_mhz = value / amp;
      }
      break;
    case AxisName::Tau1:
      c.tau1_us = value;
      break;
    case AxisName::TFree:
      c.t_free_us = value;
      break;
    case AxisName::Tau2:
      c.tau2_us = value;
      break;
  }
  return c;
}

}  // namespace sbsramsey::config
