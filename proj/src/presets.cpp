#include "sbsramsey/presets.hpp"

#include <array>
#include <utility>

#include "sbsramsey/error.hpp"

namespace sbsramsey::presets {

namespace {

// g and eps_control are chosen so that g * eps_control / kappa equals the
// figure's |G|, which keeps the microscopic mode consistent with the caption.
#define SBS_COMMON                       \
  "config_mode = effective\n"            \
  "engine = analytic\n"                  \
  "omega_m_mhz = 42.3\n"                 \
  "omega_x_mhz = 0\n"                    \
  "gamma_m_mhz = 0.02\n"                 \
  "coupling_mhz = 0.58\n"                \
  "eps_probe_mhz = 1\n"                  \
  "eps_control_mhz = 1000\n"             \
  "tau1_us = 4\n"                        \
  "t_free_us = 4\n"                      \
  "tau2_us = 0.1\n"                      \
  "dt_us = 0.0001\n"                     \
  "axis1_min_mhz = -1\n"                 \
  "axis1_max_mhz = 1\n"                  \
  "axis1_count = 401\n"

#define SBS_KAPPA40 "kappa_a_mhz = 40\nkappa_c_mhz = 40\ng_mhz = 0.0232\n"
#define SBS_KAPPA30 "kappa_a_mhz = 30\nkappa_c_mhz = 30\ng_mhz = 0.0174\n"

#define SBS_AXIS_TAU1 "axis2 = tau1\naxis2_min_us = 0.5\naxis2_max_us = 4\naxis2_count = 8\n"
#define SBS_AXIS_T "axis2 = t_free\naxis2_min_us = 0.5\naxis2_max_us = 4\naxis2_count = 8\n"
#define SBS_AXIS_TAU2 "axis2 = tau2\naxis2_min_us = 0.1\naxis2_max_us = 0.8\naxis2_count = 8\n"
#define SBS_AXIS_KAPPA "axis2 = kappa\naxis2_min_mhz = 10\naxis2_max_mhz = 60\naxis2_count = 6\n"
#define SBS_AXIS_COUPLING \
  "axis2 = coupling\naxis2_min_mhz = 0\naxis2_max_mhz = 2\naxis2_count = 201\n"

const std::array<std::pair<std::string_view, std::string_view>, 11> kPresets{{
    {"fig3_rwa_tau1", "regime = rwa\n" SBS_COMMON SBS_KAPPA40 SBS_AXIS_TAU1},
    {"fig3_rwa_T", "regime = rwa\n" SBS_COMMON SBS_KAPPA40 SBS_AXIS_T},
    {"fig3_rwa_tau2", "regime = rwa\n" SBS_COMMON SBS_KAPPA40 SBS_AXIS_TAU2},
    {"fig3_arwa_tau1", "regime = anti_rwa\n" SBS_COMMON SBS_KAPPA40 SBS_AXIS_TAU1},
    {"fig3_arwa_T", "regime = anti_rwa\n" SBS_COMMON SBS_KAPPA40 SBS_AXIS_T},
    {"fig3_arwa_tau2", "regime = anti_rwa\n" SBS_COMMON SBS_KAPPA40 SBS_AXIS_TAU2},
    {"fig4_rwa", "regime = rwa\n" SBS_COMMON SBS_KAPPA40 SBS_AXIS_KAPPA},
    {"fig4_arwa", "regime = anti_rwa\n" SBS_COMMON SBS_KAPPA40 SBS_AXIS_KAPPA},
    {"fig4c_visibility",
     "regime = rwa\nreport = visibility\n" SBS_COMMON SBS_KAPPA40
     "axis2 = kappa\naxis2_min_mhz = 10\naxis2_max_mhz = 60\naxis2_count = 11\n"},
    {"fig5_rwa", "regime = rwa\n" SBS_COMMON SBS_KAPPA30 SBS_AXIS_COUPLING},
    {"fig5_arwa", "regime = anti_rwa\n" SBS_COMMON SBS_KAPPA30 SBS_AXIS_COUPLING},
}};

}  // namespace

std::vector<std::string> names() {
  std::vector<std::string> out;
  for (const auto& [name, _] : kPresets) out.emplace_back(name);
  return out;
}

std::string_view text(std::string_view name) {
  for (const auto& [n, t] : kPresets)
    if (n == name) return t;
  throw ConfigError("unknown preset '" + std::string(name) + "'");
}

config::Config load(std::string_view name) { return config::parse(text(name)); }

}  // namespace sbsramsey::presets
