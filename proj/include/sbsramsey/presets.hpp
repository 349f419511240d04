#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "sbsramsey/config.hpp"

// Parameter sets of the published figures. Shared values: omega_m/2pi = 42.3
// MHz, gamma_m/2pi = 20 kHz, eps_probe/2pi = 1 MHz, |G|/2pi = 0.58 MHz,
// tau1 = T = 4 us, tau2 = 0.1 us, omega_lc - omega_la ~ omega_m.
namespace sbsramsey::presets {

std::vector<std::string> names();

/// Configuration text of a preset; throws ConfigError for unknown names.
std::string_view text(std::string_view name);

config::Config load(std::string_view name);

}  // namespace sbsramsey::presets
