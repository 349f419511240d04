#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "sbsramsey/config.hpp"
#include "sbsramsey/csv.hpp"

namespace sbsramsey::cli {

enum class Subcommand { Fringe, Sweep2d, Trace, Validate, Presets };

std::string_view to_string(Subcommand s);
Subcommand parse_subcommand(std::string_view s);

struct RunRequest {
  Subcommand subcommand = Subcommand::Presets;
  std::optional<std::string> preset;
  std::optional<std::string> config_path;
  std::optional<std::string> out_path;
  std::vector<std::string> overrides;  ///< "key=value", applied last
  std::optional<std::string> engine;
  std::optional<double> dt_us;
  unsigned threads = 0;

  bool operator==(const RunRequest&) const = default;
};

/// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kValidationFailed = 1;
inline constexpr int kError = 2;

/// Preset, then config file, then --engine/--dt-us, then --set overrides.
config::Config resolve_config(const RunRequest& req);

/// Request that reproduces a CSV from its meta block.
RunRequest request_from_meta(const csv::Meta& meta);

/// Executes a request. Diagnostics go to `err` as a single line.
int run(const RunRequest& req, std::ostream& out, std::ostream& err);

/// argv entry point (CLI11 parsing + run).
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace sbsramsey::cli
