#pragma once

#include <istream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "sbsramsey/dynamics.hpp"
#include "sbsramsey/experiment.hpp"

// CSV artifacts. Each file starts with a "# meta: " block holding the
// subcommand, the preset (if any) and the full resolved configuration, so a
// run can be reproduced from its output alone. Field values are written as
// ordinary frequencies (omega / 2pi) in MHz.
namespace sbsramsey::csv {

inline constexpr std::string_view kMetaPrefix = "# meta: ";

struct Meta {
  std::string subcommand;
  std::optional<std::string> preset;
  std::vector<std::string> config_lines;  ///< "key = value"

  bool operator==(const Meta&) const = default;
};

Meta make_meta(std::string subcommand, std::optional<std::string> preset,
               const config::Config& cfg);

void write_meta(std::ostream& os, const Meta& meta);

/// Reads the leading meta block; stops at the first non-meta line.
Meta read_meta(std::istream& is);

void write_fringe(std::ostream& os, const Meta& meta, const experiment::FringeTrace& trace);
void write_grid(std::ostream& os, const Meta& meta, const experiment::FringeGrid& grid);
void write_visibility(std::ostream& os, const Meta& meta, const experiment::VisibilityCurve& v);
void write_trace(std::ostream& os, const Meta& meta, const dynamics::ModeTrace& trace);

}  // namespace sbsramsey::csv
