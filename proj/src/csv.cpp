#include "sbsramsey/csv.hpp"

#include "sbsramsey/error.hpp"
#include "sbsramsey/units.hpp"

namespace sbsramsey::csv {

using config::format_number;

namespace {

std::string mhz(double rad_per_us) { return format_number(units::rad_per_us_to_mhz(rad_per_us)); }

std::string axis_column(config::AxisName a) {
  return std::string(config::to_string(a)) + "_" + std::string(config::axis_unit(a));
}

}  // namespace

Meta make_meta(std::string subcommand, std::optional<std::string> preset,
               const config::Config& cfg) {
  return {std::move(subcommand), std::move(preset), config::serialize(cfg)};
}

void write_meta(std::ostream& os, const Meta& m) {
  os << kMetaPrefix << "subcommand = " << m.subcommand << '\n';
  if (m.preset) os << kMetaPrefix << "preset = " << *m.preset << '\n';
  for (const std::string& line : m.config_lines) os << kMetaPrefix << line << '\n';
}

Meta read_meta(std::istream& is) {
  Meta m;
  std::string line;
  while (is.peek() == '#' && std::getline(is, line)) {
    if (!line.starts_with(kMetaPrefix)) continue;
    const std::string body = line.substr(kMetaPrefix.size());
    if (body.starts_with("subcommand = "))
      m.subcommand = body.substr(13);
    else if (body.starts_with("preset = "))
      m.preset = body.substr(9);
    else
      m.config_lines.push_back(body);
  }
  if (m.subcommand.empty()) throw ConfigError("CSV has no meta block");
  return m;
}

void write_fringe(std::ostream& os, const Meta& meta, const experiment::FringeTrace& t) {
  write_meta(os, meta);
  os << "omega_x_mhz,signal_mhz\n";
  for (std::size_t i = 0; i < t.axis.size(); ++i)
    os << format_number(t.axis[i]) << ',' << mhz(t.signal[i]) << '\n';
}

void write_grid(std::ostream& os, const Meta& meta, const experiment::FringeGrid& g) {
  write_meta(os, meta);
  os << "omega_x_mhz," << axis_column(g.axis2_name) << ",signal_mhz\n";
  for (std::size_t r = 0; r < g.rows.size(); ++r) {
    const auto& row = g.rows[r];
    for (std::size_t i = 0; i < row.axis.size(); ++i)
      os << format_number(row.axis[i]) << ',' << format_number(g.axis2[r]) << ','
         << mhz(row.signal[i]) << '\n';
  }
}

void write_visibility(std::ostream& os, const Meta& meta, const experiment::VisibilityCurve& v) {
  write_meta(os, meta);
  os << axis_column(v.axis2_name) << ",visibility_rwa,visibility_arwa\n";
  for (std::size_t i = 0; i < v.axis2.size(); ++i)
    os << format_number(v.axis2[i]) << ',' << format_number(v.rwa[i]) << ','
       << format_number(v.arwa[i]) << '\n';
}

void write_trace(std::ostream& os, const Meta& meta, const dynamics::ModeTrace& t) {
  write_meta(os, meta);
  os << "time_us";
  for (const std::string& m : t.mode_names) os << ',' << m << "_re," << m << "_im";
  os << ",out_re_mhz,out_im_mhz\n";
  for (std::size_t k = 0; k < t.size(); ++k) {
    os << format_number(t.times[k]);
    for (const cplx& a : t.amps[k]) os << ',' << format_number(a.real()) << ',' << format_number(a.imag());
    os << ',' << mhz(t.out_field[k].real()) << ',' << mhz(t.out_field[k].imag()) << '\n';
  }
}

}  // namespace sbsramsey::csv
