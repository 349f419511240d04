#include <doctest.h>

#include "sbsramsey/config.hpp"
#include "sbsramsey/error.hpp"
#include "sbsramsey/presets.hpp"

using namespace sbsramsey;
using namespace sbsramsey::config;

namespace {

std::string error_of(std::string_view text) {
  try {
    parse(text);
  } catch (const ConfigError& e) {
    return e.what();
  }
  return {};
}

bool contains(const std::string& s, std::string_view part) {
  return s.find(part) != std::string::npos;
}

}  // namespace

TEST_CASE("parse basic keys, comments and blank lines") {
  const Config c = parse(
      "# comment\n"
      "\n"
      "regime = anti_rwa\n"
      "kappa_a_mhz = 30   \n"
      "tau2_us=0.25\n"
      "axis2 = kappa\n"
      "axis2_min_mhz = 10\n"
      "axis2_max_mhz = 60\n"
      "axis2_count = 6\n");
  CHECK(c.regime == Regime::AntiRwa);
  CHECK(c.kappa_a_mhz == 30.0);
  CHECK(c.tau2_us == 0.25);
  REQUIRE(c.axis2);
  CHECK(c.axis2->name == AxisName::Kappa);
  CHECK(c.axis2->count == 6);
}

TEST_CASE("parse errors name the key and the line") {
  const std::string unknown = error_of("regime = rwa\nfoo_mhz = 3\n");
  CHECK(contains(unknown, "line 2"));
  CHECK(contains(unknown, "foo_mhz"));

  const std::string bad_value = error_of("\ntau1_us = four\n");
  CHECK(contains(bad_value, "line 2"));
  CHECK(contains(bad_value, "tau1_us"));

  CHECK(contains(error_of("tau1_mhz = 3"), "expects tau1_us"));
  CHECK(contains(error_of("kappa_a = 3"), "missing its unit suffix"));
  CHECK(contains(error_of("just words"), "expected 'key = value'"));
  CHECK(contains(error_of("engine = magic"), "engine"));
}

TEST_CASE("axis2 bound suffix must match the axis") {
  const std::string e = error_of("axis2 = tau1\naxis2_min_mhz = 1\naxis2_max_us = 2\n");
  CHECK(contains(e, "line 2"));
  CHECK(contains(e, "axis2_min_mhz"));
  CHECK_NOTHROW(parse("axis2 = t_free\naxis2_min_us = 1\naxis2_max_us = 2\n"));
}

TEST_CASE("serialize round-trips every preset") {
  for (const std::string& name : presets::names()) {
    CAPTURE(name);
    const Config c = presets::load(name);
    CHECK(parse(to_text(c)) == c);
  }
  Config odd;
  odd.gamma_m_mhz = 0.1 + 0.2;
  odd.control_power_mw = 3.7;
  odd.axis1.min = -1.0 / 3.0;
  CHECK(parse(to_text(odd)) == odd);
}

TEST_CASE("overrides") {
  Config c;
  apply_override(c, "coupling_mhz=1.25");
  CHECK(c.coupling_mhz == 1.25);
  apply_override(c, "axis2=none");
  CHECK_FALSE(c.axis2);
  CHECK_THROWS_AS(apply_override(c, "coupling_mhz"), ConfigError);
  CHECK_THROWS_AS(apply_override(c, "nope=1"), ConfigError);
}

TEST_CASE("format_number is shortest round-trip") {
  CHECK(format_number(0.1) == "0.1");
  CHECK(format_number(42.3) == "42.3");
  CHECK(std::stod(format_number(1.0 / 3.0)) == 1.0 / 3.0);
}

TEST_CASE("axis values include both ends") {
  const AxisRange a{AxisName::Kappa, 10, 60, 6};
  const auto v = a.values();
  REQUIRE(v.size() == 6);
  CHECK(v.front() == 10.0);
  CHECK(v.back() == 60.0);
  CHECK(v[2] == doctest::Approx(30.0));
}

TEST_CASE("with_axis") {
  Config c = presets::load("fig4_rwa");
  const Config k = with_axis(c, AxisName::Kappa, 25.0);
  CHECK(k.kappa_a_mhz == 25.0);
  CHECK(k.kappa_c_mhz == 25.0);
  CHECK(with_axis(c, AxisName::Tau2, 0.3).tau2_us == 0.3);
  CHECK(with_axis(c, AxisName::OmegaX, -0.2).omega_x_mhz == -0.2);
}

TEST_CASE("to_model converts to internal units") {
  Config c;
  c.kappa_c_mhz = 40.0;
  c.coupling_mhz = 0.58;
  c.eps_probe_mhz = 1.0;
  const ModelInputs m = to_model(c);
  CHECK(m.params.kappa_c == doctest::Approx(2 * 3.141592653589793 * 40.0));
  CHECK(m.schedule.eps_probe == doctest::Approx(2 * 3.141592653589793));
  CHECK(m.schedule.tau1 == 4.0);
}

TEST_CASE("known keys parse") {
  for (const std::string& k : known_keys()) CHECK_FALSE(k.empty());
  CHECK(std::find(known_keys().begin(), known_keys().end(), "coupling_mhz") != known_keys().end());
}
