#include "sbsramsey/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <sstream>

#include "sbsramsey/dynamics.hpp"
#include "sbsramsey/error.hpp"
#include "sbsramsey/experiment.hpp"
#include "sbsramsey/presets.hpp"
#include "sbsramsey/simd/linear_kernel.hpp"
#include "sbsramsey/units.hpp"

namespace sbsramsey::cli {

namespace {

constexpr double kAnalyticVsOdeTolerance = 0.05;
constexpr double kLinearVsNonlinearTolerance = 0.02;
constexpr double kConvergenceTolerance = 1e-6;

constexpr std::pair<Subcommand, std::string_view> kNames[] = {
    {Subcommand::Fringe, "fringe"},     {Subcommand::Sweep2d, "sweep2d"},
    {Subcommand::Trace, "trace"},       {Subcommand::Validate, "validate"},
    {Subcommand::Presets, "presets"},
};

// Writes to --out when given, otherwise to `out`.
template <class F>
void emit(const RunRequest& req, std::ostream& out, F&& write) {
  if (!req.out_path) {
    write(out);
    return;
  }
  std::ofstream f(*req.out_path, std::ios::binary);
  if (!f) throw ConfigError("cannot open output file '" + *req.out_path + "'");
  write(f);
  if (!f) throw ConfigError("failed writing '" + *req.out_path + "'");
}

std::string joined_meta_name(const RunRequest& req) { return std::string(to_string(req.subcommand)); }

int run_validate(const RunRequest& req, const config::Config& cfg, std::ostream& out) {
  using experiment::Engine;
  experiment::SweepSpec spec = experiment::SweepSpec::from_config(cfg, req.threads);
  spec.axis2.reset();

  nlohmann::json summary;
  summary["isa"] = std::string(simd::to_string(simd::active_isa()));
  bool ok = true;

  const auto cmp = experiment::compare_engines(spec, Engine::Analytic, Engine::LinearOde,
                                               kAnalyticVsOdeTolerance);
  out << "analytic vs ode: linf = " << cmp.linf << " (tol " << cmp.tolerance << ") "
      << (cmp.passed ? "PASS" : "FAIL") << '\n';
  summary["analytic_vs_ode"] = {{"linf", cmp.linf}, {"tolerance", cmp.tolerance},
                                {"passed", cmp.passed}};
  ok = ok && cmp.passed;

  if (cfg.config_mode == ConfigMode::Microscopic) {
    const auto nl = experiment::compare_engines(spec, Engine::LinearOde, Engine::NonlinearOde,
                                                kLinearVsNonlinearTolerance);
    out << "ode vs nonlinear: linf = " << nl.linf << " (tol " << nl.tolerance << ") "
        << (nl.passed ? "PASS" : "FAIL") << '\n';
    summary["ode_vs_nonlinear"] = {{"linf", nl.linf}, {"tolerance", nl.tolerance},
                                   {"passed", nl.passed}};
    ok = ok && nl.passed;
  }

  const config::ModelInputs m = config::to_model(cfg);
  const DerivedParams dp = derive(m.params, m.schedule, m.regime, m.request);
  const auto conv = dynamics::convergence_check(dp, m.schedule, m.integrator, kConvergenceTolerance);
  out << "dt halving: dt = " << conv.dt << " us, relative delta = " << conv.relative_delta
      << " (tol " << conv.tolerance << ") " << (conv.passed ? "PASS" : "FAIL");
  if (conv.error) out << " [" << *conv.error << "]";
  out << '\n';
  summary["convergence"] = {{"dt_us", conv.dt}, {"relative_delta", conv.relative_delta},
                            {"tolerance", conv.tolerance}, {"passed", conv.passed}};
  if (conv.error) summary["convergence"]["error"] = *conv.error;
  ok = ok && conv.passed;
  summary["passed"] = ok;

  if (req.out_path) {
    emit(req, out, [&](std::ostream& os) { os << summary.dump(2) << '\n'; });
  } else {
    out << "summary: " << summary.dump() << '\n';
  }
  return ok ? kOk : kValidationFailed;
}

int run_trace(const RunRequest& req, const config::Config& cfg, std::ostream& out) {
  const config::ModelInputs m = config::to_model(cfg);
  dynamics::ModeTrace tr;
  if (cfg.engine == config::Engine::NonlinearOde) {
    if (cfg.config_mode != ConfigMode::Microscopic)
      throw ConfigError("the nonlinear engine needs config_mode = microscopic (g and both drives)");
    m.params.validate();
    m.schedule.validate();
    tr = dynamics::evolve_nonlinear(m.params, m.schedule, m.regime, m.integrator);
  } else {
    // The analytic engine has no time axis; traces come from the linear ODE.
    const DerivedParams dp = derive(m.params, m.schedule, m.regime, m.request);
    tr = dynamics::evolve_linear(dp, m.schedule, m.integrator);
  }
  const csv::Meta meta = csv::make_meta(joined_meta_name(req), req.preset, cfg);
  emit(req, out, [&](std::ostream& os) { csv::write_trace(os, meta, tr); });
  return kOk;
}

}  // namespace

std::string_view to_string(Subcommand s) {
  for (const auto& [k, n] : kNames)
    if (k == s) return n;
  return "presets";
}

Subcommand parse_subcommand(std::string_view s) {
  for (const auto& [k, n] : kNames)
    if (n == s) return k;
  throw ConfigError("unknown subcommand '" + std::string(s) + "'");
}

config::Config resolve_config(const RunRequest& req) {
  config::Config cfg;
  if (req.preset) cfg = presets::load(*req.preset);
  if (req.config_path) cfg = config::parse_file(*req.config_path, cfg);
  if (req.engine) cfg.engine = config::parse_engine(*req.engine);
  if (req.dt_us) cfg.dt_us = *req.dt_us;
  for (const std::string& o : req.overrides) config::apply_override(cfg, o);
  return cfg;
}

RunRequest request_from_meta(const csv::Meta& meta) {
  RunRequest r;
  r.subcommand = parse_subcommand(meta.subcommand);
  r.preset = meta.preset;
  for (const std::string& line : meta.config_lines) {
    std::string o = line;
    const auto eq = o.find(" = ");
    if (eq != std::string::npos) o.replace(eq, 3, "=");
    r.overrides.push_back(o);
  }
  return r;
}

int run(const RunRequest& req, std::ostream& out, std::ostream& err) {
  try {
    if (req.subcommand == Subcommand::Presets) {
      emit(req, out, [](std::ostream& os) {
        for (const std::string& n : presets::names()) os << n << '\n';
      });
      return kOk;
    }
    if (!req.preset && !req.config_path)
      throw ConfigError("need --preset or --config");
    const config::Config cfg = resolve_config(req);
    const auto spec = experiment::SweepSpec::from_config(cfg, req.threads);
    const csv::Meta meta = csv::make_meta(joined_meta_name(req), req.preset, cfg);

    switch (req.subcommand) {
      case Subcommand::Fringe: {
        experiment::SweepSpec s = spec;
        s.axis2.reset();
        const auto tr = experiment::sweep_1d(s);
        emit(req, out, [&](std::ostream& os) { csv::write_fringe(os, meta, tr); });
        return kOk;
      }
      case Subcommand::Sweep2d: {
        if (cfg.report == config::Report::Visibility) {
          const auto v = experiment::visibility_curve(spec);
          emit(req, out, [&](std::ostream& os) { csv::write_visibility(os, meta, v); });
        } else {
          const auto g = experiment::sweep_2d(spec);
          emit(req, out, [&](std::ostream& os) { csv::write_grid(os, meta, g); });
        }
        return kOk;
      }
      case Subcommand::Trace:
        return run_trace(req, cfg, out);
      case Subcommand::Validate:
        return run_validate(req, cfg, out);
      case Subcommand::Presets:
        break;
    }
    return kOk;
  } catch (const std::exception& e) {
    std::string msg = e.what();
    for (char& c : msg)
      if (c == '\n') c = ' ';
    err << "error: " << msg << '\n';
    return kError;
  }
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Ramsey fringes from stimulated Brillouin scattering in a whispering-gallery resonator"};
  app.require_subcommand(1);

  RunRequest req;
  std::string engine;
  double dt = 0.0;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--preset", req.preset, "bundled parameter set (see `presets`)");
    sub->add_option("--config", req.config_path, "key = value configuration file");
    sub->add_option("--out", req.out_path, "output file (default: stdout)");
    sub->add_option("--set", req.overrides, "override key=value (repeatable)");
    sub->add_option("--engine", engine, "analytic | ode | nonlinear");
    sub->add_option("--dt-us", dt, "integrator step in microseconds");
    sub->add_option("--threads", req.threads, "worker threads (0 = all cores)");
  };

  CLI::App* presets_cmd = app.add_subcommand("presets", "list bundled presets");
  presets_cmd->add_option("--out", req.out_path, "output file (default: stdout)");
  for (const auto& [k, n] : kNames) {
    if (k == Subcommand::Presets) continue;
    const char* help = k == Subcommand::Fringe     ? "fringe signal vs omega_x (CSV)"
                       : k == Subcommand::Sweep2d  ? "fringes over omega_x and axis2 (CSV)"
                       : k == Subcommand::Trace    ? "time trace of the mode amplitudes (CSV)"
                                                   : "analytic/ODE agreement and dt convergence";
    add_common(app.add_subcommand(std::string(n), help));
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    std::string msg = e.what();
    err << "error: " << msg << '\n';
    return kError;
  }

  for (CLI::App* sub : app.get_subcommands()) {
    req.subcommand = parse_subcommand(sub->get_name());
    if (const auto* o = sub->get_option_no_throw("--engine"); o && o->count()) req.engine = engine;
    if (const auto* o = sub->get_option_no_throw("--dt-us"); o && o->count()) req.dt_us = dt;
  }
  return run(req, out, err);
}

}  // namespace sbsramsey::cli
