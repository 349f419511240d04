#include "sbsramsey/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>

#include "sbsramsey/analytic.hpp"
#include "sbsramsey/dynamics.hpp"
#include "sbsramsey/error.hpp"
#include "sbsramsey/simd/linear_kernel.hpp"

namespace sbsramsey::experiment {

void parallel_for(std::size_t n, unsigned threads, const std::function<void(std::size_t)>& fn) {
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, n));
  if (threads <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr first_error;
  std::mutex error_mutex;
  auto worker = [&] {
    for (std::size_t i = next++; i < n; i = next++) {
      try {
        fn(i);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!first_error) first_error = std::current_exception();
        next = n;
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  if (first_error) std::rethrow_exception(first_error);
}

SweepSpec SweepSpec::from_config(const config::Config& cfg, unsigned threads) {
  SweepSpec s;
  s.base = cfg;
  s.axis1 = cfg.axis1;
  s.axis2 = cfg.axis2;
  s.engine = cfg.engine;
  s.threads = threads;
  return s;
}

void SweepSpec::validate() const {
  if (axis1.name != AxisName::OmegaX) throw ConfigError("axis1 must be omega_x");
  axis1.validate();
  if (axis2) {
    axis2->validate();
    if (axis2->name == AxisName::OmegaX) throw ConfigError("axis2 cannot be omega_x");
  }
  if (engine == Engine::NonlinearOde && base.config_mode != ConfigMode::Microscopic)
    throw ConfigError("the nonlinear engine needs config_mode = microscopic (g and both drives)");
}

cplx evaluate_point(const config::Config& point, Engine engine) {
  const config::ModelInputs m = config::to_model(point);
  switch (engine) {
    case Engine::Analytic: {
      const DerivedParams dp = derive(m.params, m.schedule, m.regime, m.request);
      return analytic::fringe(dp, m.schedule).out_field;
    }
    case Engine::LinearOde: {
      const DerivedParams dp = derive(m.params, m.schedule, m.regime, m.request);
      return dynamics::evolve_linear_final(dp, m.schedule, m.integrator).out_field;
    }
    case Engine::NonlinearOde: {
      if (point.config_mode != ConfigMode::Microscopic)
        throw ConfigError("the nonlinear engine needs config_mode = microscopic (g and both drives)");
      m.params.validate();
      m.schedule.validate();
      return dynamics::readout(
          dynamics::evolve_nonlinear(m.params, m.schedule, m.regime, m.integrator));
    }
  }
  return {};
}

namespace {

// One omega_x row at a fixed axis2 point.
FringeTrace run_row(const config::Config& row_cfg, const AxisRange& axis1, Engine engine,
                    unsigned threads) {
  FringeTrace tr;
  tr.regime = row_cfg.regime;
  tr.engine = engine;
  tr.axis = axis1.values();
  tr.signal.assign(tr.axis.size(), 0.0);
  tr.snapshot = row_cfg;

  if (engine == Engine::LinearOde) {
    // Pack neighbouring omega_x points into SIMD lanes.
    const config::ModelInputs m0 = config::to_model(row_cfg);
    const std::size_t n = tr.axis.size();
    const std::size_t batches = (n + simd::kLanes - 1) / simd::kLanes;
    parallel_for(batches, threads, [&](std::size_t b) {
      const std::size_t lo = b * simd::kLanes;
      const std::size_t cnt = std::min(simd::kLanes, n - lo);
      std::array<DerivedParams, simd::kLanes> dps;
      std::array<dynamics::LinearFinal, simd::kLanes> out;
      for (std::size_t l = 0; l < cnt; ++l) {
        const config::ModelInputs m =
            config::to_model(config::with_axis(row_cfg, AxisName::OmegaX, tr.axis[lo + l]));
        dps[l] = derive(m.params, m.schedule, m.regime, m.request);
      }
      dynamics::evolve_linear_final(std::span(dps.data(), cnt), m0.schedule, m0.integrator,
                                    std::span(out.data(), cnt));
      for (std::size_t l = 0; l < cnt; ++l) tr.signal[lo + l] = std::abs(out[l].out_field);
    });
    return tr;
  }

  parallel_for(tr.axis.size(), threads, [&](std::size_t i) {
    const config::Config pt = config::with_axis(row_cfg, AxisName::OmegaX, tr.axis[i]);
    tr.signal[i] = std::abs(evaluate_point(pt, engine));
  });
  return tr;
}

}  // namespace

FringeTrace sweep_1d(const SweepSpec& spec) {
  spec.validate();
  return run_row(spec.base, spec.axis1, spec.engine, spec.threads);
}

FringeGrid sweep_2d(const SweepSpec& spec) {
  spec.validate();
  if (!spec.axis2) throw ConfigError("sweep2d needs axis2");
  FringeGrid g;
  g.axis2_name = spec.axis2->name;
  g.axis2 = spec.axis2->values();
  for (double v : g.axis2)
    g.rows.push_back(
        run_row(config::with_axis(spec.base, g.axis2_name, v), spec.axis1, spec.engine, spec.threads));
  return g;
}

double visibility(std::span<const double> s) {
  if (s.empty()) throw UndefinedVisibility("visibility of an empty trace");
  const auto [lo, hi] = std::minmax_element(s.begin(), s.end());
  if (*hi + *lo <= 0.0) throw UndefinedVisibility("visibility undefined: max + min = 0");
  return (*hi - *lo) / (*hi + *lo);
}

double visibility(const FringeTrace& t) { return visibility(std::span<const double>(t.signal)); }

double fringe_strength(std::span<const double> s) {
  if (s.empty()) return 0.0;
  const auto [lo, hi] = std::minmax_element(s.begin(), s.end());
  return *hi - *lo;
}

std::vector<Extremum> locate_extrema(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) throw InvalidParameter("locate_extrema: axis/signal size mismatch");
  std::vector<Extremum> out;
  if (y.size() < 3) return out;
  for (std::size_t i = 1; i + 1 < y.size(); ++i) {
    const bool is_min = y[i] < y[i - 1] && y[i] < y[i + 1];
    const bool is_max = y[i] > y[i - 1] && y[i] > y[i + 1];
    if (!is_min && !is_max) continue;
    // Vertex of the parabola through the three samples (uniform or not).
    const double x0 = x[i - 1], x1 = x[i], x2 = x[i + 1];
    const double y0 = y[i - 1], y1 = y[i], y2 = y[i + 1];
    const double d1 = (y1 - y0) / (x1 - x0);
    const double d2 = (y2 - y1) / (x2 - x1);
    const double curv = (d2 - d1) / (x2 - x0);
    Extremum e;
    e.kind = is_min ? ExtremumKind::Min : ExtremumKind::Max;
    e.axis = x1;
    e.value = y1;
    if (curv != 0.0) {
      const double xv = 0.5 * (x0 + x1) - d1 / (2.0 * curv);
      if (xv >= x0 && xv <= x2) {
        e.axis = xv;
        e.value = y1 + d1 * (xv - x1) + curv * (xv - x1) * (xv - x0);
      }
    }
    out.push_back(e);
  }
  return out;
}

std::vector<Extremum> locate_extrema(const FringeTrace& t) {
  return locate_extrema(std::span<const double>(t.axis), std::span<const double>(t.signal));
}

EngineComparison compare_engines(const SweepSpec& spec, Engine reference, Engine candidate,
                                 double tolerance) {
  SweepSpec a = spec;
  a.engine = reference;
  SweepSpec b = spec;
  b.engine = candidate;
  const FringeTrace ra = sweep_1d(a);
  const FringeTrace rb = sweep_1d(b);

  EngineComparison c;
  c.reference = reference;
  c.candidate = candidate;
  c.axis = ra.axis;
  c.tolerance = tolerance;
  const double scale = *std::max_element(ra.signal.begin(), ra.signal.end());
  c.deviation.resize(ra.signal.size());
  for (std::size_t i = 0; i < ra.signal.size(); ++i) {
    const double d = std::abs(ra.signal[i] - rb.signal[i]);
    c.deviation[i] = scale > 0.0 ? d / scale : d;
    c.linf = std::max(c.linf, c.deviation[i]);
  }
  c.passed = c.linf <= tolerance;
  return c;
}

VisibilityCurve visibility_curve(const SweepSpec& spec) {
  if (!spec.axis2) throw ConfigError("a visibility report needs axis2");
  VisibilityCurve v;
  v.axis2_name = spec.axis2->name;
  v.axis2 = spec.axis2->values();
  for (double x : v.axis2) {
    for (Regime r : {Regime::Rwa, Regime::AntiRwa}) {
      SweepSpec s = spec;
      s.base.regime = r;
      s.base = config::with_axis(s.base, v.axis2_name, x);
      s.axis2.reset();
      const double vis = visibility(sweep_1d(s));
      (r == Regime::Rwa ? v.rwa : v.arwa).push_back(vis);
    }
  }
  return v;
}

}  // namespace sbsramsey::experiment
