#include "sbsramsey/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "sbsramsey/error.hpp"
#include "sbsramsey/simd/linear_kernel.hpp"

namespace sbsramsey::dynamics {

namespace {

constexpr double kStabilityLimit = 0.1;

double regime_sign(Regime r) { return r == Regime::Rwa ? 1.0 : -1.0; }

// Rate that the step has to resolve in the linear system.
double linear_fastest_rate(const DerivedParams& dp) {
  return std::max({dp.kappa, std::abs(dp.delta), std::abs(dp.omega_x), std::abs(dp.coupling),
                   0.5 * dp.gamma_m});
}

void load_lane(simd::LinearCoeffs& c, std::size_t lane, const DerivedParams& dp, double eps) {
  simd::set_lane(c, lane, regime_sign(dp.regime), dp.kappa, dp.delta, dp.gamma_m, dp.omega_x,
                 dp.coupling.real(), dp.coupling.imag(), eps);
}

cplx lane_x(const simd::LinearState& s, std::size_t l) { return {s.x_re[l], s.x_im[l]}; }
cplx lane_y(const simd::LinearState& s, std::size_t l) { return {s.y_re[l], s.y_im[l]}; }

// y is b in the RWA regime and b^dagger in the anti-RWA regime.
cplx phonon_from_y(Regime r, cplx y) { return r == Regime::Rwa ? y : std::conj(y); }

}  // namespace

void IntegratorConfig::validate() const {
  if (!(dt > 0.0) || !std::isfinite(dt)) throw InvalidParameter("dt must be > 0");
  if (sample_stride < 1) throw InvalidParameter("sample_stride must be >= 1");
}

std::array<StagePlan, 3> plan_stages(const PulseSchedule& s, double dt) {
  const std::array<double, 3> durations{s.tau1, s.t_free, s.tau2};
  const std::array<bool, 3> on{true, false, true};
  std::array<StagePlan, 3> plan{};
  double start = 0.0;
  for (std::size_t i = 0; i < 3; ++i) {
    StagePlan& p = plan[i];
    p.start = start;
    p.duration = durations[i];
    p.drive_on = on[i];
    // Guard against duration/dt landing a hair above an integer.
    const double ratio = durations[i] / dt;
    p.steps = durations[i] > 0.0 ? static_cast<std::size_t>(std::ceil(ratio * (1.0 - 1e-12))) : 0;
    p.h = p.steps > 0 ? durations[i] / static_cast<double>(p.steps) : 0.0;
    start += durations[i];
  }
  return plan;
}

void check_stability(double dt, double rate, std::string_view what) {
  if (dt * rate > kStabilityLimit) {
    const double need = kStabilityLimit / rate;
    std::ostringstream os;
    os << what << ": dt = " << dt << " us cannot resolve rate " << rate
       << " rad/us; need dt <= " << need << " us";
    throw StabilityError(os.str(), need);
  }
}

ModeTrace evolve_linear(const DerivedParams& dp, const PulseSchedule& s,
                        const IntegratorConfig& cfg, const LinearInitial& init) {
  cfg.validate();
  check_stability(cfg.dt, linear_fastest_rate(dp), "evolve_linear");

  const auto plan = plan_stages(s, cfg.dt);
  const auto advance = simd::kernel_for(simd::active_isa());
  const bool rwa = dp.regime == Regime::Rwa;

  simd::LinearCoeffs coeffs;
  load_lane(coeffs, 0, dp, s.eps_probe);
  simd::LinearState st;
  st.x_re[0] = init.probe.real();
  st.x_im[0] = init.probe.imag();
  const cplx y0 = rwa ? init.phonon : std::conj(init.phonon);
  st.y_re[0] = y0.real();
  st.y_im[0] = y0.imag();

  ModeTrace tr;
  tr.mode_names = {rwa ? "c" : "a", "b"};
  auto record = [&](double t, double eps_now) {
    const cplx x = lane_x(st, 0);
    tr.times.push_back(t);
    tr.amps.push_back({x, phonon_from_y(dp.regime, lane_y(st, 0))});
    tr.out_field.push_back(2.0 * dp.kappa * x - eps_now);
  };

  // Samples belong to the stage that produced them, so the t = 0 sample and
  // the final sample both see the pulse drive.
  record(0.0, pulse_envelope(s, s.eps_probe, 0.0));
  for (const StagePlan& p : plan) {
    const double eps_now = p.drive_on ? s.eps_probe : 0.0;
    std::size_t done = 0;
    while (done < p.steps) {
      const std::size_t chunk = std::min(cfg.sample_stride, p.steps - done);
      advance(coeffs, p.drive_on, p.h, chunk, st);
      done += chunk;
      const double t = done == p.steps ? p.start + p.duration
                                       : p.start + static_cast<double>(done) * p.h;
      record(t, eps_now);
    }
  }
  return tr;
}

void evolve_linear_final(std::span<const DerivedParams> points, const PulseSchedule& s,
                         const IntegratorConfig& cfg, std::span<LinearFinal> out) {
  if (points.size() > simd::kLanes || out.size() < points.size())
    throw InvalidParameter("evolve_linear_final: batch larger than the lane count");
  cfg.validate();
  simd::LinearCoeffs coeffs;
  for (std::size_t l = 0; l < points.size(); ++l) {
    check_stability(cfg.dt, linear_fastest_rate(points[l]), "evolve_linear");
    if (points[l].regime != points[0].regime)
      throw InvalidParameter("evolve_linear_final: mixed regimes in one batch");
    load_lane(coeffs, l, points[l], s.eps_probe);
  }
  // Unused lanes keep all-zero coefficients and stay at zero.
  const auto advance = simd::kernel_for(simd::active_isa());
  const auto plan = plan_stages(s, cfg.dt);
  simd::LinearState st;
  for (const StagePlan& p : plan) {
    if (p.steps > 0) advance(coeffs, p.drive_on, p.h, p.steps, st);
  }
  for (std::size_t l = 0; l < points.size(); ++l) {
    const cplx x = lane_x(st, l);
    out[l].probe = x;
    out[l].phonon = phonon_from_y(points[l].regime, lane_y(st, l));
    out[l].out_field = 2.0 * points[l].kappa * x - s.eps_probe;
  }
}

LinearFinal evolve_linear_final(const DerivedParams& dp, const PulseSchedule& s,
                                const IntegratorConfig& cfg) {
  LinearFinal f;
  evolve_linear_final(std::span<const DerivedParams>(&dp, 1), s, cfg, std::span<LinearFinal>(&f, 1));
  return f;
}

namespace {

struct Three {
  cplx a, b, c;
};

struct NonlinearRhs {
  cplx ra, rb, rc;  // -(kappa + i delta) per mode
  double g;
  cplx eps_a, eps_c;

  Three operator()(const Three& s, bool on) const {
    const cplx ea = on ? eps_a : cplx{};
    const cplx ec = on ? eps_c : cplx{};
    const cplx mi{0.0, -1.0};
    return {ra * s.a + mi * g * std::conj(s.b) * s.c + ea,
            rb * s.b + mi * g * std::conj(s.a) * s.c,
            rc * s.c + mi * g * s.a * s.b + ec};
  }
};

Three axpy(const Three& x, double h, const Three& k) {
  return {x.a + h * k.a, x.b + h * k.b, x.c + h * k.c};
}

}  // namespace

ModeTrace evolve_nonlinear(const PhysicalParams& p, const PulseSchedule& s, Regime regime,
                           const IntegratorConfig& cfg, const NonlinearInitial& init) {
  cfg.validate();
  // Seeded lossless runs are legitimate here, so only finiteness and signs are
  // checked rather than PhysicalParams::validate().
  if (!(p.kappa_a >= 0.0 && p.kappa_c >= 0.0 && p.gamma_m >= 0.0 && p.g >= 0.0))
    throw InvalidParameter("evolve_nonlinear: rates must be >= 0");
  const double fastest = std::max({p.kappa_a, p.kappa_c, std::abs(p.delta_a),
                                   std::abs(p.delta_c), std::abs(p.omega_x()), 0.5 * p.gamma_m});
  check_stability(cfg.dt, fastest, "evolve_nonlinear");

  const bool rwa = regime == Regime::Rwa;
  NonlinearRhs f;
  f.ra = -cplx(p.kappa_a, p.delta_a);
  f.rb = -cplx(0.5 * p.gamma_m, p.omega_x());
  f.rc = -cplx(p.kappa_c, p.delta_c);
  f.g = p.g;
  f.eps_a = rwa ? s.eps_control : s.eps_probe;
  f.eps_c = rwa ? s.eps_probe : s.eps_control;
  const double kappa_probe = rwa ? p.kappa_c : p.kappa_a;

  Three x{init.a, init.b, init.c};
  ModeTrace tr;
  tr.mode_names = {"a", "b", "c"};
  auto record = [&](double t, bool on) {
    const cplx probe = rwa ? x.c : x.a;
    tr.times.push_back(t);
    tr.amps.push_back({x.a, x.b, x.c});
    tr.out_field.push_back(2.0 * kappa_probe * probe - (on ? s.eps_probe : 0.0));
  };

  record(0.0, true);
  for (const StagePlan& st : plan_stages(s, cfg.dt)) {
    const double h = st.h;
    for (std::size_t n = 1; n <= st.steps; ++n) {
      const Three k1 = f(x, st.drive_on);
      const Three k2 = f(axpy(x, 0.5 * h, k1), st.drive_on);
      const Three k3 = f(axpy(x, 0.5 * h, k2), st.drive_on);
      const Three k4 = f(axpy(x, h, k3), st.drive_on);
      x.a += h / 6.0 * (((k1.a + 2.0 * k2.a) + 2.0 * k3.a) + k4.a);
      x.b += h / 6.0 * (((k1.b + 2.0 * k2.b) + 2.0 * k3.b) + k4.b);
      x.c += h / 6.0 * (((k1.c + 2.0 * k2.c) + 2.0 * k3.c) + k4.c);
      if (n == st.steps)
        record(st.start + st.duration, st.drive_on);
      else if (n % cfg.sample_stride == 0)
        record(st.start + static_cast<double>(n) * h, st.drive_on);
    }
  }
  return tr;
}

cplx readout(const ModeTrace& trace) {
  if (trace.out_field.empty()) throw InvalidParameter("readout: empty trace");
  return trace.out_field.back();
}

ConvergenceReport convergence_check(const DerivedParams& dp, const PulseSchedule& s,
                                    const IntegratorConfig& cfg, double tolerance) {
  ConvergenceReport rep;
  rep.dt = cfg.dt;
  rep.tolerance = tolerance;
  try {
    IntegratorConfig half = cfg;
    half.dt = 0.5 * cfg.dt;
    rep.readout_dt = evolve_linear_final(dp, s, cfg).out_field;
    rep.readout_half = evolve_linear_final(dp, s, half).out_field;
    const double scale = std::abs(rep.readout_half);
    const double diff = std::abs(rep.readout_dt - rep.readout_half);
    rep.relative_delta = scale > 0.0 ? diff / scale : diff;
    rep.passed = rep.relative_delta < tolerance;
  } catch (const StabilityError& e) {
    rep.error = e.what();
    rep.passed = false;
  }
  return rep;
}

}  // namespace sbsramsey::dynamics
