#include "dsw/scenarios.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <future>
#include <limits>
#include <memory>
#include <numbers>

#include "dsw/bbm_bbm.hpp"
#include "dsw/csv.hpp"
#include "dsw/errors.hpp"
#include "dsw/manufactured.hpp"
#include "dsw/svaerd_kalisch.hpp"
#include "dsw/time_integration.hpp"

namespace dsw::scenarios {

using std::numbers::pi;

namespace {

constexpr double kG = 9.81;
constexpr double kInf = std::numeric_limits<double>::infinity();

// Soliton: still-water depth 2 on [-35, 35].
constexpr double kSolitonDepth = 2.0;
constexpr double kSolitonHalfWidth = 35.0;

// Traveling wave and Dingemans: reference depth; wave-maker amplitude.
constexpr double kH0 = 0.8;
constexpr double kAmplitude = 0.02;

/// A semidiscretization together with the shift between its state and the
/// physical surface elevation (BBM-BBM is posed with still-water level 0).
struct Model {
  std::unique_ptr<Semidiscretization> disc;
  double eta_offset = 0.0;
  std::vector<double> bathymetry;  // physical b on the nodes
  bool dissipative = false;
};

Model build_model(const ScenarioConfig& c, int order, const Grid& grid, const BathymetryFn& b, double eta0,
                  SourceTerm source = {}) {
  Model m;
  m.bathymetry.resize(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) m.bathymetry[i] = b(grid[i]);
  if (c.model == ModelKind::bbm_bbm) {
    BbmOptions opt;
    opt.swap_upwind = c.swap_upwind;
    opt.source = std::move(source);
    auto shifted = [&](double x) { return b(x) - eta0; };
    m.disc = std::make_unique<BbmBbmDiscretization>(
        build_bbm_discretization(grid, order, shifted, kG, parse_bbm_variant(c.variant), opt));
    m.eta_offset = eta0;
  } else {
    SkOptions opt;
    opt.naive = c.naive;
    opt.source = std::move(source);
    const SkVariant v = parse_sk_variant(c.variant);
    m.disc = std::make_unique<SkDiscretization>(
        build_sk_discretization(grid, order, b, kG, eta0, sk_parameter_set(c.parameter_set), v, opt));
    m.dissipative = v == SkVariant::periodic_upwind;
  }
  return m;
}

/// Initial state from physical (eta, v).
State model_state(const Model& m, std::vector<double> eta, std::vector<double> v) {
  for (double& e : eta) e -= m.eta_offset;
  return State(std::move(eta), std::move(v));
}

std::vector<double> physical_eta(const Model& m, const State& u) {
  std::vector<double> eta(u.a);
  for (double& e : eta) e += m.eta_offset;
  return eta;
}

IntegratorConfig integrator_config(const ScenarioConfig& c, const Model& m) {
  IntegratorConfig ic;
  ic.tableau = tableau_by_name(c.method);
  ic.adaptive = !c.dt.has_value();
  ic.dt = c.dt.value_or(0.0);
  ic.controller.abs_tol = c.abs_tol;
  ic.controller.rel_tol = c.rel_tol;
  if (c.relaxation) {
    ic.relaxation.mode = m.dissipative ? RelaxationMode::dissipative : RelaxationMode::conservative;
  }
  return ic;
}

/// Total water volume, the integral of h = eta - b; mass drift is measured against it.
double water_volume(const Model& m, const State& u) {
  const std::vector<double> eta = physical_eta(m, u);
  std::vector<double> h(eta.size());
  for (std::size_t i = 0; i < h.size(); ++i) h[i] = eta[i] - m.bathymetry[i];
  return integral(h, m.disc->mass());
}

struct Run {
  State final_state;
  double volume = 1.0;
  IntegrationResult stats;
  std::vector<InvariantSample> series;
};

Run simulate(const Model& m, const State& u0, double t_end, const ScenarioConfig& c, bool record,
             std::vector<double> sample_times = {}, std::function<void(double, const State&)> on_sample = {}) {
  const Semidiscretization& d = *m.disc;
  const RhsFn rhs = [&d](const State& u, double t, State& out) { d.rhs(u, t, out); };
  Functional j;
  if (c.relaxation) {
    j.value = [&d](const State& u) { return d.functional(u); };
    j.gradient = [&d](const State& u, State& g) { d.functional_gradient(u, g); };
  }
  Run run;
  run.volume = water_volume(m, u0);
  IntegratorCallbacks cb;
  cb.sample_times = std::move(sample_times);
  cb.on_sample = std::move(on_sample);
  if (record) {
    cb.on_step = [&](const StepInfo& info) {
      const InvariantValues inv = d.invariants(*info.state);
      run.series.push_back({info.t, inv.mass, inv.secondary, inv.energy, inv.modified_entropy, info.gamma});
    };
  }
  run.stats = integrate(rhs, u0, 0.0, t_end, integrator_config(c, m), cb, j);
  run.final_state = run.stats.final_state;
  return run;
}

double l2_error(std::span<const double> u, std::span<const double> ref, const MassMatrix& mass) {
  std::vector<double> diff(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) diff[i] = u[i] - ref[i];
  return l2_norm(diff, mass);
}

double functional_of(const InvariantSample& s, ModelKind model) {
  return model == ModelKind::bbm_bbm ? s.energy : s.modified_entropy.value_or(s.energy);
}

void add_series_metrics(ScenarioResult& r, const Run& run) {
  auto& m = r.metrics;
  const auto& s = run.series;
  m["accepted_steps"] = static_cast<double>(run.stats.accepted);
  m["rejected_steps"] = static_cast<double>(run.stats.rejected);
  m["rhs_evaluations"] = static_cast<double>(run.stats.rhs_evaluations);
  m["relaxation_fallbacks"] = static_cast<double>(run.stats.relaxation_fallbacks);
  m["dt_min"] = run.stats.dt_min_used;
  m["dt_max"] = run.stats.dt_max_used;
  if (s.empty()) return;
  const InvariantSample& first = s.front();
  const double mass_scale = run.volume;
  const double secondary_scale = std::max(1.0, std::abs(first.secondary));
  const double energy_scale = first.energy != 0.0 ? std::abs(first.energy) : 1.0;
  const double j0 = functional_of(first, r.config.model);
  const double j_scale = j0 != 0.0 ? std::abs(j0) : 1.0;
  double mass = 0.0, secondary = 0.0, energy = 0.0, modified = 0.0, functional = 0.0, increase = -kInf;
  double gmin = kInf, gmax = -kInf;
  for (std::size_t i = 0; i < s.size(); ++i) {
    mass = std::max(mass, std::abs(s[i].mass - first.mass) / mass_scale);
    secondary = std::max(secondary, std::abs(s[i].secondary - first.secondary) / secondary_scale);
    energy = std::max(energy, std::abs(s[i].energy - first.energy) / energy_scale);
    if (s[i].modified_entropy && first.modified_entropy) {
      modified = std::max(modified, std::abs(*s[i].modified_entropy - *first.modified_entropy) / j_scale);
    }
    functional = std::max(functional, std::abs(functional_of(s[i], r.config.model) - j0) / j_scale);
    if (i > 0) {
      increase = std::max(increase, (functional_of(s[i], r.config.model) - functional_of(s[i - 1], r.config.model)) /
                                        j_scale);
      gmin = std::min(gmin, s[i].gamma);
      gmax = std::max(gmax, s[i].gamma);
    }
  }
  m["water_volume"] = run.volume;
  m["mass_drift"] = mass;
  m["secondary_drift"] = secondary;
  m["energy_drift"] = energy;
  if (first.modified_entropy) m["modified_entropy_drift"] = modified;
  m["functional_drift"] = functional;
  m["functional_final_change"] = (functional_of(s.back(), r.config.model) - j0) / j_scale;
  if (s.size() > 1) {
    m["functional_max_increase"] = increase;
    m["gamma_min"] = gmin;
    m["gamma_max"] = gmax;
  }
}

std::vector<InvariantSample> decimate(const std::vector<InvariantSample>& s, std::size_t every) {
  std::vector<InvariantSample> out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i % every == 0 || i + 1 == s.size()) out.push_back(s[i]);
  }
  return out;
}

std::vector<double> sample_times(const ScenarioConfig& c) {
  const double t_end = *c.t_end;
  double dt = c.sample_interval;
  if (!(dt > 0.0)) dt = c.scenario == "dingemans" ? 0.05 : t_end / 500.0;
  std::vector<double> t;
  const auto n = static_cast<std::size_t>(std::floor(t_end / dt + 1e-9));
  for (std::size_t i = 0; i <= n; ++i) t.push_back(std::min(t_end, static_cast<double>(i) * dt));
  if (t.back() < t_end) t.push_back(t_end);
  return t;
}

std::string output_dir(const ScenarioConfig& c) {
  if (const char* env = std::getenv("DSW_OUTPUT_DIR"); env != nullptr && *env != '\0') return env;
  return c.output_dir;
}

std::string prefix(const ScenarioConfig& c) {
  std::string p = c.scenario + "_" + to_string(c.model);
  if (c.scenario == "manufactured") p += "_" + c.manufactured_case;
  return p;
}

struct Writer {
  ScenarioResult& r;
  std::filesystem::path dir;
  bool enabled;

  Writer(ScenarioResult& result) : r(result), dir(output_dir(result.config)), enabled(result.config.write_files) {
    if (enabled) std::filesystem::create_directories(dir);
  }
  std::string path(const std::string& suffix) {
    const std::string p = (dir / (prefix(r.config) + suffix)).string();
    r.files.push_back(p);
    return p;
  }
};

void write_run_outputs(ScenarioResult& r, const Model& m, const Run& run) {
  Writer w(r);
  if (!w.enabled) return;
  csv::write_invariants(w.path("_invariants.csv"), decimate(run.series, r.config.output_every));
  const Grid& g = m.disc->grid();
  std::vector<double> x(g.nodes().begin(), g.nodes().end());
  csv::write_snapshot(w.path("_snapshot.csv"), x, physical_eta(m, run.final_state), run.final_state.b, m.bathymetry);
}

Grid periodic_grid(double lo, double hi, std::size_t n) { return make_uniform_grid(lo, hi, n, BoundaryKind::periodic); }

// ---------------------------------------------------------------------------
// soliton

State soliton_exact(double t, const Grid& g) {
  const double c = bbm_soliton_speed(kG, kSolitonDepth);
  const double length = g.length();
  std::vector<double> xi(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) {
    // position relative to the crest, wrapped into [-L/2, L/2)
    double d = std::fmod(g[i] - c * t + 0.5 * length, length);
    if (d < 0.0) d += length;
    xi[i] = d - 0.5 * length;
  }
  return bbm_soliton(0.0, xi, kG, kSolitonDepth, 0.0);
}

struct ErrorRun {
  double error_eta = 0.0;
  double error_v = 0.0;
  double spacing = 0.0;
};

ErrorRun soliton_errors(const ScenarioConfig& c, int order, std::size_t n, Run* keep = nullptr,
                        Model* keep_model = nullptr) {
  const Grid g = periodic_grid(-kSolitonHalfWidth, kSolitonHalfWidth, n);
  Model m = build_model(c, order, g, [](double) { return -kSolitonDepth; }, 0.0);
  const State u0 = soliton_exact(0.0, g);
  Run run = simulate(m, u0, *c.t_end, c, keep != nullptr);
  const State exact = soliton_exact(*c.t_end, g);
  ErrorRun e{l2_error(run.final_state.a, exact.a, m.disc->mass()), l2_error(run.final_state.b, exact.b, m.disc->mass()),
             g.spacing()};
  if (keep != nullptr) *keep = std::move(run);
  if (keep_model != nullptr) *keep_model = std::move(m);
  return e;
}

// ---------------------------------------------------------------------------
// manufactured

ErrorRun manufactured_errors(const ScenarioConfig& c, int order, std::size_t n, Run* keep = nullptr,
                             Model* keep_model = nullptr) {
  using manufactured::Case;
  const Case mc = c.manufactured_case == "periodic" ? Case::periodic : Case::reflecting;
  const Grid g = make_uniform_grid(0.0, 1.0, n, mc == Case::periodic ? BoundaryKind::periodic : BoundaryKind::bounded);
  SourceTerm source;
  if (c.model == ModelKind::bbm_bbm) {
    source = manufactured::bbm_source(mc, kG);
  } else {
    const SkParameterSet p = sk_parameter_set(c.parameter_set);
    source = manufactured::sk_source(mc, kG, p.alpha_tilde, p.beta_tilde, p.gamma_tilde);
  }
  Model m = build_model(c, order, g, manufactured::bathymetry, 0.0, source);
  const State u0 = manufactured::exact(mc, 0.0, g.nodes());
  Run run = simulate(m, u0, *c.t_end, c, keep != nullptr);
  const State exact = manufactured::exact(mc, *c.t_end, g.nodes());
  ErrorRun e{l2_error(run.final_state.a, exact.a, m.disc->mass()), l2_error(run.final_state.b, exact.b, m.disc->mass()),
             g.spacing()};
  if (keep != nullptr) *keep = std::move(run);
  if (keep_model != nullptr) *keep_model = std::move(m);
  return e;
}

using ErrorFn = ErrorRun (*)(const ScenarioConfig&, int, std::size_t, Run*, Model*);

ScenarioResult run_eoc(ScenarioResult r, ErrorFn fn) {
  const ScenarioConfig& c = r.config;
  struct Job {
    int order;
    std::size_t n;
    std::future<ErrorRun> result;
  };
  std::vector<Job> jobs;
  for (int p : c.eoc_orders) {
    for (std::size_t n : c.eoc_nodes) {
      jobs.push_back({p, n, std::async(std::launch::async, [&c, fn, p, n] { return fn(c, p, n, nullptr, nullptr); })});
    }
  }
  for (Job& j : jobs) {
    const ErrorRun e = j.result.get();
    r.eoc.push_back({j.order, j.n, e.spacing, e.error_eta, e.error_v, std::nullopt, std::nullopt});
  }
  fill_eoc(r.eoc);
  // Reflecting boundaries reduce the order; only periodic studies are checked.
  const bool checked = c.scenario == "soliton" || c.manufactured_case == "periodic";
  // The finest pair of each order is the asymptotic estimate; coarser pairs are reported only.
  for (std::size_t i = 0; i < r.eoc.size(); ++i) {
    const EocRow& row = r.eoc[i];
    const bool finest = i + 1 == r.eoc.size() || r.eoc[i + 1].order != row.order;
    if (!row.eoc_eta || !checked || !finest) continue;
    const std::string tag = "p=" + std::to_string(row.order) + " N=" + std::to_string(row.nodes);
    r.checks.push_back(make_check("eoc_eta " + tag, *row.eoc_eta, row.order - 0.3, row.order + 0.3));
    r.checks.push_back(make_check("eoc_v " + tag, *row.eoc_v, row.order - 0.3, row.order + 0.3));
  }
  Writer w(r);
  if (w.enabled) csv::write_eoc(w.path("_eoc.csv"), r.eoc);
  return r;
}

ScenarioResult run_soliton(ScenarioResult r) {
  if (r.config.eoc) return run_eoc(std::move(r), soliton_errors);
  Run run;
  Model m;
  const ErrorRun e = soliton_errors(r.config, r.config.order, r.config.nodes, &run, &m);
  r.metrics["l2_error_eta"] = e.error_eta;
  r.metrics["l2_error_v"] = e.error_v;
  r.invariants = run.series;
  add_series_metrics(r, run);
  r.checks.push_back(make_check("mass_drift", r.metrics["mass_drift"], 0.0, 1e-13));
  r.checks.push_back(make_check("velocity_drift", r.metrics["secondary_drift"], 0.0, 1e-11));
  if (r.config.relaxation) {
    r.checks.push_back(make_check("energy_drift", r.metrics["energy_drift"], 0.0, 1e-12));
    r.checks.push_back(make_check("gamma_min", r.metrics["gamma_min"], 1.0, 1.0 + 1e-6));
    r.checks.push_back(make_check("gamma_max", r.metrics["gamma_max"], 1.0, 1.0 + 1e-6));
  }
  write_run_outputs(r, m, run);
  return r;
}

ScenarioResult run_manufactured(ScenarioResult r) {
  if (r.config.eoc) return run_eoc(std::move(r), manufactured_errors);
  Run run;
  Model m;
  const ErrorRun e = manufactured_errors(r.config, r.config.order, r.config.nodes, &run, &m);
  r.metrics["l2_error_eta"] = e.error_eta;
  r.metrics["l2_error_v"] = e.error_v;
  r.invariants = run.series;
  add_series_metrics(r, run);
  write_run_outputs(r, m, run);
  return r;
}

// ---------------------------------------------------------------------------
// lake at rest over a discontinuous bottom, still-water level 2

double lake_bathymetry(double x) { return (x >= 0.5 && x <= 0.75) ? 1.5 + 0.5 * std::sin(2.0 * pi * x) : 1.0; }

ScenarioResult run_lake_at_rest(ScenarioResult r) {
  const ScenarioConfig& c = r.config;
  const double level = 2.0;
  const bool periodic = c.model == ModelKind::bbm_bbm ? is_periodic(parse_bbm_variant(c.variant))
                                                      : parse_sk_variant(c.variant) != SkVariant::reflecting_beta_only;
  const Grid g = make_uniform_grid(-1.0, 1.0, c.nodes, periodic ? BoundaryKind::periodic : BoundaryKind::bounded);
  Model m = build_model(c, c.order, g, lake_bathymetry, level);
  const State u0 = model_state(m, std::vector<double>(g.size(), level), std::vector<double>(g.size(), 0.0));
  Run run = simulate(m, u0, *c.t_end, c, true);
  r.metrics["l2_error_eta"] = l2_error(run.final_state.a, u0.a, m.disc->mass());
  r.metrics["l2_error_v"] = l2_error(run.final_state.b, u0.b, m.disc->mass());
  r.invariants = run.series;
  add_series_metrics(r, run);
  r.checks.push_back(make_check("l2_error_eta", r.metrics["l2_error_eta"], 0.0, 1e-12));
  r.checks.push_back(make_check("l2_error_v", r.metrics["l2_error_v"], 0.0, 1e-12));
  write_run_outputs(r, m, run);
  return r;
}

// ---------------------------------------------------------------------------
// reflecting walls, Gaussian bump over b = 0.3 cos(pi x), still-water level 1

ScenarioResult run_reflecting_bump(ScenarioResult r) {
  const ScenarioConfig& c = r.config;
  const double level = 1.0;
  const Grid g = make_uniform_grid(-1.0, 1.0, c.nodes, BoundaryKind::bounded);
  Model m = build_model(c, c.order, g, [](double x) { return 0.3 * std::cos(pi * x); }, level);
  std::vector<double> eta(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) eta[i] = level + std::exp(-50.0 * g[i] * g[i]);
  const State u0 = model_state(m, eta, std::vector<double>(g.size(), 0.0));
  Run run = simulate(m, u0, *c.t_end, c, true);
  r.invariants = run.series;
  add_series_metrics(r, run);
  r.checks.push_back(make_check("mass_drift", r.metrics["mass_drift"], 0.0, 1e-13));
  r.checks.push_back(make_check("functional_drift", r.metrics["functional_drift"], 0.0, c.relaxation ? 1e-12 : 1e-9));
  write_run_outputs(r, m, run);
  return r;
}

// ---------------------------------------------------------------------------
// traveling wave of the linear Euler equations over a flat bottom

double model_phase_speed(const ScenarioConfig& c, double k) {
  if (c.model == ModelKind::bbm_bbm) return bbm_phase_speed(k, kH0, kG);
  return sk_dispersion_omega(k, sk_parameter_set(c.parameter_set), kH0, kG) / k;
}

ScenarioResult run_traveling_wave(ScenarioResult r) {
  const ScenarioConfig& c = r.config;
  const double k = c.wavenumber;
  const double amp = c.amplitude;
  const double length = 5.0 * 2.0 * pi / k;
  const Grid g = periodic_grid(0.0, length, c.nodes);
  Model m = build_model(c, c.order, g, [](double) { return -kH0; }, 0.0);
  const double c_euler = euler_phase_speed(k, kH0, kG);
  std::vector<double> eta(g.size()), v(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) {
    eta[i] = amp * std::cos(k * g[i]);
    v[i] = std::sqrt(kG / k * std::tanh(k * kH0)) * eta[i] / kH0;
  }
  const State u0 = model_state(m, eta, v);

  // Track the phase of the k-mode to measure the propagation speed.
  const MassMatrix& mass = m.disc->mass();
  double phase = 0.0, last_t = 0.0, amplitude = amp;
  auto on_sample = [&](double t, const State& s) {
    double cs = 0.0, sn = 0.0;
    for (std::size_t i = 0; i < s.size(); ++i) {
      cs += mass[i] * s.a[i] * std::cos(k * g[i]);
      sn += mass[i] * s.a[i] * std::sin(k * g[i]);
    }
    double ph = std::atan2(sn, cs);
    while (ph < phase - pi) ph += 2.0 * pi;
    while (ph > phase + pi) ph -= 2.0 * pi;
    phase = ph;
    last_t = t;
    amplitude = 2.0 * std::hypot(cs, sn) / length;
  };
  Run run = simulate(m, u0, *c.t_end, c, true, sample_times(c), on_sample);
  const double speed = last_t > 0.0 ? phase / (k * last_t) : 0.0;
  const double c_model = model_phase_speed(c, k);
  std::vector<double> reference(g.size());
  const double omega = k * c_euler;
  for (std::size_t i = 0; i < g.size(); ++i) reference[i] = amp * std::cos(k * g[i] - omega * *c.t_end);
  r.metrics["phase_speed"] = speed;
  r.metrics["model_phase_speed"] = c_model;
  r.metrics["euler_phase_speed"] = c_euler;
  r.metrics["speed_error_model"] = speed / c_model - 1.0;
  r.metrics["speed_error_euler"] = speed / c_euler - 1.0;
  r.metrics["amplitude_ratio"] = amplitude / amp;
  r.metrics["l2_error_reference"] = l2_error(physical_eta(m, run.final_state), reference, mass);
  r.invariants = run.series;
  add_series_metrics(r, run);
  // Only long waves have a documented speed threshold; shorter waves are reported.
  if (k * kH0 <= 1.0) {
    r.checks.push_back(make_check("speed_error_model", std::abs(speed / c_model - 1.0), 0.0, 1e-3));
  }
  write_run_outputs(r, m, run);
  return r;
}

// ---------------------------------------------------------------------------
// Dingemans wave tank

double dingemans_bottom(double x) {
  if (x <= 11.01 || x >= 33.07) return 0.0;
  if (x < 23.04) return 0.6 * (x - 11.01) / (23.04 - 11.01);
  if (x <= 27.04) return 0.6;
  return 0.6 * (33.07 - x) / (33.07 - 27.04);
}

/// Wavenumber of the wave maker from omega^2 = g k tanh(k h0).
double dingemans_wavenumber() {
  const double omega = 2.0 * pi / (2.02 * std::sqrt(2.0));
  double k = omega / std::sqrt(kG * kH0);
  for (int it = 0; it < 50; ++it) {
    const double th = std::tanh(k * kH0);
    const double f = kG * k * th - omega * omega;
    const double df = kG * th + kG * k * kH0 * (1.0 - th * th);
    const double step = f / df;
    k -= step;
    if (std::abs(step) < 1e-15 * k) break;
  }
  return k;
}

double interpolate_periodic(const Grid& g, std::span<const double> u, double x) {
  const double s = (x - g.x_min()) / g.spacing();
  const double fl = std::floor(s);
  const auto n = static_cast<long>(g.size());
  const long i = ((static_cast<long>(fl) % n) + n) % n;
  const long j = (i + 1) % n;
  const double w = s - fl;
  return (1.0 - w) * u[static_cast<std::size_t>(i)] + w * u[static_cast<std::size_t>(j)];
}

double interpolate_series(const GaugeRecord& g, double t) {
  const auto it = std::lower_bound(g.t.begin(), g.t.end(), t);
  if (it == g.t.begin()) return g.eta.front();
  if (it == g.t.end()) return g.eta.back();
  const std::size_t j = static_cast<std::size_t>(it - g.t.begin());
  const double w = (t - g.t[j - 1]) / (g.t[j] - g.t[j - 1]);
  return (1.0 - w) * g.eta[j - 1] + w * g.eta[j];
}

ScenarioResult run_dingemans(ScenarioResult r) {
  const ScenarioConfig& c = r.config;
  // Read external data first so a malformed file fails before the run.
  std::vector<csv::ExperimentalSeries> experiment;
  if (!c.experimental_data.empty()) {
    experiment = csv::read_experimental(c.experimental_data, static_cast<int>(c.gauges.size()));
  }
  const Grid g = periodic_grid(-138.0, 46.0, c.nodes);
  Model m = build_model(c, c.order, g, dingemans_bottom, kH0);
  const double k = dingemans_wavenumber();
  const double shift = c.model == ModelKind::bbm_bbm ? 2.7 : 2.2;
  std::vector<double> eta(g.size(), kH0), v(g.size(), 0.0);
  for (std::size_t i = 0; i < g.size(); ++i) {
    const double xi = g[i] - shift;
    if (xi > -34.5 * pi / k && xi < -4.5 * pi / k) eta[i] = kH0 + kAmplitude * std::cos(k * xi);
    v[i] = std::sqrt(kG / k * std::tanh(k * kH0)) * (eta[i] - kH0) / kH0;
  }
  const State u0 = model_state(m, eta, v);

  for (double x : c.gauges) r.gauges.push_back({x, {}, {}});
  auto on_sample = [&](double t, const State& s) {
    for (GaugeRecord& gr : r.gauges) {
      gr.t.push_back(t);
      gr.eta.push_back(interpolate_periodic(g, s.a, gr.x) + m.eta_offset);
    }
  };
  Run run = simulate(m, u0, *c.t_end, c, true, sample_times(c), on_sample);
  r.metrics["wavenumber"] = k;
  r.invariants = run.series;
  add_series_metrics(r, run);
  r.checks.push_back(make_check("mass_drift", r.metrics["mass_drift"], 0.0, 1e-13));
  // Entropy thresholds are stated for Svaerd-Kalisch; BBM-BBM reports its energy only.
  if (c.model == ModelKind::svaerd_kalisch && m.disc->conserves_functional()) {
    r.checks.push_back(make_check("functional_drift", r.metrics["functional_drift"], 0.0, c.relaxation ? 1e-12 : 1e-6));
  } else if (m.dissipative) {
    r.checks.push_back(make_check("functional_max_increase", r.metrics["functional_max_increase"], -kInf, 1e-13));
  }

  write_run_outputs(r, m, run);
  Writer w(r);
  if (w.enabled) {
    for (std::size_t i = 0; i < r.gauges.size(); ++i) {
      csv::write_gauge(w.path("_gauge_" + std::to_string(i + 1) + ".csv"), r.gauges[i]);
    }
    for (const auto& series : experiment) {
      const GaugeRecord& sim = r.gauges[static_cast<std::size_t>(series.gauge_id - 1)];
      const std::string p = w.path("_gauge_" + std::to_string(series.gauge_id) + "_comparison.csv");
      std::FILE* f = std::fopen(p.c_str(), "wb");
      if (f == nullptr) throw Error("cannot open output file " + p);
      std::fputs("t,eta_experiment,eta_simulated\n", f);
      for (std::size_t j = 0; j < series.t.size(); ++j) {
        if (series.t[j] < 0.0 || series.t[j] > *c.t_end) continue;
        std::fprintf(f, "%s,%s,%s\n", csv::format(series.t[j]).c_str(), csv::format(series.eta[j]).c_str(),
                     csv::format(interpolate_series(sim, series.t[j])).c_str());
      }
      std::fclose(f);
    }
  }
  return r;
}

}  // namespace

Check make_check(std::string name, double value, double lower, double upper) {
  return {std::move(name), value, lower, upper, value >= lower && value <= upper};
}

std::string describe(const Check& c) {
  auto num = [](double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.10g", x);
    return std::string(buf);
  };
  std::string range;
  if (c.lower == -kInf || c.lower == 0.0) {
    range = "<= " + num(c.upper);
  } else if (c.upper == kInf) {
    range = ">= " + num(c.lower);
  } else {
    range = "in [" + num(c.lower) + ", " + num(c.upper) + "]";
  }
  char value[32];
  std::snprintf(value, sizeof value, "%.12g", c.value);
  return std::string(c.pass ? "PASS " : "FAIL ") + c.name + " = " + value + " (" + range + ")";
}

bool ScenarioResult::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

void fill_eoc(std::vector<EocRow>& rows) {
  std::stable_sort(rows.begin(), rows.end(), [](const EocRow& a, const EocRow& b) {
    return a.order != b.order ? a.order < b.order : a.nodes < b.nodes;
  });
  for (std::size_t i = 0; i < rows.size(); ++i) {
    rows[i].eoc_eta.reset();
    rows[i].eoc_v.reset();
    if (i == 0 || rows[i - 1].order != rows[i].order) continue;
    const double ratio = std::log(rows[i - 1].spacing / rows[i].spacing);
    rows[i].eoc_eta = std::log(rows[i - 1].error_eta / rows[i].error_eta) / ratio;
    rows[i].eoc_v = std::log(rows[i - 1].error_v / rows[i].error_v) / ratio;
  }
}

ScenarioResult run_scenario(const ScenarioConfig& config) {
  ScenarioResult r;
  r.config = resolve(config);
  const std::string& s = r.config.scenario;
  if (s == "soliton") return run_soliton(std::move(r));
  if (s == "manufactured") return run_manufactured(std::move(r));
  if (s == "lake_at_rest") return run_lake_at_rest(std::move(r));
  if (s == "reflecting_bump") return run_reflecting_bump(std::move(r));
  if (s == "traveling_wave") return run_traveling_wave(std::move(r));
  return run_dingemans(std::move(r));
}

}  // namespace dsw::scenarios
