#include "dsw/time_integration.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <string>

#include "dsw/errors.hpp"

namespace dsw {

namespace {

ButcherTableau make_tableau(std::string name, std::vector<std::vector<double>> rows, std::vector<double> b,
                            std::vector<double> e, int order, int embedded_order, bool fsal) {
  ButcherTableau t;
  t.name = std::move(name);
  t.stages = b.size();
  t.a.assign(t.stages * t.stages, 0.0);
  t.c.assign(t.stages, 0.0);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    double sum = 0.0;
    for (std::size_t j = 0; j < rows[i].size(); ++j) {
      t.a[(i + 1) * t.stages + j] = rows[i][j];
      sum += rows[i][j];
    }
    t.c[i + 1] = sum;
  }
  t.b = std::move(b);
  t.e = std::move(e);
  t.order = order;
  t.embedded_order = embedded_order;
  t.fsal = fsal;
  return t;
}

bool stage_ok(const State& k) { return k.all_finite(); }

double dot(const State& x, const State& y) {
  double s = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) s += x.a[i] * y.a[i] + x.b[i] * y.b[i];
  return s;
}

State combine(const State& u, double gamma, const State& d) {
  State out = u;
  out.axpy(gamma, d);
  return out;
}

State difference(const State& x, const State& y) {
  State out = x;
  out.axpy(-1.0, y);
  return out;
}

// dt * sum_i b_i <grad J(Y_i), k_i>: the functional change the baseline method
// would produce if it were exact for J.
double dissipation_estimate(const ButcherTableau& tab, const StepResult& step, double dt, const Functional& j) {
  if (!j.gradient) throw ConfigError("relaxation: dissipative mode needs the functional gradient");
  State grad(step.u_new.size());
  double e = 0.0;
  for (std::size_t i = 0; i < tab.stages; ++i) {
    if (tab.b[i] == 0.0) continue;
    j.gradient(step.stage_values[i], grad);
    e += dt * tab.b[i] * dot(grad, step.stage_derivatives[i]);
  }
  return e;
}

}  // namespace

ButcherTableau rk4_tableau() {
  return make_tableau("rk4", {{0.5}, {0.0, 0.5}, {0.0, 0.0, 1.0}}, {1.0 / 6.0, 1.0 / 3.0, 1.0 / 3.0, 1.0 / 6.0}, {},
                      4, 0, false);
}

ButcherTableau dormand_prince_tableau() {
  const std::vector<double> b{35.0 / 384.0, 0.0, 500.0 / 1113.0, 125.0 / 192.0, -2187.0 / 6784.0, 11.0 / 84.0, 0.0};
  const std::vector<double> b_hat{5179.0 / 57600.0,     0.0,          7571.0 / 16695.0, 393.0 / 640.0,
                                  -92097.0 / 339200.0, 187.0 / 2100.0, 1.0 / 40.0};
  std::vector<double> e(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) e[i] = b[i] - b_hat[i];
  return make_tableau("dp5",
                      {{1.0 / 5.0},
                       {3.0 / 40.0, 9.0 / 40.0},
                       {44.0 / 45.0, -56.0 / 15.0, 32.0 / 9.0},
                       {19372.0 / 6561.0, -25360.0 / 2187.0, 64448.0 / 6561.0, -212.0 / 729.0},
                       {9017.0 / 3168.0, -355.0 / 33.0, 46732.0 / 5247.0, 49.0 / 176.0, -5103.0 / 18656.0},
                       {35.0 / 384.0, 0.0, 500.0 / 1113.0, 125.0 / 192.0, -2187.0 / 6784.0, 11.0 / 84.0}},
                      b, e, 5, 4, true);
}

ButcherTableau tsitouras_tableau() {
  const std::vector<double> b{0.09646076681806523, 0.01, 0.4798896504144996, 1.379008574103742,
                              -3.290069515436081, 2.324710524099774, 0.0};
  const std::vector<double> e{-0.00178001105222577714, -0.0008164344596567469, 0.007880878010261995,
                              -0.1447110071732629,     0.5823571654525552,     -0.45808210592918697,
                              1.0 / 66.0};
  return make_tableau("tsit5",
                      {{0.161},
                       {-0.008480655492356989, 0.335480655492357},
                       {2.897153057105493, -6.359448489975075, 4.3622954328695815},
                       {5.325864828439257, -11.748883564062828, 7.4955393428898365, -0.09249506636175525},
                       {5.86145544294642, -12.92096931784711, 8.159367898576159, -0.071584973281401,
                        -0.028269050394068383},
                       {0.09646076681806523, 0.01, 0.4798896504144996, 1.379008574103742, -3.290069515436081,
                        2.324710524099774}},
                      b, e, 5, 4, true);
}

ButcherTableau tableau_by_name(const std::string& name) {
  if (name == "rk4") return rk4_tableau();
  if (name == "dp5") return dormand_prince_tableau();
  if (name == "tsit5") return tsitouras_tableau();
  throw ConfigError("unknown Runge-Kutta method '" + name + "' (expected rk4, dp5 or tsit5)");
}

StepResult rk_step(const RhsFn& rhs, const State& u, double t, double dt, const ButcherTableau& tableau,
                   const State* first_stage) {
  if (!(dt > 0.0)) throw ConfigError("rk_step: dt must be positive");
  const std::size_t s = tableau.stages;
  StepResult out;
  out.stage_values.reserve(s);
  out.stage_derivatives.reserve(s);
  for (std::size_t i = 0; i < s; ++i) {
    State y = u;
    for (std::size_t j = 0; j < i; ++j) {
      const double aij = tableau.coeff(i, j);
      if (aij != 0.0) y.axpy(dt * aij, out.stage_derivatives[j]);
    }
    State k(u.size(), u.representation);
    if (i == 0 && first_stage != nullptr) {
      k = *first_stage;
    } else {
      try {
        rhs(y, t + tableau.c[i] * dt, k);
      } catch (const NumericError& err) {
        out.ok = false;
        out.failure = err.what();
      } catch (const DomainError& err) {
        out.ok = false;
        out.failure = err.what();
      }
      if (out.ok && !stage_ok(k)) {
        out.ok = false;
        out.failure = "stage " + std::to_string(i + 1) + " produced NaN or Inf";
      }
      if (!out.ok) return out;
    }
    out.stage_values.push_back(std::move(y));
    out.stage_derivatives.push_back(std::move(k));
  }
  out.u_new = u;
  for (std::size_t i = 0; i < s; ++i) {
    if (tableau.b[i] != 0.0) out.u_new.axpy(dt * tableau.b[i], out.stage_derivatives[i]);
  }
  if (tableau.embedded()) {
    State err(u.size(), u.representation);
    for (std::size_t i = 0; i < s; ++i) {
      if (tableau.e[i] != 0.0) err.axpy(dt * tableau.e[i], out.stage_derivatives[i]);
    }
    out.error = std::move(err);
  }
  if (!out.u_new.all_finite()) {
    out.ok = false;
    out.failure = "update produced NaN or Inf";
  }
  return out;
}

double error_norm(const State& error, const State& u, const State& u_new, double abs_tol, double rel_tol) {
  const std::size_t n = error.size();
  if (n == 0) return 0.0;
  double sum = 0.0;
  auto add = [&](double e, double a, double b) {
    const double sc = abs_tol + rel_tol * std::max(std::abs(a), std::abs(b));
    const double r = e / sc;
    sum += r * r;
  };
  for (std::size_t i = 0; i < n; ++i) {
    add(error.a[i], u.a[i], u_new.a[i]);
    add(error.b[i], u.b[i], u_new.b[i]);
  }
  return std::sqrt(sum / static_cast<double>(2 * n));
}

ControllerDecision adaptive_controller(double error, double dt, const ControllerConfig& config, int embedded_order,
                                       double previous_error) {
  if (!(config.abs_tol > 0.0) || !(config.rel_tol > 0.0)) {
    throw ConfigError("step-size controller: tolerances must be positive");
  }
  const double q1 = static_cast<double>(embedded_order + 1);
  ControllerDecision d;
  if (!std::isfinite(error)) {
    d.accept = false;
    d.dt_next = dt * config.fac_min;
    return d;
  }
  d.accept = error <= 1.0;
  double fac = config.fac_max;
  if (error > 0.0) {
    if (d.accept) {
      const double k_i = 1.0 / q1 - 0.75 * config.beta;
      fac = config.safety * std::pow(error, -k_i) * std::pow(std::max(previous_error, 1e-4), config.beta);
    } else {
      fac = config.safety * std::pow(error, -1.0 / q1);
    }
  }
  fac = std::clamp(fac, config.fac_min, config.fac_max);
  if (!d.accept) fac = std::min(fac, 1.0);
  d.dt_next = dt * fac;
  return d;
}

RelaxationResult relaxation_gamma(const Functional& j, const State& u, const State& d, double e,
                                  const RelaxationConfig& config) {
  if (!j) throw ConfigError("relaxation: no functional supplied");
  if (!(config.root_tol > 0.0) || !(config.bracket_half_width > 0.0) || config.bracket_half_width >= 1.0) {
    throw ConfigError("relaxation: invalid tolerance or bracket");
  }
  const double j0 = j.value(u);
  auto r = [&](double gamma) { return j.value(combine(u, gamma, d)) - j0 - gamma * e; };
  double lo = 1.0 - config.bracket_half_width;
  double hi = 1.0 + config.bracket_half_width;
  double r_lo = r(lo);
  double r_hi = r(hi);
  const double scale = std::max({std::abs(j0), std::abs(r_lo), std::abs(r_hi), std::numeric_limits<double>::min()});
  const double tol = config.root_tol * scale;

  RelaxationResult out;
  double gamma = 1.0;
  double rg = r(gamma);
  if (std::abs(rg) <= tol) {
    out.gamma = gamma;
    out.converged = true;
    return out;
  }
  if (r_lo * r_hi > 0.0) {
    out.gamma = 1.0;
    out.converged = false;
    return out;
  }
  for (int it = 1; it <= config.max_iterations; ++it) {
    out.iterations = it;
    if ((rg < 0.0) == (r_lo < 0.0)) {
      lo = gamma;
      r_lo = rg;
    } else {
      hi = gamma;
      r_hi = rg;
    }
    double next = std::numeric_limits<double>::quiet_NaN();
    if (j.gradient) {
      State grad(u.size());
      j.gradient(combine(u, gamma, d), grad);
      const double slope = dot(grad, d) - e;
      if (slope != 0.0) next = gamma - rg / slope;
    } else if (r_hi != r_lo) {
      next = lo - r_lo * (hi - lo) / (r_hi - r_lo);
    }
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    gamma = next;
    rg = r(gamma);
    if (std::abs(rg) <= tol || hi - lo <= 4.0 * std::numeric_limits<double>::epsilon()) {
      out.gamma = gamma;
      out.converged = true;
      return out;
    }
  }
  out.gamma = gamma;
  out.converged = false;
  return out;
}

RelaxedStep relaxation_step(const RhsFn& rhs, const State& u, double t, double dt, const ButcherTableau& tableau,
                            const RelaxationConfig& relax, const Functional& j, const State* first_stage) {
  StepResult step = rk_step(rhs, u, t, dt, tableau, first_stage);
  RelaxedStep out;
  out.ok = step.ok;
  out.failure = step.failure;
  out.error = std::move(step.error);
  if (!step.ok) return out;
  if (relax.mode == RelaxationMode::off) {
    out.u_new = std::move(step.u_new);
    return out;
  }
  const State d = difference(step.u_new, u);
  const double e = relax.mode == RelaxationMode::dissipative ? dissipation_estimate(tableau, step, dt, j) : 0.0;
  const RelaxationResult rr = relaxation_gamma(j, u, d, e, relax);
  out.gamma = rr.gamma;
  out.relaxation_converged = rr.converged;
  out.u_new = combine(u, rr.gamma, d);
  return out;
}

State hermite_interpolate(double t, double t0, const State& u0, const State& f0, double t1, const State& u1,
                          const State& f1) {
  const double h = t1 - t0;
  if (!(h > 0.0)) return u1;
  const double th = (t - t0) / h;
  const double w_u0 = (1.0 - th) * (1.0 - th) * (1.0 + 2.0 * th);
  const double w_u1 = th * th * (3.0 - 2.0 * th);
  const double w_f0 = th * (1.0 - th) * (1.0 - th) * h;
  const double w_f1 = -th * th * (1.0 - th) * h;
  State out(u0.size(), u0.representation);
  for (std::size_t i = 0; i < u0.size(); ++i) {
    out.a[i] = w_u0 * u0.a[i] + w_u1 * u1.a[i] + w_f0 * f0.a[i] + w_f1 * f1.a[i];
    out.b[i] = w_u0 * u0.b[i] + w_u1 * u1.b[i] + w_f0 * f0.b[i] + w_f1 * f1.b[i];
  }
  return out;
}

namespace {

double initial_step(const RhsFn& rhs, const State& u, const State& f, double t, double span,
                    const ControllerConfig& c, int order, std::size_t& evals) {
  State zero(u.size(), u.representation);
  const double d0 = error_norm(u, zero, zero, c.abs_tol, c.rel_tol);
  const double d1 = error_norm(f, u, u, c.abs_tol, c.rel_tol);
  double h0 = (d0 < 1e-5 || d1 < 1e-5) ? 1e-6 : 0.01 * d0 / d1;
  h0 = std::min(h0, span);
  State u1 = u;
  u1.axpy(h0, f);
  State f1(u.size(), u.representation);
  rhs(u1, t + h0, f1);
  ++evals;
  const double d2 = error_norm(difference(f1, f), u, u, c.abs_tol, c.rel_tol) / h0;
  const double m = std::max(d1, d2);
  const double h1 = m <= 1e-15 ? std::max(1e-6, h0 * 1e-3) : std::pow(0.01 / m, 1.0 / (order + 1));
  return std::min({100.0 * h0, h1, span});
}

}  // namespace

IntegrationResult integrate(const RhsFn& rhs, const State& u0, double t0, double t_end, const IntegratorConfig& config,
                            const IntegratorCallbacks& callbacks, const Functional& functional) {
  if (!(t_end > t0)) throw ConfigError("integrate: empty time span");
  const ButcherTableau& tab = config.tableau;
  if (tab.stages == 0) throw ConfigError("integrate: empty tableau");
  if (config.adaptive && !tab.embedded()) {
    throw ConfigError("integrate: adaptive stepping needs an embedded method (" + tab.name + " has none)");
  }
  if (!config.adaptive && !(config.dt > 0.0)) throw ConfigError("integrate: fixed-step mode needs dt > 0");
  const bool relax = config.relaxation.mode != RelaxationMode::off;
  if (relax && !functional) throw ConfigError("integrate: relaxation needs a functional");
  const double span = t_end - t0;
  const double dt_min = config.controller.dt_min > 0.0 ? config.controller.dt_min : 1e-12 * span;

  IntegrationResult res;
  State u = u0;
  double t = t0;
  State f(u.size(), u.representation);
  rhs(u, t, f);
  ++res.rhs_evaluations;
  res.gamma_min = std::numeric_limits<double>::infinity();
  res.gamma_max = -std::numeric_limits<double>::infinity();
  res.dt_min_used = std::numeric_limits<double>::infinity();

  std::vector<double> samples = callbacks.sample_times;
  std::sort(samples.begin(), samples.end());
  std::size_t next_sample = 0;
  while (next_sample < samples.size() && samples[next_sample] < t0) ++next_sample;
  auto emit_samples_at_start = [&] {
    while (next_sample < samples.size() && samples[next_sample] <= t0) {
      if (callbacks.on_sample) callbacks.on_sample(samples[next_sample], u);
      ++next_sample;
    }
  };
  emit_samples_at_start();
  if (callbacks.on_step) callbacks.on_step(StepInfo{0, t, 0.0, 1.0, &u});

  double dt = config.dt;
  if (config.adaptive && !(dt > 0.0)) {
    dt = initial_step(rhs, u, f, t, span, config.controller, tab.embedded_order, res.rhs_evaluations);
  }
  double previous_error = 1.0;
  int consecutive_rejections = 0;

  while (true) {
    if (res.accepted + res.rejected >= config.max_steps) {
      throw NumericError("integrate: exceeded " + std::to_string(config.max_steps) + " steps at t = " +
                         std::to_string(t));
    }
    bool final_step = false;
    double h = dt;
    if (t_end - t <= h * (1.0 + 1e-8)) {
      h = t_end - t;
      final_step = true;
    }
    StepResult step = rk_step(rhs, u, t, h, tab, &f);
    res.rhs_evaluations += tab.stages - 1;
    ControllerDecision decision{true, dt};
    double err = 0.0;
    if (!step.ok) {
      if (!config.adaptive) {
        throw NumericError("integrate: step failed at t = " + std::to_string(t) + ": " + step.failure);
      }
      decision = {false, h * config.controller.fac_min};
    } else if (config.adaptive) {
      err = error_norm(*step.error, u, step.u_new, config.controller.abs_tol, config.controller.rel_tol);
      decision = adaptive_controller(err, h, config.controller, tab.embedded_order, previous_error);
    }
    if (!decision.accept) {
      ++res.rejected;
      if (++consecutive_rejections > config.max_consecutive_rejections) {
        throw NumericError("integrate: too many consecutive rejected steps at t = " + std::to_string(t) +
                           (step.failure.empty() ? std::string() : ": " + step.failure));
      }
      dt = decision.dt_next;
      if (dt < dt_min) {
        char msg[128];
        std::snprintf(msg, sizeof msg, "integrate: step size %.3e fell below the minimum %.3e at t = %.6g", dt, dt_min,
                      t);
        throw NumericError(msg);
      }
      continue;
    }
    consecutive_rejections = 0;

    double gamma = 1.0;
    State u_new;
    State f_new(u.size(), u.representation);
    double t_new = final_step ? t_end : t + h;
    if (relax) {
      const State d = difference(step.u_new, u);
      const double e = config.relaxation.mode == RelaxationMode::dissipative
                           ? dissipation_estimate(tab, step, h, functional)
                           : 0.0;
      const RelaxationResult rr = relaxation_gamma(functional, u, d, e, config.relaxation);
      if (!rr.converged) ++res.relaxation_fallbacks;
      gamma = rr.gamma;
      u_new = combine(u, gamma, d);
      if (!final_step) t_new = t + gamma * h;
      // The relaxed state differs from the last stage, so f is re-evaluated.
      rhs(u_new, t_new, f_new);
      ++res.rhs_evaluations;
    } else {
      u_new = std::move(step.u_new);
      if (tab.fsal) {
        f_new = step.stage_derivatives.back();
      } else {
        rhs(u_new, t_new, f_new);
        ++res.rhs_evaluations;
      }
    }

    // on the final step, requests that overshoot t_end by rounding are served at t_end
    const double sample_limit = final_step ? t_end + 1e-12 * span : t_new;
    while (next_sample < samples.size() && samples[next_sample] <= sample_limit) {
      if (callbacks.on_sample) {
        const double ts = std::min(samples[next_sample], t_new);
        if (ts >= t_new) {
          callbacks.on_sample(ts, u_new);
        } else {
          callbacks.on_sample(ts, hermite_interpolate(ts, t, u, f, t_new, u_new, f_new));
        }
      }
      ++next_sample;
    }

    const double dt_taken = t_new - t;
    u = std::move(u_new);
    f = std::move(f_new);
    t = t_new;
    ++res.accepted;
    res.dt_min_used = std::min(res.dt_min_used, h);
    res.dt_max_used = std::max(res.dt_max_used, h);
    if (relax) {
      res.gamma_min = std::min(res.gamma_min, gamma);
      res.gamma_max = std::max(res.gamma_max, gamma);
    }
    if (callbacks.on_step) callbacks.on_step(StepInfo{res.accepted, t, dt_taken, gamma, &u});

    if (final_step) break;
    if (config.adaptive) {
      previous_error = std::max(err, 1e-4);
      dt = decision.dt_next;
    } else {
      dt = config.dt;
    }
  }
  if (!relax) {
    res.gamma_min = 1.0;
    res.gamma_max = 1.0;
  }
  res.final_state = std::move(u);
  res.t_final = t;
  return res;
}

}  // namespace dsw
