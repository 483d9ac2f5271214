#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "dsw/grid.hpp"

namespace dsw {

struct ButcherTableau {
  std::string name;
  std::size_t stages = 0;
  std::vector<double> a;  // row-major s x s, strictly lower triangular
  std::vector<double> b;
  std::vector<double> c;
  /// Error weights b - b_hat of the embedded method; empty if there is none.
  std::vector<double> e;
  int order = 0;
  int embedded_order = 0;
  /// Last stage equals f(t + dt, u_new).
  bool fsal = false;

  double coeff(std::size_t i, std::size_t j) const { return a[i * stages + j]; }
  bool embedded() const noexcept { return !e.empty(); }
};

ButcherTableau rk4_tableau();
ButcherTableau dormand_prince_tableau();
ButcherTableau tsitouras_tableau();
/// "rk4", "dp5", "tsit5"
ButcherTableau tableau_by_name(const std::string& name);

using RhsFn = std::function<void(const State& u, double t, State& dudt)>;

struct StepResult {
  State u_new;
  /// dt * sum (b_i - b_hat_i) k_i, present iff the tableau is embedded.
  std::optional<State> error;
  std::vector<State> stage_values;       // Y_i
  std::vector<State> stage_derivatives;  // k_i = f(t + c_i dt, Y_i)
  bool ok = true;                        // false if a stage produced NaN/Inf or the rhs rejected it
  std::string failure;
};

/// One explicit Runge-Kutta step. `first_stage` may supply f(t, u) to skip its evaluation.
StepResult rk_step(const RhsFn& rhs, const State& u, double t, double dt, const ButcherTableau& tableau,
                   const State* first_stage = nullptr);

struct ControllerConfig {
  double abs_tol = 1e-7;
  double rel_tol = 1e-7;
  double safety = 0.9;
  double fac_min = 0.2;
  double fac_max = 5.0;
  /// PI gain on the previous error (0 gives the elementary controller).
  double beta = 0.04;
  /// Absolute lower bound on the step size; 0 selects 1e-12 * |t_end - t0|.
  double dt_min = 0.0;
};

/// Weighted RMS norm of the error estimate, scaled by abs_tol + rel_tol * max(|u|, |u_new|).
double error_norm(const State& error, const State& u, const State& u_new, double abs_tol, double rel_tol);

struct ControllerDecision {
  bool accept = false;
  double dt_next = 0.0;
};

/// PI step-size law for a method whose error estimate has order `embedded_order + 1`.
/// `previous_error` is the norm of the last accepted step (1 if none).
ControllerDecision adaptive_controller(double error, double dt, const ControllerConfig& config, int embedded_order,
                                       double previous_error = 1.0);

enum class RelaxationMode { off, conservative, dissipative };

struct RelaxationConfig {
  RelaxationMode mode = RelaxationMode::off;
  double root_tol = 1e-14;            // relative to |J(u)|
  double bracket_half_width = 1e-2;   // gamma in [1 - w, 1 + w]
  int max_iterations = 50;
};

struct Functional {
  std::function<double(const State&)> value;
  /// Optional; enables Newton updates and the dissipative estimate.
  std::function<void(const State&, State&)> gradient;
  explicit operator bool() const { return static_cast<bool>(value); }
};

struct RelaxationResult {
  double gamma = 1.0;
  bool converged = false;
  int iterations = 0;
};

/// Root of r(gamma) = J(u + gamma d) - J(u) - gamma e in the bracket around 1 by
/// safeguarded Newton-bisection. Falls back to gamma = 1 (converged = false) when
/// the bracket holds no sign change.
RelaxationResult relaxation_gamma(const Functional& j, const State& u, const State& d, double e,
                                  const RelaxationConfig& config);

/// Baseline step followed by relaxation: u_new = u + gamma (u_rk - u).
struct RelaxedStep {
  State u_new;
  double gamma = 1.0;
  bool relaxation_converged = true;
  std::optional<State> error;
  bool ok = true;
  std::string failure;
};
RelaxedStep relaxation_step(const RhsFn& rhs, const State& u, double t, double dt, const ButcherTableau& tableau,
                            const RelaxationConfig& relax, const Functional& j, const State* first_stage = nullptr);

struct IntegratorConfig {
  ButcherTableau tableau = tsitouras_tableau();
  bool adaptive = true;
  /// Fixed step (adaptive = false) or initial step (adaptive; 0 selects automatically).
  double dt = 0.0;
  ControllerConfig controller;
  RelaxationConfig relaxation;
  std::size_t max_steps = 10'000'000;
  int max_consecutive_rejections = 50;
};

struct StepInfo {
  std::size_t step = 0;
  double t = 0.0;  // time after the step
  double dt = 0.0;
  double gamma = 1.0;
  const State* state = nullptr;
};

struct IntegratorCallbacks {
  /// Output times for dense (cubic Hermite) sampling.
  std::vector<double> sample_times;
  std::function<void(double t, const State& u)> on_sample;
  /// Called for the initial state (step 0, dt 0) and after every accepted step.
  std::function<void(const StepInfo&)> on_step;
};

struct IntegrationResult {
  State final_state;
  double t_final = 0.0;
  std::size_t accepted = 0;
  std::size_t rejected = 0;
  std::size_t rhs_evaluations = 0;
  std::size_t relaxation_fallbacks = 0;
  double gamma_min = 1.0;
  double gamma_max = 1.0;
  double dt_min_used = 0.0;
  double dt_max_used = 0.0;
};

/// Integrate u' = f(t, u) from t0 to t_end. With relaxation, each step advances
/// time by gamma * dt, except the final one which is interpreted at t_end.
IntegrationResult integrate(const RhsFn& rhs, const State& u0, double t0, double t_end, const IntegratorConfig& config,
                            const IntegratorCallbacks& callbacks = {}, const Functional& functional = {});

/// Cubic Hermite interpolation between (t0, u0, f0) and (t1, u1, f1).
State hermite_interpolate(double t, double t0, const State& u0, const State& f0, double t1, const State& u1,
                          const State& f1);

}  // namespace dsw
