#pragma once

#include <span>
#include <string>
#include <vector>

#include "dsw/linear_solve.hpp"
#include "dsw/model.hpp"
#include "dsw/sbp.hpp"

namespace dsw {

struct SkParameterSet {
  std::string name = "custom";
  double alpha_tilde = 0.0;
  double beta_tilde = 0.0;
  double gamma_tilde = 0.0;
  /// alpha_tilde >= 0 is required once the bathymetry varies.
  bool valid_for_variable_bathymetry() const noexcept { return alpha_tilde >= 0.0; }
};

/// Named coefficient sets "set1" ... "set5".
SkParameterSet sk_parameter_set(const std::string& name);

enum class SkVariant { periodic_central_split, periodic_upwind, reflecting_beta_only };

std::string to_string(SkVariant v);
SkVariant parse_sk_variant(const std::string& name);

struct SkOptions {
  /// Replace the split forms by plain conservative derivatives (negative control).
  bool naive = false;
  SourceTerm source;
};

/// Svaerd-Kalisch system in primitive variables with h = eta + D - eta0:
///   eta_t + (h v)_x = (a (a eta_x)_x)_x
///   (h v)_t + (h v^2)_x + g h eta_x = (v y)_x + (b v_xt)_x + ((c v_x)_xx + (c v_xx)_x) / 2
/// with a^2 = alpha~ sqrt(gD) D^2, b = beta~ D^3, c = gamma~ sqrt(gD) D^3, y = a (a eta_x)_x.
class SkDiscretization final : public Semidiscretization {
 public:
  SkDiscretization(OperatorSet operators, std::vector<double> bathymetry, double g, double eta0,
                   SkParameterSet params, SkVariant variant, SkOptions options = {});

  const Grid& grid() const override { return ops_.grid; }
  const MassMatrix& mass() const override { return ops_.mass; }
  std::string name() const override { return "svaerd_kalisch/" + to_string(variant_); }

  void rhs(const State& u, double t, State& dudt) const override;
  using Semidiscretization::rhs;
  /// energy = total entropy, modified_entropy = entropy + 1/2 sum M b (D v)^2.
  InvariantValues invariants(const State& u) const override;
  double functional(const State& u) const override;  // modified entropy
  void functional_gradient(const State& u, State& grad) const override;
  bool conserves_functional() const override { return variant_ != SkVariant::periodic_upwind && !options_.naive; }

  double gravity() const noexcept { return g_; }
  double eta0() const noexcept { return eta0_; }
  SkVariant variant() const noexcept { return variant_; }
  const SkParameterSet& parameters() const noexcept { return params_; }
  std::span<const double> bathymetry() const noexcept { return b_; }
  std::span<const double> still_depth() const noexcept { return depth_; }
  std::span<const double> alpha_hat() const noexcept { return alpha_hat_; }
  std::span<const double> beta_hat() const noexcept { return beta_hat_; }
  std::span<const double> gamma_hat() const noexcept { return gamma_hat_; }
  const OperatorSet& operators() const noexcept { return ops_; }

  /// Plain entropy 1^T M (1/2 (P^2/h + g h^2) + g h b); throws DomainError if h <= 0.
  double entropy(const State& u) const;

 private:
  // Derivative used inside the modified entropy and the elliptic operator.
  const DerivativeOperator& inner_derivative() const;
  const DerivativeOperator& outer_derivative() const;
  void water_height(const State& u, std::vector<double>& h) const;

  OperatorSet ops_;
  double g_;
  double eta0_;
  SkParameterSet params_;
  SkVariant variant_;
  SkOptions options_;
  std::vector<double> b_;
  std::vector<double> depth_;
  std::vector<double> alpha_hat_;
  std::vector<double> beta_hat_;
  std::vector<double> gamma_hat_;
  SparseMatrix elliptic_;  // -D_outer diag(beta_hat) D_inner
  bool has_alpha_ = false;
  bool has_gamma_ = false;
};

SkDiscretization build_sk_discretization(const Grid& grid, int order, const BathymetryFn& bathymetry, double g,
                                         double eta0, const SkParameterSet& params, SkVariant variant,
                                         SkOptions options = {});

/// Positive frequency branch of the linear dispersion relation about still water h0.
double sk_dispersion_omega(double k, const SkParameterSet& params, double h0, double g);
/// sqrt(g tanh(k h0) / k)
double euler_phase_speed(double k, double h0, double g);

}  // namespace dsw
