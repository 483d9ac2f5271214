#pragma once

#include <span>
#include <string>
#include <vector>

#include "dsw/linear_solve.hpp"
#include "dsw/model.hpp"
#include "dsw/sbp.hpp"

namespace dsw {

enum class BbmVariant {
  periodic_central_wide,    // D1 K D1 and D1^2 K
  periodic_central_narrow,  // velocity equation with a narrow D2 (not energy conservative)
  periodic_constant_depth,  // constant D, both equations with a narrow D2
  periodic_upwind,          // D- K D+ and D+ D- K
  reflecting_central,
  reflecting_upwind,
};

std::string to_string(BbmVariant v);
BbmVariant parse_bbm_variant(const std::string& name);
bool is_periodic(BbmVariant v);
bool is_upwind(BbmVariant v);

struct BbmOptions {
  /// Exchange the roles of D+ and D- in the upwind variants.
  bool swap_upwind = false;
  SourceTerm source;
};

/// BBM-BBM system with variable bathymetry and still-water level 0:
///   (I - 1/6 d_x D^2 d_x) eta_t + d_x((eta + D) v) = 0
///   (I - 1/6 d_x^2 D^2)   v_t  + d_x(g eta + v^2 / 2) = 0
class BbmBbmDiscretization final : public Semidiscretization {
 public:
  BbmBbmDiscretization(OperatorSet operators, std::vector<double> bathymetry, double g, BbmVariant variant,
                       BbmOptions options = {});

  const Grid& grid() const override { return ops_.grid; }
  const MassMatrix& mass() const override { return ops_.mass; }
  std::string name() const override { return "bbm_bbm/" + to_string(variant_); }

  void rhs(const State& u, double t, State& dudt) const override;
  using Semidiscretization::rhs;
  InvariantValues invariants(const State& u) const override;
  double functional(const State& u) const override;
  void functional_gradient(const State& u, State& grad) const override;
  bool conserves_functional() const override;

  double gravity() const noexcept { return g_; }
  BbmVariant variant() const noexcept { return variant_; }
  std::span<const double> bathymetry() const noexcept { return b_; }
  std::span<const double> still_depth() const noexcept { return depth_; }
  const OperatorSet& operators() const noexcept { return ops_; }
  const SparseMatrix& mass_equation_operator() const noexcept { return a_eta_; }
  const SparseMatrix& velocity_equation_operator() const noexcept { return a_v_; }
  /// Solve with the velocity-equation operator (reflecting variants: Dirichlet rows).
  std::vector<double> solve_velocity_system(std::span<const double> rhs) const;
  std::vector<double> solve_mass_system(std::span<const double> rhs) const;

 private:
  OperatorSet ops_;
  double g_;
  BbmVariant variant_;
  BbmOptions options_;
  std::vector<double> b_;
  std::vector<double> depth_;
  SparseMatrix a_eta_;
  SparseMatrix a_v_;
  Factorization f_eta_;
  Factorization f_v_;

  const DerivativeOperator& outer_eta() const;  // applied to (eta + D) v
  const DerivativeOperator& outer_v() const;    // applied to g eta + v^2 / 2
};

BbmBbmDiscretization build_bbm_discretization(const Grid& grid, int order, const BathymetryFn& bathymetry, double g,
                                              BbmVariant variant, BbmOptions options = {});

/// Traveling solitary wave for constant depth D:
///   eta = 15/4 D (2 sech^2 th - 3 sech^4 th),  v = 15/2 sqrt(g D) sech^2 th,
///   th = sqrt(18/5) (x - x0 - c t) / (2 D),  c = 5/2 sqrt(g D).
State bbm_soliton(double t, std::span<const double> x, double g, double depth, double x0);
double bbm_soliton_speed(double g, double depth);

/// Phase speed of linear waves: sqrt(g h0) / (1 + (h0 k)^2 / 6).
double bbm_phase_speed(double k, double h0, double g);

}  // namespace dsw
