#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "dsw/grid.hpp"
#include "dsw/sparse.hpp"

namespace dsw {

enum class OperatorKind {
  periodic_central_d1,
  periodic_upwind_plus,
  periodic_upwind_minus,
  periodic_d2_narrow,
  periodic_d2_wide,      // square of the central first derivative
  periodic_d2_upwind,    // D+ D-
  bounded_central_d1,
  bounded_upwind_plus,
  bounded_upwind_minus,
};

std::string to_string(OperatorKind kind);
bool is_first_derivative(OperatorKind kind);

/// A derivative matrix together with its diagonal mass matrix.
///
/// Periodic operators are circulant and applied through their stencil; bounded
/// operators are applied through the sparse matrix. Application is written as
/// sum_j D_ij (u_j - u_i), so constants are annihilated exactly.
class DerivativeOperator {
 public:
  /// Circulant operator: `(D u)_i = sum_k weights[k] * u_{i + offsets[k]}`, indices mod N.
  DerivativeOperator(Grid grid, OperatorKind kind, int accuracy_order, std::vector<int> offsets,
                     std::vector<double> weights);
  /// General operator given by its matrix.
  DerivativeOperator(Grid grid, OperatorKind kind, int accuracy_order, SparseMatrix matrix, MassMatrix mass);

  const Grid& grid() const noexcept { return grid_; }
  OperatorKind kind() const noexcept { return kind_; }
  int accuracy_order() const noexcept { return order_; }
  const MassMatrix& mass() const noexcept { return mass_; }
  const SparseMatrix& matrix() const noexcept { return matrix_; }
  std::size_t size() const noexcept { return grid_.size(); }

  bool circulant() const noexcept { return !offsets_.empty(); }
  std::span<const int> offsets() const noexcept { return offsets_; }
  std::span<const double> weights() const noexcept { return weights_; }

  void apply(std::span<const double> u, std::span<double> out) const;
  std::vector<double> operator()(std::span<const double> u) const;

 private:
  Grid grid_;
  OperatorKind kind_;
  int order_;
  std::vector<int> offsets_;
  std::vector<double> weights_;
  SparseMatrix matrix_;
  MassMatrix mass_;
};

struct UpwindOperatorPair {
  DerivativeOperator plus;
  DerivativeOperator minus;

  const MassMatrix& mass() const noexcept { return plus.mass(); }
  int accuracy_order() const noexcept { return plus.accuracy_order(); }
  const Grid& grid() const noexcept { return plus.grid(); }
  /// (D+ + D-) / 2 as an operator of the matching central kind.
  DerivativeOperator central() const;
};

/// Finite-difference weights for the `derivative`-th derivative on the given
/// integer offsets (unit spacing).
std::vector<double> fd_weights(std::span<const int> offsets, int derivative);

DerivativeOperator build_periodic_central_d1(const Grid& grid, int order);
UpwindOperatorPair build_periodic_upwind(const Grid& grid, int order);

enum class D2Flavor { narrow, wide, upwind_composite };
DerivativeOperator build_periodic_d2(const Grid& grid, int order, D2Flavor flavor);

DerivativeOperator build_bounded_central_d1(const Grid& grid, int order);
/// Upwind pair on a bounded grid: the central operator of the given order plus/minus
/// a symmetric negative semidefinite artificial dissipation term.
UpwindOperatorPair build_bounded_upwind(const Grid& grid, int order);

/// Circulant product of two periodic operators (stencil convolution).
DerivativeOperator compose_periodic(const DerivativeOperator& outer, const DerivativeOperator& inner,
                                    OperatorKind kind, int accuracy_order);

struct SbpReport {
  std::string identity;
  double residual = 0.0;
  double scale = 0.0;
  double threshold = 0.0;
  bool pass = false;
};

/// Residual of M D + D^T M = B (first derivatives; B = 0 periodic, e_R e_R^T - e_L e_L^T
/// bounded) or M D = D^T M (second derivatives). Pass iff residual <= 1e-12 * |M| |D|.
SbpReport verify_sbp_identity(const DerivativeOperator& op);
/// Residual of M D+ + D-^T M = B plus negative semidefiniteness of M (D+ - D-) / 2.
SbpReport verify_sbp_identity(const UpwindOperatorPair& pair);

/// Largest eigenvalue of the symmetric part of M (D+ - D-) / 2 for a periodic pair,
/// evaluated from the symbol at the N discrete frequencies.
double upwind_dissipation_max_eigenvalue(const UpwindOperatorPair& pair);

/// The operators a model discretization draws from for one grid and accuracy order.
struct OperatorSet {
  Grid grid;
  int order;
  bool upwind;
  MassMatrix mass;
  DerivativeOperator d1;             // central (average of the pair for upwind sets)
  std::optional<UpwindOperatorPair> pair;
  std::optional<DerivativeOperator> d2;  // second derivative, periodic sets only

  const DerivativeOperator& plus() const;
  const DerivativeOperator& minus() const;
  const DerivativeOperator& second() const;
};

/// Central set: periodic -> central D1 and narrow D2, bounded -> central D1.
OperatorSet make_central_operators(const Grid& grid, int order);
/// Upwind set: D+, D-, their central average, and D2 = D+ D- (periodic).
OperatorSet make_upwind_operators(const Grid& grid, int order);

}  // namespace dsw
