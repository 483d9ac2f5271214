#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace dsw {

enum class BoundaryKind { periodic, bounded };

/// Uniform one-dimensional node set.
///
/// Bounded grids include both end points, periodic grids exclude `x_max`
/// (it is identified with `x_min`).
class Grid {
 public:
  Grid(double x_min, double x_max, std::size_t n_nodes, BoundaryKind kind);

  double x_min() const noexcept { return x_min_; }
  double x_max() const noexcept { return x_max_; }
  std::size_t size() const noexcept { return nodes_.size(); }
  double spacing() const noexcept { return dx_; }
  BoundaryKind kind() const noexcept { return kind_; }
  bool periodic() const noexcept { return kind_ == BoundaryKind::periodic; }
  double length() const noexcept { return x_max_ - x_min_; }
  std::span<const double> nodes() const noexcept { return nodes_; }
  double operator[](std::size_t i) const noexcept { return nodes_[i]; }

 private:
  double x_min_;
  double x_max_;
  double dx_;
  BoundaryKind kind_;
  std::vector<double> nodes_;
};

Grid make_uniform_grid(double x_min, double x_max, std::size_t n_nodes, BoundaryKind kind);

/// Diagonal quadrature weights of an SBP operator.
class MassMatrix {
 public:
  MassMatrix() = default;
  explicit MassMatrix(std::vector<double> diagonal);

  std::size_t size() const noexcept { return diag_.size(); }
  std::span<const double> diagonal() const noexcept { return diag_; }
  double operator[](std::size_t i) const noexcept { return diag_[i]; }

 private:
  std::vector<double> diag_;
};

/// Sum_i M_ii u_i, accumulated with compensated summation.
double integral(std::span<const double> u, const MassMatrix& mass);
double weighted_inner_product(std::span<const double> u, std::span<const double> v,
                              const MassMatrix& mass);
double l2_norm(std::span<const double> u, const MassMatrix& mass);
double linf_norm(std::span<const double> u);

enum class Representation { primitive, conservative };

/// Two nodal fields: (eta, v) in primitive form or (h, P) in conservative form.
struct State {
  std::vector<double> a;
  std::vector<double> b;
  Representation representation = Representation::primitive;

  State() = default;
  explicit State(std::size_t n, Representation rep = Representation::primitive)
      : a(n, 0.0), b(n, 0.0), representation(rep) {}
  State(std::vector<double> first, std::vector<double> second,
        Representation rep = Representation::primitive);

  std::size_t size() const noexcept { return a.size(); }

  // primitive accessors
  std::span<double> eta() noexcept { return a; }
  std::span<const double> eta() const noexcept { return a; }
  std::span<double> v() noexcept { return b; }
  std::span<const double> v() const noexcept { return b; }

  /// this += alpha * other
  void axpy(double alpha, const State& other);
  bool all_finite() const noexcept;
};

/// Conversions below this water height are rejected.
inline constexpr double kHeightFloor = 1e-12;

/// (eta, v) -> (h, P) with h = eta + D - eta0.
State to_conservative(const State& primitive, std::span<const double> still_depth, double eta0);
/// (h, P) -> (eta, v); throws DomainError if some h <= kHeightFloor.
State to_primitive(const State& conservative, std::span<const double> still_depth, double eta0);

}  // namespace dsw
