#include "dsw/grid.hpp"

#include <cmath>
#include <string>

#include "dsw/errors.hpp"

namespace dsw {

namespace {

void require_same_length(std::size_t a, std::size_t b, const char* what) {
  if (a != b) {
    throw DimensionError(std::string(what) + ": length mismatch (" + std::to_string(a) + " vs " +
                         std::to_string(b) + ")");
  }
}

}  // namespace

Grid::Grid(double x_min, double x_max, std::size_t n_nodes, BoundaryKind kind)
    : x_min_(x_min), x_max_(x_max), kind_(kind) {
  if (!(x_max > x_min) || !std::isfinite(x_min) || !std::isfinite(x_max)) {
    throw ConfigError("grid: degenerate interval [" + std::to_string(x_min) + ", " +
                      std::to_string(x_max) + "]");
  }
  if (n_nodes < 3) {
    throw ConfigError("grid: need at least 3 nodes, got " + std::to_string(n_nodes));
  }
  const double intervals =
      kind == BoundaryKind::periodic ? static_cast<double>(n_nodes) : static_cast<double>(n_nodes - 1);
  dx_ = (x_max - x_min) / intervals;
  nodes_.resize(n_nodes);
  for (std::size_t i = 0; i < n_nodes; ++i) {
    nodes_[i] = x_min + static_cast<double>(i) * dx_;
  }
  if (kind == BoundaryKind::bounded) {
    nodes_.back() = x_max;
  }
}

Grid make_uniform_grid(double x_min, double x_max, std::size_t n_nodes, BoundaryKind kind) {
  return Grid(x_min, x_max, n_nodes, kind);
}

MassMatrix::MassMatrix(std::vector<double> diagonal) : diag_(std::move(diagonal)) {
  for (double w : diag_) {
    if (!(w > 0.0)) {
      throw ConfigError("mass matrix: weights must be positive");
    }
  }
}

double integral(std::span<const double> u, const MassMatrix& mass) {
  require_same_length(u.size(), mass.size(), "integral");
  // Neumaier summation
  double sum = 0.0;
  double comp = 0.0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    const double term = mass[i] * u[i];
    const double next = sum + term;
    if (std::abs(sum) >= std::abs(term)) {
      comp += (sum - next) + term;
    } else {
      comp += (term - next) + sum;
    }
    sum = next;
  }
  return sum + comp;
}

double weighted_inner_product(std::span<const double> u, std::span<const double> v,
                              const MassMatrix& mass) {
  require_same_length(u.size(), mass.size(), "inner product");
  require_same_length(v.size(), mass.size(), "inner product");
  double sum = 0.0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    sum += mass[i] * (u[i] * v[i]);
  }
  return sum;
}

double l2_norm(std::span<const double> u, const MassMatrix& mass) {
  return std::sqrt(weighted_inner_product(u, u, mass));
}

double linf_norm(std::span<const double> u) {
  double m = 0.0;
  for (double x : u) {
    m = std::max(m, std::abs(x));
  }
  return m;
}

State::State(std::vector<double> first, std::vector<double> second, Representation rep)
    : a(std::move(first)), b(std::move(second)), representation(rep) {
  require_same_length(a.size(), b.size(), "state");
}

void State::axpy(double alpha, const State& other) {
  require_same_length(size(), other.size(), "state axpy");
  for (std::size_t i = 0; i < a.size(); ++i) {
    a[i] += alpha * other.a[i];
    b[i] += alpha * other.b[i];
  }
}

bool State::all_finite() const noexcept {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!std::isfinite(a[i]) || !std::isfinite(b[i])) return false;
  }
  return true;
}

State to_conservative(const State& primitive, std::span<const double> still_depth, double eta0) {
  require_same_length(primitive.size(), still_depth.size(), "to_conservative");
  State out(primitive.size(), Representation::conservative);
  for (std::size_t i = 0; i < primitive.size(); ++i) {
    const double h = primitive.a[i] + still_depth[i] - eta0;
    out.a[i] = h;
    out.b[i] = h * primitive.b[i];
  }
  return out;
}

State to_primitive(const State& conservative, std::span<const double> still_depth, double eta0) {
  require_same_length(conservative.size(), still_depth.size(), "to_primitive");
  State out(conservative.size(), Representation::primitive);
  for (std::size_t i = 0; i < conservative.size(); ++i) {
    const double h = conservative.a[i];
    if (!(h > kHeightFloor)) {
      throw DomainError("to_primitive: water height " + std::to_string(h) + " at node " +
                        std::to_string(i) + " is below the floor");
    }
    out.a[i] = h - still_depth[i] + eta0;
    out.b[i] = conservative.b[i] / h;
  }
  return out;
}

}  // namespace dsw
