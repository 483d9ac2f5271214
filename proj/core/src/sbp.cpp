#include "dsw/sbp.hpp"

#include <lapacke.h>

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <map>
#include <numbers>
#include <string>
#include <utility>

#include "dsw/errors.hpp"

namespace dsw {

namespace {

std::size_t wrap(long i, std::size_t n) {
  const long m = static_cast<long>(n);
  long r = i % m;
  if (r < 0) r += m;
  return static_cast<std::size_t>(r);
}

void require_periodic(const Grid& grid, const char* what) {
  if (!grid.periodic()) throw ConfigError(std::string(what) + ": grid must be periodic");
}

void require_bounded(const Grid& grid, const char* what) {
  if (grid.periodic()) throw ConfigError(std::string(what) + ": grid must be bounded");
}

void require_order(int order, std::initializer_list<int> allowed, const char* what) {
  if (std::find(allowed.begin(), allowed.end(), order) == allowed.end()) {
    throw ConfigError(std::string(what) + ": unsupported accuracy order " + std::to_string(order));
  }
}

std::vector<int> centered_offsets(int half_width) {
  std::vector<int> off;
  for (int k = -half_width; k <= half_width; ++k) off.push_back(k);
  return off;
}

// Make a centered stencil exactly antisymmetric (sign = -1) or symmetric (sign = +1).
void symmetrize(std::span<const int> offsets, std::span<double> weights, double sign) {
  std::map<int, std::size_t> index;
  for (std::size_t k = 0; k < offsets.size(); ++k) index[offsets[k]] = k;
  for (std::size_t k = 0; k < offsets.size(); ++k) {
    const int o = offsets[k];
    if (o < 0) continue;
    const auto mirror = index.find(-o);
    if (mirror == index.end()) {
      throw Error("symmetrize: stencil is not centered");
    }
    if (o == 0) {
      if (sign < 0) weights[k] = 0.0;
      continue;
    }
    const double w = 0.5 * (weights[k] + sign * weights[mirror->second]);
    weights[k] = w;
    weights[mirror->second] = sign * w;
  }
}

SparseMatrix circulant_matrix(std::size_t n, std::span<const int> offsets, std::span<const double> weights) {
  std::vector<Triplet> t;
  t.reserve(n * offsets.size());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < offsets.size(); ++k) {
      t.push_back({i, wrap(static_cast<long>(i) + offsets[k], n), weights[k]});
    }
  }
  return SparseMatrix(n, n, t);
}

double max_abs_diag(const MassMatrix& m) {
  double r = 0.0;
  for (double w : m.diagonal()) r = std::max(r, std::abs(w));
  return r;
}

// Boundary closures of the diagonal-norm central first-derivative operators.
// The r x r upper-left block of Q (with D = H^{-1} Q / dx) is given by its strict
// upper triangle; Q_00 = -1/2, Q is otherwise antisymmetric in the block.
struct Closure {
  std::size_t r;
  std::vector<double> h;
  std::vector<double> q_upper;  // row-major strict upper triangle
};

Closure closure_for(int order) {
  switch (order) {
    case 2:
      return {1, {0.5}, {}};
    case 4:
      return {4,
              {17.0 / 48.0, 59.0 / 48.0, 43.0 / 48.0, 49.0 / 48.0},
              {59.0 / 96.0, -1.0 / 12.0, -1.0 / 32.0, 59.0 / 96.0, 0.0, 59.0 / 96.0}};
    case 6:
      return {6,
              {13649.0 / 43200.0, 12013.0 / 8640.0, 2711.0 / 4320.0, 5359.0 / 4320.0, 7877.0 / 8640.0,
               43801.0 / 43200.0},
              {104009.0 / 172800.0, 30443.0 / 259200.0, -33311.0 / 86400.0, 5621.0 / 28800.0,
               -601.0 / 20736.0,  // row 0
               -311.0 / 51840.0, 6743.0 / 5760.0, -24337.0 / 34560.0, 36661.0 / 259200.0,  // row 1
               -2231.0 / 5184.0, 41287.0 / 51840.0, -7333.0 / 28800.0,                     // row 2
               4147.0 / 17280.0, 25427.0 / 259200.0,                                      // row 3
               342523.0 / 518400.0}};                                                     // row 4
    default:
      throw ConfigError("bounded central operator: unsupported accuracy order " + std::to_string(order));
  }
}

}  // namespace

std::string to_string(OperatorKind kind) {
  switch (kind) {
    case OperatorKind::periodic_central_d1: return "periodic_central_d1";
    case OperatorKind::periodic_upwind_plus: return "periodic_upwind_plus";
    case OperatorKind::periodic_upwind_minus: return "periodic_upwind_minus";
    case OperatorKind::periodic_d2_narrow: return "periodic_d2_narrow";
    case OperatorKind::periodic_d2_wide: return "periodic_d2_wide";
    case OperatorKind::periodic_d2_upwind: return "periodic_d2_upwind";
    case OperatorKind::bounded_central_d1: return "bounded_central_d1";
    case OperatorKind::bounded_upwind_plus: return "bounded_upwind_plus";
    case OperatorKind::bounded_upwind_minus: return "bounded_upwind_minus";
  }
  return "unknown";
}

bool is_first_derivative(OperatorKind kind) {
  switch (kind) {
    case OperatorKind::periodic_d2_narrow:
    case OperatorKind::periodic_d2_wide:
    case OperatorKind::periodic_d2_upwind:
      return false;
    default:
      return true;
  }
}

std::vector<double> fd_weights(std::span<const int> offsets, int derivative) {
  // Fornberg's recursion, evaluated at 0 in extended precision.
  const std::size_t n = offsets.size();
  if (n == 0 || derivative < 0 || static_cast<std::size_t>(derivative) >= n) {
    throw ConfigError("fd_weights: need more points than the derivative order");
  }
  const auto m = static_cast<std::size_t>(derivative);
  std::vector<std::vector<long double>> c(n, std::vector<long double>(m + 1, 0.0L));
  long double c1 = 1.0L;
  long double c4 = offsets[0];
  c[0][0] = 1.0L;
  for (std::size_t i = 1; i < n; ++i) {
    const std::size_t mn = std::min(i, m);
    long double c2 = 1.0L;
    const long double c5 = c4;
    c4 = offsets[i];
    for (std::size_t j = 0; j < i; ++j) {
      const long double c3 = static_cast<long double>(offsets[i]) - offsets[j];
      c2 *= c3;
      if (j == i - 1) {
        for (std::size_t k = mn; k >= 1; --k) {
          c[i][k] = c1 * (static_cast<long double>(k) * c[i - 1][k - 1] - c5 * c[i - 1][k]) / c2;
        }
        c[i][0] = -c1 * c5 * c[i - 1][0] / c2;
      }
      for (std::size_t k = mn; k >= 1; --k) {
        c[j][k] = (c4 * c[j][k] - static_cast<long double>(k) * c[j][k - 1]) / c3;
      }
      c[j][0] = c4 * c[j][0] / c3;
    }
    c1 = c2;
  }
  std::vector<double> w(n);
  for (std::size_t i = 0; i < n; ++i) w[i] = static_cast<double>(c[i][m]);
  return w;
}

DerivativeOperator::DerivativeOperator(Grid grid, OperatorKind kind, int accuracy_order, std::vector<int> offsets,
                                       std::vector<double> weights)
    : grid_(std::move(grid)), kind_(kind), order_(accuracy_order), offsets_(std::move(offsets)),
      weights_(std::move(weights)) {
  if (offsets_.size() != weights_.size() || offsets_.empty()) {
    throw DimensionError("derivative operator: offsets and weights differ in length");
  }
  const auto [lo, hi] = std::minmax_element(offsets_.begin(), offsets_.end());
  const auto width = static_cast<std::size_t>(*hi - *lo);
  if (grid_.size() <= width) {
    throw ConfigError("derivative operator: " + std::to_string(grid_.size()) +
                      " nodes are too few for a stencil of width " + std::to_string(width + 1));
  }
  const double dx = grid_.spacing();
  const double scale = is_first_derivative(kind) ? 1.0 / dx : 1.0 / (dx * dx);
  for (double& w : weights_) w *= scale;
  matrix_ = circulant_matrix(grid_.size(), offsets_, weights_);
  mass_ = MassMatrix(std::vector<double>(grid_.size(), dx));
}

DerivativeOperator::DerivativeOperator(Grid grid, OperatorKind kind, int accuracy_order, SparseMatrix matrix,
                                       MassMatrix mass)
    : grid_(std::move(grid)), kind_(kind), order_(accuracy_order), matrix_(std::move(matrix)),
      mass_(std::move(mass)) {
  if (matrix_.rows() != grid_.size() || matrix_.cols() != grid_.size() || mass_.size() != grid_.size()) {
    throw DimensionError("derivative operator: matrix or mass size does not match the grid");
  }
}

void DerivativeOperator::apply(std::span<const double> u, std::span<double> out) const {
  const std::size_t n = grid_.size();
  if (u.size() != n || out.size() != n) {
    throw DimensionError("derivative operator: input length " + std::to_string(u.size()) + ", expected " +
                         std::to_string(n));
  }
  if (circulant()) {
    const long nn = static_cast<long>(n);
    for (std::size_t i = 0; i < n; ++i) {
      double s = 0.0;
      for (std::size_t k = 0; k < offsets_.size(); ++k) {
        if (offsets_[k] == 0) continue;
        long j = static_cast<long>(i) + offsets_[k];
        if (j < 0) j += nn;
        if (j >= nn) j -= nn;
        s += weights_[k] * (u[static_cast<std::size_t>(j)] - u[i]);
      }
      out[i] = s;
    }
    return;
  }
  const auto rp = matrix_.row_offsets();
  const auto ci = matrix_.col_indices();
  const auto vals = matrix_.values();
  // Rows that do not sum to zero (perturbed test operators, say) keep their diagonal remainder.
  for (std::size_t i = 0; i < n; ++i) {
    double s = 0.0;
    double row_sum = 0.0;
    double row_abs = 0.0;
    for (std::size_t k = rp[i]; k < rp[i + 1]; ++k) {
      s += vals[k] * (u[ci[k]] - u[i]);
      row_sum += vals[k];
      row_abs += std::abs(vals[k]);
    }
    if (std::abs(row_sum) > 1e-12 * row_abs) s += row_sum * u[i];
    out[i] = s;
  }
}

std::vector<double> DerivativeOperator::operator()(std::span<const double> u) const {
  std::vector<double> out(u.size());
  apply(u, out);
  return out;
}

DerivativeOperator UpwindOperatorPair::central() const {
  const int p = plus.accuracy_order();
  if (plus.circulant() && minus.circulant()) {
    std::map<int, double> acc;
    for (std::size_t k = 0; k < plus.offsets().size(); ++k) acc[plus.offsets()[k]] += 0.5 * plus.weights()[k];
    for (std::size_t k = 0; k < minus.offsets().size(); ++k) acc[minus.offsets()[k]] += 0.5 * minus.weights()[k];
    const int half = std::max(std::abs(acc.begin()->first), std::abs(acc.rbegin()->first));
    std::vector<int> off = centered_offsets(half);
    std::vector<double> w(off.size(), 0.0);
    const double dx = grid().spacing();
    for (std::size_t k = 0; k < off.size(); ++k) {
      const auto it = acc.find(off[k]);
      if (it != acc.end()) w[k] = it->second * dx;
    }
    symmetrize(off, w, -1.0);
    const int central_order = p % 2 == 1 ? p + 1 : p;
    return DerivativeOperator(grid(), OperatorKind::periodic_central_d1, central_order, std::move(off), std::move(w));
  }
  return DerivativeOperator(grid(), OperatorKind::bounded_central_d1, p, add(0.5, plus.matrix(), 0.5, minus.matrix()),
                            mass());
}

DerivativeOperator build_periodic_central_d1(const Grid& grid, int order) {
  require_periodic(grid, "periodic central operator");
  require_order(order, {2, 4, 6, 8}, "periodic central operator");
  std::vector<int> off = centered_offsets(order / 2);
  std::vector<double> w = fd_weights(off, 1);
  symmetrize(off, w, -1.0);
  return DerivativeOperator(grid, OperatorKind::periodic_central_d1, order, std::move(off), std::move(w));
}

UpwindOperatorPair build_periodic_upwind(const Grid& grid, int order) {
  require_periodic(grid, "periodic upwind operator");
  require_order(order, {1, 2, 3, 4, 5, 6}, "periodic upwind operator");
  // Minimal biased stencil: offsets [left, left + p] with left = -floor((p - 1) / 2).
  const int left = -((order - 1) / 2);
  std::vector<int> off_plus;
  for (int k = left; k <= left + order; ++k) off_plus.push_back(k);
  std::vector<double> w_plus = fd_weights(off_plus, 1);
  // D- = -D+^T
  std::vector<int> off_minus;
  std::vector<double> w_minus;
  for (std::size_t k = off_plus.size(); k-- > 0;) {
    off_minus.push_back(-off_plus[k]);
    w_minus.push_back(-w_plus[k]);
  }
  UpwindOperatorPair pair{
      DerivativeOperator(grid, OperatorKind::periodic_upwind_plus, order, std::move(off_plus), std::move(w_plus)),
      DerivativeOperator(grid, OperatorKind::periodic_upwind_minus, order, std::move(off_minus),
                         std::move(w_minus))};
  const double lambda = upwind_dissipation_max_eigenvalue(pair);
  if (lambda > 1e-12) {
    throw Error("periodic upwind operator of order " + std::to_string(order) +
                " failed the dissipation check (max eigenvalue " + std::to_string(lambda) + ")");
  }
  return pair;
}

DerivativeOperator compose_periodic(const DerivativeOperator& outer, const DerivativeOperator& inner,
                                    OperatorKind kind, int accuracy_order) {
  if (!outer.circulant() || !inner.circulant()) {
    throw ConfigError("compose_periodic: both operators must be periodic");
  }
  const double dx = outer.grid().spacing();
  std::map<int, double> acc;
  for (std::size_t a = 0; a < outer.offsets().size(); ++a) {
    for (std::size_t b = 0; b < inner.offsets().size(); ++b) {
      // Undo the 1/dx scaling of each factor; the constructor applies 1/dx^2.
      acc[outer.offsets()[a] + inner.offsets()[b]] += (outer.weights()[a] * dx) * (inner.weights()[b] * dx);
    }
  }
  const int half = std::max(std::abs(acc.begin()->first), std::abs(acc.rbegin()->first));
  std::vector<int> off = centered_offsets(half);
  std::vector<double> w(off.size(), 0.0);
  for (std::size_t k = 0; k < off.size(); ++k) {
    const auto it = acc.find(off[k]);
    if (it != acc.end()) w[k] = it->second;
  }
  if (!is_first_derivative(kind)) symmetrize(off, w, 1.0);
  return DerivativeOperator(outer.grid(), kind, accuracy_order, std::move(off), std::move(w));
}

DerivativeOperator build_periodic_d2(const Grid& grid, int order, D2Flavor flavor) {
  require_periodic(grid, "periodic second-derivative operator");
  switch (flavor) {
    case D2Flavor::narrow: {
      require_order(order, {2, 4, 6, 8}, "periodic narrow second-derivative operator");
      std::vector<int> off = centered_offsets(order / 2);
      std::vector<double> w = fd_weights(off, 2);
      symmetrize(off, w, 1.0);
      return DerivativeOperator(grid, OperatorKind::periodic_d2_narrow, order, std::move(off), std::move(w));
    }
    case D2Flavor::wide: {
      const DerivativeOperator d1 = build_periodic_central_d1(grid, order);
      return compose_periodic(d1, d1, OperatorKind::periodic_d2_wide, order);
    }
    case D2Flavor::upwind_composite: {
      const UpwindOperatorPair pair = build_periodic_upwind(grid, order);
      return compose_periodic(pair.plus, pair.minus, OperatorKind::periodic_d2_upwind, order);
    }
  }
  throw ConfigError("periodic second-derivative operator: unknown flavor");
}

DerivativeOperator build_bounded_central_d1(const Grid& grid, int order) {
  require_bounded(grid, "bounded central operator");
  const Closure cl = closure_for(order);
  const std::size_t n = grid.size();
  const int half = order / 2;
  const std::size_t r = cl.r;
  if (n < 2 * r + static_cast<std::size_t>(order)) {
    throw ConfigError("bounded central operator of order " + std::to_string(order) + " needs at least " +
                      std::to_string(2 * r + static_cast<std::size_t>(order)) + " nodes, got " +
                      std::to_string(n));
  }
  const double dx = grid.spacing();
  std::vector<int> off = centered_offsets(half);
  std::vector<double> a = fd_weights(off, 1);
  symmetrize(off, a, -1.0);
  auto interior = [&](long offset) -> double {
    if (offset < -half || offset > half) return 0.0;
    return a[static_cast<std::size_t>(offset + half)];
  };

  // Dense boundary block of Q.
  std::vector<double> qb(r * r, 0.0);
  qb[0] = -0.5;
  std::size_t idx = 0;
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = i + 1; j < r; ++j) {
      qb[i * r + j] = cl.q_upper[idx];
      qb[j * r + i] = -cl.q_upper[idx];
      ++idx;
    }
  }

  std::vector<double> weights(n, dx);
  for (std::size_t i = 0; i < r; ++i) {
    weights[i] = cl.h[i] * dx;
    weights[n - 1 - i] = cl.h[i] * dx;
  }

  std::vector<Triplet> t;
  auto left_row = [&](std::size_t i, auto&& emit) {
    for (std::size_t j = 0; j < r; ++j) {
      if (qb[i * r + j] != 0.0) emit(j, qb[i * r + j] / cl.h[i]);
    }
    for (std::size_t j = r; j <= i + static_cast<std::size_t>(half); ++j) {
      const double v = interior(static_cast<long>(j) - static_cast<long>(i));
      if (v != 0.0) emit(j, v / cl.h[i]);
    }
  };
  for (std::size_t i = 0; i < r; ++i) {
    left_row(i, [&](std::size_t j, double v) {
      t.push_back({i, j, v / dx});
      t.push_back({n - 1 - i, n - 1 - j, -v / dx});
    });
  }
  for (std::size_t i = r; i < n - r; ++i) {
    for (int k = -half; k <= half; ++k) {
      if (k == 0) continue;
      const long j = static_cast<long>(i) + k;
      const double v = interior(k);
      // Columns inside the boundary blocks carry -Q_ji = interior coefficient as well.
      t.push_back({i, static_cast<std::size_t>(j), v / dx});
    }
  }
  return DerivativeOperator(grid, OperatorKind::bounded_central_d1, order, SparseMatrix(n, n, t),
                            MassMatrix(std::move(weights)));
}

UpwindOperatorPair build_bounded_upwind(const Grid& grid, int order) {
  const DerivativeOperator d1 = build_bounded_central_d1(grid, order);
  const std::size_t n = grid.size();
  const int q = order / 2 + 1;
  // Undivided difference Delta^q as a (n - q) x n matrix, built from binomial coefficients.
  std::vector<double> binom(static_cast<std::size_t>(q) + 1, 1.0);
  for (int k = 1; k <= q; ++k) binom[static_cast<std::size_t>(k)] = binom[static_cast<std::size_t>(k - 1)] * (q - k + 1) / k;
  std::vector<Triplet> t;
  for (std::size_t i = 0; i + static_cast<std::size_t>(q) < n; ++i) {
    for (int k = 0; k <= q; ++k) {
      const double sign = ((q - k) % 2 == 0) ? 1.0 : -1.0;
      t.push_back({i, i + static_cast<std::size_t>(k), sign * binom[static_cast<std::size_t>(k)]});
    }
  }
  const SparseMatrix delta(n - static_cast<std::size_t>(q), n, t);
  const double strength = 2.0 * std::pow(4.0, -q);
  const SparseMatrix s = delta.transpose() * delta;  // positive semidefinite
  std::vector<double> inv_mass(n);
  for (std::size_t i = 0; i < n; ++i) inv_mass[i] = 1.0 / d1.mass()[i];
  // D+- = D1 -+ (strength / 2) M^{-1} Delta^T Delta
  const SparseMatrix diss = s.scale_rows(inv_mass);
  return UpwindOperatorPair{
      DerivativeOperator(grid, OperatorKind::bounded_upwind_plus, order, add(1.0, d1.matrix(), -0.5 * strength, diss),
                         d1.mass()),
      DerivativeOperator(grid, OperatorKind::bounded_upwind_minus, order, add(1.0, d1.matrix(), 0.5 * strength, diss),
                         d1.mass())};
}

namespace {

SparseMatrix boundary_matrix(std::size_t n) {
  std::vector<Triplet> t{{0, 0, -1.0}, {n - 1, n - 1, 1.0}};
  return SparseMatrix(n, n, t);
}

bool is_bounded(OperatorKind kind) {
  return kind == OperatorKind::bounded_central_d1 || kind == OperatorKind::bounded_upwind_plus ||
         kind == OperatorKind::bounded_upwind_minus;
}

double max_eigenvalue_dense(const SparseMatrix& sym) {
  const std::size_t n = sym.rows();
  std::vector<double> a = sym.to_dense();
  std::vector<double> w(n);
  const int info = LAPACKE_dsyev(LAPACK_ROW_MAJOR, 'N', 'U', static_cast<int>(n), a.data(), static_cast<int>(n),
                                 w.data());
  if (info != 0) throw Error("eigenvalue computation failed (info " + std::to_string(info) + ")");
  return *std::max_element(w.begin(), w.end());
}

}  // namespace

SbpReport verify_sbp_identity(const DerivativeOperator& op) {
  const SparseMatrix& d = op.matrix();
  const auto m = op.mass().diagonal();
  const SparseMatrix md = d.scale_rows(m);
  const SparseMatrix dtm = d.transpose().scale_cols(m);
  SbpReport report;
  SparseMatrix residual;
  if (is_first_derivative(op.kind())) {
    residual = add(1.0, md, 1.0, dtm);
    if (is_bounded(op.kind())) {
      residual = add(1.0, residual, -1.0, boundary_matrix(op.size()));
      report.identity = "M D + D^T M = e_R e_R^T - e_L e_L^T";
    } else {
      report.identity = "M D + D^T M = 0";
    }
  } else {
    residual = add(1.0, md, -1.0, dtm);
    report.identity = "M D = D^T M";
  }
  report.residual = residual.max_abs();
  report.scale = max_abs_diag(op.mass()) * d.max_abs();
  report.threshold = 1e-12 * report.scale;
  report.pass = report.residual <= report.threshold;
  return report;
}

double upwind_dissipation_max_eigenvalue(const UpwindOperatorPair& pair) {
  const SparseMatrix diff = add(0.5, pair.plus.matrix(), -0.5, pair.minus.matrix()).scale_rows(pair.mass().diagonal());
  if (pair.plus.circulant() && pair.minus.circulant()) {
    // Symmetric part of a circulant matrix: eigenvalues are the real part of its symbol.
    const std::size_t n = pair.grid().size();
    const double dx = pair.grid().spacing();
    double lambda = -std::numeric_limits<double>::infinity();
    for (std::size_t f = 0; f < n; ++f) {
      const double theta = 2.0 * std::numbers::pi * static_cast<double>(f) / static_cast<double>(n);
      double re = 0.0;
      for (std::size_t k = 0; k < pair.plus.offsets().size(); ++k) {
        re += 0.5 * pair.plus.weights()[k] * std::cos(pair.plus.offsets()[k] * theta);
      }
      for (std::size_t k = 0; k < pair.minus.offsets().size(); ++k) {
        re -= 0.5 * pair.minus.weights()[k] * std::cos(pair.minus.offsets()[k] * theta);
      }
      lambda = std::max(lambda, re * dx);
    }
    return lambda;
  }
  const SparseMatrix sym = add(0.5, diff, 0.5, diff.transpose());
  return max_eigenvalue_dense(sym);
}

SbpReport verify_sbp_identity(const UpwindOperatorPair& pair) {
  const auto m = pair.mass().diagonal();
  SparseMatrix residual = add(1.0, pair.plus.matrix().scale_rows(m), 1.0, pair.minus.matrix().transpose().scale_cols(m));
  SbpReport report;
  if (is_bounded(pair.plus.kind())) {
    residual = add(1.0, residual, -1.0, boundary_matrix(pair.plus.size()));
    report.identity = "M D+ + D-^T M = e_R e_R^T - e_L e_L^T, M (D+ - D-) <= 0";
  } else {
    report.identity = "M D+ + D-^T M = 0, M (D+ - D-) <= 0";
  }
  const double lambda = upwind_dissipation_max_eigenvalue(pair);
  report.residual = std::max(residual.max_abs(), std::max(0.0, lambda));
  report.scale = max_abs_diag(pair.mass()) * std::max(pair.plus.matrix().max_abs(), pair.minus.matrix().max_abs());
  report.threshold = 1e-12 * report.scale;
  report.pass = report.residual <= report.threshold;
  return report;
}

const DerivativeOperator& OperatorSet::plus() const {
  if (!pair) throw ConfigError("operator set has no upwind operators");
  return pair->plus;
}

const DerivativeOperator& OperatorSet::minus() const {
  if (!pair) throw ConfigError("operator set has no upwind operators");
  return pair->minus;
}

const DerivativeOperator& OperatorSet::second() const {
  if (!d2) throw ConfigError("operator set has no second-derivative operator");
  return *d2;
}

OperatorSet make_central_operators(const Grid& grid, int order) {
  if (grid.periodic()) {
    DerivativeOperator d1 = build_periodic_central_d1(grid, order);
    MassMatrix mass = d1.mass();
    return OperatorSet{grid, order, false, std::move(mass), std::move(d1), std::nullopt,
                       build_periodic_d2(grid, order, D2Flavor::narrow)};
  }
  DerivativeOperator d1 = build_bounded_central_d1(grid, order);
  MassMatrix mass = d1.mass();
  return OperatorSet{grid, order, false, std::move(mass), std::move(d1), std::nullopt, std::nullopt};
}

OperatorSet make_upwind_operators(const Grid& grid, int order) {
  if (grid.periodic()) {
    UpwindOperatorPair pair = build_periodic_upwind(grid, order);
    DerivativeOperator d1 = pair.central();
    DerivativeOperator d2 = compose_periodic(pair.plus, pair.minus, OperatorKind::periodic_d2_upwind, order);
    MassMatrix mass = pair.mass();
    return OperatorSet{grid, order, true, std::move(mass), std::move(d1), std::move(pair), std::move(d2)};
  }
  UpwindOperatorPair pair = build_bounded_upwind(grid, order);
  DerivativeOperator d1 = build_bounded_central_d1(grid, order);
  MassMatrix mass = pair.mass();
  return OperatorSet{grid, order, true, std::move(mass), std::move(d1), std::move(pair), std::nullopt};
}

}  // namespace dsw
