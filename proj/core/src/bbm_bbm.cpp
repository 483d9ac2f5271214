#include "dsw/bbm_bbm.hpp"

#include <algorithm>
#include <cmath>

#include "dsw/errors.hpp"

namespace dsw {

namespace {

SparseMatrix identity_minus_sixth(const SparseMatrix& e) {
  return add(1.0, SparseMatrix::identity(e.rows()), -1.0 / 6.0, e);
}

void require_finite(const State& u, const char* what) {
  if (!u.all_finite()) throw NumericError(std::string(what) + ": state contains NaN or Inf");
}

}  // namespace

std::string to_string(BbmVariant v) {
  switch (v) {
    case BbmVariant::periodic_central_wide: return "periodic_central_wide";
    case BbmVariant::periodic_central_narrow: return "periodic_central_narrow";
    case BbmVariant::periodic_constant_depth: return "periodic_constant_depth";
    case BbmVariant::periodic_upwind: return "periodic_upwind";
    case BbmVariant::reflecting_central: return "reflecting_central";
    case BbmVariant::reflecting_upwind: return "reflecting_upwind";
  }
  return "unknown";
}

BbmVariant parse_bbm_variant(const std::string& name) {
  for (BbmVariant v : {BbmVariant::periodic_central_wide, BbmVariant::periodic_central_narrow,
                       BbmVariant::periodic_constant_depth, BbmVariant::periodic_upwind,
                       BbmVariant::reflecting_central, BbmVariant::reflecting_upwind}) {
    if (to_string(v) == name) return v;
  }
  throw ConfigError("unknown BBM-BBM variant '" + name + "'");
}

bool is_periodic(BbmVariant v) {
  return v != BbmVariant::reflecting_central && v != BbmVariant::reflecting_upwind;
}

bool is_upwind(BbmVariant v) { return v == BbmVariant::periodic_upwind || v == BbmVariant::reflecting_upwind; }

BbmBbmDiscretization::BbmBbmDiscretization(OperatorSet operators, std::vector<double> bathymetry, double g,
                                           BbmVariant variant, BbmOptions options)
    : ops_(std::move(operators)), g_(g), variant_(variant), options_(std::move(options)), b_(std::move(bathymetry)) {
  const std::size_t n = ops_.grid.size();
  if (b_.size() != n) throw DimensionError("BBM-BBM: bathymetry length does not match the grid");
  if (!(g > 0.0)) throw ConfigError("BBM-BBM: gravity must be positive");
  if (ops_.grid.periodic() != is_periodic(variant)) {
    throw ConfigError("BBM-BBM: variant " + to_string(variant) + " does not match the grid boundary kind");
  }
  if (ops_.upwind != is_upwind(variant)) {
    throw ConfigError("BBM-BBM: variant " + to_string(variant) + " needs " +
                      (is_upwind(variant) ? "upwind" : "central") + " operators");
  }
  if ((variant == BbmVariant::periodic_central_narrow || variant == BbmVariant::periodic_constant_depth) &&
      (!ops_.d2 || ops_.d2->kind() != OperatorKind::periodic_d2_narrow)) {
    throw ConfigError("BBM-BBM: variant " + to_string(variant) + " needs a narrow second-derivative operator");
  }

  depth_.resize(n);
  std::vector<double> k(n);
  for (std::size_t i = 0; i < n; ++i) {
    depth_[i] = -b_[i];
    if (!(depth_[i] > 0.0)) {
      throw DomainError("BBM-BBM: still-water depth must be positive, got " + std::to_string(depth_[i]) +
                        " at x = " + std::to_string(ops_.grid[i]));
    }
    k[i] = depth_[i] * depth_[i];
  }

  const SparseMatrix& d1 = ops_.d1.matrix();
  SparseMatrix e_eta;
  SparseMatrix e_v;
  switch (variant) {
    case BbmVariant::periodic_central_wide:
      e_eta = d1.scale_cols(k) * d1;
      e_v = (d1 * d1).scale_cols(k);
      break;
    case BbmVariant::periodic_central_narrow:
      e_eta = d1.scale_cols(k) * d1;
      e_v = ops_.d2->matrix().scale_cols(k);
      break;
    case BbmVariant::periodic_constant_depth: {
      const auto [lo, hi] = std::minmax_element(depth_.begin(), depth_.end());
      if (*hi - *lo > 1e-14 * *hi) {
        throw ConfigError("BBM-BBM: variant periodic_constant_depth needs constant bathymetry");
      }
      e_eta = ops_.d2->matrix().scale_cols(k);
      e_v = e_eta;
      break;
    }
    case BbmVariant::periodic_upwind:
    case BbmVariant::reflecting_upwind: {
      const SparseMatrix& inner = options_.swap_upwind ? ops_.minus().matrix() : ops_.plus().matrix();
      const SparseMatrix& outer = options_.swap_upwind ? ops_.plus().matrix() : ops_.minus().matrix();
      std::vector<double> kp = k;
      if (variant == BbmVariant::reflecting_upwind) kp.front() = kp.back() = 0.0;
      e_eta = outer.scale_cols(kp) * inner;
      e_v = (inner * outer).scale_cols(k);
      break;
    }
    case BbmVariant::reflecting_central: {
      std::vector<double> kp = k;
      kp.front() = kp.back() = 0.0;
      e_eta = d1.scale_cols(kp) * d1;
      e_v = (d1 * d1).scale_cols(k);
      break;
    }
  }
  a_eta_ = identity_minus_sixth(e_eta);
  a_v_ = identity_minus_sixth(e_v);
  if (!is_periodic(variant)) {
    const std::size_t rows[] = {0, n - 1};
    a_v_ = a_v_.with_identity_rows(rows);
  }
  f_eta_ = factor(a_eta_);
  f_v_ = factor(a_v_);
}

const DerivativeOperator& BbmBbmDiscretization::outer_eta() const {
  if (!is_upwind(variant_)) return ops_.d1;
  return options_.swap_upwind ? ops_.plus() : ops_.minus();
}

const DerivativeOperator& BbmBbmDiscretization::outer_v() const {
  if (!is_upwind(variant_)) return ops_.d1;
  return options_.swap_upwind ? ops_.minus() : ops_.plus();
}

std::vector<double> BbmBbmDiscretization::solve_velocity_system(std::span<const double> rhs) const {
  std::vector<double> x = f_v_.solve(rhs);
  if (!is_periodic(variant_)) {
    // identity rows: keep the boundary values bit-exact
    x.front() = rhs.front();
    x.back() = rhs.back();
  }
  return x;
}

std::vector<double> BbmBbmDiscretization::solve_mass_system(std::span<const double> rhs) const {
  return f_eta_.solve(rhs);
}

void BbmBbmDiscretization::rhs(const State& u, double t, State& dudt) const {
  const std::size_t n = grid().size();
  if (u.size() != n) throw DimensionError("BBM-BBM rhs: state length does not match the grid");
  require_finite(u, "BBM-BBM rhs");
  if (dudt.size() != n) dudt = State(n);
  dudt.representation = Representation::primitive;
  const bool reflecting = !is_periodic(variant_);

  std::vector<double> f1(n);
  std::vector<double> f2(n);
  for (std::size_t i = 0; i < n; ++i) {
    double v = u.b[i];
    if (reflecting && (i == 0 || i == n - 1)) v = 0.0;
    f1[i] = (u.a[i] + depth_[i]) * v;
    f2[i] = g_ * u.a[i] + 0.5 * v * v;
  }
  std::span<double> eta_t = dudt.a;
  std::span<double> v_t = dudt.b;
  outer_eta().apply(f1, eta_t);
  outer_v().apply(f2, v_t);
  for (std::size_t i = 0; i < n; ++i) {
    eta_t[i] = -eta_t[i];
    v_t[i] = -v_t[i];
  }
  if (options_.source) {
    std::vector<double> s1(n);
    std::vector<double> s2(n);
    options_.source(t, grid().nodes(), s1, s2);
    for (std::size_t i = 0; i < n; ++i) {
      eta_t[i] += s1[i];
      v_t[i] += s2[i];
    }
  }
  if (reflecting) v_t.front() = v_t.back() = 0.0;
  f_eta_.solve_in_place(eta_t);
  f_v_.solve_in_place(v_t);
  if (reflecting) v_t.front() = v_t.back() = 0.0;
}

InvariantValues BbmBbmDiscretization::invariants(const State& u) const {
  InvariantValues out;
  out.mass = integral(u.a, mass());
  out.secondary = integral(u.b, mass());
  out.energy = functional(u);
  return out;
}

double BbmBbmDiscretization::functional(const State& u) const {
  const std::size_t n = grid().size();
  if (u.size() != n) throw DimensionError("BBM-BBM energy: state length does not match the grid");
  std::vector<double> density(n);
  for (std::size_t i = 0; i < n; ++i) {
    density[i] = 0.5 * g_ * u.a[i] * u.a[i] + 0.5 * (u.a[i] + depth_[i]) * u.b[i] * u.b[i];
  }
  return integral(density, mass());
}

void BbmBbmDiscretization::functional_gradient(const State& u, State& grad) const {
  const std::size_t n = grid().size();
  if (grad.size() != n) grad = State(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double m = mass()[i];
    grad.a[i] = m * (g_ * u.a[i] + 0.5 * u.b[i] * u.b[i]);
    grad.b[i] = m * (u.a[i] + depth_[i]) * u.b[i];
  }
}

bool BbmBbmDiscretization::conserves_functional() const {
  return variant_ != BbmVariant::periodic_central_narrow;
}

BbmBbmDiscretization build_bbm_discretization(const Grid& grid, int order, const BathymetryFn& bathymetry, double g,
                                              BbmVariant variant, BbmOptions options) {
  OperatorSet ops = is_upwind(variant) ? make_upwind_operators(grid, order) : make_central_operators(grid, order);
  std::vector<double> b(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) b[i] = bathymetry(grid[i]);
  return BbmBbmDiscretization(std::move(ops), std::move(b), g, variant, std::move(options));
}

double bbm_soliton_speed(double g, double depth) { return 2.5 * std::sqrt(g * depth); }

State bbm_soliton(double t, std::span<const double> x, double g, double depth, double x0) {
  if (!(depth > 0.0)) throw DomainError("soliton: depth must be positive");
  const double c = bbm_soliton_speed(g, depth);
  const double rho = 18.0 / 5.0;
  State s(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double theta = 0.5 * std::sqrt(rho) * (x[i] - c * t - x0) / depth;
    const double sech = 1.0 / std::cosh(theta);
    const double sech2 = sech * sech;
    s.a[i] = 3.75 * depth * (2.0 * sech2 - 3.0 * sech2 * sech2);
    s.b[i] = 7.5 * std::sqrt(g * depth) * sech2;
  }
  return s;
}

double bbm_phase_speed(double k, double h0, double g) {
  if (!(k > 0.0) || !(h0 > 0.0)) throw DomainError("bbm_phase_speed: k and h0 must be positive");
  const double kh = k * h0;
  return std::sqrt(g * h0) / (1.0 + kh * kh / 6.0);
}

}  // namespace dsw
