#include "dsw/svaerd_kalisch.hpp"

#include <cmath>

#include "dsw/errors.hpp"

namespace dsw {

SkParameterSet sk_parameter_set(const std::string& name) {
  if (name == "set1") return {"set1", -1.0 / 3.0, 0.0, 0.0};
  if (name == "set2") return {"set2", 0.0004040404040404049, 0.49292929292929294, 0.15707070707070708};
  if (name == "set3") return {"set3", 0.0, 0.27946992481203003, 0.0521077694235589};
  if (name == "set4") return {"set4", 0.0, 0.2308939393939394, 0.04034343434343434};
  if (name == "set5") return {"set5", 0.0, 1.0 / 3.0, 0.0};
  throw ConfigError("unknown Svaerd-Kalisch parameter set '" + name + "'");
}

std::string to_string(SkVariant v) {
  switch (v) {
    case SkVariant::periodic_central_split: return "periodic_central_split";
    case SkVariant::periodic_upwind: return "periodic_upwind";
    case SkVariant::reflecting_beta_only: return "reflecting_beta_only";
  }
  return "unknown";
}

SkVariant parse_sk_variant(const std::string& name) {
  for (SkVariant v : {SkVariant::periodic_central_split, SkVariant::periodic_upwind, SkVariant::reflecting_beta_only}) {
    if (to_string(v) == name) return v;
  }
  throw ConfigError("unknown Svaerd-Kalisch variant '" + name + "'");
}

SkDiscretization::SkDiscretization(OperatorSet operators, std::vector<double> bathymetry, double g, double eta0,
                                   SkParameterSet params, SkVariant variant, SkOptions options)
    : ops_(std::move(operators)), g_(g), eta0_(eta0), params_(std::move(params)), variant_(variant),
      options_(std::move(options)), b_(std::move(bathymetry)) {
  const std::size_t n = ops_.grid.size();
  if (b_.size() != n) throw DimensionError("Svaerd-Kalisch: bathymetry length does not match the grid");
  if (!(g > 0.0)) throw ConfigError("Svaerd-Kalisch: gravity must be positive");
  const bool periodic_variant = variant != SkVariant::reflecting_beta_only;
  if (ops_.grid.periodic() != periodic_variant) {
    throw ConfigError("Svaerd-Kalisch: variant " + to_string(variant) + " does not match the grid boundary kind");
  }
  if (ops_.upwind != (variant == SkVariant::periodic_upwind)) {
    throw ConfigError("Svaerd-Kalisch: variant " + to_string(variant) + " needs " +
                      (variant == SkVariant::periodic_upwind ? "upwind" : "central") + " operators");
  }
  if (!params_.valid_for_variable_bathymetry()) {
    throw ConfigError("Svaerd-Kalisch: parameter set " + params_.name + " has alpha_tilde < 0");
  }
  if (variant == SkVariant::reflecting_beta_only && (params_.alpha_tilde != 0.0 || params_.gamma_tilde != 0.0)) {
    throw ConfigError("Svaerd-Kalisch: reflecting variant requires alpha_tilde = gamma_tilde = 0 (got set " +
                      params_.name + ")");
  }
  has_alpha_ = params_.alpha_tilde != 0.0;
  has_gamma_ = params_.gamma_tilde != 0.0;
  if (has_gamma_ && !ops_.d2) throw ConfigError("Svaerd-Kalisch: gamma terms need a second-derivative operator");

  depth_.resize(n);
  alpha_hat_.resize(n);
  beta_hat_.resize(n);
  gamma_hat_.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double d = eta0_ - b_[i];
    if (!(d > 0.0)) {
      throw DomainError("Svaerd-Kalisch: still-water depth must be positive, got " + std::to_string(d) +
                        " at x = " + std::to_string(ops_.grid[i]));
    }
    depth_[i] = d;
    const double root = std::sqrt(g_ * d);
    alpha_hat_[i] = std::sqrt(params_.alpha_tilde * root * d * d);
    beta_hat_[i] = params_.beta_tilde * d * d * d;
    gamma_hat_[i] = params_.gamma_tilde * root * d * d * d;
  }
  // -D_o diag(b) D_i with the diagonal stored explicitly, so adding diag(h) keeps the pattern.
  elliptic_ = add(-1.0, outer_derivative().matrix().scale_cols(beta_hat_) * inner_derivative().matrix(), 0.0,
                  SparseMatrix::identity(n));
}

const DerivativeOperator& SkDiscretization::inner_derivative() const {
  return variant_ == SkVariant::periodic_upwind ? ops_.minus() : ops_.d1;
}

const DerivativeOperator& SkDiscretization::outer_derivative() const {
  return variant_ == SkVariant::periodic_upwind ? ops_.plus() : ops_.d1;
}

void SkDiscretization::water_height(const State& u, std::vector<double>& h) const {
  const std::size_t n = grid().size();
  h.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    h[i] = u.a[i] + depth_[i] - eta0_;
    if (!(h[i] > 0.0)) {
      throw DomainError("Svaerd-Kalisch: non-positive water height " + std::to_string(h[i]) + " at x = " +
                        std::to_string(grid()[i]));
    }
  }
}

void SkDiscretization::rhs(const State& u, double t, State& dudt) const {
  const std::size_t n = grid().size();
  if (u.size() != n) throw DimensionError("Svaerd-Kalisch rhs: state length does not match the grid");
  if (!u.all_finite()) throw NumericError("Svaerd-Kalisch rhs: state contains NaN or Inf");
  if (dudt.size() != n) dudt = State(n);
  dudt.representation = Representation::primitive;
  const bool reflecting = variant_ == SkVariant::reflecting_beta_only;
  const bool upwind = variant_ == SkVariant::periodic_upwind;
  const DerivativeOperator& d1 = ops_.d1;

  std::vector<double> h;
  water_height(u, h);
  std::vector<double> v(u.b.begin(), u.b.end());
  if (reflecting) v.front() = v.back() = 0.0;

  std::vector<double> hv(n), hvv(n), tmp(n), d_hv(n), d_v(n), d_eta(n), d_hvv(n);
  for (std::size_t i = 0; i < n; ++i) {
    hv[i] = h[i] * v[i];
    hvv[i] = hv[i] * v[i];
  }
  d1.apply(hv, d_hv);
  d1.apply(v, d_v);
  d1.apply(u.a, d_eta);
  d1.apply(hvv, d_hvv);

  std::span<double> eta_t = dudt.a;
  std::vector<double> mom(n);
  for (std::size_t i = 0; i < n; ++i) {
    eta_t[i] = -d_hv[i];
    if (options_.naive) {
      mom[i] = -d_hvv[i] - g_ * h[i] * d_eta[i];
    } else {
      mom[i] = -0.5 * (d_hvv[i] + hv[i] * d_v[i] + v[i] * d_hv[i]) - g_ * h[i] * d_eta[i];
    }
  }

  if (has_alpha_) {
    // y = a D_o (a D_i eta); central: D_i = D_o = D1, upwind: D_i = D+, D_o = D-.
    const DerivativeOperator& d_in = upwind ? ops_.plus() : d1;
    const DerivativeOperator& d_out = upwind ? ops_.minus() : d1;
    std::vector<double> w(n), y(n), vy(n), d_y(n), d_vy(n), d_in_v(n);
    d_in.apply(u.a, w);
    for (std::size_t i = 0; i < n; ++i) w[i] *= alpha_hat_[i];
    d_out.apply(w, y);
    for (std::size_t i = 0; i < n; ++i) {
      y[i] *= alpha_hat_[i];
      vy[i] = v[i] * y[i];
    }
    d_out.apply(y, d_y);
    d_out.apply(vy, d_vy);
    d_in.apply(v, d_in_v);
    for (std::size_t i = 0; i < n; ++i) {
      eta_t[i] += d_y[i];
      if (options_.naive) {
        mom[i] += d_vy[i];
      } else {
        mom[i] += 0.5 * (d_vy[i] + v[i] * d_y[i] + y[i] * d_in_v[i]);
      }
    }
  }

  if (has_gamma_) {
    const DerivativeOperator& d2 = *ops_.d2;
    std::vector<double> c_dv(n), d2v(n), c_d2v(n), t1(n), t2(n);
    d2.apply(v, d2v);
    for (std::size_t i = 0; i < n; ++i) {
      c_dv[i] = gamma_hat_[i] * d_v[i];
      c_d2v[i] = gamma_hat_[i] * d2v[i];
    }
    d2.apply(c_dv, t1);
    d1.apply(c_d2v, t2);
    for (std::size_t i = 0; i < n; ++i) mom[i] += 0.5 * (t1[i] + t2[i]);
  }

  if (options_.source) {
    std::vector<double> s1(n), s2(n);
    options_.source(t, grid().nodes(), s1, s2);
    for (std::size_t i = 0; i < n; ++i) {
      eta_t[i] += s1[i];
      mom[i] += s2[i];
    }
  }

  // (diag(h) - D_o diag(b) D_i) v_t = mom - v eta_t
  std::span<double> v_t = dudt.b;
  for (std::size_t i = 0; i < n; ++i) v_t[i] = mom[i] - v[i] * eta_t[i];
  SparseMatrix system = elliptic_.plus_diagonal(h);
  if (reflecting) {
    const std::size_t rows[] = {0, n - 1};
    system = system.with_identity_rows(rows);
    v_t.front() = v_t.back() = 0.0;
  }
  factor(system).solve_in_place(v_t);
  if (reflecting) v_t.front() = v_t.back() = 0.0;
}

double SkDiscretization::entropy(const State& u) const {
  const std::size_t n = grid().size();
  if (u.size() != n) throw DimensionError("Svaerd-Kalisch entropy: state length does not match the grid");
  std::vector<double> h;
  water_height(u, h);
  std::vector<double> density(n);
  for (std::size_t i = 0; i < n; ++i) {
    density[i] = 0.5 * (h[i] * u.b[i] * u.b[i] + g_ * h[i] * h[i]) + g_ * h[i] * b_[i];
  }
  return integral(density, mass());
}

InvariantValues SkDiscretization::invariants(const State& u) const {
  const std::size_t n = grid().size();
  std::vector<double> h;
  water_height(u, h);
  std::vector<double> p(n);
  for (std::size_t i = 0; i < n; ++i) p[i] = h[i] * u.b[i];
  InvariantValues out;
  out.mass = integral(h, mass());
  out.secondary = integral(p, mass());
  out.energy = entropy(u);
  out.modified_entropy = functional(u);
  return out;
}

double SkDiscretization::functional(const State& u) const {
  const std::size_t n = grid().size();
  std::vector<double> dv = inner_derivative()(u.b);
  std::vector<double> density(n);
  for (std::size_t i = 0; i < n; ++i) density[i] = 0.5 * beta_hat_[i] * dv[i] * dv[i];
  return entropy(u) + integral(density, mass());
}

void SkDiscretization::functional_gradient(const State& u, State& grad) const {
  const std::size_t n = grid().size();
  if (grad.size() != n) grad = State(n);
  std::vector<double> h;
  water_height(u, h);
  std::vector<double> w = inner_derivative()(u.b);
  for (std::size_t i = 0; i < n; ++i) w[i] *= mass()[i] * beta_hat_[i];
  const std::vector<double> dtw = inner_derivative().matrix().transpose() * std::span<const double>(w);
  for (std::size_t i = 0; i < n; ++i) {
    const double m = mass()[i];
    grad.a[i] = m * (0.5 * u.b[i] * u.b[i] + g_ * u.a[i]);
    grad.b[i] = m * h[i] * u.b[i] + dtw[i];
  }
}

SkDiscretization build_sk_discretization(const Grid& grid, int order, const BathymetryFn& bathymetry, double g,
                                         double eta0, const SkParameterSet& params, SkVariant variant,
                                         SkOptions options) {
  OperatorSet ops = variant == SkVariant::periodic_upwind ? make_upwind_operators(grid, order)
                                                          : make_central_operators(grid, order);
  std::vector<double> b(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) b[i] = bathymetry(grid[i]);
  return SkDiscretization(std::move(ops), std::move(b), g, eta0, params, variant, std::move(options));
}

double sk_dispersion_omega(double k, const SkParameterSet& params, double h0, double g) {
  if (!(k > 0.0) || !(h0 > 0.0)) throw DomainError("sk_dispersion_omega: k and h0 must be positive");
  // Plane waves about (h0, 0) with constant coefficients give
  //   A w^2 - B w + C = 0,  A = h0 + b k^2,  B = c k^3 + a k^3 A,  C = a c k^6 - g h0^2 k^2
  // where a = alpha~ sqrt(g h0) h0^2 (the squared alpha coefficient), b = beta~ h0^3, c = gamma~ sqrt(g h0) h0^3.
  const double root = std::sqrt(g * h0);
  const double a = params.alpha_tilde * root * h0 * h0;
  const double b = params.beta_tilde * h0 * h0 * h0;
  const double c = params.gamma_tilde * root * h0 * h0 * h0;
  const double k2 = k * k;
  const double k3 = k2 * k;
  const double qa = h0 + b * k2;
  const double qb = c * k3 + a * k3 * qa;
  const double qc = a * c * k3 * k3 - g * h0 * h0 * k2;
  const double disc = qb * qb - 4.0 * qa * qc;
  if (!(qa > 0.0) || disc < 0.0) {
    throw DomainError("sk_dispersion_omega: no real frequency for k = " + std::to_string(k) + " with set " +
                      params.name);
  }
  const double omega = (qb + std::sqrt(disc)) / (2.0 * qa);
  if (!(omega > 0.0)) {
    throw DomainError("sk_dispersion_omega: no positive frequency for k = " + std::to_string(k) + " with set " +
                      params.name);
  }
  return omega;
}

double euler_phase_speed(double k, double h0, double g) {
  if (!(k > 0.0) || !(h0 > 0.0)) throw DomainError("euler_phase_speed: k and h0 must be positive");
  return std::sqrt(g * std::tanh(k * h0) / k);
}

}  // namespace dsw
