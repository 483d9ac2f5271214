#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "dsw/bbm_bbm.hpp"
#include "dsw/errors.hpp"
#include "dsw/manufactured.hpp"
#include "oracles.hpp"

using namespace dsw;
using std::numbers::pi;

namespace {

constexpr double kG = 9.81;

double smooth_bathymetry(double x) { return -2.0 - 0.5 * std::cos(2.0 * pi * x) + 0.2 * std::sin(4.0 * pi * x); }
double bump_bathymetry(double x) { return -1.0 + 0.3 * std::exp(-20.0 * (x - 0.1) * (x - 0.1)); }

BbmBbmDiscretization make(BbmVariant v, std::size_t n, int p, BathymetryFn b = smooth_bathymetry) {
  const BoundaryKind kind = is_periodic(v) ? BoundaryKind::periodic : BoundaryKind::bounded;
  const double lo = is_periodic(v) ? 0.0 : -1.0;
  const Grid g = make_uniform_grid(lo, 1.0, n, kind);
  if (!is_periodic(v)) b = bump_bathymetry;
  return build_bbm_discretization(g, p, b, kG, v);
}

State random_state(const BbmBbmDiscretization& d, std::mt19937_64& rng) {
  State u(oracle::random_smooth(d.grid(), rng, 4, 0.2), oracle::random_smooth(d.grid(), rng, 4, 0.5));
  if (!is_periodic(d.variant())) {
    // v must vanish at the walls
    for (std::size_t i = 0; i < u.size(); ++i) u.b[i] *= std::sin(pi * (d.grid()[i] + 1.0) / 2.0);
    u.b.front() = u.b.back() = 0.0;
  }
  return u;
}

const BbmVariant kConservative[] = {BbmVariant::periodic_central_wide, BbmVariant::periodic_upwind,
                                    BbmVariant::reflecting_central, BbmVariant::reflecting_upwind};

}  // namespace

TEST(BbmBbm, ConstantDepthMatchesReferenceFormula) {
  const Grid g = make_uniform_grid(0.0, 1.0, 40, BoundaryKind::periodic);
  const double depth = 1.3;
  const auto d = build_bbm_discretization(g, 4, [&](double) { return -depth; }, kG, BbmVariant::periodic_central_wide);
  std::mt19937_64 rng(1);
  const State u(oracle::random_smooth(g, rng), oracle::random_smooth(g, rng));
  const State du = d.rhs(u, 0.0);
  // eta_t = -(I - D^2/6 D1^2)^{-1} D1((eta + D) v), v_t = -(...)^{-1} D1(g eta + v^2/2)
  const Eigen::MatrixXd d1 = oracle::dense(build_periodic_central_d1(g, 4).matrix());
  const Eigen::MatrixXd a = Eigen::MatrixXd::Identity(40, 40) - depth * depth / 6.0 * d1 * d1;
  const Eigen::VectorXd eta = oracle::vec(u.a);
  const Eigen::VectorXd v = oracle::vec(u.b);
  const Eigen::VectorXd f1 = (eta.array() + depth) * v.array();
  const Eigen::VectorXd f2 = kG * eta.array() + 0.5 * v.array().square();
  const Eigen::VectorXd eta_t = -a.lu().solve(d1 * f1);
  const Eigen::VectorXd v_t = -a.lu().solve(d1 * f2);
  EXPECT_LE((oracle::vec(du.a) - eta_t).cwiseAbs().maxCoeff(), 1e-13 * (1.0 + eta_t.cwiseAbs().maxCoeff()));
  EXPECT_LE((oracle::vec(du.b) - v_t).cwiseAbs().maxCoeff(), 1e-13 * (1.0 + v_t.cwiseAbs().maxCoeff()));
}

TEST(BbmBbm, ConstantDepthVariantAgreesWithNarrowOracle) {
  const Grid g = make_uniform_grid(0.0, 1.0, 40, BoundaryKind::periodic);
  const double depth = 2.0;
  const auto d = build_bbm_discretization(g, 6, [&](double) { return -depth; }, kG, BbmVariant::periodic_constant_depth);
  std::mt19937_64 rng(3);
  const State u(oracle::random_smooth(g, rng), oracle::random_smooth(g, rng));
  const State du = d.rhs(u, 0.0);
  const Eigen::MatrixXd d1 = oracle::dense(build_periodic_central_d1(g, 6).matrix());
  const Eigen::MatrixXd d2 = oracle::dense(build_periodic_d2(g, 6, D2Flavor::narrow).matrix());
  const Eigen::MatrixXd a = Eigen::MatrixXd::Identity(40, 40) - depth * depth / 6.0 * d2;
  const Eigen::VectorXd f2 = kG * oracle::vec(u.a).array() + 0.5 * oracle::vec(u.b).array().square();
  const Eigen::VectorXd v_t = -a.lu().solve(d1 * f2);
  EXPECT_LE((oracle::vec(du.b) - v_t).cwiseAbs().maxCoeff(), 1e-12 * (1.0 + v_t.cwiseAbs().maxCoeff()));
  EXPECT_THROW(build_bbm_discretization(g, 6, smooth_bathymetry, kG, BbmVariant::periodic_constant_depth), ConfigError);
}

TEST(BbmBbm, LakeAtRestIsExactlySteady) {
  for (BbmVariant v : {BbmVariant::periodic_central_wide, BbmVariant::periodic_central_narrow,
                       BbmVariant::periodic_upwind, BbmVariant::reflecting_central, BbmVariant::reflecting_upwind}) {
    for (int p : {2, 4, 6}) {
      const auto d = make(v, 60, p);
      const State u(std::vector<double>(60, 0.37), std::vector<double>(60, 0.0));
      const State du = d.rhs(u, 0.0);
      for (std::size_t i = 0; i < 60; ++i) {
        EXPECT_EQ(du.a[i], 0.0);
        EXPECT_EQ(du.b[i], 0.0);
      }
    }
  }
}

TEST(BbmBbm, ReflectingVelocityBoundaryIsZero) {
  std::mt19937_64 rng(4);
  for (BbmVariant v : {BbmVariant::reflecting_central, BbmVariant::reflecting_upwind}) {
    const auto d = make(v, 50, 4);
    const State du = d.rhs(random_state(d, rng), 0.0);
    EXPECT_EQ(du.b.front(), 0.0);
    EXPECT_EQ(du.b.back(), 0.0);
    std::vector<double> rhs = oracle::random_vector(50, rng);
    rhs.front() = rhs.back() = 0.0;
    const auto x = d.solve_velocity_system(rhs);
    EXPECT_EQ(x.front(), 0.0);
    EXPECT_EQ(x.back(), 0.0);
  }
}

TEST(BbmBbm, SemidiscreteEnergyConservation) {
  std::mt19937_64 rng(5);
  for (BbmVariant v : kConservative) {
    for (int p : {2, 4, 6}) {
      const auto d = make(v, 64, p);
      for (int trial = 0; trial < 5; ++trial) {
        const State u = random_state(d, rng);
        State grad(u.size());
        d.functional_gradient(u, grad);
        const State du = d.rhs(u, 0.0);
        double rate = 0.0;
        double scale = 0.0;
        for (std::size_t i = 0; i < u.size(); ++i) {
          rate += grad.a[i] * du.a[i] + grad.b[i] * du.b[i];
          scale += std::abs(grad.a[i] * du.a[i]) + std::abs(grad.b[i] * du.b[i]);
        }
        EXPECT_LE(std::abs(rate), 1e-11 * scale) << to_string(v) << " p=" << p;
      }
    }
  }
}

TEST(BbmBbm, SwappedUpwindIsAlsoConservative) {
  std::mt19937_64 rng(6);
  const Grid g = make_uniform_grid(0.0, 1.0, 64, BoundaryKind::periodic);
  BbmOptions opt;
  opt.swap_upwind = true;
  const auto d = build_bbm_discretization(g, 3, smooth_bathymetry, kG, BbmVariant::periodic_upwind, opt);
  const State u = random_state(d, rng);
  EXPECT_LE(std::abs(d.functional_rate(u, 0.0)), 1e-11 * std::abs(d.functional(u)));
}

TEST(BbmBbm, NarrowVariantViolatesEnergyConservation) {
  std::mt19937_64 rng(7);
  const auto wide = make(BbmVariant::periodic_central_wide, 64, 2);
  const auto narrow = make(BbmVariant::periodic_central_narrow, 64, 2);
  EXPECT_FALSE(narrow.conserves_functional());
  const State u = random_state(narrow, rng);
  const double r_wide = std::abs(wide.functional_rate(u, 0.0));
  const double r_narrow = std::abs(narrow.functional_rate(u, 0.0));
  EXPECT_GT(r_narrow, 1e4 * std::max(r_wide, 1e-16));
}

TEST(BbmBbm, MassAndVelocityRates) {
  std::mt19937_64 rng(8);
  for (BbmVariant v : {BbmVariant::periodic_central_wide, BbmVariant::periodic_central_narrow,
                       BbmVariant::periodic_upwind, BbmVariant::reflecting_central, BbmVariant::reflecting_upwind}) {
    const auto d = make(v, 64, 4);
    const State u = random_state(d, rng);
    const State du = d.rhs(u, 0.0);
    const double scale = l2_norm(du.a, d.mass()) + l2_norm(du.b, d.mass());
    EXPECT_LE(std::abs(integral(du.a, d.mass())), 1e-12 * scale) << to_string(v);
    if (is_periodic(v)) EXPECT_LE(std::abs(integral(du.b, d.mass())), 1e-12 * scale) << to_string(v);
  }
}

TEST(BbmBbm, EllipticOperatorsArePositive) {
  std::mt19937_64 rng(9);
  for (BbmVariant v : kConservative) {
    const auto d = make(v, 48, 4);
    const Eigen::MatrixXd m = oracle::mass(d.mass());
    const Eigen::MatrixXd ma = m * oracle::dense(d.mass_equation_operator());
    EXPECT_LE((ma - ma.transpose()).cwiseAbs().maxCoeff(), 1e-12 * ma.cwiseAbs().maxCoeff()) << to_string(v);
    for (int trial = 0; trial < 20; ++trial) {
      const Eigen::VectorXd x = oracle::vec(oracle::random_vector(48, rng));
      EXPECT_GT(x.dot(ma * x), 0.0);
    }
  }
  // M A_v K^{-1} = M K^{-1} + D1^T M D1 / 6 for the periodic wide variant.
  const auto d = make(BbmVariant::periodic_central_wide, 48, 4);
  std::vector<double> kinv(48);
  for (std::size_t i = 0; i < 48; ++i) kinv[i] = 1.0 / (d.still_depth()[i] * d.still_depth()[i]);
  const Eigen::MatrixXd mak =
      oracle::mass(d.mass()) * oracle::dense(d.velocity_equation_operator()) * oracle::vec(kinv).asDiagonal();
  EXPECT_LE((mak - mak.transpose()).cwiseAbs().maxCoeff(), 1e-12 * mak.cwiseAbs().maxCoeff());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(0.5 * (mak + mak.transpose()));
  EXPECT_GT(es.eigenvalues().minCoeff(), 0.0);
}

TEST(BbmBbm, InvariantsOfSimpleStates) {
  const Grid g = make_uniform_grid(-1.0, 1.0, 41, BoundaryKind::bounded);
  const auto d = build_bbm_discretization(g, 2, [](double) { return -1.0; }, kG, BbmVariant::reflecting_central);
  const State zero(41);
  const InvariantValues z = d.invariants(zero);
  EXPECT_EQ(z.mass, 0.0);
  EXPECT_EQ(z.secondary, 0.0);
  EXPECT_EQ(z.energy, 0.0);
  const State lake(std::vector<double>(41, 2.0), std::vector<double>(41, 0.0));
  const InvariantValues l = d.invariants(lake);
  EXPECT_NEAR(l.mass, 4.0, 1e-14);
  EXPECT_EQ(l.secondary, 0.0);
  EXPECT_NEAR(l.energy, 0.5 * kG * 4.0 * 2.0, 1e-12);
}

TEST(BbmBbm, ManufacturedResidualConverges) {
  using manufactured::Case;
  struct Setup {
    BbmVariant variant;
    int p;
  };
  for (const Setup s : {Setup{BbmVariant::periodic_upwind, 2}, Setup{BbmVariant::periodic_upwind, 3},
                        Setup{BbmVariant::periodic_upwind, 4}, Setup{BbmVariant::periodic_central_wide, 4},
                        Setup{BbmVariant::periodic_central_wide, 6}}) {
    std::vector<double> errors;
    for (std::size_t n : {64u, 128u}) {
      const Grid g = make_uniform_grid(0.0, 1.0, n, BoundaryKind::periodic);
      BbmOptions opt;
      opt.source = manufactured::bbm_source(Case::periodic, kG);
      const auto d = build_bbm_discretization(g, s.p, manufactured::bathymetry, kG, s.variant, opt);
      const double t = 0.3;
      const State u = manufactured::exact(Case::periodic, t, g.nodes());
      const State du = d.rhs(u, t);
      std::vector<double> eta_t(n), v_t(n);
      for (std::size_t i = 0; i < n; ++i) {
        const double x = g[i];
        eta_t[i] = std::exp(t) * (std::cos(2 * pi * (x - 2 * t)) + 4 * pi * std::sin(2 * pi * (x - 2 * t)));
        v_t[i] = std::exp(0.5 * t) * (0.5 * std::sin(2 * pi * (x - 0.5 * t)) - pi * std::cos(2 * pi * (x - 0.5 * t)));
      }
      errors.push_back(oracle::max_abs_diff(du.a, eta_t) + oracle::max_abs_diff(du.b, v_t));
    }
    EXPECT_GE(oracle::eoc(errors[0], errors[1]), s.p - 0.3) << to_string(s.variant) << " p=" << s.p;
  }
}

TEST(BbmBbm, RejectsInconsistentSetup) {
  const Grid gp = make_uniform_grid(0.0, 1.0, 32, BoundaryKind::periodic);
  const Grid gb = make_uniform_grid(0.0, 1.0, 32, BoundaryKind::bounded);
  EXPECT_THROW(build_bbm_discretization(gb, 2, smooth_bathymetry, kG, BbmVariant::periodic_central_wide), ConfigError);
  EXPECT_THROW(build_bbm_discretization(gp, 2, smooth_bathymetry, kG, BbmVariant::reflecting_central), ConfigError);
  EXPECT_THROW(BbmBbmDiscretization(make_upwind_operators(gp, 2), std::vector<double>(32, -1.0), kG,
                                    BbmVariant::periodic_central_wide),
               ConfigError);
  EXPECT_THROW(build_bbm_discretization(gp, 2, [](double x) { return x - 0.5; }, kG, BbmVariant::periodic_central_wide),
               DomainError);
  const auto d = make(BbmVariant::periodic_central_wide, 32, 2);
  State bad(32);
  bad.a[3] = std::nan("");
  EXPECT_THROW(d.rhs(bad, 0.0), NumericError);
}

TEST(Soliton, PeakValues) {
  const std::vector<double> x{0.0};
  const State s = bbm_soliton(0.0, x, kG, 2.0, 0.0);
  EXPECT_DOUBLE_EQ(s.a[0], -7.5);
  EXPECT_NEAR(s.b[0], 7.5 * std::sqrt(19.62), 1e-12);
}

TEST(Soliton, DecaysAndTranslates) {
  const std::vector<double> far{200.0, -200.0};
  const State s = bbm_soliton(0.0, far, kG, 2.0, 0.0);
  EXPECT_LE(std::abs(s.a[0]) + std::abs(s.b[0]) + std::abs(s.a[1]) + std::abs(s.b[1]), 1e-30);
  const double c = bbm_soliton_speed(kG, 2.0);
  const std::vector<double> x{-3.0, 0.1, 2.5};
  std::vector<double> shifted(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) shifted[i] = x[i] - c * 1.7;
  const State a = bbm_soliton(1.7, x, kG, 2.0, 0.0);
  const State b = bbm_soliton(0.0, shifted, kG, 2.0, 0.0);
  for (std::size_t i = 0; i < x.size(); ++i) {
    EXPECT_NEAR(a.a[i], b.a[i], 1e-13);
    EXPECT_NEAR(a.b[i], b.b[i], 1e-13);
  }
}

TEST(BbmPhaseSpeed, Values) {
  EXPECT_NEAR(bbm_phase_speed(1e-8, 0.8, kG), std::sqrt(kG * 0.8), 1e-12);
  EXPECT_NEAR(bbm_phase_speed(1e-8, 0.8, kG), 2.801428, 1e-6);
  EXPECT_NEAR(bbm_phase_speed(0.8, 0.8, kG), 2.6224, 5e-5);
  double prev = bbm_phase_speed(0.01, 0.8, kG);
  for (double k = 0.1; k < 30.0; k += 0.1) {
    const double c = bbm_phase_speed(k, 0.8, kG);
    EXPECT_LT(c, prev);
    prev = c;
  }
}
