#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "dsw/errors.hpp"
#include "dsw/sbp.hpp"
#include "oracles.hpp"

using namespace dsw;
using std::numbers::pi;

namespace {

Grid periodic(std::size_t n) { return make_uniform_grid(0.0, 1.0, n, BoundaryKind::periodic); }
Grid bounded(std::size_t n) { return make_uniform_grid(0.0, 1.0, n, BoundaryKind::bounded); }

double fourier_error_d1(const DerivativeOperator& d) {
  const Grid& g = d.grid();
  std::vector<double> u(g.size()), du(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) {
    u[i] = std::sin(2.0 * pi * g[i]);
    du[i] = 2.0 * pi * std::cos(2.0 * pi * g[i]);
  }
  return oracle::max_abs_diff(d(u), du);
}

double fourier_error_d2(const DerivativeOperator& d) {
  const Grid& g = d.grid();
  std::vector<double> u(g.size()), d2u(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) {
    u[i] = std::sin(2.0 * pi * g[i]);
    d2u[i] = -4.0 * pi * pi * u[i];
  }
  return oracle::max_abs_diff(d(u), d2u);
}

}  // namespace

TEST(FdWeights, AgreeWithTaylorConditions) {
  const std::vector<std::vector<int>> stencils{{-1, 0, 1}, {-2, -1, 0, 1, 2}, {-1, 0, 1, 2}, {0, 1, 2},
                                               {-4, -3, -2, -1, 0, 1, 2, 3, 4}, {-1, 0, 1, 2, 3}};
  for (const auto& s : stencils) {
    for (int deriv : {1, 2}) {
      const auto w = fd_weights(s, deriv);
      const auto ref = oracle::taylor_weights(s, deriv);
      EXPECT_LE(oracle::max_abs_diff(w, ref), 1e-13);
    }
  }
}

TEST(PeriodicCentral, SecondOrderStencil) {
  const Grid g = periodic(10);
  const DerivativeOperator d = build_periodic_central_d1(g, 2);
  const double dx = g.spacing();
  const Eigen::MatrixXd m = oracle::dense(d.matrix());
  for (Eigen::Index i = 0; i < 10; ++i) {
    EXPECT_DOUBLE_EQ(m(i, (i + 1) % 10), 0.5 / dx);
    EXPECT_DOUBLE_EQ(m(i, (i + 9) % 10), -0.5 / dx);
    EXPECT_EQ(m(i, i), 0.0);
  }
  for (std::size_t i = 0; i < 10; ++i) EXPECT_DOUBLE_EQ(d.mass()[i], dx);
}

TEST(PeriodicCentral, AnnihilatesConstantsExactly) {
  for (int p : {2, 4, 6, 8}) {
    const DerivativeOperator d = build_periodic_central_d1(periodic(33), p);
    const std::vector<double> c(33, 3.7);
    for (double x : d(c)) EXPECT_EQ(x, 0.0);
  }
}

TEST(PeriodicCentral, FourierConvergence) {
  for (int p : {2, 4, 6, 8}) {
    const std::size_t n0 = p == 8 ? 32 : 64;
    const double e1 = fourier_error_d1(build_periodic_central_d1(periodic(n0), p));
    const double e2 = fourier_error_d1(build_periodic_central_d1(periodic(2 * n0), p));
    EXPECT_NEAR(oracle::eoc(e1, e2), p, 0.1) << "p=" << p;
  }
}

TEST(PeriodicCentral, FourthOrderErrorBound) {
  const DerivativeOperator d = build_periodic_central_d1(periodic(64), 4);
  const double dx = 1.0 / 64.0;
  // Leading error term (2 pi)^5 dx^4 / 30.
  EXPECT_LE(fourier_error_d1(d), std::pow(2.0 * pi, 5) * std::pow(dx, 4) / 30.0 * 1.01);
}

TEST(PeriodicCentral, MatchesTaylorOracleAndIsAntisymmetric) {
  const Grid g = periodic(40);
  for (int p : {2, 4, 6, 8}) {
    const DerivativeOperator d = build_periodic_central_d1(g, p);
    std::vector<int> off;
    for (int k = -p / 2; k <= p / 2; ++k) off.push_back(k);
    const auto ref = oracle::taylor_weights(off, 1);
    const Eigen::MatrixXd m = oracle::dense(d.matrix()) * g.spacing();
    for (std::size_t k = 0; k < off.size(); ++k) {
      EXPECT_NEAR(m(5, 5 + off[k]), ref[k], 1e-14);
    }
    const Eigen::MatrixXd mm = oracle::mass(d.mass());
    EXPECT_EQ((mm * oracle::dense(d.matrix()) + oracle::dense(d.matrix()).transpose() * mm).cwiseAbs().maxCoeff(), 0.0);
  }
}

TEST(PeriodicCentral, RejectsBadInput) {
  EXPECT_THROW(build_periodic_central_d1(periodic(32), 3), ConfigError);
  EXPECT_THROW(build_periodic_central_d1(bounded(32), 2), ConfigError);
  EXPECT_THROW(build_periodic_central_d1(periodic(8), 8), ConfigError);
}

TEST(PeriodicUpwind, FirstOrderIsForwardAndBackwardDifference) {
  const Grid g = periodic(12);
  const UpwindOperatorPair pair = build_periodic_upwind(g, 1);
  const Eigen::MatrixXd p = oracle::dense(pair.plus.matrix()) * g.spacing();
  const Eigen::MatrixXd m = oracle::dense(pair.minus.matrix()) * g.spacing();
  for (Eigen::Index i = 0; i < 12; ++i) {
    EXPECT_DOUBLE_EQ(p(i, i), -1.0);
    EXPECT_DOUBLE_EQ(p(i, (i + 1) % 12), 1.0);
    EXPECT_DOUBLE_EQ(m(i, i), 1.0);
    EXPECT_DOUBLE_EQ(m(i, (i + 11) % 12), -1.0);
  }
  EXPECT_EQ((p + m.transpose()).cwiseAbs().maxCoeff(), 0.0);
  // (M/2)(D+ - D-) is dx/2 times the periodic second difference.
  const Eigen::MatrixXd s = 0.5 * (p - m);
  for (Eigen::Index i = 0; i < 12; ++i) {
    EXPECT_DOUBLE_EQ(s(i, i), -1.0);
    EXPECT_DOUBLE_EQ(s(i, (i + 1) % 12), 0.5);
  }
}

TEST(PeriodicUpwind, AverageOfFirstOrderPairIsSecondOrderCentral) {
  const Grid g = periodic(16);
  const DerivativeOperator avg = build_periodic_upwind(g, 1).central();
  const DerivativeOperator c2 = build_periodic_central_d1(g, 2);
  EXPECT_EQ((oracle::dense(avg.matrix()) - oracle::dense(c2.matrix())).cwiseAbs().maxCoeff(), 0.0);
}

TEST(PeriodicUpwind, IdentityDissipationAndAccuracy) {
  std::mt19937_64 rng(11);
  for (int p : {1, 2, 3, 4, 5, 6}) {
    const Grid g = periodic(64);
    const UpwindOperatorPair pair = build_periodic_upwind(g, p);
    const SbpReport r = verify_sbp_identity(pair);
    EXPECT_TRUE(r.pass) << "p=" << p << " residual " << r.residual;
    EXPECT_LE(upwind_dissipation_max_eigenvalue(pair), 1e-12);
    // Dense eigenvalue oracle of the symmetric part.
    const Eigen::MatrixXd mm = oracle::mass(pair.mass());
    const Eigen::MatrixXd s = 0.5 * mm * (oracle::dense(pair.plus.matrix()) - oracle::dense(pair.minus.matrix()));
    const Eigen::MatrixXd sym = 0.5 * (s + s.transpose());
    EXPECT_LE((s - s.transpose()).cwiseAbs().maxCoeff(), 1e-12);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(sym);
    EXPECT_LE(es.eigenvalues().maxCoeff(), 1e-12);
    for (int trial = 0; trial < 100; ++trial) {
      const auto u = oracle::random_vector(g.size(), rng);
      const double norm2 = weighted_inner_product(u, u, pair.mass());
      EXPECT_GE(weighted_inner_product(pair.minus(u), u, pair.mass()), -1e-12 * norm2);
      EXPECT_LE(weighted_inner_product(pair.plus(u), u, pair.mass()), 1e-12 * norm2);
    }
    const double e1 = fourier_error_d1(build_periodic_upwind(periodic(64), p).plus);
    const double e2 = fourier_error_d1(build_periodic_upwind(periodic(128), p).plus);
    EXPECT_NEAR(oracle::eoc(e1, e2), p, 0.25) << "p=" << p;
    const DerivativeOperator c = pair.central();
    EXPECT_TRUE(verify_sbp_identity(c).pass);
    EXPECT_EQ(c.kind(), OperatorKind::periodic_central_d1);
  }
}

TEST(PeriodicUpwind, RejectsUnsupportedOrder) {
  EXPECT_THROW(build_periodic_upwind(periodic(32), 7), ConfigError);
  EXPECT_THROW(build_periodic_upwind(periodic(32), 0), ConfigError);
}

TEST(PeriodicD2, NarrowSecondOrderStencil) {
  const Grid g = periodic(10);
  const DerivativeOperator d = build_periodic_d2(g, 2, D2Flavor::narrow);
  const Eigen::MatrixXd m = oracle::dense(d.matrix()) * g.spacing() * g.spacing();
  for (Eigen::Index i = 0; i < 10; ++i) {
    EXPECT_DOUBLE_EQ(m(i, i), -2.0);
    EXPECT_DOUBLE_EQ(m(i, (i + 1) % 10), 1.0);
    EXPECT_DOUBLE_EQ(m(i, (i + 9) % 10), 1.0);
  }
  EXPECT_TRUE(verify_sbp_identity(d).pass);
}

TEST(PeriodicD2, WideEqualsSquareOfCentral) {
  const Grid g = periodic(30);
  for (int p : {2, 4, 6, 8}) {
    const Eigen::MatrixXd d1 = oracle::dense(build_periodic_central_d1(g, p).matrix());
    const Eigen::MatrixXd d2 = oracle::dense(build_periodic_d2(g, p, D2Flavor::wide).matrix());
    EXPECT_LE((d2 - d1 * d1).cwiseAbs().maxCoeff(), 1e-10 * d2.cwiseAbs().maxCoeff());
  }
}

TEST(PeriodicD2, UpwindCompositeEqualsProduct) {
  const Grid g = periodic(30);
  for (int p : {1, 2, 3, 4, 5, 6}) {
    const UpwindOperatorPair pair = build_periodic_upwind(g, p);
    const Eigen::MatrixXd ref = oracle::dense(pair.plus.matrix()) * oracle::dense(pair.minus.matrix());
    const Eigen::MatrixXd d2 = oracle::dense(build_periodic_d2(g, p, D2Flavor::upwind_composite).matrix());
    EXPECT_LE((d2 - ref).cwiseAbs().maxCoeff(), 1e-10 * ref.cwiseAbs().maxCoeff());
  }
}

TEST(PeriodicD2, ConstantsAndConvergence) {
  for (D2Flavor flavor : {D2Flavor::narrow, D2Flavor::wide}) {
    for (int p : {2, 4, 6, 8}) {
      const DerivativeOperator d = build_periodic_d2(periodic(64), p, flavor);
      EXPECT_TRUE(verify_sbp_identity(d).pass);
      const std::vector<double> c(64, -1.25);
      for (double x : d(c)) EXPECT_EQ(x, 0.0);
      const std::size_t n0 = p == 8 ? 32 : 64;
      const double e1 = fourier_error_d2(build_periodic_d2(periodic(n0), p, flavor));
      const double e2 = fourier_error_d2(build_periodic_d2(periodic(2 * n0), p, flavor));
      EXPECT_NEAR(oracle::eoc(e1, e2), p, 0.25) << "p=" << p;
    }
  }
  for (int p : {1, 2, 3, 4, 5, 6}) {
    const double e1 = fourier_error_d2(build_periodic_d2(periodic(64), p, D2Flavor::upwind_composite));
    const double e2 = fourier_error_d2(build_periodic_d2(periodic(128), p, D2Flavor::upwind_composite));
    // D+ D- of odd order p gains one order from symmetric cancellation.
    const int expected = p % 2 == 1 ? p + 1 : p;
    EXPECT_NEAR(oracle::eoc(e1, e2), expected, 0.25) << "p=" << p;
  }
}

TEST(PeriodicLemma, ConstantsInLeftNullspaceAndSkewness) {
  std::mt19937_64 rng(5);
  const Grid g = periodic(50);
  std::vector<DerivativeOperator> ops;
  for (int p : {2, 4, 6, 8}) {
    ops.push_back(build_periodic_central_d1(g, p));
    ops.push_back(build_periodic_d2(g, p, D2Flavor::narrow));
  }
  for (int p : {1, 2, 3, 4, 5, 6}) {
    const UpwindOperatorPair pair = build_periodic_upwind(g, p);
    ops.push_back(pair.plus);
    ops.push_back(pair.minus);
  }
  for (const auto& d : ops) {
    const Eigen::RowVectorXd row = Eigen::RowVectorXd::Ones(50) * oracle::mass(d.mass()) * oracle::dense(d.matrix());
    EXPECT_LE(row.cwiseAbs().maxCoeff(), 1e-13 * oracle::dense(d.matrix()).cwiseAbs().maxCoeff())
        << to_string(d.kind());
  }
  for (int p : {2, 4, 6, 8}) {
    const DerivativeOperator d = build_periodic_central_d1(g, p);
    for (int trial = 0; trial < 100; ++trial) {
      const auto u = oracle::random_vector(g.size(), rng);
      EXPECT_LE(std::abs(weighted_inner_product(d(u), u, d.mass())), 1e-12 * weighted_inner_product(u, u, d.mass()));
    }
  }
}

TEST(BoundedCentral, SecondOrderMatricesAreTheClassicalOnes) {
  const Grid g = bounded(6);
  const DerivativeOperator d = build_bounded_central_d1(g, 2);
  const double dx = g.spacing();
  const Eigen::MatrixXd m = oracle::dense(d.matrix()) * dx;
  EXPECT_DOUBLE_EQ(m(0, 0), -1.0);
  EXPECT_DOUBLE_EQ(m(0, 1), 1.0);
  EXPECT_DOUBLE_EQ(m(5, 4), -1.0);
  EXPECT_DOUBLE_EQ(m(5, 5), 1.0);
  for (Eigen::Index i = 1; i < 5; ++i) {
    EXPECT_DOUBLE_EQ(m(i, i - 1), -0.5);
    EXPECT_DOUBLE_EQ(m(i, i + 1), 0.5);
  }
  EXPECT_DOUBLE_EQ(d.mass()[0], 0.5 * dx);
  EXPECT_DOUBLE_EQ(d.mass()[5], 0.5 * dx);
  EXPECT_DOUBLE_EQ(d.mass()[2], dx);
  const SbpReport r = verify_sbp_identity(d);
  EXPECT_EQ(r.residual, 0.0);
}

TEST(BoundedCentral, MonomialOrderConditions) {
  for (int p : {2, 4, 6}) {
    const Grid g = make_uniform_grid(-0.3, 1.1, 29, BoundaryKind::bounded);
    const DerivativeOperator d = build_bounded_central_d1(g, p);
    const std::size_t r = p == 2 ? 1 : (p == 4 ? 4 : 6);
    for (int k = 0; k <= p; ++k) {
      std::vector<double> u(g.size()), du(g.size());
      for (std::size_t i = 0; i < g.size(); ++i) {
        u[i] = std::pow(g[i], k);
        du[i] = k == 0 ? 0.0 : k * std::pow(g[i], k - 1);
      }
      const auto got = d(u);
      for (std::size_t i = 0; i < g.size(); ++i) {
        const bool boundary_row = i < r || i >= g.size() - r;
        if (boundary_row && k > p / 2) continue;
        EXPECT_NEAR(got[i], du[i], 1e-10) << "p=" << p << " k=" << k << " row " << i;
      }
    }
  }
}

TEST(BoundedCentral, TelescopingAndIdentity) {
  std::mt19937_64 rng(9);
  for (int p : {2, 4, 6}) {
    const Grid g = bounded(40);
    const DerivativeOperator d = build_bounded_central_d1(g, p);
    const SbpReport r = verify_sbp_identity(d);
    EXPECT_TRUE(r.pass) << "p=" << p << " residual " << r.residual;
    const Eigen::MatrixXd mm = oracle::mass(d.mass());
    const Eigen::MatrixXd dd = oracle::dense(d.matrix());
    Eigen::MatrixXd b = Eigen::MatrixXd::Zero(40, 40);
    b(0, 0) = -1.0;
    b(39, 39) = 1.0;
    EXPECT_LE((mm * dd + dd.transpose() * mm - b).cwiseAbs().maxCoeff(), 1e-13);
    for (int trial = 0; trial < 20; ++trial) {
      const auto u = oracle::random_vector(g.size(), rng);
      const std::vector<double> one(g.size(), 1.0);
      EXPECT_NEAR(weighted_inner_product(one, d(u), d.mass()), u.back() - u.front(), 1e-12);
    }
  }
}

TEST(BoundedCentral, RejectsTooFewNodes) {
  EXPECT_THROW(build_bounded_central_d1(bounded(10), 6), ConfigError);
  EXPECT_THROW(build_bounded_central_d1(bounded(20), 8), ConfigError);
  EXPECT_THROW(build_bounded_central_d1(periodic(20), 2), ConfigError);
}

TEST(BoundedUpwind, IdentityDissipationAndConsistency) {
  for (int p : {2, 4, 6}) {
    const Grid g = bounded(41);
    const UpwindOperatorPair pair = build_bounded_upwind(g, p);
    const SbpReport r = verify_sbp_identity(pair);
    EXPECT_TRUE(r.pass) << "p=" << p << " residual " << r.residual;
    const std::vector<double> c(g.size(), 2.0);
    for (double x : pair.plus(c)) EXPECT_EQ(x, 0.0);
    for (double x : pair.minus(c)) EXPECT_EQ(x, 0.0);
    // the dissipation term limits boundary accuracy to order p/2
    std::vector<double> errors;
    for (std::size_t n : {41u, 81u, 161u}) {
      const Grid gn = bounded(n);
      const UpwindOperatorPair pn = build_bounded_upwind(gn, p);
      std::vector<double> u(n), du(n);
      for (std::size_t i = 0; i < n; ++i) {
        u[i] = std::sin(2.0 * gn[i]);
        du[i] = 2.0 * std::cos(2.0 * gn[i]);
      }
      errors.push_back(std::max(oracle::max_abs_diff(pn.plus(u), du), oracle::max_abs_diff(pn.minus(u), du)));
    }
    EXPECT_GE(oracle::eoc(errors[1], errors[2]), p / 2.0 - 0.2) << "p=" << p;
  }
}

TEST(SbpReport, PerturbedOperatorFails) {
  const Grid g = periodic(32);
  const DerivativeOperator d = build_periodic_central_d1(g, 4);
  std::vector<double> dense = d.matrix().to_dense();
  dense[3 * 32 + 4] += 1e-6;
  const DerivativeOperator bad(g, d.kind(), 4, SparseMatrix::from_dense(32, 32, dense), d.mass());
  const SbpReport r = verify_sbp_identity(bad);
  EXPECT_FALSE(r.pass);
  EXPECT_NEAR(r.residual, 1e-6 * d.mass()[3], 1e-9 * d.mass()[3]);
}

TEST(SbpReport, EveryConstructedOperatorPasses) {
  const Grid gp = periodic(64);
  const Grid gb = bounded(64);
  for (int p : {2, 4, 6, 8}) {
    EXPECT_TRUE(verify_sbp_identity(build_periodic_central_d1(gp, p)).pass);
    EXPECT_TRUE(verify_sbp_identity(build_periodic_d2(gp, p, D2Flavor::narrow)).pass);
    EXPECT_TRUE(verify_sbp_identity(build_periodic_d2(gp, p, D2Flavor::wide)).pass);
  }
  for (int p : {1, 2, 3, 4, 5, 6}) {
    EXPECT_TRUE(verify_sbp_identity(build_periodic_upwind(gp, p)).pass);
    EXPECT_TRUE(verify_sbp_identity(build_periodic_d2(gp, p, D2Flavor::upwind_composite)).pass);
  }
  for (int p : {2, 4, 6}) {
    EXPECT_TRUE(verify_sbp_identity(build_bounded_central_d1(gb, p)).pass);
    EXPECT_TRUE(verify_sbp_identity(build_bounded_upwind(gb, p)).pass);
  }
}

TEST(OperatorSet, Composition) {
  const OperatorSet central = make_central_operators(periodic(32), 4);
  EXPECT_FALSE(central.upwind);
  EXPECT_EQ(central.second().kind(), OperatorKind::periodic_d2_narrow);
  EXPECT_THROW(central.plus(), ConfigError);
  const OperatorSet up = make_upwind_operators(periodic(32), 3);
  EXPECT_EQ(up.d1.accuracy_order(), 4);
  EXPECT_EQ(up.second().kind(), OperatorKind::periodic_d2_upwind);
  const OperatorSet refl = make_central_operators(bounded(32), 4);
  EXPECT_THROW(refl.second(), ConfigError);
}
