#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "dsw/errors.hpp"
#include "dsw/grid.hpp"
#include "dsw/sbp.hpp"
#include "oracles.hpp"

using namespace dsw;

TEST(Grid, PeriodicExcludesRightEnd) {
  const Grid g = make_uniform_grid(0.0, 1.0, 4, BoundaryKind::periodic);
  ASSERT_EQ(g.size(), 4u);
  EXPECT_DOUBLE_EQ(g.spacing(), 0.25);
  const double expected[] = {0.0, 0.25, 0.5, 0.75};
  for (std::size_t i = 0; i < 4; ++i) EXPECT_DOUBLE_EQ(g[i], expected[i]);
}

TEST(Grid, BoundedIncludesBothEnds) {
  const Grid g = make_uniform_grid(-1.0, 1.0, 3, BoundaryKind::bounded);
  EXPECT_DOUBLE_EQ(g.spacing(), 1.0);
  EXPECT_DOUBLE_EQ(g[0], -1.0);
  EXPECT_DOUBLE_EQ(g[1], 0.0);
  EXPECT_DOUBLE_EQ(g[2], 1.0);
}

TEST(Grid, BoundedLastNodeIsRightEnd) {
  const Grid g = make_uniform_grid(0.1, 0.7, 31, BoundaryKind::bounded);
  EXPECT_EQ(g[30], 0.7);
}

TEST(Grid, WaveTankSpacing) {
  const Grid g = make_uniform_grid(-138.0, 46.0, 512, BoundaryKind::periodic);
  EXPECT_DOUBLE_EQ(g.spacing(), 0.359375);
}

TEST(Grid, RejectsDegenerateInput) {
  EXPECT_THROW(make_uniform_grid(1.0, 1.0, 10, BoundaryKind::bounded), ConfigError);
  EXPECT_THROW(make_uniform_grid(2.0, 1.0, 10, BoundaryKind::periodic), ConfigError);
  EXPECT_THROW(make_uniform_grid(0.0, 1.0, 2, BoundaryKind::periodic), ConfigError);
}

TEST(Quadrature, ConstantsAreExact) {
  for (int p : {2, 4, 6}) {
    const Grid g = make_uniform_grid(0.0, 1.0, 40, BoundaryKind::bounded);
    const DerivativeOperator d = build_bounded_central_d1(g, p);
    const std::vector<double> one(g.size(), 1.0);
    EXPECT_NEAR(integral(one, d.mass()), 1.0, 1e-14) << "p=" << p;
  }
  const Grid gp = make_uniform_grid(0.0, 1.0, 37, BoundaryKind::periodic);
  const std::vector<double> one(gp.size(), 1.0);
  EXPECT_NEAR(integral(one, build_periodic_central_d1(gp, 4).mass()), 1.0, 1e-14);

  const Grid g2 = make_uniform_grid(-1.0, 1.0, 50, BoundaryKind::bounded);
  const std::vector<double> two(g2.size(), 2.0);
  EXPECT_NEAR(integral(two, build_bounded_central_d1(g2, 2).mass()), 4.0, 1e-14);
}

TEST(Quadrature, PeriodicSineIntegratesToZero) {
  const Grid g = make_uniform_grid(0.0, 1.0, 64, BoundaryKind::periodic);
  std::vector<double> u(g.size());
  for (std::size_t i = 0; i < u.size(); ++i) u[i] = std::sin(2.0 * std::numbers::pi * g[i]);
  EXPECT_NEAR(integral(u, build_periodic_central_d1(g, 2).mass()), 0.0, 1e-13);
}

TEST(Quadrature, BoundedMonomialsUpToClosureDegree) {
  // A diagonal norm of interior order p integrates x^k exactly for k < p.
  const Grid g = make_uniform_grid(0.0, 1.0, 41, BoundaryKind::bounded);
  for (int p : {2, 4, 6}) {
    const MassMatrix m = build_bounded_central_d1(g, p).mass();
    for (int k = 0; k < p; ++k) {
      std::vector<double> u(g.size());
      for (std::size_t i = 0; i < u.size(); ++i) u[i] = std::pow(g[i], k);
      EXPECT_NEAR(integral(u, m), 1.0 / (k + 1), 1e-13) << "p=" << p << " k=" << k;
    }
  }
}

TEST(InnerProduct, SymmetricAndPositive) {
  std::mt19937_64 rng(7);
  const Grid g = make_uniform_grid(0.0, 1.0, 30, BoundaryKind::bounded);
  const MassMatrix m = build_bounded_central_d1(g, 4).mass();
  std::vector<double> zero(g.size(), 0.0);
  EXPECT_EQ(weighted_inner_product(zero, zero, m), 0.0);
  EXPECT_EQ(l2_norm(zero, m), 0.0);
  for (int trial = 0; trial < 20; ++trial) {
    const auto u = oracle::random_vector(g.size(), rng);
    const auto v = oracle::random_vector(g.size(), rng);
    EXPECT_EQ(weighted_inner_product(u, v, m), weighted_inner_product(v, u, m));
    EXPECT_GT(l2_norm(u, m), 0.0);
  }
  const std::vector<double> c(g.size(), -3.5);
  EXPECT_NEAR(l2_norm(c, m), 3.5, 1e-14);
  EXPECT_DOUBLE_EQ(linf_norm(c), 3.5);
}

TEST(InnerProduct, LengthMismatch) {
  const MassMatrix m(std::vector<double>(5, 0.1));
  const std::vector<double> u(4, 1.0);
  EXPECT_THROW(integral(u, m), DimensionError);
  EXPECT_THROW(weighted_inner_product(u, u, m), DimensionError);
}

TEST(MassMatrix, RejectsNonPositiveWeights) {
  EXPECT_THROW(MassMatrix(std::vector<double>{1.0, 0.0, 1.0}), ConfigError);
}

TEST(State, RepresentationRoundTrip) {
  std::mt19937_64 rng(3);
  const std::size_t n = 50;
  const auto depth = oracle::random_vector(n, rng, 0.5, 2.0);
  State prim(oracle::random_vector(n, rng, -0.2, 0.2), oracle::random_vector(n, rng, -1.0, 1.0));
  const double eta0 = 0.3;
  for (auto& e : prim.a) e += eta0;
  const State cons = to_conservative(prim, depth, eta0);
  EXPECT_EQ(cons.representation, Representation::conservative);
  const State back = to_primitive(cons, depth, eta0);
  EXPECT_LE(oracle::max_abs_diff(back.a, prim.a), 1e-14);
  EXPECT_LE(oracle::max_abs_diff(back.b, prim.b), 1e-14);
}

TEST(State, DryCellIsRejected) {
  const std::vector<double> depth{1.0, 1.0, 1.0};
  const State cons(std::vector<double>{1.0, 1e-13, 1.0}, std::vector<double>{0.0, 0.0, 0.0},
                   Representation::conservative);
  EXPECT_THROW(to_primitive(cons, depth, 0.0), DomainError);
}

TEST(State, MismatchedFields) {
  EXPECT_THROW(State(std::vector<double>(3), std::vector<double>(4)), DimensionError);
}
