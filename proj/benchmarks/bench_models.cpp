#include <benchmark/benchmark.h>

#include <cmath>
#include <numbers>

#include "dsw/bbm_bbm.hpp"
#include "dsw/linear_solve.hpp"
#include "dsw/svaerd_kalisch.hpp"
#include "dsw/time_integration.hpp"

using namespace dsw;

namespace {

constexpr double kG = 9.81;

double bottom(double x) { return -1.0 + 0.2 * std::cos(2.0 * std::numbers::pi * x / 10.0); }

State wave(const Grid& g) {
  State u(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) {
    u.a[i] = 0.1 * std::exp(-std::pow(g[i] - 5.0, 2));
    u.b[i] = 0.05 * std::sin(2.0 * std::numbers::pi * g[i] / 10.0);
  }
  return u;
}

Grid grid_for(benchmark::State& state) {
  return make_uniform_grid(0.0, 10.0, static_cast<std::size_t>(state.range(0)), BoundaryKind::periodic);
}

}  // namespace

static void BM_BbmRhs(benchmark::State& state) {
  const Grid g = grid_for(state);
  const auto d = build_bbm_discretization(g, 4, bottom, kG, BbmVariant::periodic_central_wide);
  const State u = wave(g);
  State out(g.size());
  for (auto _ : state) {
    d.rhs(u, 0.0, out);
    benchmark::DoNotOptimize(out.a.data());
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_BbmRhs)->RangeMultiplier(4)->Range(256, 4096);

static void BM_SkRhs(benchmark::State& state) {
  const Grid g = grid_for(state);
  const auto variant = state.range(1) ? SkVariant::periodic_upwind : SkVariant::periodic_central_split;
  const auto d = build_sk_discretization(g, 4, bottom, kG, 0.0, sk_parameter_set("set2"), variant);
  const State u = wave(g);
  State out(g.size());
  for (auto _ : state) {
    d.rhs(u, 0.0, out);
    benchmark::DoNotOptimize(out.a.data());
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_SkRhs)->ArgsProduct({{256, 1024, 4096}, {0, 1}});

// Setup cost of the elliptic solves: assembling and factoring the model operators.
static void BM_BbmSetup(benchmark::State& state) {
  const Grid g = grid_for(state);
  for (auto _ : state) {
    auto d = build_bbm_discretization(g, static_cast<int>(state.range(1)), bottom, kG,
                                      BbmVariant::periodic_central_wide);
    benchmark::DoNotOptimize(&d);
  }
}
BENCHMARK(BM_BbmSetup)->ArgsProduct({{512, 4096}, {2, 6}});

static void BM_CyclicBandedSolve(benchmark::State& state) {
  const Grid g = grid_for(state);
  const auto d = build_bbm_discretization(g, 6, bottom, kG, BbmVariant::periodic_central_wide);
  const Factorization f = factor(d.velocity_equation_operator());
  std::vector<double> rhs = wave(g).a;
  for (auto _ : state) {
    auto x = f.solve(rhs);
    benchmark::DoNotOptimize(x.data());
  }
  state.SetLabel(f.banded() ? "banded" : "dense");
}
BENCHMARK(BM_CyclicBandedSolve)->RangeMultiplier(4)->Range(256, 4096);

static void BM_RelaxedStep(benchmark::State& state) {
  const Grid g = grid_for(state);
  const auto d = build_sk_discretization(g, 4, bottom, kG, 0.0, sk_parameter_set("set2"),
                                         SkVariant::periodic_central_split);
  const RhsFn rhs = [&d](const State& u, double t, State& out) { d.rhs(u, t, out); };
  const Functional j{[&d](const State& u) { return d.functional(u); },
                     [&d](const State& u, State& grad) { d.functional_gradient(u, grad); }};
  RelaxationConfig relax;
  relax.mode = state.range(1) ? RelaxationMode::conservative : RelaxationMode::off;
  const ButcherTableau tableau = tsitouras_tableau();
  const State u = wave(g);
  for (auto _ : state) {
    auto step = relaxation_step(rhs, u, 0.0, 1e-4, tableau, relax, j);
    benchmark::DoNotOptimize(step.u_new.a.data());
  }
}
BENCHMARK(BM_RelaxedStep)->ArgsProduct({{512, 2048}, {0, 1}});

BENCHMARK_MAIN();
