#include <benchmark/benchmark.h>

#include <cmath>
#include <vector>

#include "solitonlab/bounds/bound_function.hpp"
#include "solitonlab/bounds/jacobi.hpp"
#include "solitonlab/chart/geometry.hpp"
#include "solitonlab/graphs/checks.hpp"
#include "solitonlab/numerics/grid_path.hpp"
#include "solitonlab/numerics/jet.hpp"
#include "solitonlab/zoo/grim_reaper.hpp"
#include "solitonlab/zoo/soliton_profile.hpp"

namespace sl = solitonlab;
using sl::numerics::Jet;

static void BM_JetExpSin(benchmark::State& state) {
  const int nvars = static_cast<int>(state.range(0));
  const int order = static_cast<int>(state.range(1));
  const Jet x = Jet::variable(nvars, order, 0, 0.3);
  const Jet y = Jet::variable(nvars, order, nvars - 1, -0.2);
  for (auto _ : state) benchmark::DoNotOptimize(sl::numerics::exp(sl::numerics::sin(x) * y));
}
BENCHMARK(BM_JetExpSin)->Args({1, 8})->Args({2, 4})->Args({3, 4});

static void BM_SphereRicci(benchmark::State& state) {
  const auto m = sl::chart::ChartMetric::conformal(3, sl::chart::ScalarField([](std::span<const Jet> x) {
    return 4.0 * sl::numerics::reciprocal(sl::numerics::square(1.0 + x[0] * x[0] + x[1] * x[1] + x[2] * x[2]));
  }));
  const std::vector<double> p{0.1, 0.2, 0.3};
  for (auto _ : state) benchmark::DoNotOptimize(sl::chart::ricci(m, p));
}
BENCHMARK(BM_SphereRicci);

static void BM_GrimReaperGaussCheck(benchmark::State& state) {
  const auto g = sl::zoo::grim_reaper(-1);
  const std::vector<double> x{0.7, -0.2};
  const Eigen::VectorXd X = Eigen::Vector2d(0.6, 0.8);
  for (auto _ : state) benchmark::DoNotOptimize(sl::graphs::gauss_equation_ricci_check(g, x, X));
}
BENCHMARK(BM_GrimReaperGaussCheck);

static void BM_ProfileOde(benchmark::State& state) {
  const auto phi = sl::zoo::build_phi();
  for (auto _ : state) benchmark::DoNotOptimize(sl::zoo::solve_profile_ode(phi));
}
BENCHMARK(BM_ProfileOde)->Unit(benchmark::kMillisecond);

static void BM_GridShortestPath(benchmark::State& state) {
  const sl::numerics::PlanarMetric hyp = [](double, double y) { return Eigen::Matrix2d::Identity() / (y * y); };
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(sl::numerics::grid_shortest_path(hyp, {-1, 1, 1, std::exp(1.0)}, n, {0, 1}, {0, std::exp(1.0)}));
  }
}
BENCHMARK(BM_GridShortestPath)->Arg(40)->Arg(80)->Unit(benchmark::kMillisecond);

static void BM_JacobiComparison(benchmark::State& state) {
  const auto G = sl::bounds::BoundFunction::affine(1, 1);
  for (auto _ : state) benchmark::DoNotOptimize(sl::bounds::jacobi_comparison(G, 20.0));
}
BENCHMARK(BM_JacobiComparison)->Unit(benchmark::kMillisecond);

static void BM_BuildGM(benchmark::State& state) {
  const auto G = sl::bounds::BoundFunction::affine(1, 1);
  for (auto _ : state) benchmark::DoNotOptimize(sl::bounds::build_GM(G)(50.0));
}
BENCHMARK(BM_BuildGM)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
