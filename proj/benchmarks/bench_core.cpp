#include <cmath>

#include <benchmark/benchmark.h>

#include "plaquette/costratified.hpp"
#include "plaquette/geometry.hpp"
#include "plaquette/mathieu.hpp"
#include "plaquette/spectrum.hpp"
#include "plaquette/theta.hpp"

namespace {

using namespace plaquette;

void BM_Theta3Prime(benchmark::State& state) {
  const double nome = std::exp(-0.01 * static_cast<double>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(theta::theta3_prime(nome));
}
BENCHMARK(BM_Theta3Prime)->Arg(1)->Arg(10)->Arg(100);

void BM_TunnelingOverlap(benchmark::State& state) {
  const double t = 0.01 * static_cast<double>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(costratified::tunneling_overlap(t));
}
BENCHMARK(BM_TunnelingOverlap)->Arg(1)->Arg(50)->Arg(500);

void BM_MathieuSolve(benchmark::State& state) {
  const auto n = static_cast<unsigned>(state.range(0));
  const double q = static_cast<double>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(mathieu::solve(n, q).b);
}
BENCHMARK(BM_MathieuSolve)->Args({0, 4})->Args({5, 96})->Args({59, 400});

void BM_SolveLevels(benchmark::State& state) {
  const auto count = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(mathieu::solve_levels(count, 96.0).size());
}
BENCHMARK(BM_SolveLevels)->Arg(10)->Arg(60);

void BM_HamiltonianOracle(benchmark::State& state) {
  const auto p = ModelParams::reduced(0.125, 24.0);
  const auto dim = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(spectrum::hamiltonian_eigenvalues(p, dim).front());
}
BENCHMARK(BM_HamiltonianOracle)->Arg(64)->Arg(128);

void BM_ProjectorExpectations(benchmark::State& state) {
  const auto p = ModelParams::reduced(0.03125, 100.0);
  for (auto _ : state) benchmark::DoNotOptimize(spectrum::projector_expectations(p, 60).plus.front());
}
BENCHMARK(BM_ProjectorExpectations);

void BM_CanoeJacobi(benchmark::State& state) {
  const auto table = geometry::canoe_table();
  const auto X = table.generator("X");
  const auto Y = table.generator("Y");
  const auto tau = table.generator("tau");
  const geometry::PhasePoint pt{1.5, -0.7, geometry::canoe_tau(1.5, -0.7)};
  for (auto _ : state) benchmark::DoNotOptimize(geometry::jacobi_residual(table, X, Y, tau, pt));
}
BENCHMARK(BM_CanoeJacobi);

void BM_MonomialDecomposition(benchmark::State& state) {
  const auto k = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(geometry::monomial_decomposition(6, k).size());
}
BENCHMARK(BM_MonomialDecomposition)->Arg(10)->Arg(30);

}  // namespace

BENCHMARK_MAIN();
