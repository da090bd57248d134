// Serial reference vs OpenMP kernels. The second argument selects the path:
// 0 = serial, 1 = parallel.

#include <benchmark/benchmark.h>

#include "mellin/quadrature.hpp"
#include "mellin/series.hpp"
#include "mellin/verify.hpp"

using namespace mellin;

namespace {

Execution exec_of(const benchmark::State& state) {
  return state.range(1) == 0 ? Execution::serial : Execution::parallel;
}

void BM_SeriesMultiply(benchmark::State& state) {
  const auto order = static_cast<std::size_t>(state.range(0));
  const auto a = series::sinh_over_x(order).reciprocal();
  const auto b = series::inverse_sqrt_one_minus(order);
  for (auto _ : state) benchmark::DoNotOptimize(series::multiply(a, b, exec_of(state)));
}
BENCHMARK(BM_SeriesMultiply)->ArgsProduct({{64, 256}, {0, 1}})->Unit(benchmark::kMillisecond);

void BM_SeriesPower(benchmark::State& state) {
  const auto base = series::sinh_over_x(static_cast<std::size_t>(state.range(0))).reciprocal();
  for (auto _ : state) benchmark::DoNotOptimize(base.pow(51, exec_of(state)));
}
BENCHMARK(BM_SeriesPower)->ArgsProduct({{64, 128}, {0, 1}})->Unit(benchmark::kMillisecond);

void BM_QuadPhi(benchmark::State& state) {
  const auto digits = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(quadrature::quad_phi(1, 3.5, digits, exec_of(state)));
}
BENCHMARK(BM_QuadPhi)->ArgsProduct({{30, 60}, {0, 1}})->Unit(benchmark::kMillisecond);

void BM_IdentitySuite(benchmark::State& state) {
  const auto hi = static_cast<unsigned>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(verify::run_identity(verify::FamilyId::lemma_euler_bernoulli, {1, hi}, 30, exec_of(state)));
  }
}
BENCHMARK(BM_IdentitySuite)->ArgsProduct({{15}, {0, 1}})->Unit(benchmark::kMillisecond);

void BM_ClosedVsQuadrature(benchmark::State& state) {
  const auto max_exp = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(verify::check_closed_vs_quadrature(max_exp, 30, exec_of(state)));
}
BENCHMARK(BM_ClosedVsQuadrature)->ArgsProduct({{8}, {0, 1}})->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
