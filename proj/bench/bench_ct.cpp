#include "dysonct/ct.hpp"
#include "dysonct/dyson.hpp"

#include <benchmark/benchmark.h>

namespace {

using dysonct::DysonSpec;
using dysonct::Monomial;

std::vector<dysonct::LaurentPoly> q_dyson_2222() { return dysonct::q_dyson_factors(DysonSpec(3, {2, 2, 2, 2})); }
std::vector<dysonct::LaurentPoly> dyson_11111() { return dysonct::dyson_factors(DysonSpec(4, {1, 1, 1, 1, 1})); }

void BM_QDysonSerial(benchmark::State& state) {
  const auto factors = q_dyson_2222();
  for (auto _ : state) benchmark::DoNotOptimize(dysonct::ct_of_factor_list_serial(factors, Monomial(3)));
}

void BM_QDysonParallel(benchmark::State& state) {
  const auto factors = q_dyson_2222();
  const int threads = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(dysonct::ct_of_factor_list_parallel(factors, Monomial(3), threads));
}

void BM_QDysonUnpruned(benchmark::State& state) {
  const auto factors = q_dyson_2222();
  for (auto _ : state) benchmark::DoNotOptimize(dysonct::ct_unpruned(factors, Monomial(3)));
}

void BM_DysonSerial(benchmark::State& state) {
  const auto factors = dyson_11111();
  for (auto _ : state) benchmark::DoNotOptimize(dysonct::ct_of_factor_list_serial(factors, Monomial(4)));
}

void BM_DysonParallel(benchmark::State& state) {
  const auto factors = dyson_11111();
  const int threads = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(dysonct::ct_of_factor_list_parallel(factors, Monomial(4), threads));
}

void BM_DysonUnpruned(benchmark::State& state) {
  const auto factors = dyson_11111();
  for (auto _ : state) benchmark::DoNotOptimize(dysonct::ct_unpruned(factors, Monomial(4)));
}

}  // namespace

BENCHMARK(BM_QDysonSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_QDysonParallel)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_QDysonUnpruned)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DysonSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DysonParallel)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DysonUnpruned)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
