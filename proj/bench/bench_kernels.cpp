// Parallel kernels against their serial references.
#include <map>
#include <random>

#include <benchmark/benchmark.h>

#include "hecke/kernels.hpp"

using namespace hecke;

namespace {

std::shared_ptr<const KLContext> context(int n) {
  static std::map<int, std::shared_ptr<const KLContext>> cache;
  auto& c = cache[n];
  if (!c) c = KLContext::type_b(n, WeightFunction::generic(n));
  return c;
}

std::vector<P15Sample> samples(const KLContext& ctx, std::size_t count) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> pick(0, ctx.size() - 1);
  std::vector<P15Sample> qs(count);
  for (auto& q : qs) q = {pick(rng), pick(rng), pick(rng), pick(rng)};
  return qs;
}

void BM_HTensor(benchmark::State& st) {
  auto ctx = context(static_cast<int>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(compute_h_tensor(*ctx));
  st.counters["threads"] = kernel_threads();
}

void BM_HTensorSerial(benchmark::State& st) {
  auto ctx = context(static_cast<int>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(compute_h_tensor_serial(*ctx));
}

void BM_AScan(benchmark::State& st) {
  auto ctx = context(static_cast<int>(st.range(0)));
  ctx->h_tensor();
  for (auto _ : st) benchmark::DoNotOptimize(a_scan(*ctx, st.range(1) != 0));
}

void BM_AScanSerial(benchmark::State& st) {
  auto ctx = context(static_cast<int>(st.range(0)));
  ctx->h_tensor();
  for (auto _ : st) benchmark::DoNotOptimize(a_scan_serial(*ctx, st.range(1) != 0));
}

void BM_P15(benchmark::State& st) {
  auto ctx = context(3);
  ctx->h_tensor();
  auto qs = samples(*ctx, static_cast<std::size_t>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(p15_check(*ctx, qs));
}

void BM_P15Serial(benchmark::State& st) {
  auto ctx = context(3);
  ctx->h_tensor();
  auto qs = samples(*ctx, static_cast<std::size_t>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(p15_check_serial(*ctx, qs));
}

}  // namespace

BENCHMARK(BM_HTensor)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_HTensorSerial)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_AScan)->Args({3, 1})->Args({3, 0})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_AScanSerial)->Args({3, 1})->Args({3, 0})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_P15)->Arg(10000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_P15Serial)->Arg(10000)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
