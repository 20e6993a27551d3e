#include "lefschetz/criteria.hpp"
#include "lefschetz/jacobi.hpp"
#include "lefschetz/slopes.hpp"
#include "lefschetz/survey.hpp"

#include <benchmark/benchmark.h>

using namespace lefschetz;

static void BM_BuildContext(benchmark::State& state) {
  for (auto _ : state) {
    auto ctx = build_context(7, 31);
    benchmark::DoNotOptimize(ctx);
  }
}
BENCHMARK(BM_BuildContext);

static void BM_ClassifyCrossValidate(benchmark::State& state) {
  const auto ctx = build_context(7, 31);
  const std::array<std::int64_t, 3> alpha{1, 2, 28};
  for (auto _ : state) {
    auto rec = classify(alpha, ctx, Mode::CrossValidate);
    benchmark::DoNotOptimize(rec);
  }
}
BENCHMARK(BM_ClassifyCrossValidate);

static void BM_SlopeMatrixRank(benchmark::State& state) {
  const auto ctx = build_context(7, 31);
  const auto alpha = make_alpha_triple({1, 2, 28}, ctx);
  const auto m = build_slope_matrix(alpha, ctx);
  for (auto _ : state) {
    auto r = rational_rank(m.entries, 2 * ctx.f * ctx.l);
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(BM_SlopeMatrixRank);

static void BM_JacobiSum(benchmark::State& state) {
  const auto field = build_field_table(2, static_cast<std::int64_t>(state.range(0)));
  const std::array<std::int64_t, 3> alpha{1, 2, 28};
  for (auto _ : state) {
    auto j = jacobi_sum(alpha, field, 31);
    benchmark::DoNotOptimize(j);
  }
  state.SetItemsProcessed(state.iterations() * (field.q - 2));
}
BENCHMARK(BM_JacobiSum)->Arg(5)->Arg(10)->Arg(15);

static void BM_EnumerateOrbits(benchmark::State& state) {
  for (auto _ : state) {
    auto v = enumerate_alpha(31, true);
    benchmark::DoNotOptimize(v);
  }
}
BENCHMARK(BM_EnumerateOrbits);

BENCHMARK_MAIN();
