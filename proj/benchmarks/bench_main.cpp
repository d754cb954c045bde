#include <benchmark/benchmark.h>

#include "tevelev/closedform.hpp"
#include "tevelev/cohring.hpp"
#include "tevelev/grr.hpp"
#include "tevelev/qh.hpp"

using namespace tev;

namespace {

// Full GRR evaluation including building the exponential, r = 2, ell = 2.
void BM_GrrGenus2(benchmark::State& state) {
  const auto d = static_cast<std::int64_t>(state.range(0));
  const Problem p = validate(2, 2, {d, {1, 2}}).problem;
  for (auto _ : state) benchmark::DoNotOptimize(tev_grr(p));
}
BENCHMARK(BM_GrrGenus2)->Arg(11)->Arg(17)->Unit(benchmark::kMillisecond);

// Only the per-(n, d) step, with the exponential already built.
void BM_GrrEvaluatorReuse(benchmark::State& state) {
  const GrrEvaluator ev(2, {1, 2, 0});
  const Problem p = validate(2, 2, {17, {1, 2}}).problem;
  for (auto _ : state) benchmark::DoNotOptimize(ev.evaluate(p.n, p.beta.d));
}
BENCHMARK(BM_GrrEvaluatorReuse)->Unit(benchmark::kMillisecond);

void BM_ClosedR2L2(benchmark::State& state) {
  const Problem p = validate(2, 2, {30, {2, 2}}).problem;
  for (auto _ : state) benchmark::DoNotOptimize(tev_r2_l2(p));
}
BENCHMARK(BM_ClosedR2L2);

void BM_QhStarPow(benchmark::State& state) {
  const int r = static_cast<int>(state.range(0));
  const QhElement point = classical_to_star(ClassicalElement::point(r));
  for (auto _ : state) benchmark::DoNotOptimize(star_pow(point, state.range(1)));
}
BENCHMARK(BM_QhStarPow)->Args({2, 10})->Args({3, 10})->Args({4, 16});

void BM_VtevQh(benchmark::State& state) {
  const Problem p = validate(3, 2, {7, {2}}).problem;
  for (auto _ : state) benchmark::DoNotOptimize(vtev_qh(p));
}
BENCHMARK(BM_VtevQh);

void BM_CohMultiply(benchmark::State& state) {
  const int g = static_cast<int>(state.range(0));
  auto sig = make_signature(g, {2, 2});
  CohElement x = CohElement::one(sig) + theta(sig) + eta(sig, 1) + taubar(sig, 1) - xbar(sig, 2);
  const CohElement y = x * x;
  for (auto _ : state) benchmark::DoNotOptimize(x * y);
}
BENCHMARK(BM_CohMultiply)->DenseRange(0, 2);

}  // namespace
BENCHMARK_MAIN();
