#include <benchmark/benchmark.h>

#include "rtl/gadgets.hpp"
#include "rtl/generators.hpp"
#include "rtl/oracle.hpp"
#include "rtl/product.hpp"
#include "rtl/rcnf.hpp"
#include "rtl/resolution.hpp"
#include "rtl/semantics.hpp"

namespace {

using namespace rtl;

void BM_M1Closure(benchmark::State& state) {
  const auto f = m1().formula;
  for (auto _ : state) {
    auto c = closure(f);
    benchmark::DoNotOptimize(c.resolutions);
  }
}
BENCHMARK(BM_M1Closure)->Unit(benchmark::kMillisecond);

void BM_M1RcnfSize(benchmark::State& state) {
  const auto f = m1().formula;
  for (auto _ : state) benchmark::DoNotOptimize(rcnf_size(f).clauses);
}
BENCHMARK(BM_M1RcnfSize)->Unit(benchmark::kMillisecond);

void BM_DpllRandom3cnf(benchmark::State& state) {
  Rng rng(1);
  const auto vars = static_cast<std::size_t>(state.range(0));
  const auto f = random_3cnf(rng, vars, vars * 43 / 10);
  for (auto _ : state) benchmark::DoNotOptimize(dpll(f).sat);
}
BENCHMARK(BM_DpllRandom3cnf)->Arg(20)->Arg(40)->Arg(60);

void BM_DecomposeProduct(benchmark::State& state) {
  ClauseSet y;
  ClauseSet z;
  for (Var v = 0; v < 2; ++v) y.push_back(Clause{Literal::pos(v)});
  for (Var v = 2; v < 6; ++v) z.push_back(Clause{Literal::neg(v)});
  const auto x = clauses_product(canonical(y), canonical(z));
  for (auto _ : state) benchmark::DoNotOptimize(decompose(x).has_value());
}
BENCHMARK(BM_DecomposeProduct);

void BM_EnumerateModels(benchmark::State& state) {
  Rng rng(2);
  const auto vars = static_cast<std::size_t>(state.range(0));
  const auto f = random_formula(rng, vars, vars * 2, 2, 3);
  for (auto _ : state) benchmark::DoNotOptimize(models(f).size());
}
BENCHMARK(BM_EnumerateModels)->Arg(12)->Arg(16)->Arg(20);

}  // namespace

BENCHMARK_MAIN();
