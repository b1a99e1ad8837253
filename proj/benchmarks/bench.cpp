#include <benchmark/benchmark.h>

#include "hodgeforge/constructor.hpp"
#include "hodgeforge/diamond.hpp"
#include "hodgeforge/groups.hpp"
#include "hodgeforge/invariants.hpp"

namespace {

using namespace hodgeforge;

Caps bench_caps() {
  Caps caps;
  caps.max_group = 10'000'000;
  caps.max_basis = Caps{}.max_basis;
  return caps;
}

void closure(benchmark::State& state) {
  GabgSpec spec;
  spec.a = static_cast<int>(state.range(0));
  spec.b = static_cast<int>(state.range(1));
  spec.g = 1;
  const ProductSpace space = space_of(spec);
  const std::vector<GroupElement> gens = generators(spec);
  for (auto _ : state) {
    auto elements = close(space, gens, bench_caps().max_group);
    benchmark::DoNotOptimize(elements);
  }
}
BENCHMARK(closure)->Args({2, 1})->Args({3, 1})->Args({2, 2});

void burnside_one_cell(benchmark::State& state) {
  GabgSpec spec;
  spec.a = static_cast<int>(state.range(0));
  spec.b = static_cast<int>(state.range(1));
  spec.g = 1;
  const ProductSpace space = space_of(spec);
  const std::vector<GroupElement> elements =
      close(space, generators(spec), bench_caps().max_group);
  const int k = spec.a + spec.b;
  for (auto _ : state) {
    Int dim = burnside_cell(space, elements, k / 2, k - k / 2, bench_caps());
    benchmark::DoNotOptimize(dim);
  }
}
BENCHMARK(burnside_one_cell)->Args({2, 1})->Args({3, 1});

void kunneth_products(benchmark::State& state) {
  const HodgeDiamond a = HodgeDiamond::projective_space(
      static_cast<int>(state.range(0)));
  const HodgeDiamond b = kunneth(HodgeDiamond::curve(3),
                                 HodgeDiamond::curve(5));
  for (auto _ : state) {
    HodgeDiamond c = kunneth(a, b);
    benchmark::DoNotOptimize(c);
  }
}
BENCHMARK(kunneth_products)->Arg(4)->Arg(8)->Arg(16);

void plan_truncated_target(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  TruncatedDiamond target = TruncatedDiamond::zero(n);
  for (int p = 0; p <= n; ++p)
    for (int q = 0; q <= n; ++q) {
      if (p + q == n) continue;
      const int level = std::min(p + q, 2 * n - p - q);
      target.at(p, q) = (p == q) ? Int(1 + level) : Int(2);
    }
  for (auto _ : state) {
    PlanOutcome plan = plan_truncated(target);
    benchmark::DoNotOptimize(plan);
  }
}
BENCHMARK(plan_truncated_target)->Arg(4)->Arg(6)->Arg(8);

}  // namespace

BENCHMARK_MAIN();
