#include <benchmark/benchmark.h>

#include "krein/plant.hpp"

using namespace krein;

namespace {

PlantSpec spec_for(std::int64_t scale) {
  // n = 4 * scale
  return PlantSpec{static_cast<std::size_t>(scale), static_cast<std::size_t>(scale),
                   static_cast<std::size_t>(scale), 2, 71};
}

void bm_plant(benchmark::State& state) {
  const PlantSpec spec = spec_for(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(plant(spec).pair.dim());
  }
}

void bm_decompose(benchmark::State& state) {
  const PlantedPair planted = plant(spec_for(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(decompose(planted.pair).dims().m);
  }
}

void bm_verify(benchmark::State& state) {
  const PlantedPair planted = plant(spec_for(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        verify(planted.pair, planted.s_true, planted.dims).all_pass());
  }
}

void bm_unobservable(benchmark::State& state) {
  const PlantedPair planted = plant(spec_for(state.range(0)));
  const Matrix d = defect(planted.pair);
  for (auto _ : state) {
    benchmark::DoNotOptimize(unobservable_subspace(d, planted.pair.a()).dim());
  }
}

}  // namespace

BENCHMARK(bm_plant)->Arg(1)->Arg(2)->Arg(3);
BENCHMARK(bm_decompose)->Arg(1)->Arg(2)->Arg(3);
BENCHMARK(bm_verify)->Arg(1)->Arg(2)->Arg(3);
BENCHMARK(bm_unobservable)->Arg(1)->Arg(2)->Arg(3);

BENCHMARK_MAIN();
