#include <benchmark/benchmark.h>

#include "krein/inertia.hpp"
#include "krein/rng.hpp"

using namespace krein;

namespace {

void bm_inertia_dense(benchmark::State& state) {
  Rng rng(31);
  const Matrix m = random_hermitian(rng, state.range(0), 9);
  for (auto _ : state) {
    benchmark::DoNotOptimize(hermitian_inertia(m).pos);
  }
}

void bm_inertia_psd(benchmark::State& state) {
  Rng rng(32);
  const std::size_t n = state.range(0);
  const Matrix b = random_integer_matrix(rng, n, n, 5);
  const Matrix m = b.adjoint() * b;
  for (auto _ : state) {
    benchmark::DoNotOptimize(is_psd(m));
  }
}

void bm_inertia_zero_diagonal(benchmark::State& state) {
  Rng rng(33);
  Matrix m = random_hermitian(rng, state.range(0), 5);
  for (std::size_t i = 0; i < m.rows(); ++i) m(i, i) = Gaussian(0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(hermitian_inertia(m).zero);
  }
}

}  // namespace

BENCHMARK(bm_inertia_dense)->Arg(8)->Arg(16)->Arg(32);
BENCHMARK(bm_inertia_psd)->Arg(8)->Arg(16)->Arg(32);
BENCHMARK(bm_inertia_zero_diagonal)->Arg(8)->Arg(16)->Arg(32);

BENCHMARK_MAIN();
