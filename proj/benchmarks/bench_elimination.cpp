#include <benchmark/benchmark.h>

#include "krein/elimination.hpp"
#include "krein/rng.hpp"

using namespace krein;

namespace {

Matrix integer_square(std::size_t n, std::uint64_t seed) {
  Rng rng(seed);
  return random_integer_matrix(rng, n, n, 9);
}

Matrix rational_square(std::size_t n, std::uint64_t seed) {
  Rng rng(seed);
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = Gaussian(random_rational(rng, 9));
  return m;
}

void bm_rref_integer(benchmark::State& state) {
  const Matrix m = integer_square(state.range(0), 17);
  for (auto _ : state) {
    benchmark::DoNotOptimize(rref(m).rank);
  }
}

void bm_rref_rational(benchmark::State& state) {
  const Matrix m = rational_square(state.range(0), 18);
  for (auto _ : state) {
    benchmark::DoNotOptimize(rref(m).rank);
  }
}

void bm_inverse(benchmark::State& state) {
  Matrix m = integer_square(state.range(0), 19);
  while (!is_invertible(m)) m = integer_square(state.range(0), 19 + m.rows());
  for (auto _ : state) {
    benchmark::DoNotOptimize(inverse(m)->rows());
  }
}

void bm_kernel_wide(benchmark::State& state) {
  // rank-deficient wide matrix: b (n x n/2) times c (n/2 x 2n)
  Rng rng(21);
  const std::size_t n = state.range(0);
  const Matrix b = random_integer_matrix(rng, n, n / 2 + 1, 5);
  const Matrix c = random_integer_matrix(rng, n / 2 + 1, 2 * n, 5);
  const Matrix m = b * c;
  for (auto _ : state) {
    benchmark::DoNotOptimize(kernel(m).cols());
  }
}

}  // namespace

BENCHMARK(bm_rref_integer)->Arg(8)->Arg(16)->Arg(32)->Arg(64);
BENCHMARK(bm_rref_rational)->Arg(8)->Arg(16)->Arg(32);
BENCHMARK(bm_inverse)->Arg(8)->Arg(16)->Arg(32);
BENCHMARK(bm_kernel_wide)->Arg(8)->Arg(16)->Arg(32);

BENCHMARK_MAIN();
