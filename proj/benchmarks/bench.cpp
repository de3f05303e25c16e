#include <benchmark/benchmark.h>

#include <random>

#include "yblie/fixtures.hpp"
#include "yblie/hom.hpp"
#include "yblie/linalg.hpp"

using namespace yblie;
namespace fx = yblie::fixtures;

namespace {

Matrix random_rational(std::size_t r, std::size_t c, int seed) {
  Field q = Field::rational();
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> dist(-5, 5);
  Matrix m(q, r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m.set(i, j, Scalar::integer(q, dist(rng)));
  return m;
}

void BM_KronSquare(benchmark::State& state) {
  std::size_t n = static_cast<std::size_t>(state.range(0));
  Matrix a = random_rational(n, n, 1);
  Matrix b = random_rational(n, n, 2);
  for (auto _ : state) benchmark::DoNotOptimize(kron(a, b));
}
BENCHMARK(BM_KronSquare)->Arg(4)->Arg(9)->Arg(16);

void BM_KernelBasis(benchmark::State& state) {
  std::size_t n = static_cast<std::size_t>(state.range(0));
  Matrix a = random_rational(n, 2 * n, 3);
  for (auto _ : state) benchmark::DoNotOptimize(kernel_basis(a));
}
BENCHMARK(BM_KernelBasis)->Arg(8)->Arg(16)->Arg(32);

void BM_Invert(benchmark::State& state) {
  std::size_t n = static_cast<std::size_t>(state.range(0));
  Matrix a = random_rational(n, n, 4);
  while (rank(a) != n) a = random_rational(n, n, static_cast<int>(n) + 17);
  for (auto _ : state) benchmark::DoNotOptimize(invert(a));
}
BENCHMARK(BM_Invert)->Arg(8)->Arg(16);

void BM_CheckSl2(benchmark::State& state) {
  YBLieAlgebra sl2 = fx::sl2();
  for (auto _ : state) benchmark::DoNotOptimize(check_yb_lie_algebra(sl2));
}
BENCHMARK(BM_CheckSl2);

void BM_CheckGl2(benchmark::State& state) {
  YBLieAlgebra gl2 = fx::gl2();
  for (auto _ : state) benchmark::DoNotOptimize(check_yb_lie_algebra(gl2));
}
BENCHMARK(BM_CheckGl2);

void BM_CheckBialgebra(benchmark::State& state) {
  BraidedBialgebra ext1 = fx::ext1();
  for (auto _ : state) benchmark::DoNotOptimize(check_braided_bialgebra(ext1));
}
BENCHMARK(BM_CheckBialgebra);

void BM_Primitives(benchmark::State& state) {
  BraidedBialgebra ext1 = fx::ext1();
  for (auto _ : state) benchmark::DoNotOptimize(primitives(ext1));
}
BENCHMARK(BM_Primitives);

void BM_DualPairSl2(benchmark::State& state) {
  YBLieAlgebra sl2 = fx::sl2();
  for (auto _ : state) benchmark::DoNotOptimize(dual_pair(sl2));
}
BENCHMARK(BM_DualPairSl2);

void BM_PiCoherence(benchmark::State& state) {
  Field q = Field::rational();
  std::size_t n = static_cast<std::size_t>(state.range(0));
  GradedObject x = GradedObject::even(n);
  for (auto _ : state) {
    benchmark::DoNotOptimize(pi_from_unit_counit(q, x, x, x));
  }
}
BENCHMARK(BM_PiCoherence)->Arg(2)->Arg(3);

void BM_MichaelisFromTakeuchi(benchmark::State& state) {
  TakeuchiPair t = fx::ext1_takeuchi();
  for (auto _ : state) benchmark::DoNotOptimize(michaelis_from_takeuchi(t));
}
BENCHMARK(BM_MichaelisFromTakeuchi);

}  // namespace

BENCHMARK_MAIN();
