#include <asymcoh/core/sampling.hpp>
#include <asymcoh/exactlin/linalg.hpp>

#include <benchmark/benchmark.h>

using namespace asymcoh;

namespace {

Matrix random_matrix(std::size_t n, std::uint64_t seed) {
  RationalSampler sampler(seed);
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = sampler.next_rational(9, 5);
  return m;
}

SymMatrix random_symmetric(std::size_t n, std::uint64_t seed) {
  Matrix a = random_matrix(n, seed);
  Matrix s(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) s(i, j) = a(i, j) + a(j, i);
  return SymMatrix(std::move(s));
}

AntisymMatrix random_antisymmetric(std::size_t n, std::uint64_t seed) {
  Matrix a = random_matrix(n, seed);
  Matrix e(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) e(i, j) = a(i, j) - a(j, i);
  return AntisymMatrix(std::move(e));
}

}  // namespace

static void BM_Signature(benchmark::State& state) {
  const SymMatrix m = random_symmetric(static_cast<std::size_t>(state.range(0)), 7);
  for (auto _ : state) benchmark::DoNotOptimize(signature(m));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Signature)->DenseRange(2, 12, 2)->Complexity();

static void BM_Determinant(benchmark::State& state) {
  const Matrix m = random_matrix(static_cast<std::size_t>(state.range(0)), 11);
  for (auto _ : state) benchmark::DoNotOptimize(determinant(m));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Determinant)->DenseRange(2, 12, 2)->Complexity();

static void BM_Pfaffian(benchmark::State& state) {
  const AntisymMatrix e = random_antisymmetric(static_cast<std::size_t>(state.range(0)), 13);
  for (auto _ : state) benchmark::DoNotOptimize(pfaffian(e));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Pfaffian)->DenseRange(2, 12, 2)->Complexity();
