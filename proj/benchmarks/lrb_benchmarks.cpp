#include <benchmark/benchmark.h>

#include <random>

#include "lrb/brackets.hpp"
#include "lrb/cohomology.hpp"
#include "lrb/fixtures.hpp"
#include "lrb/linalg.hpp"

namespace {

using namespace lrb;

Matrix random_matrix(std::size_t rows, std::size_t cols, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> d(-3, 3);
  Matrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = d(rng);
  return m;
}

void BM_Rank(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Matrix m = random_matrix(n, n, 1);
  for (auto _ : state) benchmark::DoNotOptimize(rank(m));
}
BENCHMARK(BM_Rank)->Arg(16)->Arg(32)->Arg(64);

void BM_LpDifferential(benchmark::State& state) {
  const Representation r = adjoint_representation(fixtures::hemisemidirect_sl2());
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(lp_differential(r, n));
}
BENCHMARK(BM_LpDifferential)->Arg(0)->Arg(1)->Arg(2);

void BM_LpCohomologyDims(benchmark::State& state) {
  const Representation r = adjoint_representation(fixtures::leibniz_dim2());
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(cohomology_dims(lp_complex(r, n)));
}
BENCHMARK(BM_LpCohomologyDims)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_CeComplexGl2(benchmark::State& state) {
  const LinearOperator t = fixtures::matrix_identity_rbo(fixtures::MatrixFamily::general, 2);
  for (auto _ : state) benchmark::DoNotOptimize(cohomology_dims(ce_complex(t, 3)));
}
BENCHMARK(BM_CeComplexGl2)->Unit(benchmark::kMillisecond);

void BM_AveragingHemisemidirect(benchmark::State& state) {
  const LinearOperator t = fixtures::pr_averaging(fixtures::hemisemidirect_sl2());
  for (auto _ : state) benchmark::DoNotOptimize(cohomology_dims(averaging_complex(t, 1)));
}
BENCHMARK(BM_AveragingHemisemidirect)->Unit(benchmark::kMillisecond);

void BM_DerivedBracket(benchmark::State& state) {
  const Representation r = adjoint_representation(fixtures::leibniz_dim2());
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> d(-2, 2);
  auto make = [&](std::size_t arity) {
    Cochain c = Cochain::zero(arity, 2, 2);
    for (std::size_t i = 0; i < c.tensor.rows(); ++i)
      for (std::size_t j = 0; j < c.tensor.cols(); ++j) c.tensor(i, j) = d(rng);
    return c;
  };
  const Cochain a = make(2), b = make(2);
  const bool balavoine = state.range(0) == 1;
  for (auto _ : state)
    benchmark::DoNotOptimize(balavoine ? derived_bracket_balavoine(a, b, r) : derived_bracket_direct(a, b, r));
}
BENCHMARK(BM_DerivedBracket)->Arg(0)->Arg(1);

}  // namespace

BENCHMARK_MAIN();
