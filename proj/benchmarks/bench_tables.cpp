#include <benchmark/benchmark.h>

#include "haarwell/matrix.hpp"
#include "haarwell/weingarten.hpp"

namespace hw = haarwell;

namespace {

void BM_UnitaryGramSymbolic(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(hw::wg_unitary_gram(k, hw::TableMode::symbolic()));
}
BENCHMARK(BM_UnitaryGramSymbolic)->DenseRange(2, 6);

void BM_UnitaryCharacterSymbolic(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(hw::wg_unitary_character(k, hw::TableMode::symbolic()));
}
BENCHMARK(BM_UnitaryCharacterSymbolic)->DenseRange(2, 6);

void BM_OrthogonalSymbolic(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(hw::wg_orthogonal(k, hw::TableMode::symbolic()));
}
BENCHMARK(BM_OrthogonalSymbolic)->Arg(4)->Arg(6)->Arg(8);

void BM_FreeNumeric(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  const auto mode = hw::TableMode::at(hw::BigRational(5));
  for (auto _ : state) benchmark::DoNotOptimize(hw::wg_free(k, mode));
}
BENCHMARK(BM_FreeNumeric)->Arg(6)->Arg(8)->Arg(10);

void BM_BareissInverseRational(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  hw::Matrix<hw::BigRational> a(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      a(i, j) = hw::BigRational(1, i + j + 1);  // Hilbert, worst-case growth
  for (auto _ : state) benchmark::DoNotOptimize(hw::bareiss_inverse(a));
}
BENCHMARK(BM_BareissInverseRational)->Arg(8)->Arg(16)->Arg(24);

}  // namespace

BENCHMARK_MAIN();
