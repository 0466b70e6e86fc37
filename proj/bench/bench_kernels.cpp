// Serial reference kernels against their OpenMP versions on the same inputs.

#include <benchmark/benchmark.h>

#include <random>

#include "ellcode/kernels.hpp"
#include "ellcode/rr_basis.hpp"

using namespace ellcode;

namespace {

Matrix random_matrix(const Field& F, std::size_t rows, std::size_t cols, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  Matrix M(F, rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) M.at(i, j) = F.element(rng() % F.order());
  return M;
}

const Field& gf256() {
  static const Field F = Field::extension(2, 8);
  return F;
}

template <Echelon (*Fn)(const Matrix&)>
void BM_Rref(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Matrix M = random_matrix(gf256(), n, 2 * n, 1);
  for (auto _ : state) benchmark::DoNotOptimize(Fn(M));
}

template <Matrix (*Fn)(const Matrix&)>
void BM_SchurProducts(benchmark::State& state) {
  const auto k = static_cast<std::size_t>(state.range(0));
  const Matrix G = random_matrix(gf256(), k, 512, 2);
  for (auto _ : state) benchmark::DoNotOptimize(Fn(G));
}

template <Matrix (*Fn)(const std::vector<CurveFunction>&, const std::vector<Point>&)>
void BM_Evaluate(benchmark::State& state) {
  const Field& F = gf256();
  static const Curve E(F, {F.one(), Fe{}, Fe{}, Fe{}, F.generator()});
  const auto B = basis_at_infinity(E, static_cast<int>(state.range(0)));
  std::vector<Point> D(E.points().begin(), E.points().end() - 1);
  for (auto _ : state) benchmark::DoNotOptimize(Fn(B.functions, D));
}

template <std::size_t (*Fn)(const Matrix&)>
void BM_MinWeight(benchmark::State& state) {
  const auto k = static_cast<std::size_t>(state.range(0));
  // Full-rank binary generator: the reduced form of a random k x 48 matrix.
  static const Field F2 = Field::prime(2);
  const Matrix G = kernels::rref_serial(random_matrix(F2, k, 48, 3)).reduced;
  for (auto _ : state) benchmark::DoNotOptimize(Fn(G));
}

}  // namespace

BENCHMARK(BM_Rref<kernels::rref_serial>)->Arg(64)->Arg(128)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Rref<kernels::rref_parallel>)->Arg(64)->Arg(128)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SchurProducts<kernels::schur_products_serial>)->Arg(16)->Arg(32)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SchurProducts<kernels::schur_products_parallel>)->Arg(16)->Arg(32)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Evaluate<kernels::evaluate_serial>)->Arg(16)->Arg(48)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Evaluate<kernels::evaluate_parallel>)->Arg(16)->Arg(48)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MinWeight<kernels::min_weight_serial>)->Arg(12)->Arg(16)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MinWeight<kernels::min_weight_parallel>)->Arg(12)->Arg(16)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
