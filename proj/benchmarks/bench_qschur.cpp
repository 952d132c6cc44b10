#include <benchmark/benchmark.h>

#include "qschur/mixedalg/iota.hpp"
#include "qschur/mixedalg/quotient.hpp"
#include "qschur/mixedalg/rational_basis.hpp"
#include "qschur/qmatrix/standard_basis.hpp"
#include "qschur/tensorrep/algebra.hpp"

using namespace qschur;

static void BM_NormalFormReversedWords(benchmark::State& state) {
  const int n = 3;
  const int m = static_cast<int>(state.range(0));
  const auto words = qmatrix::monomial_basis(n, m);
  for (auto _ : state) {
    qmatrix::QMatrixAlgebra A(n);
    for (const auto& w : words) benchmark::DoNotOptimize(A.normal_form(qmatrix::Word(w.rbegin(), w.rend())));
  }
}
BENCHMARK(BM_NormalFormReversedWords)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

static void BM_StraightenOrdinary(benchmark::State& state) {
  const int n = 3;
  const int m = static_cast<int>(state.range(0));
  const auto& A = mixedalg::mixed_algebra(n).plain();
  const auto words = qmatrix::monomial_basis(n, m);
  for (auto _ : state) {
    const qmatrix::StandardBasis basis(A, m);
    for (const auto& w : words) benchmark::DoNotOptimize(basis.straighten(A.normal_form(qmatrix::Word(w.rbegin(), w.rend()))));
  }
}
BENCHMARK(BM_StraightenOrdinary)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

static void BM_MixedQuotient(benchmark::State& state) {
  const int r = static_cast<int>(state.range(0));
  const int s = static_cast<int>(state.range(1));
  for (auto _ : state) {
    mixedalg::MixedQuotient quot(3, r, s, false);
    benchmark::DoNotOptimize(quot.dim());
  }
}
BENCHMARK(BM_MixedQuotient)->Args({1, 1})->Args({2, 1})->Args({2, 2})->Unit(benchmark::kMillisecond);

static void BM_IotaOnRationalBasis(benchmark::State& state) {
  const int r = static_cast<int>(state.range(0));
  const int s = static_cast<int>(state.range(1));
  const auto& B = mixedalg::rational_basis(3, r, s);
  for (auto _ : state) {
    for (std::size_t i = 0; i < B.bitableaux().size(); ++i) benchmark::DoNotOptimize(mixedalg::iota(B.element(i), 3, r, s));
  }
}
BENCHMARK(BM_IotaOnRationalBasis)->Args({1, 1})->Args({2, 2})->Unit(benchmark::kMillisecond);

static void BM_WalledCommutant(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const int r = static_cast<int>(state.range(1));
  const int s = static_cast<int>(state.range(2));
  const auto gens = tensorrep::walled_generators(n, r, s).all();
  for (auto _ : state) benchmark::DoNotOptimize(tensorrep::commutant_dim(gens, tensorrep::tensor_dim(n, r, s)).dim);
}
BENCHMARK(BM_WalledCommutant)->Args({2, 1, 1})->Args({3, 1, 1})->Args({3, 2, 1})->Unit(benchmark::kMillisecond);

static void BM_ImageAlgebra(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const int m = static_cast<int>(state.range(1));
  std::vector<tensorrep::Endo> gens;
  for (const auto& g : tensorrep::divided_power_generators(n, m)) gens.push_back(tensorrep::ugen_ordinary(n, m, g));
  const auto grading = tensorrep::mixed_grading(n, m, 0);
  for (auto _ : state) benchmark::DoNotOptimize(tensorrep::image_algebra_dim(gens, tensorrep::tensor_dim(n, m), grading));
}
BENCHMARK(BM_ImageAlgebra)->Args({2, 3})->Args({3, 2})->Args({3, 3})->Unit(benchmark::kMillisecond);

static void BM_VerifySchurWeyl(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const int r = static_cast<int>(state.range(1));
  const int s = static_cast<int>(state.range(2));
  for (auto _ : state) benchmark::DoNotOptimize(tensorrep::verify_schur_weyl(n, r, s).ok);
}
BENCHMARK(BM_VerifySchurWeyl)->Args({2, 1, 1})->Args({2, 2, 2})->Args({3, 1, 1})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
