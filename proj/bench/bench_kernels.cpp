#include "qfp/kernels.hpp"
#include "qfp/qcomb.hpp"

#include <benchmark/benchmark.h>

#include <random>
#include <vector>

using namespace qfp;

namespace {

std::vector<Integer> random_coeffs(std::size_t n, unsigned bits, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Integer> v(n);
  for (auto& c : v) {
    for (unsigned b = 0; b < bits; b += 32) {
      c <<= 32;
      c += static_cast<unsigned long>(rng() & 0xffffffffu);
    }
  }
  return v;
}

void BM_schoolbook(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto a = random_coeffs(n, 128, 1), b = random_coeffs(n, 128, 2);
  for (auto _ : state) benchmark::DoNotOptimize(kernels::convolve_schoolbook(a, b));
}

void BM_schoolbook_parallel(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto a = random_coeffs(n, 128, 1), b = random_coeffs(n, 128, 2);
  for (auto _ : state) benchmark::DoNotOptimize(kernels::convolve_schoolbook_parallel(a, b));
}

void BM_kronecker(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto a = random_coeffs(n, 128, 1), b = random_coeffs(n, 128, 2);
  for (auto _ : state) benchmark::DoNotOptimize(kernels::convolve_kronecker(a, b));
}

void BM_fold_serial(benchmark::State& state) {
  const auto a = random_coeffs(static_cast<std::size_t>(state.range(0)), 256, 3);
  for (auto _ : state) benchmark::DoNotOptimize(kernels::fold_exponents_serial(a, 199));
}

void BM_fold(benchmark::State& state) {
  const auto a = random_coeffs(static_cast<std::size_t>(state.range(0)), 256, 3);
  for (auto _ : state) benchmark::DoNotOptimize(kernels::fold_exponents(a, 199));
}

void BM_pascal_row_serial(benchmark::State& state) {
  BinomialRow row;
  while (row.n() < state.range(0)) row = row.next();
  for (auto _ : state) benchmark::DoNotOptimize(row.next_serial());
}

void BM_pascal_row(benchmark::State& state) {
  BinomialRow row;
  while (row.n() < state.range(0)) row = row.next();
  for (auto _ : state) benchmark::DoNotOptimize(row.next());
}

std::vector<std::vector<Integer>> product_operands(std::size_t terms, std::size_t len) {
  std::vector<std::vector<Integer>> ops;
  for (std::size_t i = 0; i < 2 * terms; ++i) ops.push_back(random_coeffs(len, 96, 10 + i));
  return ops;
}

std::vector<kernels::ProductTerm> product_terms(const std::vector<std::vector<Integer>>& ops) {
  std::vector<kernels::ProductTerm> terms;
  for (std::size_t i = 0; i + 1 < ops.size(); i += 2) terms.push_back({ops[i], ops[i + 1], i, i % 4 == 0 ? 1 : -1});
  return terms;
}

void BM_sum_of_products_serial(benchmark::State& state) {
  const auto ops = product_operands(static_cast<std::size_t>(state.range(0)), 400);
  const auto terms = product_terms(ops);
  for (auto _ : state) benchmark::DoNotOptimize(kernels::sum_of_products_serial(terms));
}

void BM_sum_of_products(benchmark::State& state) {
  const auto ops = product_operands(static_cast<std::size_t>(state.range(0)), 400);
  const auto terms = product_terms(ops);
  for (auto _ : state) benchmark::DoNotOptimize(kernels::sum_of_products(terms));
}

}  // namespace

BENCHMARK(BM_schoolbook)->Arg(64)->Arg(512);
BENCHMARK(BM_schoolbook_parallel)->Arg(64)->Arg(512);
BENCHMARK(BM_kronecker)->Arg(64)->Arg(512)->Arg(4096);
BENCHMARK(BM_fold_serial)->Arg(1 << 14)->Arg(1 << 17);
BENCHMARK(BM_fold)->Arg(1 << 14)->Arg(1 << 17);
BENCHMARK(BM_pascal_row_serial)->Arg(100)->Arg(200);
BENCHMARK(BM_pascal_row)->Arg(100)->Arg(200);
BENCHMARK(BM_sum_of_products_serial)->Arg(8)->Arg(32);
BENCHMARK(BM_sum_of_products)->Arg(8)->Arg(32);

BENCHMARK_MAIN();
