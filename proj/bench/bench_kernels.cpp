// Parallel kernels against their serial references.
#include <benchmark/benchmark.h>

#include <random>

#include "qhb/exactla.hpp"

using namespace qhb::la;

namespace {

Mat random_mat(int r, int c, FieldSpec f, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> d(-5, 5);
  Mat m(r, c, f);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j) m(i, j) = f.from_int(d(rng));
  return m;
}

FieldSpec field_of(int64_t p) { return p == 0 ? FieldSpec() : FieldSpec::prime(static_cast<std::uint64_t>(p)); }

void BM_rref(benchmark::State& st) {
  Mat m = random_mat(static_cast<int>(st.range(0)), static_cast<int>(st.range(0)), field_of(st.range(1)), 1);
  for (auto _ : st) benchmark::DoNotOptimize(rref(m));
}

void BM_rref_serial(benchmark::State& st) {
  Mat m = random_mat(static_cast<int>(st.range(0)), static_cast<int>(st.range(0)), field_of(st.range(1)), 1);
  for (auto _ : st) benchmark::DoNotOptimize(rref_serial(m));
}

void BM_matmul(benchmark::State& st) {
  const int n = static_cast<int>(st.range(0));
  Mat a = random_mat(n, n, field_of(st.range(1)), 2), b = random_mat(n, n, field_of(st.range(1)), 3);
  for (auto _ : st) benchmark::DoNotOptimize(matmul(a, b));
}

void BM_matmul_serial(benchmark::State& st) {
  const int n = static_cast<int>(st.range(0));
  Mat a = random_mat(n, n, field_of(st.range(1)), 2), b = random_mat(n, n, field_of(st.range(1)), 3);
  for (auto _ : st) benchmark::DoNotOptimize(matmul_serial(a, b));
}

// sizes around the largest Hom systems (256 unknowns); second argument is the characteristic
#define KERNEL_ARGS ArgsProduct({{16, 64, 128}, {0, 5}})->Unit(benchmark::kMillisecond)

BENCHMARK(BM_rref)->KERNEL_ARGS;
BENCHMARK(BM_rref_serial)->KERNEL_ARGS;
BENCHMARK(BM_matmul)->KERNEL_ARGS;
BENCHMARK(BM_matmul_serial)->KERNEL_ARGS;

}  // namespace

BENCHMARK_MAIN();
