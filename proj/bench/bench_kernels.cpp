#include <benchmark/benchmark.h>

#include <random>

#include "oadp/catalog.hpp"
#include "oadp/kernels.hpp"

using namespace oadp;

namespace {

std::vector<kernels::IntRow> random_rows(std::size_t r, std::size_t c) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> d(-20, 20);
  std::vector<kernels::IntRow> rows(r, kernels::IntRow(c));
  for (auto& row : rows)
    for (auto& x : row) x = d(rng);
  return rows;
}

void BM_bareiss(benchmark::State& st, Exec e) {
  auto base = random_rows(st.range(0), st.range(0) + 8);
  for (auto _ : st) {
    auto rows = base;
    benchmark::DoNotOptimize(kernels::bareiss(rows, e));
  }
}

void BM_build(benchmark::State& st, Exec e) {
  auto entry = load_entry("E1", fixture_dir());
  for (auto _ : st) benchmark::DoNotOptimize(build_system(entry.degree, entry.conditions, e));
}

void BM_fp_degree(benchmark::State& st, Exec e) {
  static BuiltEntry b = build_entry("E1");
  for (auto _ : st) benchmark::DoNotOptimize(fp_degree_of_image_surface(b.sigma, 10007, 8, 1, std::nullopt, e));
}

}  // namespace

BENCHMARK_CAPTURE(BM_bareiss, serial, Exec::Serial)->Arg(24)->Arg(48);
BENCHMARK_CAPTURE(BM_bareiss, parallel, Exec::Parallel)->Arg(24)->Arg(48);
BENCHMARK_CAPTURE(BM_build, serial, Exec::Serial);
BENCHMARK_CAPTURE(BM_build, parallel, Exec::Parallel);
BENCHMARK_CAPTURE(BM_fp_degree, serial, Exec::Serial);
BENCHMARK_CAPTURE(BM_fp_degree, parallel, Exec::Parallel);

BENCHMARK_MAIN();
