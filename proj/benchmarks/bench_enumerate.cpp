#include "benchmark/benchmark.h"

#include "curvedeg/enumerate.hpp"

namespace {

using namespace curvedeg;

// Degree/trace pairs of increasing excess; a fresh catalog per iteration so
// the cell is genuinely re-enumerated.
void BM_EnumerateCell(benchmark::State& state) {
  long long m = state.range(0);
  long long t = state.range(1);
  size_t entries = 0;
  for (auto _ : state) {
    Catalog catalog;
    entries = enumerate_tp(catalog, m, t).size();
    benchmark::DoNotOptimize(entries);
  }
  state.counters["entries"] = static_cast<double>(entries);
}
BENCHMARK(BM_EnumerateCell)
    ->Args({4, 7})
    ->Args({5, 9})
    ->Args({5, 10})
    ->Args({6, 11})
    ->Unit(benchmark::kMillisecond);

void BM_FactorTP(benchmark::State& state) {
  Catalog catalog;
  MonicIntPoly p =
      MonicIntPoly::linear(1).pow(2) *
      MonicIntPoly({mpz_class(1), mpz_class(-3), mpz_class(1)}).pow(2);
  enumerate_tp(catalog, 1, 1);  // warm the divisor cells
  for (auto _ : state) {
    benchmark::DoNotOptimize(factor_tp(catalog, p));
  }
}
BENCHMARK(BM_FactorTP);

}  // namespace
