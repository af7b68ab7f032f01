#include "benchmark/benchmark.h"

#include "curvedeg/families.hpp"
#include "curvedeg/poly.hpp"
#include "curvedeg/poly_text.hpp"

namespace {

using namespace curvedeg;

void BM_IsTotallyPositive(benchmark::State& state) {
  MonicIntPoly g = g_poly(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(is_totally_positive(g));
  }
}
BENCHMARK(BM_IsTotallyPositive)->Arg(7)->Arg(13)->Arg(23)->Arg(31);

void BM_SturmCount(benchmark::State& state) {
  MonicIntPoly g = squarefree_part(g_poly(state.range(0)));
  Interval window = Interval::open(0, 4);
  for (auto _ : state) {
    benchmark::DoNotOptimize(count_real_roots(g, window));
  }
}
BENCHMARK(BM_SturmCount)->Arg(13)->Arg(23)->Arg(31);

void BM_ParseRender(benchmark::State& state) {
  std::string text = render_poly(g_poly(31));
  for (auto _ : state) {
    benchmark::DoNotOptimize(render_poly(parse_poly(text)));
  }
}
BENCHMARK(BM_ParseRender);

void BM_PowerSums(benchmark::State& state) {
  MonicIntPoly g = g_poly(31);
  for (auto _ : state) {
    benchmark::DoNotOptimize(power_sums(g, 24));
  }
}
BENCHMARK(BM_PowerSums);

}  // namespace
