// Serial reference against OpenMP kernels: exceptional enumeration and range scans.

#include "wpp/homlat.hpp"
#include "wpp/resolution.hpp"
#include "wpp/scan.hpp"

#include <benchmark/benchmark.h>

using namespace wpp;

namespace {

void exceptional(benchmark::State& state, bool parallel) {
  auto R = resolution::build_resolution(arith::make_weight_triple(11, 13, 14), 1);
  homlat::ExceptionalOptions opt;
  opt.coeff_bound = state.range(0);
  opt.parallel = parallel;
  std::size_t found = 0;
  for (auto _ : state) {
    auto E = homlat::log_exceptional(R.lattice, R.area, R.components(), opt);
    found = E.classes.size();
    benchmark::DoNotOptimize(E);
  }
  state.counters["classes"] = static_cast<double>(found);
}

void range_scan(benchmark::State& state, bool parallel) {
  scan::Options opt;
  opt.max_c = state.range(0);
  for (auto _ : state) {
    auto r = parallel ? scan::run_parallel(opt) : scan::run_serial(opt);
    benchmark::DoNotOptimize(r);
  }
}

}  // namespace

BENCHMARK_CAPTURE(exceptional, serial, false)->Arg(6)->Arg(9)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(exceptional, parallel, true)->Arg(6)->Arg(9)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(range_scan, serial, false)->Arg(20)->Arg(30)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(range_scan, parallel, true)->Arg(20)->Arg(30)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
