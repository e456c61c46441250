// Serial reference path vs the OpenMP kernels for enumeration and scans.

#include <benchmark/benchmark.h>

#include "ppb/parse.hpp"
#include "ppb/preperiodic.hpp"

namespace {

using namespace ppb;
using namespace ppb::preperiodic;

EnumerateOptions with(Execution e) {
  EnumerateOptions o;
  o.execution = e;
  return o;
}

// c = j/2520^2 puts caps at 2, 3, 5 and 7: 48 denominators up to 2520.
const char* kWide = "z^2 - 19051229/6350400";

void BM_Enumerate(benchmark::State& state, Execution e) {
  const Polynomial phi = cli::parse_poly(kWide);
  const auto opts = with(e);
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_preperiodic(phi, opts));
  state.counters["candidates"] = build_box(phi).candidate_count().get_d();
}

void BM_Scan(benchmark::State& state, Execution e) {
  const ScanRange range{12, Rational(-12), Rational(1, 4)};
  const auto opts = with(e);
  for (auto _ : state) benchmark::DoNotOptimize(scan_quadratic(range, opts));
}

}  // namespace

BENCHMARK_CAPTURE(BM_Enumerate, serial, Execution::Serial)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Enumerate, parallel, Execution::Parallel)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Scan, serial, Execution::Serial)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Scan, parallel, Execution::Parallel)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
