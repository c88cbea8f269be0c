#include <benchmark/benchmark.h>

#include <cmath>

#include "kummer/periods.hpp"

using namespace kummer;

namespace {

void bm_quad_beta(benchmark::State& state) {
    QuadratureSpec spec;
    for (auto _ : state) {
        auto v = quad_ts([](double x) { return 1.0 / std::sqrt(x * (1.0 - x)); }, spec);
        benchmark::DoNotOptimize(v);
    }
}
BENCHMARK(bm_quad_beta)->Unit(benchmark::kMicrosecond);

void bm_period_p1(benchmark::State& state) {
    for (auto _ : state) {
        auto v = period(1, Complex(-1.0, 0.0));
        benchmark::DoNotOptimize(v);
    }
}
BENCHMARK(bm_period_p1)->Unit(benchmark::kMicrosecond);

void bm_eval_L(benchmark::State& state) {
    BranchPoint p = BranchPoint::principal(-1.0, -2.0);
    for (auto _ : state) {
        auto v = eval_L(p);
        benchmark::DoNotOptimize(v);
    }
}
BENCHMARK(bm_eval_L)->Unit(benchmark::kMillisecond);

}  // namespace
