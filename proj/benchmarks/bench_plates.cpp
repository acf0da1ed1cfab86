#include <benchmark/benchmark.h>

#include "plates/fluctuations.hpp"
#include "plates/oracle.hpp"
#include "plates/regsum.hpp"
#include "plates/stress.hpp"

namespace {

using plates::BoundaryCondition;
using plates::PlateConfig;

void BM_ExpectationSet(benchmark::State& state) {
    const PlateConfig c(1.0);
    const auto p = plates::fluctuations::InteriorPoint::at_theta(c, 0.7);
    for (auto _ : state) {
        benchmark::DoNotOptimize(plates::fluctuations::expectation_set(BoundaryCondition::Neumann, c, p));
    }
}
BENCHMARK(BM_ExpectationSet);

void BM_StressReport(benchmark::State& state) {
    const PlateConfig c(1.0);
    const auto set = plates::fluctuations::expectation_set(
        BoundaryCondition::Dirichlet, c, plates::fluctuations::InteriorPoint::at_theta(c, 0.7));
    for (auto _ : state) {
        benchmark::DoNotOptimize(plates::stress::stress_report(set));
    }
}
BENCHMARK(BM_StressReport);

void BM_AbelOracle(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(plates::regsum::abel_sum_oracle(3, 0.9));
    }
}
BENCHMARK(BM_AbelOracle);

void BM_CutoffOracle(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(plates::regsum::cutoff_sum_oracle(static_cast<int>(state.range(0))));
    }
}
BENCHMARK(BM_CutoffOracle)->Arg(1)->Arg(3);

void BM_ModeSum(benchmark::State& state) {
    const auto obs = state.range(0) == 0 ? plates::oracle::Observable::Phi2 : plates::oracle::Observable::PhiDot2;
    const auto spec = plates::oracle::ModeSumSpec::make(BoundaryCondition::Dirichlet, 1.0, 1.0, obs);
    for (auto _ : state) {
        benchmark::DoNotOptimize(plates::oracle::mode_sum_finite_part(spec));
    }
}
BENCHMARK(BM_ModeSum)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
