#include <cmath>

#include <benchmark/benchmark.h>

#include "switchosc/classical.hpp"
#include "switchosc/oracle.hpp"
#include "switchosc/quantum.hpp"
#include "switchosc/wigner.hpp"

namespace {

using namespace switchosc;

const OscParams kFigure{.m = 1.0, .hbar = 1.0, .alpha = 0.5, .omega = 1.0};

void BM_Epsilon(benchmark::State& state) {
    double t = -5.0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(epsilon(t, kFigure));
        t = t > 10.0 ? -5.0 : t + 0.01;
    }
}
BENCHMARK(BM_Epsilon);

void BM_SecondMoments(benchmark::State& state) {
    double t = -5.0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(second_moments(t, kFigure));
        t = t > 10.0 ? -5.0 : t + 0.01;
    }
}
BENCHMARK(BM_SecondMoments);

void BM_IntegrateOde(benchmark::State& state) {
    const double tol = std::pow(10.0, -static_cast<double>(state.range(0)));
    const auto init = epsilon(-5.0, kFigure);
    std::size_t steps = 0;
    for (auto _ : state) {
        const auto tr = oracle::integrate_ode(kFigure, -5.0, 10.0, {init.eps, init.eps_dot}, tol);
        steps = tr.size();
        benchmark::DoNotOptimize(tr.states.back());
    }
    state.counters["steps"] = static_cast<double>(steps);
}
BENCHMARK(BM_IntegrateOde)->Arg(6)->Arg(9)->Arg(11);

void BM_WignerGrid(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) {
        const auto g = wigner_grid(0.0, {{1.0, 0.2}}, kFigure, 6.0, 6.0, n, n);
        benchmark::DoNotOptimize(grid_integral(g));
    }
    state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(n * n));
}
BENCHMARK(BM_WignerGrid)->Arg(128)->Arg(256);

void BM_CoherenceScan(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(coherence_scan(kFigure, 1.5707963267948966, 15.0));
}
BENCHMARK(BM_CoherenceScan);

}  // namespace

BENCHMARK_MAIN();
