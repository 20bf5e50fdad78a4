#include <benchmark/benchmark.h>

#include <random>

#include "kuramoto_signed/basins.hpp"
#include "kuramoto_signed/dynamics.hpp"
#include "kuramoto_signed/spectral.hpp"

using namespace kuramoto_signed;

namespace {

SystemState random_state(std::size_t n) {
    std::mt19937_64 rng(1);
    std::uniform_real_distribution<double> phase(0.0, kTwoPi);
    std::uniform_real_distribution<double> weight(-1.0, 1.0);
    std::vector<double> theta(n);
    for (auto& t : theta) t = phase(rng);
    CouplingMatrix kappa(n);
    for (double& k : kappa.data()) k = weight(rng);
    return {PhaseState(std::move(theta)), std::move(kappa), 0.0};
}

void BM_RhsAdaptive(benchmark::State& state) {
    const auto s = random_state(static_cast<std::size_t>(state.range(0)));
    const ModelParams p{0.0, 0.1, -1.0, 0.5};
    for (auto _ : state) benchmark::DoNotOptimize(rhs_adaptive(s, p));
}
BENCHMARK(BM_RhsAdaptive)->Arg(10)->Arg(50)->Arg(200);

void BM_Integrate(benchmark::State& state) {
    const auto s = random_state(static_cast<std::size_t>(state.range(0)));
    const ModelParams p{0.0, 0.0, -1.0, 0.5};
    const IntegratorConfig cfg{1e-2, 10.0, 100};
    for (auto _ : state) benchmark::DoNotOptimize(integrate(s, p, cfg));
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(cfg.step_count()));
}
BENCHMARK(BM_Integrate)->Arg(10)->Arg(50)->Unit(benchmark::kMillisecond);

void BM_NumericSpectrum(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto k = build_band_network({n, n / 4, 0.5});
    const auto j = numeric_jacobian(k, rotating_wave(n, 1).phases(), 0.0);
    for (auto _ : state) benchmark::DoNotOptimize(numeric_spectrum(j));
}
BENCHMARK(BM_NumericSpectrum)->Arg(20)->Arg(50)->Arg(100)->Unit(benchmark::kMillisecond);

void BM_CriticalDiameter(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(critical_diameter(-1.0, 0.3, -0.4));
}
BENCHMARK(BM_CriticalDiameter)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
