#include <benchmark/benchmark.h>

#include <cmath>

#include "diffpath/diffusion_path.hpp"
#include "diffpath/eulerian_thermal.hpp"
#include "diffpath/properties.hpp"
#include "diffpath/similarity_kernels.hpp"
#include "diffpath/special_functions.hpp"
#include "diffpath/velocity_field.hpp"

namespace {

diffpath::FluidProperties water() { return {0.001002, 998.0, 4182.0, 0.603, 20.0}; }
diffpath::PlateScenario scenario() { return {0.2, 25.0, 20.0, 0.05, 0.10}; }

void BM_Erf(benchmark::State& state) {
    double z = 0.0;
    for (auto _ : state) {
        z += 1e-6;
        benchmark::DoNotOptimize(diffpath::erf(z));
    }
}
BENCHMARK(BM_Erf);

void BM_ErfSeriesOracle(benchmark::State& state) {
    double z = 0.0;
    for (auto _ : state) {
        z = std::fmod(z + 1e-3, 3.9);
        benchmark::DoNotOptimize(diffpath::erf_series_oracle(z, 1e-12));
    }
}
BENCHMARK(BM_ErfSeriesOracle);

void BM_VelocityAt(benchmark::State& state) {
    const diffpath::VelocityField vel(scenario(), diffpath::derive_coefficients(water()));
    double y = 0.0;
    for (auto _ : state) {
        y = std::fmod(y + 1e-6, 4e-3);
        benchmark::DoNotOptimize(vel.at(0.15, y));
    }
}
BENCHMARK(BM_VelocityAt);

void BM_BlasiusSolve(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(diffpath::blasius_solve(10.0, 0.005));
    }
}
BENCHMARK(BM_BlasiusSolve);

void BM_March(benchmark::State& state) {
    const diffpath::VelocityField vel(scenario(), diffpath::derive_coefficients(water()));
    diffpath::GridSchedule schedule{0.00125, 1.64337e-5, 1.05, 1.05, 38};
    for (auto _ : state) {
        benchmark::DoNotOptimize(diffpath::march(vel, schedule));
    }
}
BENCHMARK(BM_March);

void BM_EnergyMarch(benchmark::State& state) {
    const diffpath::VelocityField vel(scenario(), diffpath::derive_coefficients(water()));
    const diffpath::ThermalModel model(vel, diffpath::ThermalLayerModel::MomentumScaled);
    const std::size_t n = static_cast<std::size_t>(state.range(0));
    const diffpath::FieldGridSpec grid =
        diffpath::default_field_grid(model, 0.32, std::max<std::size_t>(n, 100),
                                     std::max<std::size_t>(n / 2, 200));
    for (auto _ : state) {
        benchmark::DoNotOptimize(diffpath::fd_energy_march(vel, grid));
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_EnergyMarch)->RangeMultiplier(2)->Range(128, 1024)->Complexity();

}  // namespace

BENCHMARK_MAIN();
