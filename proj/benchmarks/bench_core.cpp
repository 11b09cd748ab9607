#include <benchmark/benchmark.h>

#include "lab5/classify.hpp"
#include "lab5/enumerate.hpp"
#include "lab5/forms.hpp"
#include "lab5/rho.hpp"

namespace {

void BM_decide_homotopy_negative(benchmark::State& state) {
    // inequivalent pair forces the full certificate scan
    const auto L = lab5::make_bundle(state.range(0), state.range(0));
    const auto L2 = lab5::make_bundle(state.range(0), 2 * state.range(0));
    for (auto _ : state) {
        auto v = lab5::decide_homotopy(L, L2, lab5::RelOrientation::same);
        benchmark::DoNotOptimize(v);
    }
}
BENCHMARK(BM_decide_homotopy_negative)->Arg(5)->Arg(11)->Arg(25);

void BM_fast_homotopy_verdict(benchmark::State& state) {
    const auto L = lab5::make_bundle(state.range(0), state.range(0));
    const auto L2 = lab5::make_bundle(state.range(0), 2 * state.range(0));
    for (auto _ : state) {
        bool v = lab5::homotopy_equivalent(L, L2, lab5::RelOrientation::same);
        benchmark::DoNotOptimize(v);
    }
}
BENCHMARK(BM_fast_homotopy_verdict)->Arg(5)->Arg(11)->Arg(25)->Arg(97);

void BM_rho_table(benchmark::State& state) {
    const auto L = lab5::make_bundle(state.range(0), 3 * state.range(0));
    for (auto _ : state) {
        double acc = 0.0;
        for (std::int64_t g = 1; g < L.r; ++g) acc += lab5::rho(L, g).imaginary;
        benchmark::DoNotOptimize(acc);
    }
}
BENCHMARK(BM_rho_table)->Arg(101);

void BM_multisignature(benchmark::State& state) {
    lab5::LambdaMatrix M(state.range(0), 2);
    M.at(0, 0) = lab5::GroupRingElement::basis(state.range(0), 1) -
                 lab5::GroupRingElement::basis(state.range(0), state.range(0) - 1);
    M.at(0, 1) = lab5::GroupRingElement::basis(state.range(0), 0);
    M.at(1, 0) = lab5::GroupRingElement::basis(state.range(0), 0, -1);
    M.at(1, 1) = M.at(0, 0);
    for (auto _ : state) {
        auto ms = lab5::multisignature(M);
        benchmark::DoNotOptimize(ms);
    }
}
BENCHMARK(BM_multisignature)->Arg(5)->Arg(7)->Arg(13);

void BM_enumerate_box(benchmark::State& state) {
    for (auto _ : state) {
        auto rep = lab5::enumerate_families({.r = 5, .bound = state.range(0)});
        benchmark::DoNotOptimize(rep);
    }
}
BENCHMARK(BM_enumerate_box)->Unit(benchmark::kMillisecond)->Arg(25)->Arg(50);

} // namespace

int main(int argc, char** argv) {
    benchmark::Initialize(&argc, argv);
    if (benchmark::ReportUnrecognizedArguments(argc, argv)) return 1;
    benchmark::RunSpecifiedBenchmarks();
    benchmark::Shutdown();
    return 0;
}
