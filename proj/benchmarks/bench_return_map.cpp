// SPDX-License-Identifier: MIT
#include <benchmark/benchmark.h>

#include "lattice_rotor/core_map.hpp"
#include "lattice_rotor/hamiltonian.hpp"
#include "lattice_rotor/return_map.hpp"
#include "lattice_rotor/statistics.hpp"

using namespace lattice_rotor;

namespace {

RotationParameter lam_of(const benchmark::State& state) {
    return RotationParameter::inverse_power_of_two(static_cast<int>(state.range(0)));
}

// A point of X^9 halfway up the regular run.
LatticePoint mid_point(const RegularDomain& dom) {
    const Int s = (dom.s_min + dom.s_max) / 2;
    return {s / 2, s - s / 2};
}

}  // namespace

static void BM_ApplyF(benchmark::State& state) {
    const RotationParameter lam = lam_of(state);
    LatticePoint z{12345, 678};
    for (auto _ : state) {
        z = apply_F(z, lam);
        benchmark::DoNotOptimize(z);
    }
    state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_ApplyF)->Arg(10)->Arg(20);

static void BM_ReturnMapDirect(benchmark::State& state) {
    const RotationParameter lam = lam_of(state);
    const RegularDomain dom = regular_domain_Xe(9, lam);
    const LatticePoint z = mid_point(dom);
    for (auto _ : state) benchmark::DoNotOptimize(return_map_direct(z, lam));
}
BENCHMARK(BM_ReturnMapDirect)->Arg(12)->Arg(16)->Arg(20)->Unit(benchmark::kMillisecond);

static void BM_ReturnMapAccelerated(benchmark::State& state) {
    const RotationParameter lam = lam_of(state);
    const RegularDomain dom = regular_domain_Xe(9, lam);
    const LatticePoint z = mid_point(dom);
    for (auto _ : state) benchmark::DoNotOptimize(return_map_Phi(z, lam, &dom.cls));
}
BENCHMARK(BM_ReturnMapAccelerated)->Arg(12)->Arg(16)->Arg(20)->Unit(benchmark::kMicrosecond);

static void BM_VertexList(benchmark::State& state) {
    const Int e = state.range(0);
    for (auto _ : state) benchmark::DoNotOptimize(vertex_list(e));
}
BENCHMARK(BM_VertexList)->Arg(9)->Arg(10'000)->Arg(40'000);

static void BM_PeriodT(benchmark::State& state) {
    const Rational a = representative_alpha(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(period_T(a));
}
BENCHMARK(BM_PeriodT)->Arg(9)->Arg(10'000);

static void BM_InvariantSet(benchmark::State& state) {
    const RegularDomain dom = regular_domain_Xe(400, RotationParameter::inverse_power_of_two(14));
    for (auto _ : state) benchmark::DoNotOptimize(build_invariant_set(dom, state.range(0)));
}
BENCHMARK(BM_InvariantSet)->Arg(4)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
