#include <benchmark/benchmark.h>

#include "tamcy/binary_tree.hpp"
#include "tamcy/complex.hpp"
#include "tamcy/interval_poset.hpp"
#include "tamcy/matrix.hpp"
#include "tamcy/noncrossing.hpp"
#include "tamcy/rep.hpp"
#include "tamcy/verify.hpp"

using namespace tamcy;

static void BM_TamariLattice(benchmark::State& state) {
    const int n = int(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(tamari_lattice(n));
}
BENCHMARK(BM_TamariLattice)->Arg(5)->Arg(6)->Arg(7)->Arg(8)->Unit(benchmark::kMillisecond);

static void BM_EnumerateExceptional(benchmark::State& state) {
    const int n = int(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_exceptional(n));
}
BENCHMARK(BM_EnumerateExceptional)->Arg(4)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);

// psi and its inverse across the whole exceptional catalog.
static void BM_PsiRoundTrip(benchmark::State& state) {
    const auto catalog = enumerate_exceptional(int(state.range(0)));
    for (auto _ : state)
        for (const auto& ip : catalog) benchmark::DoNotOptimize(psi_inv(psi(ip)));
}
BENCHMARK(BM_PsiRoundTrip)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

static void BM_PlanarDual(benchmark::State& state) {
    const auto trees = enumerate_nc(int(state.range(0)));
    for (auto _ : state)
        for (const auto& t : trees) benchmark::DoNotOptimize(planar_dual(t));
}
BENCHMARK(BM_PlanarDual)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);

static void BM_CoxeterMatrix(benchmark::State& state) {
    const auto lat = tamari_lattice(int(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(coxeter_matrix(*lat.poset));
}
BENCHMARK(BM_CoxeterMatrix)->Arg(6)->Arg(7)->Arg(8)->Unit(benchmark::kMillisecond);

static void BM_CoxeterPower(benchmark::State& state) {
    const int n = int(state.range(0));
    const auto lat = tamari_lattice(n);
    const IntMatrix c = coxeter_matrix(*lat.poset);
    for (auto _ : state) benchmark::DoNotOptimize(matrix_power_is_identity(c, 2 * n + 2));
}
BENCHMARK(BM_CoxeterPower)->Arg(6)->Arg(7)->Arg(8)->Unit(benchmark::kMillisecond);

// The full homological pipeline on one interval-poset: boolean resolution,
// Nakayama image, expansion and homology.
static void BM_SerreHomology(benchmark::State& state) {
    const auto lat = tamari_lattice(4);
    const IntervalPoset ip = ip_closure(4, {{2, 3}, {3, 1}, {1, 4}});
    for (auto _ : state)
        benchmark::DoNotOptimize(homology(expand(nakayama(boolean_resolution(lat, ip)))));
}
BENCHMARK(BM_SerreHomology)->Unit(benchmark::kMillisecond);

static void BM_SerreOrbit(benchmark::State& state) {
    const IntervalPoset ip = ip_closure(4, {{2, 3}, {3, 1}, {1, 4}});
    for (auto _ : state) benchmark::DoNotOptimize(serre_orbit(ip));
}
BENCHMARK(BM_SerreOrbit)->Unit(benchmark::kMicrosecond);

BENCHMARK_MAIN();
