#include <benchmark/benchmark.h>

#include "magicfib/braid.hpp"
#include "magicfib/contfrac.hpp"
#include "magicfib/garside.hpp"
#include "magicfib/horseshoe.hpp"
#include "magicfib/intpoly.hpp"
#include "magicfib/lamination.hpp"
#include "magicfib/magic.hpp"

namespace {

namespace mg = mfib::magic;
namespace br = mfib::braid;

void BM_LargestRoot(benchmark::State& state) {
    const long x = state.range(0);
    const auto f = mg::teichmuller_specialization({x, x - 1, 0});
    for (auto _ : state) benchmark::DoNotOptimize(mfib::poly::largest_real_root(f));
}
BENCHMARK(BM_LargestRoot)->Arg(5)->Arg(20)->Arg(80);

void BM_CompareDilatation(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(mg::compare_dilatation({5, 1, 0}, {3, 2, 1}));
}
BENCHMARK(BM_CompareDilatation);

void BM_MinClass(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(mg::min_dilatation_class(n));
}
BENCHMARK(BM_MinClass)->Arg(10)->Arg(40);

void BM_NormalForm(benchmark::State& state) {
    const auto b = br::tmp(static_cast<int>(state.range(0)), 2).power(4);
    for (auto _ : state) benchmark::DoNotOptimize(br::normal_form(b));
}
BENCHMARK(BM_NormalForm)->Arg(6)->Arg(10)->Arg(16);

void BM_SuperSummitSet(benchmark::State& state) {
    const auto b = br::braid_a_prime();
    for (auto _ : state) benchmark::DoNotOptimize(br::super_summit_set(b));
}
BENCHMARK(BM_SuperSummitSet)->Unit(benchmark::kMillisecond);

void BM_Dynnikov(benchmark::State& state) {
    const auto b = br::tmp(static_cast<int>(state.range(0)), 1);
    for (auto _ : state) benchmark::DoNotOptimize(mfib::lam::estimate_dilatation(b));
}
BENCHMARK(BM_Dynnikov)->Arg(6)->Arg(10)->Arg(20)->Unit(benchmark::kMillisecond);

void BM_TableRow(benchmark::State& state) {
    const auto m = static_cast<mfib::cf::Int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(mfib::cf::minimal_monodromy(m));
}
BENCHMARK(BM_TableRow)->Arg(10)->Arg(39)->Unit(benchmark::kMillisecond);

void BM_Certificate(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(mfib::horseshoe::horseshoe_certificate(8, 2));
}
BENCHMARK(BM_Certificate)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
