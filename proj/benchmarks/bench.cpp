#include "ricbound/bounds.hpp"
#include "ricbound/clifford.hpp"
#include "ricbound/endomorphism.hpp"
#include "ricbound/manifold.hpp"
#include "ricbound/runner.hpp"

#include <benchmark/benchmark.h>
#include <random>

using namespace ricbound;

namespace {

ProductSpec m6(double rho) {
    ProductSpec spec;
    spec.name = "M6";
    spec.factors = {EinsteinFactor{2, 2.0}, EinsteinFactor{2, -2.0},
                    TorusRevFactor{rho}};
    return spec;
}

void bm_clifford_rep(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        CliffordRep rep(n);
        benchmark::DoNotOptimize(rep.generator(0));
    }
}
BENCHMARK(bm_clifford_rep)->Arg(4)->Arg(8)->Arg(12);

void bm_build_e(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const CliffordRep rep(n);
    std::mt19937 rng(1);
    const PointJet jet = random_jet(n, rng);
    for (auto _ : state) benchmark::DoNotOptimize(build_e(rep, jet).mat);
}
BENCHMARK(bm_build_e)->Arg(4)->Arg(6)->Arg(8);

void bm_invariants(benchmark::State& state) {
    const ProductSpec spec = m6(2.0);
    const GridConfig grid{static_cast<int>(state.range(0))};
    for (auto _ : state) benchmark::DoNotOptimize(invariants(spec, grid));
}
BENCHMARK(bm_invariants)->Arg(1024)->Arg(8192);

void bm_bound_thm42(benchmark::State& state) {
    const BoundInputs in = BoundInputs::from(invariants(m6(2.0)), false);
    for (auto _ : state) benchmark::DoNotOptimize(bound_thm42(in));
}
BENCHMARK(bm_bound_thm42);

} // namespace

BENCHMARK_MAIN();
