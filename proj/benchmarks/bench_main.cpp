#include <benchmark/benchmark.h>

#include "twistoid/classifier.hpp"
#include "twistoid/flag_complex.hpp"
#include "twistoid/group.hpp"

using namespace twistoid;

static void BM_BuildComplex(benchmark::State& state) {
    TwistoidParams p{TetracosmParams{1, state.range(0), 0}};
    GroupSpec g = build_group(validate(p));
    for (auto _ : state) {
        auto c = build_complex(g);
        benchmark::DoNotOptimize(c.flags.data());
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_BuildComplex)->Arg(1)->Arg(2)->Arg(4)->Arg(6);

static void BM_OrbitCount(benchmark::State& state) {
    TwistoidParams p{TetracosmParams{1, state.range(0), 1}};
    GroupSpec g = build_group(validate(p));
    auto complex = build_complex(g);
    auto syms = enumerate_symmetries(g);
    for (auto _ : state) {
        auto orbits = orbit_count(complex, syms);
        benchmark::DoNotOptimize(orbits.orbitCount);
    }
}
BENCHMARK(BM_OrbitCount)->Arg(1)->Arg(2)->Arg(3);

static void BM_EnumerateSymmetries(benchmark::State& state) {
    TwistoidParams p{DicosmAxialParams{1, 0, state.range(0), 1, 2}};
    GroupSpec g = build_group(validate(p));
    for (auto _ : state) {
        auto syms = enumerate_symmetries(g);
        benchmark::DoNotOptimize(syms.data());
    }
}
BENCHMARK(BM_EnumerateSymmetries)->Arg(4)->Arg(8)->Arg(12);

static void BM_ClassifyGrid(benchmark::State& state) {
    for (auto _ : state) {
        long long total = 0;
        for (long long P2 = 1; P2 <= state.range(0); ++P2)
            for (long long P3 = 0; P3 < P2; ++P3)
                for (long long Q3 = 1; Q3 <= 6; ++Q3) {
                    auto rep = classify(TwistoidParams{DicosmAxialParams{1, 0, P2, P3, Q3}});
                    total += rep.flagOrbitCount;
                }
        benchmark::DoNotOptimize(total);
    }
}
BENCHMARK(BM_ClassifyGrid)->Arg(10)->Arg(20);

BENCHMARK_MAIN();
