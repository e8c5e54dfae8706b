#include <benchmark/benchmark.h>

#include "plradon/analysis.hpp"
#include "plradon/construction.hpp"
#include "plradon/profile.hpp"
#include "plradon/sobolev.hpp"

using namespace plradon;

static void BM_build_truncation(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(build_truncation(static_cast<int>(state.range(0))));
}
BENCHMARK(BM_build_truncation)->DenseRange(2, 12, 2);

static void BM_profile_exact_omega0(benchmark::State& state) {
    const Truncation tr = build_truncation(static_cast<int>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(region_profile_exact(tr.region, SpecialDir::Omega0));
}
BENCHMARK(BM_profile_exact_omega0)->DenseRange(2, 10, 2);

static void BM_profile_float(benchmark::State& state) {
    const Truncation tr = build_truncation(static_cast<int>(state.range(0)));
    const auto shadows = shadow_region(tr.region);
    const Direction d = Direction::angle(0.71);
    for (auto _ : state) benchmark::DoNotOptimize(region_profile_float(shadows, d));
}
BENCHMARK(BM_profile_float)->DenseRange(2, 12, 2);

static void BM_min_sq_dist(benchmark::State& state) {
    const Truncation tr = build_truncation(8);
    for (auto _ : state)
        benchmark::DoNotOptimize(min_sq_dist(tr.foot(8, 1), tr.foot(3, 1)));
}
BENCHMARK(BM_min_sq_dist);

static void BM_gagliardo_shell(benchmark::State& state) {
    const SobolevShape ball = SobolevShape::ball(1.0);
    for (auto _ : state)
        benchmark::DoNotOptimize(gagliardo_truncated(ball, 1.0 / 64, state.range(0), 7));
}
BENCHMARK(BM_gagliardo_shell)->Arg(1 << 14)->Arg(1 << 17);

BENCHMARK_MAIN();
