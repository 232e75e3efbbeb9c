#include <benchmark/benchmark.h>

#include "cvg/body.hpp"
#include "cvg/caps.hpp"
#include "cvg/corpus.hpp"
#include "cvg/hull.hpp"
#include "cvg/illumination.hpp"
#include "cvg/measure.hpp"
#include "cvg/rng.hpp"

namespace {

std::vector<cvg::Vec> random_cloud(int d, int n, std::uint64_t seed) {
    cvg::RandomStream rs(seed);
    std::vector<cvg::Vec> pts;
    pts.reserve(n);
    for (int i = 0; i < n; ++i) pts.push_back(rs.ball_point(cvg::Vec::Zero(d), 1.0));
    return pts;
}

void BM_hull_build(benchmark::State& state) {
    const int d = static_cast<int>(state.range(0));
    const int n = static_cast<int>(state.range(1));
    auto pts = random_cloud(d, n, 42);
    for (auto _ : state) {
        cvg::VPolytope poly(pts);
        benchmark::DoNotOptimize(poly.facets().size());
    }
}
BENCHMARK(BM_hull_build)->Args({2, 256})->Args({3, 256})->Args({3, 2048});

void BM_mc_volume(benchmark::State& state) {
    auto body = cvg::make_named_body("cube3");
    cvg::MeasureOptions opt;
    opt.prefer_exact = false;
    opt.samples = state.range(0);
    for (auto _ : state) {
        auto est = cvg::volume(*body, opt);
        benchmark::DoNotOptimize(est.value);
    }
}
BENCHMARK(BM_mc_volume)->Arg(100'000)->Arg(1'000'000);

void BM_cut_solve(benchmark::State& state) {
    auto body = cvg::make_named_body("disk");
    cvg::Vec u(2);
    u << 1.0, 0.0;
    cvg::CapSolveOptions opt;
    for (auto _ : state) {
        auto cut = cvg::solve_cut_offset(*body, u, 1e-3, opt);
        benchmark::DoNotOptimize(cut.offset);
    }
}
BENCHMARK(BM_cut_solve);

void BM_overshoot(benchmark::State& state) {
    auto body = cvg::make_named_body("square");
    cvg::Vec x(2);
    x << 1.3, 0.4;
    for (auto _ : state) {
        auto res = cvg::overshoot(*body, x);
        benchmark::DoNotOptimize(res.value);
    }
}
BENCHMARK(BM_overshoot);

}  // namespace

BENCHMARK_MAIN();
