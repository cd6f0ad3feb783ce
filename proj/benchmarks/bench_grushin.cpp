#include <benchmark/benchmark.h>

#include <cmath>
#include <vector>

#include "grushin/bump.hpp"
#include "grushin/diffop.hpp"
#include "grushin/gtransform.hpp"
#include "grushin/heat.hpp"
#include "grushin/specfun.hpp"

using namespace grushin;

namespace {

const Bump hill{2.0, 1.5, 4.0};

PlaneFunction hill2()
{
    return {[](double r, double s) { return hill(r) * hill(s); }, Box{hill.support(), hill.support()}, {}, {}};
}

std::vector<Point> probe_points()
{
    std::vector<Point> pts;
    for (double r : {1.0, 2.0, 3.0})
        for (double s : {1.0, 2.0, 3.0})
            pts.push_back({r, s});
    return pts;
}

}  // namespace

static void BM_BesselJ(benchmark::State& state)
{
    double x = 0.1;
    for (auto _ : state) {
        benchmark::DoNotOptimize(specfun::bessel_j(0.7, x));
        x = x < 40.0 ? x + 0.37 : 0.1;
    }
}
BENCHMARK(BM_BesselJ);

static void BM_LaguerreSequence(benchmark::State& state)
{
    const specfun::LaguerreRecurrence rec(0.5, static_cast<int>(state.range(0)));
    std::vector<double> out(state.range(0));
    for (auto _ : state) {
        rec.eval(2.0, 1.3, out);
        benchmark::DoNotOptimize(out.data());
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_LaguerreSequence)->Arg(96)->Arg(400);

static void BM_ForwardTransform(benchmark::State& state)
{
    gt::TransformOptions opts;
    opts.n_max = static_cast<int>(state.range(0));
    const auto f = hill2();
    for (auto _ : state)
        benchmark::DoNotOptimize(gt::g_forward({0.5, 0.5}, f, opts));
}
BENCHMARK(BM_ForwardTransform)->Arg(32)->Arg(96)->Unit(benchmark::kMillisecond);

static void BM_InverseTransform(benchmark::State& state)
{
    const auto sd = gt::g_forward({0.5, 0.5}, hill2());
    std::vector<Point> pts;
    for (int i = 0; i < state.range(0); ++i)
        pts.push_back({0.1 + 0.04 * i, 2.0});
    for (auto _ : state)
        benchmark::DoNotOptimize(gt::g_inverse(sd, pts));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_InverseTransform)->Arg(100)->Unit(benchmark::kMillisecond);

static void BM_HeatKernel(benchmark::State& state)
{
    const HeatParams hp(0.5, {0.3, -0.2});
    double r = 0.5;
    for (auto _ : state) {
        benchmark::DoNotOptimize(heat::heat_kernel(hp, r, 1.2, 1.1, 0.8));
        r = r < 2.5 ? r + 0.1 : 0.5;
    }
}
BENCHMARK(BM_HeatKernel)->Unit(benchmark::kMicrosecond);

static void BM_HeatApplyKernelRoute(benchmark::State& state)
{
    const HeatParams hp(0.5, {0.0, 0.7});
    const auto f = hill2();
    const auto pts = probe_points();
    for (auto _ : state)
        benchmark::DoNotOptimize(heat::heat_apply(hp, f, pts));
}
BENCHMARK(BM_HeatApplyKernelRoute)->Unit(benchmark::kMillisecond);

static void BM_HeatApplySpectralRoute(benchmark::State& state)
{
    const HeatParams hp(0.5, {0.0, 0.7});
    const auto f = hill2();
    const auto pts = probe_points();
    for (auto _ : state)
        benchmark::DoNotOptimize(heat::heat_apply_spectral(hp, f, pts));
}
BENCHMARK(BM_HeatApplySpectralRoute)->Unit(benchmark::kMillisecond);

static void BM_ApplyGCirc(benchmark::State& state)
{
    const int n = static_cast<int>(state.range(0));
    const auto g = GridFunction2D::sample([](double r, double s) { return hill(r) * hill(s); }, {0.25, 4.0},
                                          {0.25, 4.0}, n, n);
    for (auto _ : state)
        benchmark::DoNotOptimize(diffop::apply_G_circ(0.3, 0.7, g));
    state.SetItemsProcessed(state.iterations() * (n + 1) * (n + 1));
}
BENCHMARK(BM_ApplyGCirc)->Arg(400)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
