#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "semiflow/kernels.hpp"

namespace k = semiflow::kernels;

namespace {

struct Data
{
    explicit Data(std::size_t n)
        : a(n), b(n), c(n), d(n), out1(n), out2(n)
    {
        std::mt19937_64 rng(n);
        std::uniform_real_distribution<double> u(0.5, 1.5);
        for (std::size_t i = 0; i < n; ++i) {
            a[i] = u(rng);
            b[i] = u(rng);
            c[i] = u(rng);
            d[i] = u(rng);
        }
        points = a;
        for (std::size_t i = 0; i < n; ++i)
            points[i] = 6.0 * static_cast<double>(i) / static_cast<double>(n) + 0.1 * a[i];
    }

    std::vector<double> a, b, c, d, points, out1, out2;
};

template <bool Parallel>
void CentralDifference(benchmark::State& state)
{
    Data x(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
        if constexpr (Parallel)
            k::omp::central_difference(x.a, 10.0, x.out1);
        else
            k::serial::central_difference(x.a, 10.0, x.out1);
        benchmark::DoNotOptimize(x.out1.data());
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

template <bool Parallel>
void LiePoissonRate(benchmark::State& state)
{
    Data x(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
        if constexpr (Parallel)
            k::omp::lie_poisson_rate(x.a, x.b, x.c, x.d, 10.0, x.out1, x.out2);
        else
            k::serial::lie_poisson_rate(x.a, x.b, x.c, x.d, 10.0, x.out1, x.out2);
        benchmark::DoNotOptimize(x.out1.data());
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

template <bool Parallel>
void FluxFormRate(benchmark::State& state)
{
    Data x(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
        if constexpr (Parallel)
            k::omp::flux_form_rate(x.a, x.b, 10.0, x.out1, x.out2);
        else
            k::serial::flux_form_rate(x.a, x.b, 10.0, x.out1, x.out2);
        benchmark::DoNotOptimize(x.out1.data());
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

template <bool Parallel>
void HermiteEvaluate(benchmark::State& state)
{
    Data x(static_cast<std::size_t>(state.range(0)));
    const double h = 6.0 / static_cast<double>(state.range(0));
    for (auto _ : state) {
        if constexpr (Parallel)
            k::omp::hermite_evaluate(x.a, x.b, h, 0.0, x.points, x.out1);
        else
            k::serial::hermite_evaluate(x.a, x.b, h, 0.0, x.points, x.out1);
        benchmark::DoNotOptimize(x.out1.data());
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

} // namespace

#define SEMIFLOW_BENCH_PAIR(fn)                                                      \
    BENCHMARK(fn<false>)->Name(#fn "/serial")->RangeMultiplier(8)->Range(256, 1 << 20); \
    BENCHMARK(fn<true>)->Name(#fn "/omp")->RangeMultiplier(8)->Range(256, 1 << 20)

SEMIFLOW_BENCH_PAIR(CentralDifference);
SEMIFLOW_BENCH_PAIR(LiePoissonRate);
SEMIFLOW_BENCH_PAIR(FluxFormRate);
SEMIFLOW_BENCH_PAIR(HermiteEvaluate);

BENCHMARK_MAIN();
