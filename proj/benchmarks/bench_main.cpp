#include <benchmark/benchmark.h>

#include <cmath>
#include <vector>

#include "hardy/alpha.hpp"
#include "hardy/continuous.hpp"
#include "hardy/discrete.hpp"
#include "hardy/dual_hahn.hpp"

static void BM_alpha_solve(benchmark::State& state)
{
    const double L = std::pow(10.0, state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(hardy::alpha_solve(L).alpha);
}
BENCHMARK(BM_alpha_solve)->DenseRange(-1, 4);

static void BM_gram_apply(benchmark::State& state)
{
    const std::size_t n = static_cast<std::size_t>(state.range(0));
    const hardy::HardyOperator op{n};
    std::vector<double> a(n, 1.0), out(n);
    for (auto _ : state) {
        hardy::hardy_gram_apply(op, a, out);
        benchmark::DoNotOptimize(out.data());
    }
    state.SetItemsProcessed(state.iterations() * static_cast<long>(n));
}
BENCHMARK(BM_gram_apply)->Range(1 << 10, 1 << 20);

static void BM_dn_eigen(benchmark::State& state)
{
    const std::size_t n = static_cast<std::size_t>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(hardy::dn_eigen(n).d_n);
}
BENCHMARK(BM_dn_eigen)->Arg(100)->Arg(1000)->Arg(10000);

static void BM_dn_hahn(benchmark::State& state)
{
    const std::size_t n = static_cast<std::size_t>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(hardy::dn_hahn(n).d_n);
}
BENCHMARK(BM_dn_hahn)->Arg(100)->Arg(1000)->Arg(10000);

static void BM_smallest_zero(benchmark::State& state)
{
    const std::size_t n = static_cast<std::size_t>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(hardy::smallest_zero(n).x1);
}
BENCHMARK(BM_smallest_zero)->Arg(1000)->Arg(10000)->Arg(100000);

static void BM_verify_equality(benchmark::State& state)
{
    const hardy::IntervalSpec iv{1.0, std::pow(10.0, state.range(0))};
    for (auto _ : state)
        benchmark::DoNotOptimize(hardy::verify_equality(iv, 1e-10).ratio);
}
BENCHMARK(BM_verify_equality)->Arg(1)->Arg(3)->Arg(6);

static void BM_almost_extremal(benchmark::State& state)
{
    const std::size_t n = static_cast<std::size_t>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(hardy::almost_extremal(n).rayleigh);
}
BENCHMARK(BM_almost_extremal)->Arg(1000)->Arg(100000);

BENCHMARK_MAIN();
