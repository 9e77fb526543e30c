// Serial reference vs OpenMP kernels on random dense GF(2) matrices, plus one
// end-to-end deleted-product coboundary.
#include "conf2/linalg.hpp"
#include "conf2/simplicial.hpp"

#include <benchmark/benchmark.h>

#include <random>

using conf2::f2::F2Matrix;

namespace {

F2Matrix random_matrix(std::size_t rows, std::size_t cols, unsigned seed)
{
    std::mt19937_64 rng(seed);
    std::bernoulli_distribution bit(0.5);
    F2Matrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            if (bit(rng)) m.set(i, j);
    return m;
}

void BM_RrefReference(benchmark::State& state)
{
    const auto n = static_cast<std::size_t>(state.range(0));
    const F2Matrix m = random_matrix(n, n, 1);
    for (auto _ : state) benchmark::DoNotOptimize(conf2::f2::reference::rref(m));
}

void BM_RrefKernel(benchmark::State& state)
{
    const auto n = static_cast<std::size_t>(state.range(0));
    const F2Matrix m = random_matrix(n, n, 1);
    for (auto _ : state) {
        F2Matrix copy = m;
        benchmark::DoNotOptimize(conf2::f2::kernels::rref_in_place(copy));
    }
}

void BM_MultiplyReference(benchmark::State& state)
{
    const auto n = static_cast<std::size_t>(state.range(0));
    const F2Matrix a = random_matrix(n, n, 2), b = random_matrix(n, n, 3);
    for (auto _ : state) benchmark::DoNotOptimize(conf2::f2::reference::multiply(a, b));
}

void BM_MultiplyKernel(benchmark::State& state)
{
    const auto n = static_cast<std::size_t>(state.range(0));
    const F2Matrix a = random_matrix(n, n, 2), b = random_matrix(n, n, 3);
    for (auto _ : state) benchmark::DoNotOptimize(conf2::f2::kernels::multiply(a, b));
}

void BM_DeletedProductRank(benchmark::State& state)
{
    const auto kind = conf2::SurfaceKind::orientable(static_cast<int>(state.range(0)));
    const auto dp = conf2::oracle::deleted_product(conf2::oracle::builtin_triangulation(kind));
    const F2Matrix d1 = dp.coboundary(1);
    for (auto _ : state) benchmark::DoNotOptimize(conf2::f2::rank(d1));
}

} // namespace

BENCHMARK(BM_RrefReference)->Arg(256)->Arg(1024)->Arg(2048);
BENCHMARK(BM_RrefKernel)->Arg(256)->Arg(1024)->Arg(2048);
BENCHMARK(BM_MultiplyReference)->Arg(128)->Arg(512);
BENCHMARK(BM_MultiplyKernel)->Arg(128)->Arg(512);
BENCHMARK(BM_DeletedProductRank)->Arg(1)->Arg(2);

BENCHMARK_MAIN();
