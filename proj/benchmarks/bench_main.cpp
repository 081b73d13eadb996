#include <random>

#include <benchmark/benchmark.h>

#include "symid/identities.hpp"
#include "symid/polyfam.hpp"
#include "symid/sampling.hpp"
#include "symid/sequences.hpp"

using namespace symid;

static void BM_Thm12Sides(benchmark::State &state)
{
    const auto m = static_cast<unsigned>(state.range(0));
    const auto n = static_cast<unsigned>(state.range(1));
    for (auto _ : state) {
        benchmark::DoNotOptimize(thm12_sides(m, n).residual().is_zero());
    }
}
BENCHMARK(BM_Thm12Sides)->Args({1, 8})->Args({2, 6})->Args({3, 4})->Args({4, 4})->Unit(benchmark::kMillisecond);

static void BM_Thm12SidesParallel(benchmark::State &state)
{
    BuildOptions opts;
    opts.workers = static_cast<unsigned>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(thm12_sides(4, 4, opts).residual().is_zero());
    }
}
BENCHMARK(BM_Thm12SidesParallel)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();

static void BM_PolyMultiply(benchmark::State &state)
{
    std::mt19937_64 rng(1);
    const auto deg = static_cast<unsigned>(state.range(0));
    MultiPoly p, q;
    for (unsigned j = 1; j <= 3; ++j) {
        p += random_univariate(rng, VarName::x(j), deg);
        q += random_univariate(rng, VarName::r(j), deg);
    }
    const MultiPoly pp = pow(p, 2), qq = pow(q, 2);
    for (auto _ : state) {
        benchmark::DoNotOptimize(pp * qq);
    }
}
BENCHMARK(BM_PolyMultiply)->Arg(2)->Arg(4)->Arg(6);

static void BM_BernoulliTable(benchmark::State &state)
{
    const auto upto = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) {
        SequenceTable t(SequenceKind::bernoulli);
        benchmark::DoNotOptimize(t.at(upto));
    }
}
BENCHMARK(BM_BernoulliTable)->Arg(60)->Arg(200);

static void BM_EulerPoly(benchmark::State &state)
{
    const VarName x = VarName::of("x");
    const auto n = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(euler_poly_shifted(n, MultiPoly(1) - MultiPoly::variable(x)));
    }
}
BENCHMARK(BM_EulerPoly)->Arg(10)->Arg(30);
BENCHMARK_MAIN();
