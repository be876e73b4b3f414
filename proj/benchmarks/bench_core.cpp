#include "steinhaus/balance.hpp"
#include "steinhaus/idao.hpp"
#include <benchmark/benchmark.h>

using namespace steinhaus;

static void bm_triangle(benchmark::State &state)
{
	long m = state.range(0);
	FiniteSeq w = iap_window(universal_sequence(15, 2), 0, m - 1);
	for (auto _ : state)
		benchmark::DoNotOptimize(steinhaus_triangle(w).balanced());
	state.SetComplexityN(m);
}
BENCHMARK(bm_triangle)->Arg(45)->Arg(135)->Arg(405)->Complexity();

static void bm_search_triangle(benchmark::State &state)
{
	for (auto _ : state)
	{
		auto r = search_balanced({15, FigureKind::steinhaus_triangle, 5});
		benchmark::DoNotOptimize(r.examined);
	}
}
BENCHMARK(bm_search_triangle);

static void bm_wendt_rank(benchmark::State &state)
{
	long k = state.range(0);
	for (auto _ : state)
		benchmark::DoNotOptimize(exact_rank(wendt(k)));
}
BENCHMARK(bm_wendt_rank)->Arg(6)->Arg(12)->Arg(18)->Arg(24);

static void bm_iterated_derivation(benchmark::State &state)
{
	IAPSpec s = universal_integer_sequence();
	for (auto _ : state)
		benchmark::DoNotOptimize(derive_iap_iterated(s, state.range(0)));
}
BENCHMARK(bm_iterated_derivation)->Arg(16)->Arg(64)->Arg(256);

static void bm_verify_thm5(benchmark::State &state)
{
	for (auto _ : state)
		benchmark::DoNotOptimize(verify_thm5(9, 2, 1).ok());
}
BENCHMARK(bm_verify_thm5);

BENCHMARK_MAIN();
