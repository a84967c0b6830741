#include <benchmark/benchmark.h>

#include "mwpm/generators.hpp"
#include "mwpm/hybrid.hpp"
#include "mwpm/liquidationist.hpp"
#include "mwpm/search.hpp"

namespace {

mwpm::Graph sparse(int n, const char* generator = "random-gnm") {
    mwpm::InstanceSpec sp;
    sp.generator = generator;
    sp.n = n;
    sp.m = 4 * n;
    sp.max_weight = 1024;
    sp.seed = 1;
    sp.guarantee_perfect = true;
    return mwpm::generate(sp);
}

template <mwpm::SolveResult (*Solve)(const mwpm::Graph&, const mwpm::DriverOptions&)>
void BM_Solve(benchmark::State& state) {
    mwpm::Graph g = sparse(static_cast<int>(state.range(0)));
    mwpm::Weight adjustments = 0;
    for (auto _ : state) {
        mwpm::SolveResult r = Solve(g, {});
        adjustments = r.report.adjustments;
        benchmark::DoNotOptimize(r.weight);
    }
    state.counters["adjustments"] = static_cast<double>(adjustments);
    state.SetComplexityN(state.range(0));
}

BENCHMARK(BM_Solve<mwpm::run_liquidationist>)->RangeMultiplier(2)->Range(256, 4096)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Solve<mwpm::run_hybrid>)->RangeMultiplier(2)->Range(256, 4096)->Unit(benchmark::kMillisecond);

void BM_NestedHybrid(benchmark::State& state) {
    mwpm::Graph g = sparse(static_cast<int>(state.range(0)), "nested-blossom-adversarial");
    for (auto _ : state) benchmark::DoNotOptimize(mwpm::run_hybrid(g, {}).weight);
}
BENCHMARK(BM_NestedHybrid)->Arg(82)->Arg(244)->Arg(730)->Unit(benchmark::kMillisecond);

// Unscaled primal-dual search from uniform duals, one engine reused.
void BM_EdmondsSearch(benchmark::State& state, mwpm::QueueChoice queue) {
    mwpm::Graph g = sparse(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        mwpm::SolverState s(g);
        mwpm::Weight top = 0;
        for (int e = 0; e < s.m(); ++e) top = std::max(top, s.w[e] = 2 * g.edge(e).w);
        for (int v = 0; v < s.n(); ++v) s.y[v] = top;
        mwpm::SearchEngine engine;
        mwpm::SearchParams p;
        p.queue = queue;
        while (!s.perfect() && engine.run(s, p).status == mwpm::SearchStatus::Augmented) {
        }
        benchmark::DoNotOptimize(s.y.data());
    }
}
BENCHMARK_CAPTURE(BM_EdmondsSearch, bucket, mwpm::QueueChoice::Bucket)->Arg(256)->Arg(1024)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_EdmondsSearch, ordered, mwpm::QueueChoice::Ordered)->Arg(256)->Arg(1024)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
