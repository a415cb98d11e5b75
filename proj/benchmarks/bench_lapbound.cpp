#include <benchmark/benchmark.h>

#include "lapbound/bounds.hpp"
#include "lapbound/generators.hpp"
#include "lapbound/harness.hpp"
#include "lapbound/matrix.hpp"
#include "lapbound/operators.hpp"
#include "lapbound/spectra.hpp"

namespace {

void BM_SymmetricEigenvalues(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    lb::SplitMix64 rng(7);
    lb::Matrix m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            double v = static_cast<double>(static_cast<int>(rng.next_below(7)) - 3);
            m(i, j) = v;
            m(j, i) = v;
        }
    for (auto _ : state) benchmark::DoNotOptimize(lb::symmetric_eigenvalues(m));
}
BENCHMARK(BM_SymmetricEigenvalues)->Arg(16)->Arg(64)->Arg(256);

void BM_LaplacianBuild(benchmark::State& state) {
    lb::SimplicialComplex x = lb::gen_random_complex(8, 3, 0.6, 11);
    for (auto _ : state)
        benchmark::DoNotOptimize(lb::laplacian(x, lb::OperatorKind::upper_laplacian, x.dim()));
}
BENCHMARK(BM_LaplacianBuild);

void BM_GraphFromEdgeMask(benchmark::State& state) {
    uint64_t mask = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(lb::graph_from_edge_mask(7, mask));
        mask = (mask + 0x9E37) & ((1ULL << 21) - 1);
    }
}
BENCHMARK(BM_GraphFromEdgeMask);

void BM_BoundEvaluation(benchmark::State& state) {
    lb::SimplicialComplex g = lb::gen_random_graph(7, 0.5, 3);
    for (auto _ : state) {
        lb::EvalContext ctx(g, "bench", nullptr, {}, 1e-7);
        for (const char* id : {"bai", "k_squared", "brouwer", "main_plus_bai"}) {
            const lb::BoundMeta* meta = lb::find_bound(id);
            lb::KRange kr = lb::paper_valid_k_range(*meta, ctx, 1);
            for (int k = kr.lo; k <= kr.hi; ++k)
                benchmark::DoNotOptimize(lb::evaluate_bound(id, ctx, 1, k, false));
        }
    }
}
BENCHMARK(BM_BoundEvaluation);

void BM_ExhaustiveSuiteN5(benchmark::State& state) {
    for (auto _ : state) {
        lb::SuiteConfig cfg;
        cfg.stream = "enumerate:n=5";
        cfg.bounds = {"bai", "k_squared", "brouwer_min_binom"};
        cfg.leaderboard_size = 0;
        benchmark::DoNotOptimize(lb::run_suite(cfg));
    }
}
BENCHMARK(BM_ExhaustiveSuiteN5)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
