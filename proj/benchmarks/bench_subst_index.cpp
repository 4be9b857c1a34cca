#include <benchmark/benchmark.h>

#include <random>
#include <string>

#include "mups/static_mups.hpp"
#include "mups/subst_index.hpp"

namespace {

std::string random_text(std::size_t n, int sigma, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> d(0, sigma - 1);
    std::string s(n, 'a');
    for (auto& ch : s) ch = static_cast<char>('a' + d(rng));
    return s;
}

void BM_Build(benchmark::State& state) {
    const std::string raw = random_text(static_cast<std::size_t>(state.range(0)), static_cast<int>(state.range(1)), 1);
    for (auto _ : state) {
        mups::SubstIndex idx(mups::Text::from_symbols(raw));
        benchmark::DoNotOptimize(idx.mups().data());
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_StaticMups(benchmark::State& state) {
    const mups::Text t = mups::Text::from_symbols(random_text(static_cast<std::size_t>(state.range(0)), 4, 2));
    const mups::LceIndex lce(t);
    const mups::Eertree tree(t, lce);
    for (auto _ : state) benchmark::DoNotOptimize(mups::compute_mups(tree));
}

void BM_Delta(benchmark::State& state) {
    const int sigma = static_cast<int>(state.range(1));
    const mups::SubstIndex idx(mups::Text::from_symbols(random_text(static_cast<std::size_t>(state.range(0)), sigma, 3)));
    const mups::Text& t = idx.text();
    std::mt19937_64 rng(4);
    std::vector<mups::SubstitutionQuery> qs(4096);
    for (auto& q : qs) {
        q.i = std::uniform_int_distribution<mups::Pos>(1, t.size())(rng);
        q.s = std::uniform_int_distribution<mups::Code>(0, t.sigma() - 1)(rng);
        if (q.s >= t.at(q.i)) ++q.s;
    }
    std::size_t k = 0;
    for (auto _ : state) benchmark::DoNotOptimize(idx.delta(qs[k++ % qs.size()]));
}

}  // namespace

BENCHMARK(BM_Build)->ArgsProduct({{1 << 12, 1 << 16, 1 << 20}, {2, 4, 26}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_StaticMups)->Arg(1 << 12)->Arg(1 << 16)->Arg(1 << 20)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Delta)->ArgsProduct({{1 << 12, 1 << 16, 1 << 20}, {2, 4, 26}})->Unit(benchmark::kMicrosecond);

BENCHMARK_MAIN();
