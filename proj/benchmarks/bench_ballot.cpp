#include <benchmark/benchmark.h>

#include "ballot/asymptotics.hpp"
#include "ballot/closedform.hpp"
#include "ballot/enumerator.hpp"
#include "ballot/guesser.hpp"

namespace {

using namespace ballot;
using V = std::vector<std::int64_t>;

void BM_EnumerateFixed211(benchmark::State& state) {
    const WalkProblem problem{validate(V{2, 1, 1}), EndpointMode::Fixed};
    const auto n = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_fixed(problem, n));
}
BENCHMARK(BM_EnumerateFixed211)->Arg(25)->Arg(50)->Arg(100)->Unit(benchmark::kMillisecond);

void BM_EnumerateFreeK13(benchmark::State& state) {
    const WalkProblem problem{validate(V(13, 1)), EndpointMode::Free};
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_free(problem, 16));
}
BENCHMARK(BM_EnumerateFreeK13)->Unit(benchmark::kMillisecond);

void BM_FitCatalan(benchmark::State& state) {
    Sequence seq;
    for (std::size_t n = 0; n <= 100; ++n) seq.terms.push_back(closedform::catalan(n));
    asymptotics::FitConfig cfg;
    cfg.mu = mpq_class(4);
    cfg.precision = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(asymptotics::fit(seq, cfg));
}
BENCHMARK(BM_FitCatalan)->Arg(100)->Arg(400)->Unit(benchmark::kMillisecond);

void BM_GuessNotFound211(benchmark::State& state) {
    const auto seq = enumerate_fixed({validate(V{2, 1, 1}), EndpointMode::Fixed}, 99);
    const auto bound = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(guess(seq, bound, bound));
}
BENCHMARK(BM_GuessNotFound211)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
