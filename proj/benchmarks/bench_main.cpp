#include <pqca/ca.hpp>
#include <pqca/intervals.hpp>
#include <pqca/trace.hpp>
#include <pqca/verify.hpp>
#include <pqca/word.hpp>

#include <benchmark/benchmark.h>

#include <random>

namespace {

pqca::Word random_word(const pqca::Params &params, std::size_t len, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<pqca::Digit> digit(0, params.base() - 1);
    pqca::Word w(len);
    for (auto &d : w)
        d = digit(rng);
    return w;
}

void BM_StepFWord(benchmark::State &state) {
    auto params = pqca::Params::make(3, 2);
    auto len = static_cast<std::size_t>(state.range(0));
    auto w = random_word(params, len, 7);
    for (auto _ : state)
        benchmark::DoNotOptimize(pqca::step_F_word(params, w, len / 2 - 1));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_StepFWord)->RangeMultiplier(4)->Range(16, 1024)->Complexity();

void BM_ClosedForm(benchmark::State &state) {
    auto params = pqca::Params::make(3, 2);
    auto len = static_cast<std::size_t>(state.range(0));
    auto w = random_word(params, len, 7);
    for (auto _ : state)
        benchmark::DoNotOptimize(pqca::ftpow_closed_form(params, w, len / 2 - 1));
}
BENCHMARK(BM_ClosedForm)->RangeMultiplier(4)->Range(16, 1024);

void mixing(benchmark::State &state, pqca::MixingMethod method) {
    auto params = pqca::Params::make(3, 2);
    pqca::MixingQuery query{{0}, {0}, 0, static_cast<std::uint64_t>(state.range(0))};
    for (auto _ : state)
        benchmark::DoNotOptimize(pqca::mixing_measure(params, query, method));
}

void BM_MixingNaive(benchmark::State &state) { mixing(state, pqca::MixingMethod::Naive); }
BENCHMARK(BM_MixingNaive)->DenseRange(1, 4);

void BM_MixingArithmetic(benchmark::State &state) { mixing(state, pqca::MixingMethod::Arithmetic); }
BENCHMARK(BM_MixingArithmetic)->DenseRange(1, 4)->Arg(16)->Arg(64);

void BM_PrunedLanguage(benchmark::State &state) {
    auto params = pqca::Params::make(3, 2);
    for (auto _ : state)
        benchmark::DoNotOptimize(pqca::pruned_language(params, static_cast<std::size_t>(state.range(0))));
}
BENCHMARK(BM_PrunedLanguage)->DenseRange(2, 14, 4);

void BM_BuildI(benchmark::State &state) {
    auto params = pqca::Params::make(3, 2);
    bool exact = state.range(1) != 0;
    for (auto _ : state)
        benchmark::DoNotOptimize(pqca::build_I(params, static_cast<std::size_t>(state.range(0)), exact));
}
BENCHMARK(BM_BuildI)->Args({2, 0})->Args({4, 0})->Args({6, 0})->Args({2, 1})->Args({3, 1});

void BM_WitnessSearch(benchmark::State &state) {
    auto params = pqca::Params::make(3, 2);
    pqca::OrbitQuery query;
    query.set = pqca::build_X(params);
    query.horizon = static_cast<std::uint64_t>(state.range(0));
    query.window_radius = 1;
    for (auto _ : state)
        benchmark::DoNotOptimize(pqca::witness_search(params, query));
}
BENCHMARK(BM_WitnessSearch)->Arg(5)->Arg(20);

} // namespace

BENCHMARK_MAIN();
