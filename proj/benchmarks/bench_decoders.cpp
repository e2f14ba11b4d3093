#include <benchmark/benchmark.h>

#include "prmlcc/local_decoder.hpp"
#include "prmlcc/rs_decoder.hpp"
#include "prmlcc/sim.hpp"

using namespace prmlcc;

namespace {

Codeword sample_codeword(const CodeSpec& spec, std::uint64_t seed) {
    Rng rng(seed);
    std::vector<Elem> message(message_length(spec));
    for (auto& c : message) c = rng.element(spec.field);
    return encode(spec, message);
}

}  // namespace

static void BM_PlanAndReconstruct(benchmark::State& state) {
    CodeSpec spec{CodeFamily::PRM, Field(5), 2, 2};
    const Codeword cw = sample_codeword(spec, 7);
    const SymbolReader read = [&](std::size_t i) { return cw.symbols[i]; };
    Rng rng(11);
    std::size_t index = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(correct_t1(spec, read, index, rng));
        index = (index + 1) % cw.symbols.size();
    }
}
BENCHMARK(BM_PlanAndReconstruct);

static void BM_LineDecodeT2(benchmark::State& state) {
    CodeSpec spec{CodeFamily::PRM, Field(7), 2, 2};
    Codeword cw = sample_codeword(spec, 8);
    Rng corrupt_rng(9);
    const CorruptResult bad = corrupt(cw, 0.1, corrupt_rng);
    const SymbolReader read = [&](std::size_t i) { return bad.word.symbols[i]; };
    Rng rng(12);
    std::size_t index = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(correct_t2(spec, read, index, rng));
        index = (index + 1) % cw.symbols.size();
    }
}
BENCHMARK(BM_LineDecodeT2);

static void BM_BerlekampWelch(benchmark::State& state) {
    Field f(251);
    const unsigned d = 8;
    Rng rng(5);
    UniPoly h{std::vector<Elem>(d + 1, 0)};
    for (auto& c : h.coeffs) c = rng.element(f);
    std::vector<EvalPair> pairs;
    for (unsigned v = 0; v < 32; ++v)
        pairs.push_back({ExtElem::finite(static_cast<Elem>(v)),
                         eval_uni(f, h, ExtElem::finite(static_cast<Elem>(v)))});
    pairs.push_back({ExtElem::infinity(), h.at_infinity()});
    for (unsigned e = 0; e < 5; ++e) pairs[e * 3].value = f.add(pairs[e * 3].value, 1);

    for (auto _ : state) benchmark::DoNotOptimize(decode(f, pairs, d));
}
BENCHMARK(BM_BerlekampWelch);

static void BM_SmoothnessCensus(benchmark::State& state) {
    CodeSpec spec{CodeFamily::PRM, Field(7), 2, 2};
    const ProjPoint w = point_at(spec.field, 2, 0);
    for (auto _ : state) benchmark::DoNotOptimize(smoothness_census(spec, w));
}
BENCHMARK(BM_SmoothnessCensus);
