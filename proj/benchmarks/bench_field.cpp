#include <benchmark/benchmark.h>

#include "prmlcc/codes.hpp"
#include "prmlcc/field.hpp"
#include "prmlcc/rng.hpp"

using namespace prmlcc;

static void BM_FieldMulTabled(benchmark::State& state) {
    Field f(2, 8);  // GF(256), table path
    Elem a = 57, b = 113;
    for (auto _ : state) {
        benchmark::DoNotOptimize(a = f.mul(a, b));
        b = static_cast<Elem>(b + 1 == 256 ? 1 : b + 1);
    }
}
BENCHMARK(BM_FieldMulTabled);

static void BM_FieldMulComputed(benchmark::State& state) {
    Field f(3, 6);  // GF(729), beyond the table limit
    Elem a = 57, b = 113;
    for (auto _ : state) {
        benchmark::DoNotOptimize(a = f.mul(a, b));
        b = static_cast<Elem>(b + 1 == 729 ? 1 : b + 1);
    }
}
BENCHMARK(BM_FieldMulComputed);

static void BM_FieldInvComputed(benchmark::State& state) {
    Field f(65521);
    Elem a = 31337;
    for (auto _ : state) {
        benchmark::DoNotOptimize(a = f.inv(a));
        a = static_cast<Elem>(a == 1 ? 31337 : a);
    }
}
BENCHMARK(BM_FieldInvComputed);

static void BM_PrmEncode(benchmark::State& state) {
    CodeSpec spec{CodeFamily::PRM, Field(5), 2, 2};
    Rng rng(1);
    std::vector<Elem> message(message_length(spec));
    for (auto& c : message) c = rng.element(spec.field);
    for (auto _ : state) benchmark::DoNotOptimize(encode(spec, message));
}
BENCHMARK(BM_PrmEncode);

static void BM_MinDistanceBruteforce(benchmark::State& state) {
    CodeSpec spec{CodeFamily::PRM, Field(3), 2, 2};  // 729 messages
    for (auto _ : state)
        benchmark::DoNotOptimize(min_distance_bruteforce(spec, 1ull << 20, 2));
}
BENCHMARK(BM_MinDistanceBruteforce);
