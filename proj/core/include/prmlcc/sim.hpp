#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "prmlcc/codes.hpp"
#include "prmlcc/rng.hpp"

namespace prmlcc {

struct CorruptResult {
    Codeword word;
    std::vector<std::size_t> positions;  // ascending
};

/// Flips exactly floor(delta * n) distinct positions, chosen uniformly
/// without replacement, each to a uniformly chosen different symbol, so the
/// relative distance of the output from the input is exactly
/// floor(delta*n)/n. Draw order: a partial Fisher-Yates selects the
/// positions, then replacement values are drawn in ascending position
/// order. Requires 0 <= delta <= 1.
CorruptResult corrupt(const Codeword& word, double delta, Rng& rng);

enum class DecodeMode {
    T1,   // d+1 queries, best effort, no error detection
    T2,   // q queries, verifying, may declare failure
    Grm,  // affine reference decoder
};

const char* mode_name(DecodeMode mode);
std::optional<DecodeMode> mode_from_name(std::string_view name);

struct SimConfig {
    CodeSpec spec;
    DecodeMode mode = DecodeMode::T1;
    double delta = 0.0;
    /// T2 only: the sigma of the failure bound 2*delta/(1-sigma). 0 selects
    /// the smallest admissible value (d+1)/q.
    double sigma = 0.0;
    std::uint64_t trials = 0;
    std::uint64_t seed = 0;
    unsigned threads = 0;  // 0: hardware concurrency
};

/// Sigma actually used for the bound (see SimConfig::sigma).
double effective_sigma(const SimConfig& config);

/// The theorem failure bound for this cell: (d+1)*delta for T1 and the GRM
/// reference, 2*delta/(1-sigma) for T2.
double failure_bound(const SimConfig& config);

struct SimReport {
    SimConfig config;
    std::optional<double> sigma_used;  // set for T2 cells
    std::uint64_t success = 0;
    std::uint64_t wrong = 0;   // returned a symbol different from the true one
    std::uint64_t failed = 0;  // declared failure (T2 only)
    double bound = 0.0;
    double wall_time_seconds = 0.0;

    std::uint64_t failures() const { return wrong + failed; }  // what the bound limits
};

/// Monte-Carlo local-correction experiment. Per trial t, an independent
/// stream Rng(seed ^ t) draws, in order: a uniform message, a uniform
/// target index, the corruption, then the decoder's own randomness.
/// Outcomes are sums, so the report does not depend on the thread count.
SimReport simulate(const SimConfig& config);

}  // namespace prmlcc
