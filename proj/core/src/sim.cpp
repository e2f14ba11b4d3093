#include "prmlcc/sim.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>
#include <thread>

#include "prmlcc/local_decoder.hpp"

namespace prmlcc {

CorruptResult corrupt(const Codeword& word, double delta, Rng& rng) {
    if (delta < 0.0 || delta > 1.0) throw std::invalid_argument("corrupt: delta outside [0, 1]");
    const std::size_t n = word.symbols.size();
    const auto count = static_cast<std::size_t>(std::floor(delta * static_cast<double>(n)));

    std::vector<std::size_t> pool(n);
    std::iota(pool.begin(), pool.end(), 0);
    for (std::size_t i = 0; i < count; ++i) {
        std::size_t j = i + static_cast<std::size_t>(rng.below(n - i));
        std::swap(pool[i], pool[j]);
    }
    std::vector<std::size_t> positions(pool.begin(), pool.begin() + count);
    std::sort(positions.begin(), positions.end());

    CorruptResult out{word, std::move(positions)};
    const unsigned q = word.spec.field.q();
    for (std::size_t pos : out.positions) {
        // uniform over the q-1 symbols different from the current one
        Elem repl = static_cast<Elem>(rng.below(q - 1));
        if (repl >= out.word.symbols[pos]) ++repl;
        out.word.symbols[pos] = repl;
    }
    return out;
}

const char* mode_name(DecodeMode mode) {
    switch (mode) {
        case DecodeMode::T1: return "t1";
        case DecodeMode::T2: return "t2";
        case DecodeMode::Grm: return "grm";
    }
    return "?";
}

std::optional<DecodeMode> mode_from_name(std::string_view name) {
    if (name == "t1") return DecodeMode::T1;
    if (name == "t2") return DecodeMode::T2;
    if (name == "grm") return DecodeMode::Grm;
    return std::nullopt;
}

double effective_sigma(const SimConfig& config) {
    const double q = config.spec.field.q();
    if (config.sigma == 0.0) return (config.spec.d + 1) / q;
    if (config.sigma * q - 1.0 < config.spec.d - 1e-9)
        throw std::invalid_argument("simulate: sigma too small, need d <= sigma*q - 1");
    if (config.sigma >= 1.0) throw std::invalid_argument("simulate: sigma must be below 1");
    return config.sigma;
}

double failure_bound(const SimConfig& config) {
    switch (config.mode) {
        case DecodeMode::T1:
        case DecodeMode::Grm:
            return (config.spec.d + 1) * config.delta;
        case DecodeMode::T2:
            return 2.0 * config.delta / (1.0 - effective_sigma(config));
    }
    return 0.0;
}

SimReport simulate(const SimConfig& config) {
    validate_spec(config.spec);
    if (config.mode == DecodeMode::Grm) {
        if (config.spec.family != CodeFamily::GRM)
            throw std::invalid_argument("simulate: grm mode needs a GRM spec");
    } else if (config.spec.family != CodeFamily::PRM) {
        throw std::invalid_argument("simulate: t1/t2 modes need a PRM spec");
    }

    SimReport report;
    report.config = config;
    report.bound = failure_bound(config);
    if (config.mode == DecodeMode::T2) report.sigma_used = effective_sigma(config);

    const std::size_t k = message_length(config.spec);
    const std::size_t n = code_params(config.spec).code_length;
    const Rng base(config.seed);

    const auto start = std::chrono::steady_clock::now();

    unsigned nthreads = config.threads == 0
                            ? std::max(1u, std::thread::hardware_concurrency())
                            : config.threads;
    nthreads = static_cast<unsigned>(
        std::min<std::uint64_t>(nthreads, std::max<std::uint64_t>(config.trials, 1)));

    struct Tally {
        std::uint64_t success = 0, wrong = 0, failed = 0;
    };
    std::vector<Tally> tallies(nthreads);

    auto run_range = [&](unsigned worker) {
        Tally& tally = tallies[worker];
        std::vector<Elem> message(k);
        for (std::uint64_t trial = worker; trial < config.trials; trial += nthreads) {
            Rng rng = base.derive(trial);
            for (auto& c : message) c = rng.element(config.spec.field);
            const Codeword clean = encode(config.spec, message);
            const std::size_t target = static_cast<std::size_t>(rng.below(n));
            const CorruptResult bad = corrupt(clean, config.delta, rng);
            const SymbolReader read = [&](std::size_t i) { return bad.word.symbols[i]; };

            const Elem truth = clean.symbols[target];
            switch (config.mode) {
                case DecodeMode::T1: {
                    const Elem got = correct_t1(config.spec, read, target, rng);
                    (got == truth ? tally.success : tally.wrong)++;
                    break;
                }
                case DecodeMode::T2: {
                    const auto got = correct_t2(config.spec, read, target, rng);
                    if (!got)
                        ++tally.failed;
                    else
                        (*got == truth ? tally.success : tally.wrong)++;
                    break;
                }
                case DecodeMode::Grm: {
                    const Elem got = grm_correct(config.spec, read, target, rng);
                    (got == truth ? tally.success : tally.wrong)++;
                    break;
                }
            }
        }
    };

    if (nthreads == 1) {
        run_range(0);
    } else {
        std::vector<std::thread> workers;
        workers.reserve(nthreads);
        for (unsigned t = 0; t < nthreads; ++t) workers.emplace_back(run_range, t);
        for (auto& w : workers) w.join();
    }

    for (const Tally& t : tallies) {
        report.success += t.success;
        report.wrong += t.wrong;
        report.failed += t.failed;
    }
    report.wall_time_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

}  // namespace prmlcc
