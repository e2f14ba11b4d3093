#include "cli.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>
#include "CLI11.hpp"

#include "prmlcc/local_decoder.hpp"
#include "prmlcc/serialize.hpp"
#include "prmlcc/sim.hpp"

namespace prmlcc::cli {
namespace {

using nlohmann::json;

constexpr int kOk = 0;
constexpr int kUsage = 1;
constexpr int kDecodeFailure = 2;

struct SpecFlags {
    std::string family = "prm";
    unsigned p = 2;
    unsigned k = 1;
    unsigned d = 1;
    unsigned m = 1;

    void attach(CLI::App& cmd, bool with_family = true) {
        if (with_family)
            cmd.add_option("--family", family, "code family: prm, grm, rs, ers")
                ->check(CLI::IsMember({"prm", "grm", "rs", "ers"}));
        cmd.add_option("--p", p, "field characteristic (prime)")->required();
        cmd.add_option("--k", k, "field extension degree, q = p^k");
        cmd.add_option("--d", d, "polynomial degree")->required();
        cmd.add_option("--m", m, "number of variables parameter");
    }

    CodeSpec spec() const { return {family_from_name(family), Field(p, k), d, m}; }
};

std::vector<Elem> parse_message(const std::string& text, const Field& f) {
    std::vector<Elem> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const unsigned long v = std::stoul(item);
        if (v >= f.q()) throw std::invalid_argument("message coefficient out of range: " + item);
        out.push_back(static_cast<Elem>(v));
    }
    return out;
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text << '\n';
    } else {
        std::ofstream out(out_path);
        if (!out) throw std::runtime_error("cannot write " + out_path);
        out << text << '\n';
    }
}

json census_json(const CodeSpec& spec, const Census& census) {
    json slots = json::array();
    for (const auto& counts : census.slot_counts) slots.push_back(counts);
    return json{{"target", census.target},
                {"uniform", census.uniform()},
                {"slot_counts", std::move(slots)}};
}

int run_params(const SpecFlags& flags) {
    const CodeSpec spec = flags.spec();
    const CodeParams params = code_params(spec);
    json j{{"family", family_name(spec.family)},
           {"p", spec.field.p()},
           {"k", spec.field.k()},
           {"d", spec.d},
           {"m", spec.m},
           {"query_complexity", params.query_complexity},
           {"message_length", params.message_length},
           {"code_length", params.code_length},
           {"table_distance", params.table_distance}};
    std::cout << j.dump() << '\n';
    return kOk;
}

int run_encode(const SpecFlags& flags, const std::string& message, std::uint64_t seed,
               const std::string& out_path) {
    const CodeSpec spec = flags.spec();
    std::vector<Elem> coeffs;
    if (!message.empty()) {
        coeffs = parse_message(message, spec.field);
    } else {
        Rng rng(seed);
        coeffs.resize(message_length(spec));
        for (auto& c : coeffs) c = rng.element(spec.field);
    }
    if (coeffs.size() != message_length(spec))
        throw std::invalid_argument("message needs " + std::to_string(message_length(spec)) +
                                    " coefficients, got " + std::to_string(coeffs.size()));
    emit(codeword_to_json(encode(spec, coeffs)), out_path);
    return kOk;
}

int run_corrupt(const std::string& in_path, double delta, std::uint64_t seed,
                const std::string& out_path) {
    const Codeword word = load_codeword(in_path);
    Rng rng(seed);
    const CorruptResult result = corrupt(word, delta, rng);

    json report{{"delta", delta},
                {"seed", seed},
                {"flipped", result.positions.size()},
                {"positions", result.positions}};
    if (out_path.empty())
        report["codeword"] = json::parse(codeword_to_json(result.word));
    else
        save_codeword(result.word, out_path);
    std::cout << report.dump() << '\n';
    return kOk;
}

int run_local_correct(const std::string& in_path, std::size_t index, std::uint64_t seed,
                      const std::string& mode_str) {
    const Codeword word = load_codeword(in_path);
    const auto mode = mode_from_name(mode_str);
    if (!mode) throw std::invalid_argument("unknown mode: " + mode_str);
    if (index >= word.symbols.size()) throw std::invalid_argument("index out of range");

    Rng rng(seed);
    const SymbolReader read = [&](std::size_t i) { return word.symbols.at(i); };

    json j{{"index", index}, {"mode", mode_str}, {"seed", seed}};
    std::optional<Elem> symbol;
    switch (*mode) {
        case DecodeMode::T1: symbol = correct_t1(word.spec, read, index, rng); break;
        case DecodeMode::T2: symbol = correct_t2(word.spec, read, index, rng); break;
        case DecodeMode::Grm: symbol = grm_correct(word.spec, read, index, rng); break;
    }
    if (!symbol) {
        j["failure"] = true;
        std::cout << j.dump() << '\n';
        return kDecodeFailure;
    }
    j["symbol"] = *symbol;
    std::cout << j.dump() << '\n';
    return kOk;
}

int run_simulate(const SpecFlags& flags, const std::vector<double>& deltas, double sigma,
                 std::uint64_t trials, std::uint64_t seed, const std::string& mode_str,
                 unsigned threads, const std::string& out_path) {
    const auto mode = mode_from_name(mode_str);
    if (!mode) throw std::invalid_argument("unknown mode: " + mode_str);

    std::vector<SimReport> reports;
    for (double delta : deltas) {
        SimConfig config{flags.spec(), *mode, delta, sigma, trials, seed, threads};
        reports.push_back(simulate(config));
    }

    if (!out_path.empty()) {
        std::ofstream out(out_path);
        if (!out) throw std::runtime_error("cannot write " + out_path);
        out << reports_to_csv(reports);
        return kOk;
    }
    if (reports.size() == 1) {
        std::cout << report_to_json(reports.front()) << '\n';
    } else {
        json arr = json::array();
        for (const auto& r : reports) arr.push_back(json::parse(report_to_json(r)));
        std::cout << arr.dump() << '\n';
    }
    return kOk;
}

int run_census(const SpecFlags& flags, std::optional<std::size_t> target, bool fixed_order) {
    CodeSpec spec = flags.spec();
    spec.family = CodeFamily::PRM;  // the census is a PRM notion
    const std::size_t n = code_params(spec).code_length;

    json targets = json::array();
    bool uniform = true;
    for (std::size_t w = target ? *target : 0; w < (target ? *target + 1 : n); ++w) {
        const ProjPoint wp = point_at(spec.field, spec.m, w);
        const Census census =
            fixed_order ? fixed_order_census(spec, wp) : smoothness_census(spec, wp);
        uniform = uniform && census.uniform();
        targets.push_back(census_json(spec, census));
    }
    json j{{"p", spec.field.p()},     {"k", spec.field.k()},
           {"d", spec.d},             {"m", spec.m},
           {"n", n},                  {"order", fixed_order ? "fixed" : "permuted"},
           {"uniform", uniform},      {"targets", std::move(targets)}};
    std::cout << j.dump() << '\n';
    return kOk;
}

int run_min_distance(const SpecFlags& flags, std::uint64_t cap, unsigned threads) {
    const CodeSpec spec = flags.spec();
    const CodeParams params = code_params(spec);
    const std::size_t dist = min_distance_bruteforce(spec, cap, threads);
    json j{{"family", family_name(spec.family)},
           {"p", spec.field.p()},
           {"k", spec.field.k()},
           {"d", spec.d},
           {"m", spec.m},
           {"code_length", params.code_length},
           {"message_length", params.message_length},
           {"bruteforce_distance", dist},
           {"table_distance", params.table_distance}};
    std::cout << j.dump() << '\n';
    return kOk;
}

}  // namespace

int dispatch(int argc, const char* const* argv) {
    CLI::App app{"projective Reed-Muller codes: encoding, local correction, verification"};
    app.require_subcommand(1);

    // params
    auto* params_cmd = app.add_subcommand("params", "print code parameters");
    SpecFlags params_flags;
    params_flags.attach(*params_cmd);

    // encode
    auto* encode_cmd = app.add_subcommand("encode", "encode a message to a codeword file");
    SpecFlags encode_flags;
    encode_flags.attach(*encode_cmd);
    std::string encode_message, encode_out;
    std::uint64_t encode_seed = 0;
    encode_cmd->add_option("--message", encode_message,
                           "comma separated coefficients in canonical monomial order");
    encode_cmd->add_option("--seed", encode_seed, "seed for a random message when --message is absent");
    encode_cmd->add_option("--out", encode_out, "write the codeword JSON here instead of stdout");

    // corrupt
    auto* corrupt_cmd = app.add_subcommand("corrupt", "flip floor(delta*n) random positions");
    std::string corrupt_in, corrupt_out;
    double corrupt_delta = 0.0;
    std::uint64_t corrupt_seed = 0;
    corrupt_cmd->add_option("--in", corrupt_in, "codeword JSON file")->required();
    corrupt_cmd->add_option("--delta", corrupt_delta, "corruption rate in [0,1]")->required();
    corrupt_cmd->add_option("--seed", corrupt_seed, "rng seed");
    corrupt_cmd->add_option("--out", corrupt_out, "write the corrupted codeword here");

    // local-correct
    auto* correct_cmd = app.add_subcommand("local-correct", "recover one symbol by local queries");
    std::string correct_in, correct_mode = "t1";
    std::size_t correct_index = 0;
    std::uint64_t correct_seed = 0;
    correct_cmd->add_option("--in", correct_in, "codeword JSON file")->required();
    correct_cmd->add_option("--index", correct_index, "symbol index to recover")->required();
    correct_cmd->add_option("--seed", correct_seed, "rng seed");
    correct_cmd->add_option("--mode", correct_mode, "t1 (d+1 queries), t2 (q queries), grm")
        ->check(CLI::IsMember({"t1", "t2", "grm"}));

    // simulate
    auto* sim_cmd = app.add_subcommand("simulate", "Monte-Carlo local correction experiment");
    SpecFlags sim_flags;
    sim_flags.attach(*sim_cmd);
    std::vector<double> sim_deltas;
    double sim_sigma = 0.0;
    std::uint64_t sim_trials = 1000, sim_seed = 0;
    unsigned sim_threads = 0;
    std::string sim_mode = "t1", sim_out;
    sim_cmd->add_option("--delta", sim_deltas, "corruption rate; repeat for several cells")
        ->required();
    sim_cmd->add_option("--sigma", sim_sigma, "t2 bound parameter, d <= sigma*q - 1");
    sim_cmd->add_option("--trials", sim_trials, "trials per cell");
    sim_cmd->add_option("--seed", sim_seed, "base seed; trial t uses seed XOR t");
    sim_cmd->add_option("--threads", sim_threads, "worker threads, 0 = hardware");
    sim_cmd->add_option("--mode", sim_mode, "t1, t2 or grm")
        ->check(CLI::IsMember({"t1", "t2", "grm"}));
    sim_cmd->add_option("--out", sim_out, "write a CSV report here instead of JSON to stdout");

    // census
    auto* census_cmd = app.add_subcommand("census", "exhaustive query-distribution census");
    SpecFlags census_flags;
    census_flags.attach(*census_cmd, /*with_family=*/false);
    std::size_t census_target = 0;
    bool census_fixed = false;
    auto* target_opt = census_cmd->add_option("--target", census_target,
                                              "census a single target index (default: all)");
    census_cmd->add_flag("--fixed-order", census_fixed,
                         "tally the unpermuted query list instead of the planner's");

    // min-distance
    auto* dist_cmd = app.add_subcommand("min-distance", "exhaustive minimum distance");
    SpecFlags dist_flags;
    dist_flags.attach(*dist_cmd);
    std::uint64_t dist_cap = 1ull << 20;
    unsigned dist_threads = 0;
    dist_cmd->add_option("--cap", dist_cap, "largest q^k message count to enumerate");
    dist_cmd->add_option("--threads", dist_threads, "worker threads, 0 = hardware");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (*params_cmd) return run_params(params_flags);
        if (*encode_cmd) return run_encode(encode_flags, encode_message, encode_seed, encode_out);
        if (*corrupt_cmd) return run_corrupt(corrupt_in, corrupt_delta, corrupt_seed, corrupt_out);
        if (*correct_cmd)
            return run_local_correct(correct_in, correct_index, correct_seed, correct_mode);
        if (*sim_cmd)
            return run_simulate(sim_flags, sim_deltas, sim_sigma, sim_trials, sim_seed, sim_mode,
                                sim_threads, sim_out);
        if (*census_cmd)
            return run_census(census_flags,
                              target_opt->count() ? std::optional<std::size_t>(census_target)
                                                  : std::nullopt,
                              census_fixed);
        if (*dist_cmd) return run_min_distance(dist_flags, dist_cap, dist_threads);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}

}  // namespace prmlcc::cli
