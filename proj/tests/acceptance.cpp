// Acceptance suite: every release-gating property in one binary, one
// pass/fail line per criterion. Run it directly or through ctest.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <cstdio>
#include <set>

#include "prmlcc/local_decoder.hpp"
#include "prmlcc/rs_decoder.hpp"
#include "prmlcc/serialize.hpp"
#include "prmlcc/sim.hpp"

using namespace prmlcc;

namespace {

void report_line(int number, const char* name, bool pass) {
    std::printf("criterion %2d [%s] %s\n", number, pass ? "PASS" : "FAIL", name);
    std::fflush(stdout);
}

std::uint64_t message_count(const CodeSpec& spec) {
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < message_length(spec); ++i) total *= spec.field.q();
    return total;
}

std::size_t weight(const Codeword& cw) {
    std::size_t w = 0;
    for (Elem s : cw.symbols)
        if (s != 0) ++w;
    return w;
}

HomogeneousPoly random_hom(const Field& f, unsigned num_vars, unsigned degree, Rng& rng) {
    HomogeneousPoly poly{num_vars, degree, {}};
    poly.coeffs.resize(homogeneous_monomials(num_vars, degree).size());
    for (auto& c : poly.coeffs) c = rng.element(f);
    return poly;
}

// Monte-Carlo cell with the three-sigma sampling margin on top of the
// theorem bound.
bool run_cell(const SimConfig& config, double bound) {
    const SimReport report = simulate(config);
    const double margin = 3.0 * std::sqrt(bound / static_cast<double>(config.trials));
    const double empirical =
        static_cast<double>(report.failures()) / static_cast<double>(config.trials);
    const bool pass = empirical <= bound + margin;
    std::printf("    delta=%.3f trials=%llu wrong=%llu failed=%llu empirical=%.4f <= %.4f %s\n",
                config.delta, static_cast<unsigned long long>(config.trials),
                static_cast<unsigned long long>(report.wrong),
                static_cast<unsigned long long>(report.failed), empirical, bound + margin,
                pass ? "ok" : "VIOLATED");
    return pass;
}

}  // namespace

TEST_CASE("criterion 1: PRM_3(1,1) is the extended Reed-Solomon code over GF(3)") {
    CodeSpec prm{CodeFamily::PRM, Field(3), 1, 1};
    CodeSpec ers{CodeFamily::ERS, Field(3), 1, 1};

    // index alignment is the identity: projective point (1, lambda) sits at
    // position lambda, (0, 1) at the trailing infinity position
    std::set<std::vector<Elem>> prm_set, ers_set;
    for (std::uint64_t ordinal = 0; ordinal < 9; ++ordinal) {
        prm_set.insert(encode(prm, message_from_ordinal(prm, ordinal)).symbols);
        ers_set.insert(encode(ers, message_from_ordinal(ers, ordinal)).symbols);
    }
    const bool pass = prm_set.size() == 9 && prm_set == ers_set;
    report_line(1, "degeneracy: PRM_3(1,1) == ERS_3(1), all 9 messages", pass);
    CHECK(pass);
}

TEST_CASE("criterion 2: PRM_2(1,2) is the [7,3,4] Hadamard/simplex code") {
    CodeSpec spec{CodeFamily::PRM, Field(2), 1, 2};
    const CodeParams params = code_params(spec);
    const std::size_t dist = min_distance_bruteforce(spec);
    const bool pass = params.code_length == 7 && params.message_length == 3 && dist == 4;
    report_line(2, "degeneracy: PRM_2(1,2) has n=7, k=3, distance 4", pass);
    CHECK(pass);
}

TEST_CASE("criterion 3: exact per-slot smoothness census") {
    bool pass = true;
    for (auto [p, d] : {std::pair{3u, 1u}, {2u, 1u}}) {
        CodeSpec spec{CodeFamily::PRM, Field(p), d, 2};
        const std::size_t n = code_params(spec).code_length;
        for (std::size_t w = 0; w < n; ++w) {
            const Census census = smoothness_census(spec, point_at(spec.field, 2, w));
            for (std::size_t slot = 0; slot < census.slot_counts.size(); ++slot)
                pass = pass && census.slot_uniform(slot);
            pass = pass && census.slot_counts[0][w] == 0;
        }
    }
    report_line(3, "perfect smoothness: census exactly uniform, PRM_3(1,2) and PRM_2(1,2)", pass);
    CHECK(pass);
}

TEST_CASE("criterion 4: noiseless reconstruction is exact everywhere") {
    std::uint64_t checked = 0, failures = 0;
    Rng msg_rng(1001);
    for (unsigned q : {2u, 3u, 5u}) {
        Field f(q);
        for (unsigned m = 1; m <= 2; ++m) {
            for (unsigned d = 1; d <= q - 1; ++d) {
                CodeSpec spec{CodeFamily::PRM, f, d, m};
                const std::size_t n = code_params(spec).code_length;
                for (unsigned msg = 0; msg < 20; ++msg) {
                    const Codeword cw = prm_encode(spec, random_hom(f, m + 1, d, msg_rng));
                    const SymbolReader read = [&](std::size_t i) { return cw.symbols[i]; };
                    for (std::size_t index = 0; index < n; ++index) {
                        for (std::uint64_t seed = 0; seed < 100; ++seed) {
                            Rng rng(seed);
                            ++checked;
                            if (correct_t1(spec, read, index, rng) != cw.symbols[index])
                                ++failures;
                        }
                    }
                }
            }
        }
    }
    const bool pass = failures == 0;
    std::printf("    %llu reconstructions, %llu failures\n",
                static_cast<unsigned long long>(checked),
                static_cast<unsigned long long>(failures));
    report_line(4, "noiseless reconstruction exact: q in {2,3,5}, m <= 2, d <= q-1, 100 seeds",
                pass);
    CHECK(pass);
}

TEST_CASE("criterion 5: the (d+1, delta, (d+1)delta) bound on PRM_5(2,2)") {
    bool pass = true;
    for (double delta : {0.03, 0.05, 0.1}) {
        SimConfig config;
        config.spec = CodeSpec{CodeFamily::PRM, Field(5), 2, 2};
        config.mode = DecodeMode::T1;
        config.delta = delta;
        config.trials = 10000;
        config.seed = 20250 + static_cast<std::uint64_t>(delta * 1000);
        pass = run_cell(config, failure_bound(config)) && pass;
    }
    report_line(5, "theorem 1 bound: PRM_5(2,2), gamma=3, delta in {0.03,0.05,0.1}", pass);
    CHECK(pass);
}

TEST_CASE("criterion 6: the (q, delta, 2delta/(1-sigma)) bound on PRM_7(2,2)") {
    bool pass = true;
    const double sigma = 3.0 / 7.0;
    for (double delta : {0.05, 0.1}) {
        SimConfig config;
        config.spec = CodeSpec{CodeFamily::PRM, Field(7), 2, 2};
        config.mode = DecodeMode::T2;
        config.delta = delta;
        config.sigma = sigma;
        config.trials = 10000;
        config.seed = 30250 + static_cast<std::uint64_t>(delta * 1000);
        pass = run_cell(config, failure_bound(config)) && pass;
    }

    // planted-error part: strictly fewer than floor((1-sigma)q/2) = 2
    // corruptions on the queried line are always corrected
    {
        Field f(7);
        CodeSpec spec{CodeFamily::PRM, f, 2, 2};
        const std::size_t n = code_params(spec).code_length;
        Rng msg_rng(606);
        const Codeword clean = prm_encode(spec, random_hom(f, 3, 2, msg_rng));
        std::uint64_t planted = 0, corrected = 0;
        for (std::size_t index = 0; index < n; ++index) {
            const std::uint64_t seed = 7000 + index;
            Rng probe(seed);
            std::size_t vidx = probe.below(n - 1);
            if (vidx >= index) ++vidx;
            const Line line = line_through(f, point_at(f, 2, index), point_at(f, 2, vidx));

            // zero errors
            {
                Rng rng(seed);
                const SymbolReader read = [&](std::size_t i) { return clean.symbols[i]; };
                auto got = correct_t2(spec, read, index, rng);
                ++planted;
                if (got && *got == clean.symbols[index]) ++corrected;
            }
            // every single-position, every wrong value on the punctured line
            for (std::size_t j = 1; j < line.points.size(); ++j) {
                const std::size_t pos = point_index(f, line.points[j]);
                for (unsigned off = 1; off < f.q(); ++off) {
                    Codeword bad = clean;
                    bad.symbols[pos] = f.add(bad.symbols[pos], static_cast<Elem>(off));
                    Rng rng(seed);
                    const SymbolReader read = [&](std::size_t i) { return bad.symbols[i]; };
                    auto got = correct_t2(spec, read, index, rng);
                    ++planted;
                    if (got && *got == clean.symbols[index]) ++corrected;
                }
            }
        }
        std::printf("    planted line patterns: %llu, corrected: %llu\n",
                    static_cast<unsigned long long>(planted),
                    static_cast<unsigned long long>(corrected));
        pass = pass && planted == corrected;
    }
    report_line(6, "theorem 2 bound and planted sub-radius line errors: PRM_7(2,2)", pass);
    CHECK(pass);
}

TEST_CASE("criterion 7: PRM over GF(q'-1) against GRM over GF(q')") {
    bool pass = true;
    auto check_pair = [&](const CodeSpec& prm, const CodeSpec& grm) {
        const CodeParams a = code_params(prm), b = code_params(grm);
        const bool equal_gamma = a.query_complexity == b.query_complexity;
        const bool equal_k = a.message_length == b.message_length;
        const bool shorter = a.code_length < b.code_length;
        if (!(equal_gamma && equal_k && shorter))
            std::printf("    PRM_%u(d=%u,m=%u) n=%zu vs GRM_%u n=%zu: gamma %s, k %s, n %s\n",
                        prm.field.q(), prm.d, prm.m, a.code_length, grm.field.q(), b.code_length,
                        equal_gamma ? "equal" : "DIFFER", equal_k ? "equal" : "DIFFER",
                        shorter ? "strictly smaller" : "NOT strictly smaller");
        return equal_gamma && equal_k && shorter;
    };

    pass = check_pair({CodeFamily::PRM, Field(3), 2, 2}, {CodeFamily::GRM, Field(2, 2), 2, 2}) &&
           pass;
    for (unsigned m = 1; m <= 3; ++m) {
        CodeSpec prm{CodeFamily::PRM, Field(2, 2), 2, m};
        CodeSpec grm{CodeFamily::GRM, Field(5), 2, m};
        if (code_params(prm).code_length > 10000 || code_params(grm).code_length > 10000)
            continue;
        pass = check_pair(prm, grm) && pass;
    }
    report_line(7, "table comparison: equal gamma and k, PRM strictly shorter, m in {1,2,3}",
                pass);
    CHECK_MESSAGE(pass,
                  "PRM_{q'-1}(d,1) and GRM_{q'}(d,1) have equal length q' for every q' "
                  "(((q'-1)^2-1)/(q'-2) == q'), so the strict inequality cannot hold at m=1");
}

TEST_CASE("criterion 8: decode agrees with the exhaustive agreement maximizer") {
    Field f(5);
    const unsigned d = 1;
    std::vector<ExtElem> params;
    for (unsigned v = 0; v < 5; ++v) params.push_back(ExtElem::finite(static_cast<Elem>(v)));

    bool pass = true;
    std::uint64_t cases = 0;
    for (unsigned c0 = 0; c0 < 5 && pass; ++c0)
        for (unsigned c1 = 0; c1 < 5 && pass; ++c1) {
            const UniPoly truth{{static_cast<Elem>(c0), static_cast<Elem>(c1)}};
            std::vector<EvalPair> clean;
            for (ExtElem at : params) clean.push_back({at, eval_uni(f, truth, at)});

            // no-error case
            {
                auto got = decode(f, clean, d);
                ++cases;
                pass = pass && got.has_value() && *got == truth;
            }
            for (std::size_t pos = 0; pos < clean.size() && pass; ++pos)
                for (unsigned off = 1; off < 5 && pass; ++off) {
                    auto pairs = clean;
                    pairs[pos].value = f.add(pairs[pos].value, static_cast<Elem>(off));

                    // oracle: enumerate all 25 candidate lines
                    UniPoly best{{0, 0}};
                    std::size_t best_agree = 0;
                    bool tie = false;
                    for (unsigned b0 = 0; b0 < 5; ++b0)
                        for (unsigned b1 = 0; b1 < 5; ++b1) {
                            const UniPoly cand{{static_cast<Elem>(b0), static_cast<Elem>(b1)}};
                            std::size_t agree = 0;
                            for (const auto& pr : pairs)
                                if (eval_uni(f, cand, pr.param) == pr.value) ++agree;
                            if (agree > best_agree) {
                                best = cand;
                                best_agree = agree;
                                tie = false;
                            } else if (agree == best_agree) {
                                tie = true;
                            }
                        }

                    auto got = decode(f, pairs, d);
                    ++cases;
                    pass = pass && !tie && got.has_value() && *got == best && *got == truth;
                }
        }
    std::printf("    %llu exhaustive instances\n", static_cast<unsigned long long>(cases));
    report_line(8, "decoder oracle equivalence: GF(5), d=1, N=5, all <=1-error patterns", pass);
    CHECK(pass);
}

TEST_CASE("criterion 9: distance discrepancy ledger") {
    struct Row {
        CodeSpec spec;
        std::size_t expected;  // exhaustive enumeration results
    };
    const Row rows[] = {
        {{CodeFamily::PRM, Field(2), 1, 2}, 4},
        {{CodeFamily::PRM, Field(3), 1, 2}, 9},
        {{CodeFamily::PRM, Field(3), 2, 2}, 6},  // regression value from the first enumeration
    };
    bool pass = true;
    for (const Row& row : rows) {
        const std::size_t brute = min_distance_bruteforce(row.spec);
        const std::size_t printed = code_params(row.spec).table_distance;
        std::printf("    PRM_%u(%u,%u): bruteforce=%zu, printed table value=%zu\n",
                    row.spec.field.q(), row.spec.d, row.spec.m, brute, printed);
        pass = pass && brute == row.expected;
    }
    report_line(9, "minimum distances recorded next to the printed table column", pass);
    CHECK(pass);
}

TEST_CASE("criterion 10: the unpermuted query list fails the smoothness census") {
    CodeSpec spec{CodeFamily::PRM, Field(3), 1, 2};
    const std::size_t n = code_params(spec).code_length;
    bool found_nonuniform = false;
    bool found_nonzero_slot = false;
    for (std::size_t w = 0; w < n; ++w) {
        const Census census = fixed_order_census(spec, point_at(spec.field, 2, w));
        for (std::size_t slot = 0; slot < census.slot_counts.size(); ++slot) {
            if (!census.slot_uniform(slot)) {
                found_nonuniform = true;
                if (slot != 0) found_nonzero_slot = true;
            }
        }
    }
    const bool pass = found_nonuniform && found_nonzero_slot;
    report_line(10, "negative control: fixed-order census is non-uniform on PRM_3(1,2)", pass);
    CHECK(pass);
}
