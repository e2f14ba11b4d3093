#include "prmlcc/codes.hpp"

#include <algorithm>
#include <stdexcept>
#include <thread>

namespace prmlcc {
namespace {

std::size_t binomial(unsigned n, unsigned k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    std::size_t r = 1;
    for (unsigned i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

std::size_t pow_size(std::size_t base, unsigned e) {
    std::size_t r = 1;
    for (unsigned i = 0; i < e; ++i) r *= base;
    return r;
}

unsigned resolve_threads(unsigned threads, std::uint64_t work) {
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    return static_cast<unsigned>(std::min<std::uint64_t>(threads, std::max<std::uint64_t>(work, 1)));
}

}  // namespace

void validate_spec(const CodeSpec& spec) {
    const unsigned q = spec.field.q();
    if (spec.d < 1) throw std::invalid_argument("code spec: degree must be at least 1");
    switch (spec.family) {
        case CodeFamily::PRM:
            if (spec.m < 1) throw std::invalid_argument("code spec: m must be at least 1");
            if (spec.d > q - 1) throw std::invalid_argument("code spec: PRM requires d <= q-1");
            break;
        case CodeFamily::GRM:
            if (spec.m < 1) throw std::invalid_argument("code spec: m must be at least 1");
            if (spec.d + 2 > q) throw std::invalid_argument("code spec: GRM requires d <= q-2");
            break;
        case CodeFamily::RS:
        case CodeFamily::ERS:
            if (spec.d > q - 1) throw std::invalid_argument("code spec: RS/ERS require d <= q-1");
            break;
    }
}

CodeParams code_params(const CodeSpec& spec) {
    validate_spec(spec);
    const unsigned q = spec.field.q();
    CodeParams p{};
    p.query_complexity = spec.d + 1;
    switch (spec.family) {
        case CodeFamily::PRM:
            p.message_length = binomial(spec.m + spec.d, spec.d);
            p.code_length = projective_size(spec.field, spec.m);
            p.table_distance = (q - spec.d) * pow_size(q, spec.m - 1);
            break;
        case CodeFamily::GRM:
            p.message_length = binomial(spec.m + spec.d, spec.d);
            p.code_length = affine_size(spec.field, spec.m);
            p.table_distance = (q - spec.d) * pow_size(q, spec.m - 1);
            break;
        case CodeFamily::RS:
            p.message_length = spec.d + 1;
            p.code_length = q;
            p.table_distance = q - spec.d;  // MDS: n - k + 1
            break;
        case CodeFamily::ERS:
            p.message_length = spec.d + 1;
            p.code_length = q + 1;
            p.table_distance = q + 1 - spec.d;  // MDS: n - k + 1
            break;
    }
    return p;
}

Codeword prm_encode(const CodeSpec& spec, const HomogeneousPoly& message) {
    validate_spec(spec);
    if (spec.family != CodeFamily::PRM) throw std::invalid_argument("prm_encode: wrong family");
    if (message.num_vars != spec.m + 1 || message.degree != spec.d)
        throw std::invalid_argument("prm_encode: message shape mismatch");

    const auto points = enumerate_points(spec.field, spec.m);
    Codeword cw{spec, {}};
    cw.symbols.reserve(points.size());
    for (const auto& pt : points) cw.symbols.push_back(eval_hom(spec.field, message, pt.coords));
    return cw;
}

Codeword grm_encode(const CodeSpec& spec, const BoundedPoly& message) {
    validate_spec(spec);
    if (spec.family != CodeFamily::GRM) throw std::invalid_argument("grm_encode: wrong family");
    if (message.num_vars != spec.m || message.degree_bound != spec.d)
        throw std::invalid_argument("grm_encode: message shape mismatch");

    const std::size_t n = affine_size(spec.field, spec.m);
    Codeword cw{spec, {}};
    cw.symbols.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        const auto pt = affine_at(spec.field, spec.m, i);
        cw.symbols.push_back(eval_bounded(spec.field, message, pt));
    }
    return cw;
}

Codeword ers_encode(const CodeSpec& spec, const UniPoly& message) {
    validate_spec(spec);
    if (spec.family != CodeFamily::RS && spec.family != CodeFamily::ERS)
        throw std::invalid_argument("ers_encode: wrong family");
    if (message.degree_bound() != spec.d)
        throw std::invalid_argument("ers_encode: message shape mismatch");

    Codeword cw{spec, {}};
    cw.symbols.reserve(spec.field.q() + 1);
    for (Elem lambda : spec.field.elements())
        cw.symbols.push_back(eval_uni(spec.field, message, ExtElem::finite(lambda)));
    if (spec.family == CodeFamily::ERS) cw.symbols.push_back(message.at_infinity());
    return cw;
}

std::size_t message_length(const CodeSpec& spec) { return code_params(spec).message_length; }

std::vector<Elem> message_from_ordinal(const CodeSpec& spec, std::uint64_t ordinal) {
    const std::size_t k = message_length(spec);
    std::vector<Elem> coeffs(k, 0);
    for (std::size_t i = 0; i < k && ordinal != 0; ++i) {
        coeffs[i] = static_cast<Elem>(ordinal % spec.field.q());
        ordinal /= spec.field.q();
    }
    return coeffs;
}

Codeword encode(const CodeSpec& spec, const std::vector<Elem>& message) {
    switch (spec.family) {
        case CodeFamily::PRM:
            return prm_encode(spec, HomogeneousPoly{spec.m + 1, spec.d, message});
        case CodeFamily::GRM:
            return grm_encode(spec, BoundedPoly{spec.m, spec.d, message});
        case CodeFamily::RS:
        case CodeFamily::ERS:
            return ers_encode(spec, UniPoly{message});
    }
    throw std::logic_error("encode: unknown family");
}

std::size_t min_distance_bruteforce(const CodeSpec& spec, std::uint64_t cap, unsigned threads) {
    const std::size_t k = message_length(spec);
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < k; ++i) {
        total *= spec.field.q();
        if (total > cap)
            throw std::invalid_argument("min_distance_bruteforce: q^k exceeds the cap");
    }

    const unsigned nthreads = resolve_threads(threads, total - 1);
    std::vector<std::size_t> best(nthreads, SIZE_MAX);
    std::vector<std::thread> workers;
    workers.reserve(nthreads);
    for (unsigned t = 0; t < nthreads; ++t) {
        workers.emplace_back([&, t] {
            std::size_t local = SIZE_MAX;
            for (std::uint64_t ordinal = 1 + t; ordinal < total; ordinal += nthreads) {
                const Codeword cw = encode(spec, message_from_ordinal(spec, ordinal));
                std::size_t weight = 0;
                for (Elem s : cw.symbols)
                    if (s != 0) ++weight;
                local = std::min(local, weight);
            }
            best[t] = local;
        });
    }
    for (auto& w : workers) w.join();
    return *std::min_element(best.begin(), best.end());
}

}  // namespace prmlcc
