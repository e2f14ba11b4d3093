#include "prmlcc/local_decoder.hpp"

#include <stdexcept>

#include "prmlcc/rs_decoder.hpp"

namespace prmlcc {
namespace {

void require_prm(const CodeSpec& spec, const char* who) {
    validate_spec(spec);
    if (spec.family != CodeFamily::PRM)
        throw std::invalid_argument(std::string(who) + ": PRM spec required");
}

// Uniform point of P^m other than `skip`, by index skipping.
ProjPoint draw_direction(const Field& f, unsigned m, std::size_t n, std::size_t skip, Rng& rng) {
    std::size_t idx = rng.below(n - 1);
    if (idx >= skip) ++idx;
    return point_at(f, m, idx);
}

}  // namespace

std::vector<ExtElem> query_params(const Field& f, unsigned d) {
    if (d + 1 > f.q()) throw std::invalid_argument("query_params: need d+1 <= q");
    std::vector<ExtElem> params;
    params.reserve(d + 1);
    for (unsigned v = 1; params.size() <= d && v < f.q(); ++v)
        params.push_back(ExtElem::finite(static_cast<Elem>(v)));
    if (params.size() <= d) params.push_back(ExtElem::infinity());
    return params;
}

QueryPlan build_plan(const Field& f, const ProjPoint& target, const ProjPoint& direction,
                     std::vector<ExtElem> lambdas) {
    if (!is_normalized(target.coords) || !is_normalized(direction.coords))
        throw std::invalid_argument("build_plan: points must be normalized");
    if (target == direction) throw std::invalid_argument("build_plan: direction equals target");
    const unsigned m = target.dim();

    QueryPlan plan;
    plan.target = target;
    plan.direction = direction;
    plan.lambdas = std::move(lambdas);
    plan.coords.reserve(plan.lambdas.size());
    plan.scalars.reserve(plan.lambdas.size());

    std::vector<Elem> raw(m + 1);
    for (const ExtElem& lambda : plan.lambdas) {
        if (lambda.is_inf()) {
            plan.coords.push_back(plan.direction);
            plan.scalars.push_back(1);
            continue;
        }
        if (lambda.value == 0) throw std::invalid_argument("build_plan: zero parameter");
        for (unsigned i = 0; i <= m; ++i)
            raw[i] = f.add(target.coords[i], f.mul(lambda.value, plan.direction.coords[i]));
        Normalized nz = normalize(f, raw);
        plan.coords.push_back(std::move(nz.point));
        plan.scalars.push_back(nz.scale);
    }
    return plan;
}

QueryPlan plan_queries(const Field& f, const ProjPoint& target, unsigned d, Rng& rng) {
    if (!is_normalized(target.coords)) throw std::invalid_argument("plan_queries: target not normalized");
    const unsigned m = target.dim();
    const std::size_t n = projective_size(f, m);

    const ProjPoint direction = draw_direction(f, m, n, point_index(f, target), rng);
    std::vector<ExtElem> lambdas = query_params(f, d);
    rng.shuffle(lambdas);
    return build_plan(f, target, direction, std::move(lambdas));
}

Elem reconstruct(const Field& f, const QueryPlan& plan, std::span<const Elem> responses) {
    if (responses.size() != plan.lambdas.size())
        throw std::invalid_argument("reconstruct: response count mismatch");
    const unsigned d = static_cast<unsigned>(plan.lambdas.size()) - 1;

    std::vector<EvalPair> pairs;
    pairs.reserve(responses.size());
    for (std::size_t i = 0; i < responses.size(); ++i)
        pairs.push_back({plan.lambdas[i], f.mul(f.pow(plan.scalars[i], d), responses[i])});
    const UniPoly h = interpolate(f, pairs, d);
    return eval_uni(f, h, ExtElem::finite(0));
}

Elem correct_t1(const CodeSpec& spec, const SymbolReader& read, std::size_t index, Rng& rng) {
    require_prm(spec, "correct_t1");
    const Field& f = spec.field;
    const ProjPoint target = point_at(f, spec.m, index);

    const QueryPlan plan = plan_queries(f, target, spec.d, rng);
    std::vector<Elem> responses;
    responses.reserve(plan.coords.size());
    for (const auto& pt : plan.coords) responses.push_back(read(point_index(f, pt)));
    return reconstruct(f, plan, responses);
}

std::optional<Elem> correct_t2(const CodeSpec& spec, const SymbolReader& read, std::size_t index,
                               Rng& rng) {
    require_prm(spec, "correct_t2");
    const Field& f = spec.field;
    const std::size_t n = projective_size(f, spec.m);
    const ProjPoint target = point_at(f, spec.m, index);
    const ProjPoint direction = draw_direction(f, spec.m, n, index, rng);

    // whole line except the target: the q entries for lambda in F_q* plus
    // infinity; the symbols there form an extended RS codeword of H
    const Line line = line_through(f, target, direction);
    std::vector<EvalPair> pairs;
    pairs.reserve(f.q());
    for (std::size_t j = 1; j < line.params.size(); ++j) {
        const Elem response = read(point_index(f, line.points[j]));
        pairs.push_back({line.params[j], f.mul(f.pow(line.scalars[j], spec.d), response)});
    }

    const auto h = decode(f, pairs, spec.d);
    if (!h) return std::nullopt;
    return eval_uni(f, *h, ExtElem::finite(0));
}

Elem grm_correct(const CodeSpec& spec, const SymbolReader& read, std::size_t index, Rng& rng) {
    validate_spec(spec);
    if (spec.family != CodeFamily::GRM) throw std::invalid_argument("grm_correct: GRM spec required");
    const Field& f = spec.field;
    const unsigned m = spec.m;
    const std::size_t n = affine_size(f, m);
    const std::vector<Elem> target = affine_at(f, m, index);

    // direction: uniform nonzero vector (same draw order as the projective
    // planner: direction first, then the parameter shuffle)
    const std::size_t vid = 1 + rng.below(n - 1);
    const std::vector<Elem> direction = affine_at(f, m, vid);

    std::vector<ExtElem> lambdas;
    lambdas.reserve(spec.d + 1);
    for (unsigned v = 1; lambdas.size() <= spec.d; ++v)
        lambdas.push_back(ExtElem::finite(static_cast<Elem>(v)));
    rng.shuffle(lambdas);

    std::vector<EvalPair> pairs;
    pairs.reserve(lambdas.size());
    std::vector<Elem> pt(m);
    for (const ExtElem& lambda : lambdas) {
        for (unsigned i = 0; i < m; ++i)
            pt[i] = f.add(target[i], f.mul(lambda.value, direction[i]));
        pairs.push_back({lambda, read(affine_index(f, pt))});
    }
    const UniPoly h = interpolate(f, pairs, spec.d);
    return eval_uni(f, h, ExtElem::finite(0));
}

bool Census::slot_uniform(std::size_t slot) const {
    const auto& counts = slot_counts[slot];
    if (counts[target] != 0) return false;
    std::uint64_t expect = 0;
    bool first = true;
    for (std::size_t i = 0; i < counts.size(); ++i) {
        if (i == target) continue;
        if (first) {
            expect = counts[i];
            first = false;
        } else if (counts[i] != expect) {
            return false;
        }
    }
    return true;
}

bool Census::uniform() const {
    for (std::size_t s = 0; s < slot_counts.size(); ++s)
        if (!slot_uniform(s)) return false;
    return true;
}

Census smoothness_census(const CodeSpec& spec, const ProjPoint& target) {
    require_prm(spec, "smoothness_census");
    const Field& f = spec.field;
    const std::size_t n = projective_size(f, spec.m, kCensusCap);
    const std::size_t widx = point_index(f, target);
    const auto params = query_params(f, spec.d);

    // Tally every (direction, parameter) pair once. A uniform permutation
    // hands each slot every parameter with the same 1/(d+1) marginal, so
    // all slots share this one table.
    std::vector<std::uint64_t> counts(n, 0);
    std::vector<Elem> raw(spec.m + 1);
    for (std::size_t vi = 0; vi < n; ++vi) {
        if (vi == widx) continue;
        const ProjPoint v = point_at(f, spec.m, vi);
        for (const ExtElem& s : params) {
            if (s.is_inf()) {
                ++counts[vi];
                continue;
            }
            for (unsigned i = 0; i <= spec.m; ++i)
                raw[i] = f.add(target.coords[i], f.mul(s.value, v.coords[i]));
            ++counts[point_index(f, normalize(f, raw).point)];
        }
    }

    Census census;
    census.target = widx;
    census.slot_counts.assign(spec.d + 1, counts);
    return census;
}

Census fixed_order_census(const CodeSpec& spec, const ProjPoint& target) {
    require_prm(spec, "fixed_order_census");
    const Field& f = spec.field;
    const std::size_t n = projective_size(f, spec.m, kCensusCap);
    const std::size_t widx = point_index(f, target);

    Census census;
    census.target = widx;
    census.slot_counts.assign(f.q(), std::vector<std::uint64_t>(n, 0));

    std::vector<Elem> raw(spec.m + 1);
    for (std::size_t vi = 0; vi < n; ++vi) {
        if (vi == widx) continue;
        const ProjPoint v = point_at(f, spec.m, vi);
        for (unsigned slot = 0; slot < f.q(); ++slot) {
            const Elem omega = static_cast<Elem>(slot);  // canonical order, 0 first
            for (unsigned i = 0; i <= spec.m; ++i)
                raw[i] = f.add(target.coords[i], f.mul(omega, v.coords[i]));
            ++census.slot_counts[slot][point_index(f, normalize(f, raw).point)];
        }
    }
    return census;
}

}  // namespace prmlcc
