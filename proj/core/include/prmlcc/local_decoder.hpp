#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "prmlcc/codes.hpp"
#include "prmlcc/field.hpp"
#include "prmlcc/projective.hpp"
#include "prmlcc/rng.hpp"

namespace prmlcc {

/// Output of the randomized query planner: the permuted line parameters,
/// the points to read, and the normalization scalars that turn raw symbol
/// values into evaluations of the restricted univariate polynomial.
///
/// Invariants: no parameter is 0 (the target itself is never queried); the
/// infinity slot, when present, carries (direction, 1); finite slots carry
/// the normalized point and leading scalar of target + lambda*direction.
struct QueryPlan {
    std::vector<ExtElem> lambdas;
    std::vector<ProjPoint> coords;
    std::vector<Elem> scalars;
    ProjPoint direction;
    ProjPoint target;
};

/// The d+1 query parameters: the first d+1 entries of the list
/// [1, 2, ..., q-1, infinity] in canonical element order. Fixed so that
/// seeds reproduce plans; the randomness lies in the permutation and the
/// direction choice.
std::vector<ExtElem> query_params(const Field& f, unsigned d);

/// Deterministic plan assembly from explicit choices: lambdas must be
/// distinct, nonzero and taken from F_q* plus infinity; direction must be a
/// normalized point different from the target. The randomized planner
/// delegates here, and exhaustive checks can sweep the whole choice space.
QueryPlan build_plan(const Field& f, const ProjPoint& target, const ProjPoint& direction,
                     std::vector<ExtElem> lambdas);

/// Randomized query planner for the projective local decoder. Draw order
/// is fixed: first one uniform index for the direction (rejection sampled
/// over the n-1 points other than target), then a Fisher-Yates shuffle of
/// the parameter set. Requires d <= q-1 and a normalized target.
QueryPlan plan_queries(const Field& f, const ProjPoint& target, unsigned d, Rng& rng);

/// Deterministic reconstruction: interpolates H of degree bound d from the
/// pairs (lambda_i, scalar_i^d * response_i) and returns H(0). On
/// uncorrupted responses this is the codeword symbol at the target.
Elem reconstruct(const Field& f, const QueryPlan& plan, std::span<const Elem> responses);

/// Symbol accessor: decoders read through this, never the codeword
/// directly, so harnesses can count and audit queries. Planning always
/// completes before the first read (the query set never depends on
/// response values).
using SymbolReader = std::function<Elem(std::size_t)>;

/// (d+1)-query local corrector: plan, read, reconstruct. Always returns a
/// symbol; with corrupted reads the result may be wrong.
Elem correct_t1(const CodeSpec& spec, const SymbolReader& read, std::size_t index, Rng& rng);

/// q-query verifying corrector: reads the whole punctured line through the
/// target and error-corrects the restricted polynomial. Returns nullopt
/// when no polynomial of degree <= d lies within the unique decoding
/// radius of the line's q values.
std::optional<Elem> correct_t2(const CodeSpec& spec, const SymbolReader& read, std::size_t index,
                               Rng& rng);

/// Reference affine-line local corrector for GRM codes (d <= q-2): queries
/// d+1 of the points target + lambda*direction, lambda != 0, and
/// interpolates directly (no normalization scalars in affine space).
Elem grm_correct(const CodeSpec& spec, const SymbolReader& read, std::size_t index, Rng& rng);

/// Exhaustive per-slot query tally. slot_counts[j][i] is the number of
/// (direction, parameter) pairs under which slot j queries point i, in
/// units of 1/((n-1)*|S|) probability each.
struct Census {
    std::size_t target = 0;
    std::vector<std::vector<std::uint64_t>> slot_counts;

    /// True when the slot never queries the target and hits every other
    /// point equally often.
    bool slot_uniform(std::size_t slot) const;
    bool uniform() const;
};

inline constexpr std::size_t kCensusCap = 10'000;

/// Census of the planner's slot marginals: every direction != target paired
/// with every parameter of query_params, each carrying the exact 1/(d+1)
/// slot marginal of a uniform permutation. Exact uniformity of every slot
/// is requirement 2 of a perfectly smooth decoder. Requires code length
/// <= kCensusCap.
Census smoothness_census(const CodeSpec& spec, const ProjPoint& target);

/// Negative control: the unpermuted query list whose slot j always uses the
/// j-th field element as its parameter (including 0, which queries the
/// target itself). Not uniform; kept to demonstrate why the permutation in
/// the planner is necessary.
Census fixed_order_census(const CodeSpec& spec, const ProjPoint& target);

}  // namespace prmlcc
