#pragma once

#include <cstdint>
#include <vector>

#include "prmlcc/field.hpp"
#include "prmlcc/polynomial.hpp"
#include "prmlcc/projective.hpp"

namespace prmlcc {

enum class CodeFamily { PRM, GRM, RS, ERS };

/// Parameters of one code instance. `m` is the number of GRM variables
/// respectively the projective dimension for PRM (whose evaluation points
/// then carry m+1 coordinates); it is ignored for RS and ERS.
struct CodeSpec {
    CodeFamily family = CodeFamily::PRM;
    Field field;
    unsigned d = 1;
    unsigned m = 1;
};

/// Checks the degree restrictions: d <= q-1 for PRM/RS/ERS, d <= q-2 for
/// GRM, d >= 1, m >= 1. Throws std::invalid_argument.
void validate_spec(const CodeSpec& spec);

struct CodeParams {
    unsigned query_complexity;    // d + 1
    std::size_t message_length;   // binomial(m+d, d) for PRM/GRM, d+1 for RS/ERS
    std::size_t code_length;
    /// For PRM and GRM this is the minimum-distance column exactly as
    /// printed, (q-d)*q^{m-1}. For PRM that printed value disagrees with
    /// exhaustive enumeration (see min_distance_bruteforce); it is reported
    /// verbatim, not corrected. For RS/ERS it is the MDS distance n-d.
    std::size_t table_distance;
};

CodeParams code_params(const CodeSpec& spec);

/// Codeword symbols in canonical index order: the projective point
/// enumeration for PRM, the affine enumeration for GRM, the field elements
/// then infinity for ERS (RS drops the infinity position).
struct Codeword {
    CodeSpec spec;
    std::vector<Elem> symbols;
};

Codeword prm_encode(const CodeSpec& spec, const HomogeneousPoly& message);
Codeword grm_encode(const CodeSpec& spec, const BoundedPoly& message);

/// Encodes for family ERS, or RS when spec.family is RS.
Codeword ers_encode(const CodeSpec& spec, const UniPoly& message);

/// Family dispatch over a raw coefficient vector in the canonical monomial
/// order of the family's message type.
Codeword encode(const CodeSpec& spec, const std::vector<Elem>& message);

std::size_t message_length(const CodeSpec& spec);

/// The ordinal-th message coefficient vector, reading the ordinal base q
/// with coefficient 0 least significant. Ordinal 0 is the zero message.
std::vector<Elem> message_from_ordinal(const CodeSpec& spec, std::uint64_t ordinal);

/// Minimum Hamming weight over all q^k - 1 nonzero messages, by exhaustive
/// encoding. Throws std::invalid_argument when q^k exceeds cap. Partitions
/// the message space across threads (0 = hardware concurrency); the result
/// does not depend on the partitioning.
std::size_t min_distance_bruteforce(const CodeSpec& spec, std::uint64_t cap = 1ull << 20,
                                    unsigned threads = 0);

}  // namespace prmlcc
