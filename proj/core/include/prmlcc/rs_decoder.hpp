#pragma once

#include <optional>
#include <span>

#include "prmlcc/field.hpp"
#include "prmlcc/polynomial.hpp"

namespace prmlcc {

/// One observation of a univariate polynomial: its value at a finite point,
/// or its degree-d coefficient when param is the point at infinity.
struct EvalPair {
    ExtElem param;
    Elem value;
};

/// Largest number of errors correctable from n_pairs observations of a
/// degree <= d polynomial: floor((n_pairs - d - 1)/2).
constexpr std::size_t unique_decoding_radius(std::size_t n_pairs, unsigned d) {
    return (n_pairs - d - 1) / 2;
}

/// The unique polynomial of degree bound d through exactly d+1 pairs. The
/// pairs must have pairwise distinct params with at most one infinity; an
/// infinity pair pins the X^d coefficient and the rest is Lagrange
/// interpolation through the finite pairs. Throws std::invalid_argument on
/// malformed input.
UniPoly interpolate(const Field& f, std::span<const EvalPair> pairs, unsigned d);

/// Berlekamp-Welch style decoder over an evaluation set that may include
/// the point at infinity. Finds the polynomial of degree bound d that
/// disagrees with at most floor((N-d-1)/2) of the N pairs, if one exists;
/// returns nullopt otherwise.
///
/// For each error count e = 0, 1, ... it solves the homogeneous system
///   Q(x_i) = y_i * E(x_i)             at finite pairs,
///   coeff_{e+d}(Q) = y_inf * coeff_e(E)   at an infinity pair,
/// for a nonzero (E, Q) with deg E <= e and deg Q <= e+d (the evaluation
/// points live on the projective line, infinity included, so the infinity
/// error is located by a vanishing top coefficient of E), takes H = Q/E
/// when the division is exact, and accepts H when it satisfies at least
/// N-e pairs. Unsolvable systems and inexact divisions just advance e.
std::optional<UniPoly> decode(const Field& f, std::span<const EvalPair> pairs, unsigned d);

}  // namespace prmlcc
