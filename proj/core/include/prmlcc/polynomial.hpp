#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "prmlcc/field.hpp"
#include "prmlcc/projective.hpp"

namespace prmlcc {

/// Exponent vector of one monomial, one entry per variable.
using Monomial = std::vector<unsigned>;

/// All exponent vectors with sum == degree, ordered lexicographically
/// descending with the first variable most significant. This order is the
/// message/coefficient contract for homogeneous polynomials.
std::vector<Monomial> homogeneous_monomials(unsigned num_vars, unsigned degree);

/// All exponent vectors with sum <= degree, ordered by total degree
/// ascending, ties lexicographically descending. Message order for the
/// bounded-degree (GRM) polynomials.
std::vector<Monomial> bounded_monomials(unsigned num_vars, unsigned degree);

/// Homogeneous polynomial in num_vars variables, every monomial of total
/// degree exactly `degree`; the zero polynomial is the all-zero coefficient
/// vector. Satisfies f(s*x) = s^degree * f(x).
struct HomogeneousPoly {
    unsigned num_vars = 0;
    unsigned degree = 0;
    std::vector<Elem> coeffs;  // indexed by homogeneous_monomials(num_vars, degree)
};

/// Polynomial of total degree <= degree_bound in num_vars variables.
struct BoundedPoly {
    unsigned num_vars = 0;
    unsigned degree_bound = 0;
    std::vector<Elem> coeffs;  // indexed by bounded_monomials(num_vars, degree_bound)
};

/// Univariate polynomial with an explicit degree bound: coeffs holds
/// exactly degree_bound()+1 entries, low order first, high entries possibly
/// zero. Its "value at infinity" is the coefficient of X^degree_bound(),
/// the extended Reed-Solomon convention.
struct UniPoly {
    std::vector<Elem> coeffs;

    unsigned degree_bound() const { return static_cast<unsigned>(coeffs.size()) - 1; }
    Elem at_infinity() const { return coeffs.back(); }

    friend bool operator==(const UniPoly&, const UniPoly&) = default;
};

/// Evaluation with the convention 0^0 == 1, so X0^d is 1 at (1,0,...,0).
/// The point is a raw coordinate vector; it need not be normalized.
Elem eval_hom(const Field& f, const HomogeneousPoly& poly, std::span<const Elem> point);

Elem eval_bounded(const Field& f, const BoundedPoly& poly, std::span<const Elem> point);

/// Horner evaluation; at infinity returns the X^degree_bound coefficient.
Elem eval_uni(const Field& f, const UniPoly& poly, ExtElem at);

/// The univariate polynomial H(X) obtained by substituting X_j <- w_j +
/// v_j*X into the homogeneous poly and expanding. H has degree bound equal
/// to poly.degree; H(lambda) equals eval_hom at the raw vector w + lambda*v
/// for every field element lambda, and H's top coefficient equals
/// eval_hom(f, poly, v). Requires w != v.
UniPoly restrict_to_line(const Field& f, const HomogeneousPoly& poly, const ProjPoint& w,
                         const ProjPoint& v);

}  // namespace prmlcc
