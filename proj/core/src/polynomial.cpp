#include "prmlcc/polynomial.hpp"

#include <stdexcept>

namespace prmlcc {
namespace {

// Emits exponent vectors of total degree exactly `degree` in lexicographic
// descending order by assigning the first variable greedily.
void emit_homogeneous(unsigned num_vars, unsigned degree, Monomial& prefix,
                      std::vector<Monomial>& out) {
    if (prefix.size() + 1 == num_vars) {
        prefix.push_back(degree);
        out.push_back(prefix);
        prefix.pop_back();
        return;
    }
    for (unsigned e = degree + 1; e-- > 0;) {
        prefix.push_back(e);
        emit_homogeneous(num_vars, degree - e, prefix, out);
        prefix.pop_back();
    }
}

}  // namespace

std::vector<Monomial> homogeneous_monomials(unsigned num_vars, unsigned degree) {
    if (num_vars == 0) throw std::invalid_argument("monomials: need at least one variable");
    std::vector<Monomial> out;
    Monomial prefix;
    prefix.reserve(num_vars);
    emit_homogeneous(num_vars, degree, prefix, out);
    return out;
}

std::vector<Monomial> bounded_monomials(unsigned num_vars, unsigned degree) {
    std::vector<Monomial> out;
    for (unsigned t = 0; t <= degree; ++t) {
        auto level = homogeneous_monomials(num_vars, t);
        out.insert(out.end(), level.begin(), level.end());
    }
    return out;
}

namespace {

Elem eval_terms(const Field& f, const std::vector<Monomial>& monos, std::span<const Elem> coeffs,
                std::span<const Elem> point) {
    Elem acc = 0;
    for (std::size_t i = 0; i < monos.size(); ++i) {
        if (coeffs[i] == 0) continue;
        Elem term = coeffs[i];
        for (std::size_t j = 0; j < point.size(); ++j) {
            unsigned e = monos[i][j];
            if (e != 0) term = f.mul(term, f.pow(point[j], e));
        }
        acc = f.add(acc, term);
    }
    return acc;
}

}  // namespace

Elem eval_hom(const Field& f, const HomogeneousPoly& poly, std::span<const Elem> point) {
    if (point.size() != poly.num_vars) throw std::invalid_argument("eval_hom: dimension mismatch");
    auto monos = homogeneous_monomials(poly.num_vars, poly.degree);
    if (monos.size() != poly.coeffs.size()) throw std::invalid_argument("eval_hom: bad coefficient count");
    return eval_terms(f, monos, poly.coeffs, point);
}

Elem eval_bounded(const Field& f, const BoundedPoly& poly, std::span<const Elem> point) {
    if (point.size() != poly.num_vars) throw std::invalid_argument("eval_bounded: dimension mismatch");
    auto monos = bounded_monomials(poly.num_vars, poly.degree_bound);
    if (monos.size() != poly.coeffs.size())
        throw std::invalid_argument("eval_bounded: bad coefficient count");
    return eval_terms(f, monos, poly.coeffs, point);
}

Elem eval_uni(const Field& f, const UniPoly& poly, ExtElem at) {
    if (at.is_inf()) return poly.at_infinity();
    Elem acc = 0;
    for (std::size_t i = poly.coeffs.size(); i-- > 0;) acc = f.add(f.mul(acc, at.value), poly.coeffs[i]);
    return acc;
}

UniPoly restrict_to_line(const Field& f, const HomogeneousPoly& poly, const ProjPoint& w,
                         const ProjPoint& v) {
    if (w.coords.size() != poly.num_vars || v.coords.size() != poly.num_vars)
        throw std::invalid_argument("restrict_to_line: dimension mismatch");
    if (w == v) throw std::invalid_argument("restrict_to_line: w == v");

    const unsigned d = poly.degree;
    auto monos = homogeneous_monomials(poly.num_vars, d);
    if (monos.size() != poly.coeffs.size())
        throw std::invalid_argument("restrict_to_line: bad coefficient count");

    // Substitute X_j <- w_j + v_j*X monomial by monomial; each term expands
    // to a univariate polynomial of degree exactly d (the total degree), so
    // the accumulator never grows past d+1 coefficients.
    std::vector<Elem> acc(d + 1, 0);
    std::vector<Elem> term, next;
    term.reserve(d + 1);
    next.reserve(d + 1);
    for (std::size_t i = 0; i < monos.size(); ++i) {
        if (poly.coeffs[i] == 0) continue;
        term.assign(1, poly.coeffs[i]);
        for (unsigned j = 0; j < poly.num_vars; ++j) {
            const Elem a = w.coords[j], b = v.coords[j];
            for (unsigned rep = 0; rep < monos[i][j]; ++rep) {
                // term *= (a + b*X)
                next.assign(term.size() + 1, 0);
                for (std::size_t t = 0; t < term.size(); ++t) {
                    next[t] = f.add(next[t], f.mul(term[t], a));
                    next[t + 1] = f.add(next[t + 1], f.mul(term[t], b));
                }
                term.swap(next);
            }
        }
        for (std::size_t t = 0; t < term.size(); ++t) acc[t] = f.add(acc[t], term[t]);
    }
    return UniPoly{std::move(acc)};
}

}  // namespace prmlcc
