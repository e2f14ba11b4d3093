#include "prmlcc/rs_decoder.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>
#include <vector>

namespace prmlcc {
namespace {

void check_params(std::span<const EvalPair> pairs) {
    bool seen_inf = false;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        if (pairs[i].param.is_inf()) {
            if (seen_inf) throw std::invalid_argument("rs: more than one infinity pair");
            seen_inf = true;
        }
        for (std::size_t j = i + 1; j < pairs.size(); ++j)
            if (pairs[i].param == pairs[j].param)
                throw std::invalid_argument("rs: duplicate evaluation params");
    }
}

// poly helpers on low-order-first coefficient vectors

std::vector<Elem> mul_linear(const Field& f, const std::vector<Elem>& a, Elem c0, Elem c1) {
    // a * (c0 + c1*X)
    std::vector<Elem> out(a.size() + 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        out[i] = f.add(out[i], f.mul(a[i], c0));
        out[i + 1] = f.add(out[i + 1], f.mul(a[i], c1));
    }
    return out;
}

// Quotient of a / (X - root); assumes the division is exact.
std::vector<Elem> deflate(const Field& f, const std::vector<Elem>& a, Elem root) {
    std::vector<Elem> out(a.size() - 1, 0);
    Elem carry = 0;
    for (std::size_t i = a.size(); i-- > 1;) {
        carry = f.add(a[i], f.mul(carry, root));
        out[i - 1] = carry;
    }
    return out;
}

// A nonzero vector of the nullspace of the homogeneous system (rows of
// width `unknowns`), or nothing when the matrix has full column rank.
// Gauss-Jordan; the first free column is set to 1, the rest to 0.
std::optional<std::vector<Elem>> nullspace_vector(const Field& f,
                                                  std::vector<std::vector<Elem>> rows,
                                                  std::size_t unknowns) {
    std::vector<std::size_t> pivot_of_col(unknowns, SIZE_MAX);
    std::size_t rank = 0;
    for (std::size_t col = 0; col < unknowns && rank < rows.size(); ++col) {
        std::size_t sel = rows.size();
        for (std::size_t r = rank; r < rows.size(); ++r)
            if (rows[r][col] != 0) {
                sel = r;
                break;
            }
        if (sel == rows.size()) continue;
        std::swap(rows[rank], rows[sel]);
        Elem s = f.inv(rows[rank][col]);
        for (auto& x : rows[rank]) x = f.mul(x, s);
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == rank || rows[r][col] == 0) continue;
            Elem factor = rows[r][col];
            for (std::size_t c = col; c < unknowns; ++c)
                rows[r][c] = f.sub(rows[r][c], f.mul(factor, rows[rank][c]));
        }
        pivot_of_col[col] = rank;
        ++rank;
    }

    std::size_t free_col = SIZE_MAX;
    for (std::size_t col = 0; col < unknowns; ++col)
        if (pivot_of_col[col] == SIZE_MAX) {
            free_col = col;
            break;
        }
    if (free_col == SIZE_MAX) return std::nullopt;

    std::vector<Elem> x(unknowns, 0);
    x[free_col] = 1;
    for (std::size_t col = 0; col < unknowns; ++col)
        if (pivot_of_col[col] != SIZE_MAX) x[col] = f.neg(rows[pivot_of_col[col]][free_col]);
    return x;
}

// (quotient, remainder) of a / b with b != 0, coefficients low order first.
std::pair<std::vector<Elem>, std::vector<Elem>> poly_divmod(const Field& f, std::vector<Elem> a,
                                                            std::vector<Elem> b) {
    while (!b.empty() && b.back() == 0) b.pop_back();
    const std::size_t db = b.size() - 1;
    const Elem lead_inv = f.inv(b.back());
    std::vector<Elem> quot(a.size() > db ? a.size() - db : 0, 0);
    for (std::size_t i = a.size(); i-- > db;) {
        const Elem c = f.mul(a[i], lead_inv);
        if (c == 0) continue;
        quot[i - db] = c;
        for (std::size_t j = 0; j <= db; ++j) a[i - db + j] = f.sub(a[i - db + j], f.mul(c, b[j]));
    }
    a.resize(db);
    return {std::move(quot), std::move(a)};
}

}  // namespace

UniPoly interpolate(const Field& f, std::span<const EvalPair> pairs, unsigned d) {
    if (pairs.size() != static_cast<std::size_t>(d) + 1)
        throw std::invalid_argument("interpolate: need exactly d+1 pairs");
    check_params(pairs);

    std::vector<Elem> coeffs(d + 1, 0);
    std::vector<std::pair<Elem, Elem>> finite;
    finite.reserve(pairs.size());
    bool has_inf = false;
    Elem top = 0;
    for (const auto& pr : pairs) {
        if (pr.param.is_inf()) {
            has_inf = true;
            top = pr.value;
        } else {
            finite.emplace_back(pr.param.value, pr.value);
        }
    }

    if (has_inf) {
        // peel off top*X^d, then fit the remaining degree <= d-1 part
        coeffs[d] = top;
        for (auto& [lam, val] : finite) val = f.sub(val, f.mul(top, f.pow(lam, d)));
    }
    if (finite.empty()) return UniPoly{std::move(coeffs)};

    // Lagrange through the finite pairs: master = prod (X - lam_j), each
    // basis polynomial is master deflated by its own root.
    std::vector<Elem> master{1};
    for (const auto& [lam, val] : finite) master = mul_linear(f, master, f.neg(lam), 1);

    for (const auto& [lam, val] : finite) {
        if (val == 0) continue;
        std::vector<Elem> basis = deflate(f, master, lam);
        Elem denom = 1;
        for (const auto& [other, v2] : finite)
            if (other != lam) denom = f.mul(denom, f.sub(lam, other));
        Elem scale = f.mul(val, f.inv(denom));
        for (std::size_t t = 0; t < basis.size(); ++t)
            coeffs[t] = f.add(coeffs[t], f.mul(scale, basis[t]));
    }
    return UniPoly{std::move(coeffs)};
}

std::optional<UniPoly> decode(const Field& f, std::span<const EvalPair> pairs, unsigned d) {
    const std::size_t n = pairs.size();
    if (n < static_cast<std::size_t>(d) + 1)
        throw std::invalid_argument("decode: need at least d+1 pairs");
    check_params(pairs);

    // Berlekamp-Welch in homogeneous form: the locator E(x, z) has degree e
    // with coefficient vector E_0..E_e, the numerator Q(x, z) degree e+d.
    // Evaluation points are (lambda : 1) and infinity = (1 : 0), so an
    // error at infinity is located by E_e = 0; forcing E monic would make
    // that error uncorrectable.
    const std::size_t e_max = unique_decoding_radius(n, d);
    for (std::size_t e = 0; e <= e_max; ++e) {
        const std::size_t ne = e + 1, nq = e + d + 1;
        const std::size_t unknowns = ne + nq;  // E coefficients, then Q
        std::vector<std::vector<Elem>> rows;
        rows.reserve(n);
        for (const auto& pr : pairs) {
            std::vector<Elem> row(unknowns, 0);
            if (pr.param.is_inf()) {
                // Q(1,0) = y * E(1,0): top coefficients on both sides
                row[ne - 1] = f.neg(pr.value);
                row[unknowns - 1] = 1;
            } else {
                const Elem lam = pr.param.value;
                Elem power = 1;
                for (std::size_t i = 0; i < ne; ++i) {
                    row[i] = f.neg(f.mul(pr.value, power));  // -y * lam^i
                    power = f.mul(power, lam);
                }
                power = 1;
                for (std::size_t i = 0; i < nq; ++i) {
                    row[ne + i] = power;
                    power = f.mul(power, lam);
                }
            }
            rows.push_back(std::move(row));
        }

        const auto sol = nullspace_vector(f, std::move(rows), unknowns);
        if (!sol) continue;

        std::vector<Elem> locator(sol->begin(), sol->begin() + ne);
        std::vector<Elem> numerator(sol->begin() + ne, sol->end());
        while (!locator.empty() && locator.back() == 0) locator.pop_back();
        if (locator.empty()) continue;  // E == 0 never yields a codeword

        auto [quot, rem] = poly_divmod(f, numerator, locator);
        if (std::any_of(rem.begin(), rem.end(), [](Elem c) { return c != 0; })) continue;
        if (quot.size() > d + 1 &&
            std::any_of(quot.begin() + d + 1, quot.end(), [](Elem c) { return c != 0; }))
            continue;  // quotient degree exceeds d: spurious solution
        quot.resize(d + 1, 0);

        UniPoly candidate{std::move(quot)};
        std::size_t agree = 0;
        for (const auto& pr : pairs)
            if (eval_uni(f, candidate, pr.param) == pr.value) ++agree;
        if (agree + e >= n) return candidate;
    }
    return std::nullopt;
}

}  // namespace prmlcc
