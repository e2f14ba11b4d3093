#include "doctest.h"
#include "prmlcc/polynomial.hpp"
#include "prmlcc/projective.hpp"
#include "prmlcc/rng.hpp"

#include <numeric>

using namespace prmlcc;

namespace {

// independent binomial(n, k) for the monomial-count cross-check
std::size_t binom(unsigned n, unsigned k) {
    if (k > n) return 0;
    std::size_t r = 1;
    for (unsigned i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

HomogeneousPoly random_hom(const Field& f, unsigned num_vars, unsigned degree, Rng& rng) {
    HomogeneousPoly poly{num_vars, degree, {}};
    poly.coeffs.resize(homogeneous_monomials(num_vars, degree).size());
    for (auto& c : poly.coeffs) c = rng.element(f);
    return poly;
}

}  // namespace

TEST_CASE("monomial lists: order and counts") {
    auto h = homogeneous_monomials(2, 2);
    REQUIRE(h.size() == 3);
    CHECK(h[0] == Monomial{2, 0});
    CHECK(h[1] == Monomial{1, 1});
    CHECK(h[2] == Monomial{0, 2});

    auto b = bounded_monomials(2, 2);
    REQUIRE(b.size() == 6);
    CHECK(b[0] == Monomial{0, 0});
    CHECK(b[1] == Monomial{1, 0});
    CHECK(b[2] == Monomial{0, 1});
    CHECK(b[3] == Monomial{2, 0});

    for (unsigned vars = 1; vars <= 4; ++vars)
        for (unsigned d = 0; d <= 5; ++d) {
            CHECK(homogeneous_monomials(vars, d).size() == binom(vars - 1 + d, d));
            CHECK(bounded_monomials(vars, d).size() == binom(vars + d, d));
            for (const auto& mono : homogeneous_monomials(vars, d))
                CHECK(std::accumulate(mono.begin(), mono.end(), 0u) == d);
        }
}

TEST_CASE("eval_hom examples") {
    Field f3(3);
    // F = X0*X1, coefficients in the order (2,0), (1,1), (0,2)
    HomogeneousPoly f{2, 2, {0, 1, 0}};
    CHECK(eval_hom(f3, f, std::vector<Elem>{1, 2}) == 2);
    // scaling law with lambda = 2, d = 2
    CHECK(eval_hom(f3, f, std::vector<Elem>{2, 2}) ==
          f3.mul(f3.pow(2, 2), eval_hom(f3, f, std::vector<Elem>{1, 1})));
    CHECK(eval_hom(f3, f, std::vector<Elem>{0, 0}) == 0);
}

TEST_CASE("homogeneity: f(s*x) == s^d f(x) exhaustively on small fields") {
    Rng rng(11);
    for (auto [p, k, m] : {std::tuple{2u, 1u, 2u}, {3u, 1u, 2u}, {5u, 1u, 2u}, {2u, 2u, 1u}}) {
        Field f(p, k);
        for (unsigned d = 1; d < f.q(); ++d) {
            auto poly = random_hom(f, m + 1, d, rng);
            for (const auto& point : enumerate_points(f, m)) {
                const Elem base = eval_hom(f, poly, point.coords);
                for (unsigned s = 1; s < f.q(); ++s) {
                    std::vector<Elem> scaled(point.coords);
                    for (auto& c : scaled) c = f.mul(c, static_cast<Elem>(s));
                    CHECK(eval_hom(f, poly, scaled) ==
                          f.mul(f.pow(static_cast<Elem>(s), d), base));
                }
            }
        }
    }
}

TEST_CASE("normalization compatibility: f(N(u)) = D(u)^{-d} f(u)") {
    Rng rng(12);
    Field f(5);
    const unsigned m = 2, d = 3;
    auto poly = random_hom(f, m + 1, d, rng);
    for (unsigned trial = 0; trial < 200; ++trial) {
        std::vector<Elem> u(m + 1);
        for (auto& c : u) c = rng.element(f);
        if (std::all_of(u.begin(), u.end(), [](Elem c) { return c == 0; })) continue;
        auto [nu, scale] = normalize(f, u);
        CHECK(eval_hom(f, poly, nu.coords) ==
              f.mul(f.inv(f.pow(scale, d)), eval_hom(f, poly, u)));
    }
}

TEST_CASE("restrict_to_line examples") {
    Field f3(3);

    // F = X0*X1; w = (1,0), v = (0,1): F(1, X) = X
    HomogeneousPoly f{2, 2, {0, 1, 0}};
    auto h = restrict_to_line(f3, f, ProjPoint{{1, 0}}, ProjPoint{{0, 1}});
    CHECK(h.coeffs == std::vector<Elem>{0, 1, 0});
    CHECK(h.at_infinity() == eval_hom(f3, f, std::vector<Elem>{0, 1}));

    // F = X0+X1 (d=1); w = (0,1), v = (1,0): H = 1 + X
    HomogeneousPoly g{2, 1, {1, 1}};
    auto h2 = restrict_to_line(f3, g, ProjPoint{{0, 1}}, ProjPoint{{1, 0}});
    CHECK(h2.coeffs == std::vector<Elem>{1, 1});
    CHECK(h2.at_infinity() == eval_hom(f3, g, std::vector<Elem>{1, 0}));

    CHECK_THROWS(restrict_to_line(f3, g, ProjPoint{{1, 0}}, ProjPoint{{1, 0}}));
}

TEST_CASE("restriction agrees with direct evaluation at every parameter") {
    // oracle: evaluate f at the raw vector w + lambda*v, no restriction involved
    Rng rng(13);
    for (auto [p, k, m, d] : {std::tuple{5u, 1u, 2u, 3u}, {3u, 1u, 2u, 2u}, {2u, 2u, 1u, 3u},
                              {5u, 1u, 1u, 4u}, {7u, 1u, 2u, 4u}}) {
        Field f(p, k);
        auto pts = enumerate_points(f, m);
        for (unsigned rep = 0; rep < 10; ++rep) {
            auto poly = random_hom(f, m + 1, d, rng);
            std::size_t wi = static_cast<std::size_t>(rng.below(pts.size()));
            std::size_t vi = static_cast<std::size_t>(rng.below(pts.size() - 1));
            if (vi >= wi) ++vi;
            const auto& w = pts[wi];
            const auto& v = pts[vi];

            auto h = restrict_to_line(f, poly, w, v);
            REQUIRE(h.coeffs.size() == d + 1);
            for (unsigned lam = 0; lam < f.q(); ++lam) {
                std::vector<Elem> raw(m + 1);
                for (unsigned i = 0; i <= m; ++i)
                    raw[i] = f.add(w.coords[i], f.mul(static_cast<Elem>(lam), v.coords[i]));
                CHECK(eval_uni(f, h, ExtElem::finite(static_cast<Elem>(lam))) ==
                      eval_hom(f, poly, raw));
            }
            CHECK(eval_uni(f, h, ExtElem::infinity()) == eval_hom(f, poly, v.coords));
        }
    }
}

TEST_CASE("eval_uni examples") {
    Field f3(3);
    UniPoly h{{1, 1}};  // 1 + X
    CHECK(eval_uni(f3, h, ExtElem::finite(2)) == 0);
    CHECK(eval_uni(f3, h, ExtElem::infinity()) == 1);

    UniPoly c{{2}};  // constant
    CHECK(eval_uni(f3, c, ExtElem::finite(0)) == 2);
    CHECK(eval_uni(f3, c, ExtElem::finite(2)) == 2);
}
