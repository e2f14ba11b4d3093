#include "doctest.h"
#include "prmlcc/projective.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

using namespace prmlcc;

namespace {
ProjPoint pt(std::initializer_list<Elem> coords) { return ProjPoint{std::vector<Elem>(coords)}; }
}  // namespace

TEST_CASE("normalize examples") {
    Field f3(3);
    auto [p1, d1] = normalize(f3, std::vector<Elem>{0, 2, 1});
    CHECK(p1 == pt({0, 1, 2}));
    CHECK(d1 == 2);

    auto [p2, d2] = normalize(f3, std::vector<Elem>{1, 0, 2});
    CHECK(p2 == pt({1, 0, 2}));
    CHECK(d2 == 1);

    CHECK_THROWS_AS(normalize(f3, std::vector<Elem>{0, 0, 0}), std::invalid_argument);
}

TEST_CASE("point enumeration order and size") {
    Field f3(3);
    auto pts = enumerate_points(f3, 1);
    REQUIRE(pts.size() == 4);
    CHECK(pts[0] == pt({1, 0}));
    CHECK(pts[1] == pt({1, 1}));
    CHECK(pts[2] == pt({1, 2}));
    CHECK(pts[3] == pt({0, 1}));

    Field f2(2);
    auto pts2 = enumerate_points(f2, 2);
    REQUIRE(pts2.size() == 7);
    CHECK(pts2.front() == pt({1, 0, 0}));
    CHECK(pts2.back() == pt({0, 0, 1}));

    CHECK(projective_size(f3, 2) == 13);
    CHECK_THROWS_AS(projective_size(Field(13), 8, 1000), std::invalid_argument);
}

TEST_CASE("enumeration has no duplicates and indexing is its inverse") {
    for (auto [p, k, m] : {std::tuple{2u, 1u, 2u}, {3u, 1u, 2u}, {2u, 2u, 2u}, {5u, 1u, 3u}}) {
        Field f(p, k);
        auto pts = enumerate_points(f, m);
        CHECK(pts.size() == projective_size(f, m));
        std::set<std::vector<Elem>> seen;
        for (std::size_t i = 0; i < pts.size(); ++i) {
            CHECK(is_normalized(pts[i].coords));
            CHECK(seen.insert(pts[i].coords).second);
            CHECK(point_index(f, pts[i]) == i);
            CHECK(point_at(f, m, i) == pts[i]);
        }
    }
}

TEST_CASE("normalization is idempotent and scaling-invariant") {
    for (auto [p, k, m] : {std::tuple{2u, 1u, 2u}, {3u, 1u, 2u}, {5u, 1u, 2u}, {2u, 2u, 1u}}) {
        Field f(p, k);
        for (const auto& point : enumerate_points(f, m)) {
            auto [same, d] = normalize(f, point.coords);
            CHECK(same == point);
            CHECK(d == 1);
            // every nonzero multiple normalizes back to the representative
            for (unsigned s = 1; s < f.q(); ++s) {
                std::vector<Elem> scaled(point.coords);
                for (auto& c : scaled) c = f.mul(c, static_cast<Elem>(s));
                CHECK(normalize(f, scaled).point == point);
            }
        }
    }
}

TEST_CASE("line examples") {
    Field f3(3);

    auto l1 = line_through(f3, pt({1, 0}), pt({0, 1}));
    REQUIRE(l1.points.size() == 4);
    CHECK(l1.points[0] == pt({1, 0}));
    CHECK(l1.points[1] == pt({1, 1}));
    CHECK(l1.points[2] == pt({1, 2}));
    CHECK(l1.points[3] == pt({0, 1}));
    CHECK(l1.scalars == std::vector<Elem>{1, 1, 1, 1});
    CHECK(l1.params[0] == ExtElem::finite(0));
    CHECK(l1.params[3] == ExtElem::infinity());

    auto l2 = line_through(f3, pt({0, 1}), pt({1, 0}));
    CHECK(l2.points[1] == pt({1, 1}));
    CHECK(l2.scalars[1] == 1);
    CHECK(l2.points[2] == pt({1, 2}));  // N((2,1)) with leading scalar 2
    CHECK(l2.scalars[2] == 2);

    CHECK_THROWS_AS(line_through(f3, pt({1, 0}), pt({1, 0})), std::invalid_argument);
}

TEST_CASE("lines contain q+1 distinct points") {
    for (auto [p, k, m] : {std::tuple{2u, 1u, 2u}, {3u, 1u, 2u}, {2u, 2u, 1u}, {5u, 1u, 2u}}) {
        Field f(p, k);
        auto pts = enumerate_points(f, m);
        for (std::size_t wi = 0; wi < pts.size(); wi += 3) {
            for (std::size_t vi = 0; vi < pts.size(); ++vi) {
                if (vi == wi) continue;
                auto line = line_through(f, pts[wi], pts[vi]);
                std::set<std::vector<Elem>> seen;
                for (const auto& lp : line.points) seen.insert(lp.coords);
                CHECK(seen.size() == f.q() + 1);
                for (Elem s : line.scalars) CHECK(s != 0);
            }
        }
    }
}

TEST_CASE("line membership is symmetric and each point lies on q lines through w") {
    Field f(3);
    const unsigned m = 2;
    auto pts = enumerate_points(f, m);

    auto on_line = [&](const ProjPoint& w, const ProjPoint& v, const ProjPoint& target) {
        auto line = line_through(f, w, v);
        return std::find(line.points.begin(), line.points.end(), target) != line.points.end();
    };

    for (const auto& w : pts) {
        for (const auto& target : pts) {
            if (target == w) continue;
            std::size_t hits = 0;
            for (const auto& v : pts) {
                if (v == w) continue;
                const bool fwd = on_line(w, v, target);
                if (v != target) CHECK(fwd == on_line(w, target, v));
                if (fwd) ++hits;
            }
            CHECK(hits == f.q());
        }
    }
}

TEST_CASE("affine enumeration is lexicographic, first coordinate most significant") {
    Field f(3);
    CHECK(affine_size(f, 2) == 9);
    CHECK(affine_at(f, 2, 0) == std::vector<Elem>{0, 0});
    CHECK(affine_at(f, 2, 1) == std::vector<Elem>{0, 1});
    CHECK(affine_at(f, 2, 3) == std::vector<Elem>{1, 0});
    CHECK(affine_at(f, 2, 8) == std::vector<Elem>{2, 2});
    for (std::size_t i = 0; i < 9; ++i) CHECK(affine_index(f, affine_at(f, 2, i)) == i);
}
