#include <doctest.h>

#include "prox/descriptive.hpp"
#include "prox/errors.hpp"
#include "support/generators.hpp"

using namespace prox;

namespace {

ProximitySpace described(std::vector<FeatureVector> phi, double tolerance = 0.0) {
    std::vector<Point> pts;
    for (std::size_t i = 0; i < phi.size(); ++i) pts.push_back({gen::pid(i), Coord{double(i), 0.0}, phi[i]});
    return ProximitySpace(std::move(pts), MetricGap{1.0}, tolerance);
}

PointSet subset(gen::Rng& rng, std::size_t n, double p = 0.5) {
    std::vector<std::size_t> v;
    for (std::size_t i = 0; i < n; ++i)
        if (gen::coin(rng, p)) v.push_back(i);
    return PointSet(std::move(v));
}

}  // namespace

TEST_CASE("descriptive nearness") {
    const ProximitySpace s = described({{1.0}, {2.0}, {1.0}});
    CHECK(descriptive_near(s, PointSet{0}, PointSet{2}));
    CHECK_FALSE(descriptive_near(s, PointSet{0}, PointSet{1}));
    CHECK_FALSE(descriptive_near(s, PointSet{}, s.all()));

    const ProximitySpace distinct = described({{0.0}, {1.0}, {2.0}, {3.0}});
    CHECK_FALSE(descriptive_near(distinct, PointSet{0, 1}, PointSet{2, 3}));
}

TEST_CASE("descriptive intersection") {
    const ProximitySpace s = described({{1.0}, {2.0}, {1.0}});  // a, b, c
    CHECK(descriptive_intersection(s, PointSet{0, 1}, PointSet{2}) == PointSet{0, 2});
    CHECK(descriptive_intersection(s, PointSet{0, 1}, PointSet{0, 1}) == PointSet{0, 1});
    CHECK(descriptive_intersection(s, PointSet{1}, PointSet{2}).empty());
}

TEST_CASE("descriptive intersection matches the membership definition") {
    // For a pair of sets: x in A∪B whose description matches one in A and one in B.
    gen::Rng rng(11);
    for (int i = 0; i < 300; ++i) {
        const auto s = gen::descriptive_space(rng, 10, 1, 4, 0.0);
        const PointSet a = subset(rng, 10), b = subset(rng, 10);
        std::vector<std::size_t> want;
        for (std::size_t x : a | b) {
            bool in_a = false, in_b = false;
            for (std::size_t y : a) in_a = in_a || s->point(x).features == s->point(y).features;
            for (std::size_t y : b) in_b = in_b || s->point(x).features == s->point(y).features;
            if (in_a && in_b) want.push_back(x);
        }
        const PointSet got = descriptive_intersection(*s, a, b);
        CHECK(got == PointSet(want));
        CHECK(got == descriptive_intersection(*s, b, a));
        CHECK(got.is_subset_of(a | b));
        CHECK(descriptive_near(*s, a, b) == !got.empty());
    }
}

TEST_CASE("descriptive closure") {
    const ProximitySpace injective = described({{0.0}, {1.0}, {2.0}});
    for (std::size_t x = 0; x < 3; ++x) CHECK(descriptive_closure(injective, PointSet{x}) == PointSet{x});

    const ProximitySpace shared = described({{5.0}, {7.0}, {5.0}});
    CHECK(descriptive_closure(shared, PointSet{0}) == PointSet{0, 2});
    CHECK(descriptive_closure(shared, PointSet{}).empty());
    CHECK(is_descriptively_closed(shared, PointSet{0, 2}));
    CHECK_FALSE(is_descriptively_closed(shared, PointSet{2}));
}

TEST_CASE("descriptive axioms hold exhaustively") {
    gen::Rng rng(12);
    for (int i = 0; i < 40; ++i) {
        const double tol = i % 2 ? 0.0 : 1.0;
        const auto s = gen::descriptive_space(rng, std::size_t(gen::uniform(rng, 1, 8)), 2, 3, tol);
        const AxiomReport r = check_descriptive_axioms(*s);
        for (const AxiomResult& a : r.axioms) {
            CHECK(a.passed);
            CHECK(a.exhaustive);
        }
        CHECK(r.axioms[2].name == "(dP.2)");
    }
}

TEST_CASE("descriptive axioms without features are a type error") {
    gen::Rng rng(13);
    CHECK_THROWS_AS(check_descriptive_axioms(*gen::metric_space(rng, 3, 3, 1.0)), TypeMismatchError);
}

TEST_CASE("descriptive balls") {
    const ProximitySpace s = described({{0.0}, {0.0}, {3.0}, {10.0}});
    CHECK(descriptive_ball(s, 0, 100.0) == s.all());
    CHECK(descriptive_ball(s, 0, 1.0) == PointSet{0, 1});  // below the least nonzero distance
    CHECK(descriptive_ball(s, 2, 3.0) == PointSet{2});     // strict inequality
    CHECK_THROWS_AS(descriptive_ball(s, 0, 0.0), InvalidInputError);

    const ProximitySpace single = described({{4.0}});
    CHECK(descriptive_ball(single, 0, 0.5) == PointSet{0});
}

TEST_CASE("descriptive open cover") {
    const ProximitySpace constant = described({{2.0}, {2.0}, {2.0}});
    const auto one = descriptive_open_cover(constant, 0.1);
    REQUIRE(one.size() == 1);
    CHECK(one.front() == constant.all());

    const ProximitySpace injective = described({{0.0}, {1.0}, {2.0}});
    const auto singles = descriptive_open_cover(injective, 0.5);
    REQUIRE(singles.size() == 3);
    for (std::size_t i = 0; i < 3; ++i) CHECK(singles[i] == PointSet{i});

    gen::Rng rng(14);
    for (int i = 0; i < 100; ++i) {
        const auto s = gen::descriptive_space(rng, 9, 2, 4, 0.0);
        PointSet all;
        for (const PointSet& b : descriptive_open_cover(*s, 0.25 + gen::uniform(rng, 0, 8) * 0.5)) all = all | b;
        CHECK(all == s->all());
    }
}

TEST_CASE("family intersection with a matching tolerance") {
    // With a tolerance, members must match one another as well as x.
    const ProximitySpace s = described({{0.0}, {1.0}, {2.0}}, 1.0);
    const PointSet family[] = {PointSet{0}, PointSet{2}};
    CHECK(descriptive_intersection(s, family).empty());  // 0 and 2 are 2 apart
    const PointSet close[] = {PointSet{0}, PointSet{1}};
    CHECK(descriptive_intersection(s, close) == PointSet{0, 1});
}
