#include <doctest.h>

#include <cmath>
#include <limits>

#include "prox/errors.hpp"
#include "prox/proximity.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace prox;

namespace {

ProximitySpace grid3(double tau) {
    std::vector<Point> pts;
    for (int y = 0; y < 3; ++y)
        for (int x = 0; x < 3; ++x)
            pts.push_back({std::to_string(x) + std::to_string(y), Coord{double(x), double(y)}, {}});
    return ProximitySpace(std::move(pts), MetricGap{tau});
}

std::vector<Coord> coords_of(const ProximitySpace& s) {
    std::vector<Coord> out;
    for (const Point& p : s.points()) out.push_back(*p.coords);
    return out;
}

}  // namespace

TEST_CASE("hausdorff gap") {
    const Coord a[] = {{0, 0}};
    const Coord b[] = {{3, 4}};
    CHECK(hausdorff_gap(a, b).value() == 5.0);

    const Coord c[] = {{1, 1}};
    const Coord d[] = {{1, 1}, {9, 9}};
    CHECK(hausdorff_gap(c, d).value() == 0.0);

    CHECK(hausdorff_gap(std::span<const Coord>{}, b).is_infinite());
    CHECK(hausdorff_gap(a, std::span<const Coord>{}).is_infinite());
}

TEST_CASE("hausdorff gap is symmetric and zero on overlap") {
    gen::Rng rng(1);
    for (int i = 0; i < 200; ++i) {
        const auto s = gen::metric_space(rng, 8, 9, 1.0);
        const PointSet a = PointSet{std::size_t(gen::uniform(rng, 0, 7)), std::size_t(gen::uniform(rng, 0, 7))};
        const PointSet b = PointSet{std::size_t(gen::uniform(rng, 0, 7))};
        CHECK(hausdorff_gap(*s, a, b) == hausdorff_gap(*s, b, a));
        if (a.intersects(b)) CHECK(hausdorff_gap(*s, a, b).value() == 0.0);
    }
}

TEST_CASE("metric nearness") {
    const ProximitySpace s = grid3(1.0);
    const PointSet a{s.index_of("00")};
    CHECK(near(s, a, PointSet{s.index_of("01")}));
    CHECK_FALSE(near(s, a, PointSet{s.index_of("11")}));  // sqrt 2 > 1
    CHECK_FALSE(near(s, PointSet{}, s.all()));
    CHECK_FALSE(near(s, s.all(), PointSet{}));
    CHECK(near(s, PointSet{0, 1}, PointSet{1, 8}));
}

TEST_CASE("metric nearness agrees with an all-pairs distance oracle") {
    gen::Rng rng(2);
    for (int i = 0; i < 300; ++i) {
        const std::size_t n = std::size_t(gen::uniform(rng, 1, 12));
        const double tau = gen::uniform(rng, 0, 4) * 0.75;
        const auto s = gen::metric_space(rng, n, 8, tau);
        const auto pts = coords_of(*s);
        std::vector<std::size_t> av, bv;
        std::vector<Coord> ac, bc;
        for (std::size_t x = 0; x < n; ++x) {
            if (gen::coin(rng)) av.push_back(x), ac.push_back(pts[x]);
            if (gen::coin(rng)) bv.push_back(x), bc.push_back(pts[x]);
        }
        const bool want = !ac.empty() && !bc.empty() && oracle::min_distance(ac, bc) <= tau;
        CHECK(near(*s, PointSet(av), PointSet(bv)) == want);
    }
}

TEST_CASE("closure") {
    const ProximitySpace s = grid3(1.0);
    const PointSet cl = closure(s, PointSet{s.index_of("11")});
    const std::vector<std::string> want{"10", "01", "11", "21", "12"};
    CHECK(cl == s.resolve(want));
    CHECK(closure(s, PointSet{}).empty());

    const ProximitySpace exact = grid3(0.0);
    for (std::size_t x = 0; x < exact.size(); ++x) CHECK(closure(exact, PointSet{x}) == PointSet{x});
}

TEST_CASE("closure matches the coordinate oracle") {
    gen::Rng rng(3);
    for (int i = 0; i < 200; ++i) {
        const double tau = gen::uniform(rng, 0, 3) * 1.0;
        const auto s = gen::metric_space(rng, 10, 6, tau);
        std::vector<std::size_t> a;
        for (std::size_t x = 0; x < s->size(); ++x)
            if (gen::coin(rng, 0.3)) a.push_back(x);
        CHECK(closure(*s, PointSet(a)) == PointSet(oracle::metric_closure(coords_of(*s), a, tau)));
    }
}

TEST_CASE("closure is idempotent when nearness is transitive") {
    gen::Rng rng(4);
    for (int i = 0; i < 100; ++i) {
        const auto s = gen::metric_space(rng, 10, 5, 0.0);
        const PointSet a{std::size_t(gen::uniform(rng, 0, 9)), std::size_t(gen::uniform(rng, 0, 9))};
        CHECK(closure(*s, closure(*s, a)) == closure(*s, a));
    }
}

TEST_CASE("closure is not idempotent for a positive gap") {
    // The gap rule is not transitive: each pass reaches one step further.
    const ProximitySpace s = grid3(1.0);
    const PointSet a{s.index_of("00")};
    CHECK(closure(s, closure(s, a)) != closure(s, a));
}

TEST_CASE("metric spaces satisfy the axioms exhaustively") {
    gen::Rng rng(5);
    for (int i = 0; i < 30; ++i) {
        const auto s = gen::metric_space(rng, std::size_t(gen::uniform(rng, 1, 8)), 5, gen::uniform(rng, 0, 3) * 0.8);
        const AxiomReport r = check_cech_axioms(*s);
        REQUIRE(r.axioms.size() == 4);
        for (const AxiomResult& a : r.axioms) {
            CHECK(a.passed);
            CHECK(a.exhaustive);
        }
        CHECK(r.axioms[0].name == "(P.0)");
        CHECK(r.axioms[3].name == "(P.3)");
        CHECK(r.point_symmetry.passed);
    }
}

TEST_CASE("an asymmetric relation fails the symmetry axiom with a witness") {
    const ProximitySpace s({{"a", {}, {}}, {"b", {}, {}}, {"c", {}, {}}}, ExplicitRelation{{{"a", "b"}}});
    const AxiomReport r = check_cech_axioms(s);
    CHECK(r.axioms[0].passed);
    CHECK_FALSE(r.axioms[1].passed);
    REQUIRE(r.axioms[1].witness);
    CHECK_FALSE(r.axioms[1].witness->a.empty());
    CHECK_FALSE(r.point_symmetry.passed);
    CHECK_FALSE(r.passed());
}

TEST_CASE("large spaces are sampled within the budget") {
    gen::Rng rng(6);
    const auto s = gen::metric_space(rng, 20, 10, 2.0);
    const AxiomReport r = check_cech_axioms(*s, 500, 7);
    for (const AxiomResult& a : r.axioms) {
        CHECK(a.passed);
        CHECK_FALSE(a.exhaustive);
        CHECK(a.cases == 500);
    }
    // Same seed, same cases.
    const AxiomReport again = check_cech_axioms(*s, 500, 7);
    CHECK(again.axioms[3].cases == r.axioms[3].cases);
}

TEST_CASE("space construction errors") {
    CHECK_THROWS_AS(ProximitySpace({}, MetricGap{1.0}), InvalidInputError);
    CHECK_THROWS_AS(ProximitySpace({{"a", {}, {}}}, MetricGap{1.0}), MissingCoordinatesError);
    CHECK_THROWS_AS(ProximitySpace({{"a", Coord{}, {}}, {"a", Coord{}, {}}}, MetricGap{1.0}), InvalidInputError);
    CHECK_THROWS_AS(ProximitySpace({{"a", Coord{}, {}}}, MetricGap{-1.0}), InvalidInputError);
    CHECK_THROWS_AS(ProximitySpace({{"a", {}, {}}}, ExplicitRelation{{{"a", "z"}}}), ForeignPointError);
    CHECK_THROWS_AS(ProximitySpace({{"a", Coord{std::numeric_limits<double>::infinity(), 0}, {}}}, MetricGap{1.0}),
                    InvalidInputError);

    const ProximitySpace s = grid3(1.0);
    CHECK_THROWS_AS(s.index_of("zz"), ForeignPointError);
    CHECK_THROWS_AS(near(s, PointSet{99}, PointSet{0}), ForeignPointError);
    CHECK_THROWS_AS(s.probe(), TypeMismatchError);
}

TEST_CASE("subspace keeps order and restricts the relation") {
    const ProximitySpace s({{"a", {}, {}}, {"b", {}, {}}, {"c", {}, {}}},
                           ExplicitRelation{{{"a", "b"}, {"b", "c"}, {"c", "a"}}});
    const ProximitySpace sub = s.subspace(PointSet{0, 2});
    REQUIRE(sub.size() == 2);
    CHECK(sub.point(0).id == "a");
    CHECK(sub.point(1).id == "c");
    CHECK(sub.related(1, 0));
    CHECK_FALSE(sub.related(0, 1));
}
