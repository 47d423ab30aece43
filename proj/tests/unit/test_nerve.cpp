#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "prox/errors.hpp"
#include "prox/nerve.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace prox;

namespace {

SpacePtr plane(const std::vector<Pixel>& px, double tau = 1.0) {
    std::vector<Point> pts;
    for (std::size_t i = 0; i < px.size(); ++i) pts.push_back({gen::pid(i), Coord{double(px[i].x), double(px[i].y)}, {}});
    return std::make_shared<const ProximitySpace>(std::move(pts), MetricGap{tau});
}

SpacePtr described(const std::vector<double>& phi) {
    std::vector<Point> pts;
    for (std::size_t i = 0; i < phi.size(); ++i) pts.push_back({gen::pid(i), Coord{double(i), 0.0}, FeatureVector{phi[i]}});
    return std::make_shared<const ProximitySpace>(std::move(pts), MetricGap{1.0});
}

Graph random_graph(gen::Rng& rng, std::size_t n, double p) {
    Graph g{n, {}};
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b)
            if (gen::coin(rng, p)) g.edges.emplace_back(a, b);
    return g;
}

PixelSet rect(Window w, int x0, int y0, int x1, int y1) { return Rect{x0, y0, x1, y1}.pixels(w); }

}  // namespace

TEST_CASE("covers must be nonempty and cover the space") {
    const auto s = plane({{0, 0}, {1, 0}, {2, 0}});
    CHECK_THROWS_AS(Cover(s, {}), EmptyCoverError);
    CHECK_THROWS_AS(Cover(s, {PointSet{0, 1}}), InvalidInputError);
    CHECK_THROWS_AS(PixelCover({}), EmptyCoverError);
    CHECK_THROWS_AS(PixelCover({PixelSet(Window{2, 2}), PixelSet(Window{3, 2})}), InvalidInputError);
}

TEST_CASE("nerve of elements sharing a point") {
    const auto s = plane({{0, 0}, {1, 0}, {2, 0}});
    const NerveComplex n = build_nerve(Cover(s, {PointSet{0, 1}, PointSet{1, 2}}), Mode::Plain);
    CHECK(n.simplices(0).size() == 2);
    CHECK(n.simplices(1) == std::vector<Simplex>{{0, 1}});
    CHECK(n.simplices(2).empty());
    CHECK(betti(n) == Betti{1, 0});
}

TEST_CASE("nerve of a hollow triangle") {
    const auto s = plane({{0, 0}, {1, 0}, {2, 0}});
    const Cover c(s, {PointSet{0, 1}, PointSet{1, 2}, PointSet{2, 0}});
    const NerveComplex n = build_nerve(c, Mode::Plain);
    CHECK(n.simplices(1).size() == 3);
    CHECK(n.simplices(2).empty());
    CHECK(betti(n) == Betti{1, 1});

    const Cover filled(s, {PointSet{0, 1}, PointSet{1, 2}, PointSet{2, 0, 1}});
    CHECK(betti(build_nerve(filled, Mode::Plain)) == Betti{1, 0});
}

TEST_CASE("descriptive nerve joins disjoint elements with matching descriptions") {
    const auto s = described({1.0, 1.0, 2.0});
    const Cover c(s, {PointSet{0}, PointSet{1}, PointSet{2}});
    CHECK(build_nerve(c, Mode::Plain).simplices(1).empty());
    CHECK(build_nerve(c, Mode::Descriptive).simplices(1) == std::vector<Simplex>{{0, 1}});
    CHECK_THROWS_AS(build_nerve(Cover(plane({{0, 0}}), {PointSet{0}}), Mode::Descriptive), TypeMismatchError);
}

TEST_CASE("the plain nerve lies inside the descriptive nerve") {
    gen::Rng rng(51);
    for (int i = 0; i < 200; ++i) {
        const auto s = gen::descriptive_space(rng, 8, 1, 3, 0.0);
        std::vector<PointSet> elements;
        PointSet all;
        for (int e = gen::uniform(rng, 1, 5); e > 0; --e) {
            std::vector<std::size_t> v;
            for (std::size_t x = 0; x < 8; ++x)
                if (gen::coin(rng, 0.3)) v.push_back(x);
            elements.emplace_back(std::move(v));
            all = all | elements.back();
        }
        elements.push_back(s->all() - all);
        if (elements.back().empty()) elements.pop_back();
        const Cover c(s, elements);
        const NerveComplex plain = build_nerve(c, Mode::Plain), desc = build_nerve(c, Mode::Descriptive);
        for (const Simplex& x : plain.simplices()) CHECK(desc.contains(x));
        CHECK(plain.downward_closed());
        CHECK(desc.downward_closed());
    }
}

TEST_CASE("betti numbers of small complexes") {
    auto with_vertices = [](std::size_t n) {
        SimplicialComplex c(n);
        for (std::size_t v = 0; v < n; ++v) c.add({v});
        return c;
    };
    SimplicialComplex boundary = with_vertices(3);
    for (Simplex e : {Simplex{0, 1}, Simplex{1, 2}, Simplex{0, 2}}) boundary.add(e);
    CHECK(betti(boundary) == Betti{1, 1});
    SimplicialComplex filled = boundary;
    filled.add({0, 1, 2});
    CHECK(betti(filled) == Betti{1, 0});

    SimplicialComplex forest = with_vertices(5);
    forest.add({0, 1});
    forest.add({1, 2});
    forest.add({3, 4});
    CHECK(betti(forest) == Betti{2, 0});

    CHECK(betti(with_vertices(4)) == Betti{4, 0});
    CHECK(betti(SimplicialComplex(4)) == Betti{0, 0});

    SimplicialComplex open = with_vertices(3);
    open.add({0, 1, 2});
    CHECK_FALSE(open.downward_closed());
    CHECK_THROWS_AS(betti(open), NonClosedComplexError);
    CHECK_THROWS_AS(open.add({0, 1, 2, 3}), InvalidInputError);
}

TEST_CASE("gf2 rank") {
    CHECK(gf2_rank({}) == 0);
    CHECK(gf2_rank({{0b011}, {0b110}, {0b101}}) == 2);
    CHECK(gf2_rank({{0b001}, {0b010}, {0b100}}) == 3);
    CHECK(gf2_rank({{0, 1}, {0, 1}}) == 1);
}

TEST_CASE("graph betti numbers match the subset-counting oracle") {
    gen::Rng rng(52);
    for (int i = 0; i < 300; ++i) {
        const Graph g = random_graph(rng, std::size_t(gen::uniform(rng, 1, 8)), 0.1 * gen::uniform(rng, 1, 6));
        const oracle::GraphBetti want = oracle::graph_betti(g.vertex_count, g.edges);
        const Betti got = betti(complex_of(g));
        CHECK(got.b0 == want.b0);
        CHECK(got.b1 == want.b1);
    }
}

TEST_CASE("free group rank") {
    CHECK(free_group_presentation(Graph{4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}}).rank == 1);
    CHECK(free_group_presentation(Graph{5, {{0, 1}, {1, 2}, {2, 0}, {0, 3}, {3, 4}, {4, 0}}}).rank == 2);
    CHECK(free_group_presentation(Graph{4, {{0, 1}, {0, 2}, {0, 3}}}).rank == 0);
    CHECK(free_group_presentation(Graph{1, {{0, 0}}}).rank == 1);

    const FreeGroupPresentation sq = free_group_presentation(Graph{4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}});
    REQUIRE(sq.generators.size() == 1);
    auto gen0 = sq.generators.front();
    std::sort(gen0.begin(), gen0.end());
    CHECK(gen0 == std::vector<std::size_t>{0, 1, 2, 3});
}

TEST_CASE("free group rank is the cycle rank whatever the edge order") {
    gen::Rng rng(53);
    for (int i = 0; i < 200; ++i) {
        const Graph g = random_graph(rng, std::size_t(gen::uniform(rng, 1, 9)), 0.35);
        const Betti b = betti(complex_of(g));
        const FreeGroupPresentation p = free_group_presentation(g);
        CHECK(p.rank == g.edges.size() + b.b0 - g.vertex_count);
        CHECK(p.rank == b.b1);
        CHECK(p.generators.size() == p.rank);

        std::vector<std::size_t> order(g.edges.size());
        for (std::size_t k = 0; k < order.size(); ++k) order[k] = k;
        std::shuffle(order.begin(), order.end(), rng);
        CHECK(free_group_presentation(g, order).rank == p.rank);
    }
}

TEST_CASE("good covers of point sets") {
    // A horizontal strip of unit-spaced points; elements are intervals.
    std::vector<Pixel> px;
    for (int x = 0; x < 8; ++x) px.push_back({x, 0});
    const auto s = plane(px);
    const Cover intervals(s, {PointSet{0, 1, 2, 3}, PointSet{3, 4, 5}, PointSet{5, 6, 7}});
    const GoodCoverReport r = check_good_cover(intervals, GoodCoverMode::Topological);
    CHECK(r.good);
    CHECK(r.intersections.size() == 5);  // three elements, two pairwise overlaps
    for (const IntersectionCheck& c : r.intersections) CHECK(c.contractible);

    // Two elements meeting at both ends: the overlap is two separate points.
    const Cover split(s, {PointSet{0, 1, 2, 3, 4, 5, 6, 7}, PointSet{0, 7}});
    const GoodCoverReport w = check_good_cover(split, GoodCoverMode::Topological, GoodCoverOptions{2});
    CHECK_FALSE(w.good);
    REQUIRE(w.intersections.size() == 1);
    CHECK(w.intersections.front().size == 2);
    CHECK_FALSE(w.intersections.front().contractible);
}

TEST_CASE("degenerate good covers are descriptively good") {
    const auto flat = described({3.0, 3.0, 3.0, 3.0});
    const Cover c(flat, {PointSet{0, 1}, PointSet{1, 2, 3}});
    CHECK(check_good_cover(c, GoodCoverMode::Degenerate).good);
    CHECK(check_good_cover(c, GoodCoverMode::Descriptive).good);

    gen::Rng rng(54);
    int degenerate_good = 0;
    for (int i = 0; i < 150; ++i) {
        const auto s = gen::descriptive_space(rng, 6, 1, 2, 0.0);
        std::vector<PointSet> elements;
        for (int e = 0; e < 3; ++e) {
            std::vector<std::size_t> v;
            for (std::size_t x = 0; x < 6; ++x)
                if (gen::coin(rng, 0.5)) v.push_back(x);
            if (!v.empty()) elements.emplace_back(std::move(v));
        }
        PointSet all;
        for (const PointSet& e : elements) all = all | e;
        if (all != s->all()) elements.push_back(s->all() - all);
        const Cover cover(s, elements);
        if (check_good_cover(cover, GoodCoverMode::Degenerate).good) {
            ++degenerate_good;
            CHECK(check_good_cover(cover, GoodCoverMode::Descriptive).good);
        }
    }
    CHECK(degenerate_good > 0);
}

TEST_CASE("cycle systems as covers") {
    gen::Rng rng(55);
    for (int i = 0; i < 20; ++i) {
        const gen::SystemInstance inst = gen::petal_system(rng);
        const GoodCoverReport r = check_cycle_system_cover(inst.space, inst.system, GoodCoverMode::Topological);
        CHECK(r.good);
        for (const IntersectionCheck& c : r.intersections) {
            CHECK(c.members.size() >= 2);
            CHECK(c.size == 1);
        }
    }
}

TEST_CASE("good pixel covers") {
    const Window w{12, 12};
    const PixelCover two({rect(w, 0, 0, 6, 6), rect(w, 4, 4, 10, 10)});
    CHECK(check_good_cover(two).good);

    // A U shape over a bar: the overlap is the two arms.
    const PixelCover u({rect(w, 0, 0, 9, 2), rect(w, 0, 0, 2, 9) | rect(w, 7, 0, 9, 9) | rect(w, 0, 7, 9, 9)});
    const GoodCoverReport r = check_good_cover(u, GoodCoverOptions{2});
    CHECK_FALSE(r.good);
    REQUIRE(r.intersections.size() == 1);
    CHECK(r.intersections.front().certificate == "grid surrogate: b0=2, b1=0");
}

TEST_CASE("nerve against union") {
    const Window w{16, 16};
    const NerveUnionResult overlap = nerve_vs_union_check(PixelCover({rect(w, 1, 1, 6, 6), rect(w, 4, 4, 9, 9)}));
    CHECK(overlap.equal);
    CHECK(overlap.nerve == Betti{1, 0});

    const PixelCover ring({rect(w, 1, 1, 10, 3), rect(w, 8, 1, 10, 10), rect(w, 1, 8, 10, 10), rect(w, 1, 1, 3, 10)});
    const NerveUnionResult r = nerve_vs_union_check(ring);
    CHECK(r.equal);
    CHECK(r.nerve == Betti{1, 1});
    CHECK(r.united == Betti{1, 1});

    const NerveUnionResult apart =
        nerve_vs_union_check(PixelCover({rect(w, 0, 0, 2, 2), rect(w, 5, 5, 7, 7), rect(w, 10, 0, 12, 3)}));
    CHECK(apart.equal);
    CHECK(apart.nerve == Betti{3, 0});
    CHECK(apart.touching_pairs.empty());

    const NerveUnionResult touching = nerve_vs_union_check(PixelCover({rect(w, 0, 0, 2, 2), rect(w, 3, 3, 5, 5)}));
    CHECK_FALSE(touching.equal);
    CHECK(touching.nerve == Betti{2, 0});
    CHECK(touching.united == Betti{1, 0});
    CHECK(touching.touching_pairs == std::vector<std::pair<std::size_t, std::size_t>>{{0, 1}});

    CHECK_THROWS_AS(nerve_vs_union_check(PixelCover({rect(w, 0, 0, 2, 2) | rect(w, 4, 0, 5, 1)})),
                    NonConvexElementError);
}

TEST_CASE("nerve matches union on separated rectangle covers") {
    gen::Rng rng(56);
    int checked = 0;
    for (int i = 0; i < 200; ++i) {
        const auto rects = gen::rect_cover(rng, 64, 4);
        const NerveUnionResult r = nerve_vs_union_check(gen::pixel_cover(rects, Window{64, 64}));
        if (!r.touching_pairs.empty()) continue;
        ++checked;
        CHECK(r.equal);
    }
    CHECK(checked > 100);
}

TEST_CASE("comparison angles") {
    const double pi = std::numbers::pi;
    const Coord a{0, 0}, b{1, 0}, c{0.5, std::sqrt(3.0) / 2};
    CHECK(comparison_angle(a, b, c, 0.0) == doctest::Approx(pi / 3).epsilon(1e-12));
    CHECK(comparison_angle(a, b, c, 1.0) > pi / 3);
    CHECK(comparison_angle(a, b, c, -1.0) < pi / 3);
    CHECK(comparison_angle({0, 0}, {3, 0}, {3, 4}, 0.0) == doctest::Approx(pi / 2).epsilon(1e-12));
    CHECK(comparison_angle({0, 0}, {1, 0}, {2, 0}, 0.0) == doctest::Approx(pi).epsilon(1e-12));

    CHECK_THROWS_AS(comparison_angle(a, a, c, 0.0), DegenerateTriangleError);
    CHECK_THROWS_AS(comparison_angle({0, 0}, {3, 0}, {6, 0}, 4.0), DegenerateTriangleError);  // too big for the sphere
    CHECK_THROWS_AS(comparison_angle(a, b, c, INFINITY), InvalidInputError);
}

TEST_CASE("alexandrov quadruples") {
    const double pi = std::numbers::pi;
    AlexandrovQuadruple flat{{Coord{0, 0}, Coord{1, 0}, Coord{-0.5, std::sqrt(3.0) / 2}, Coord{-0.5, -std::sqrt(3.0) / 2}},
                             0.0};
    const QuadrupleResult r = alexandrov_quadruple_check(flat);
    CHECK(r.angle_sum == doctest::Approx(2 * pi).epsilon(1e-12));
    CHECK(r.angle_sum == r.euclidean_angle_sum);
    CHECK(r.within_two_pi);
    CHECK(r.perimeter_condition);

    AlexandrovQuadruple hyperbolic = flat;
    hyperbolic.kappa = -1.0;
    CHECK(alexandrov_quadruple_check(hyperbolic).angle_sum < 2 * pi);

    // Small enough to satisfy the perimeter bound on the unit sphere.
    AlexandrovQuadruple sphere = flat;
    for (Coord& p : sphere.points) p = Coord{p.x * 0.3, p.y * 0.3};
    sphere.kappa = 1.0;
    const QuadrupleResult s = alexandrov_quadruple_check(sphere);
    CHECK(s.perimeter_condition);
    CHECK(s.angle_sum > 2 * pi);
    CHECK_FALSE(s.within_two_pi);

    AlexandrovQuadruple repeated = flat;
    repeated.points[2] = repeated.points[1];
    CHECK_THROWS_AS(alexandrov_quadruple_check(repeated), DegenerateTriangleError);
}

TEST_CASE("flat quadruples stay within two pi") {
    gen::Rng rng(57);
    for (int i = 0; i < 300; ++i) {
        AlexandrovQuadruple q;
        for (Coord& p : q.points) p = Coord{double(gen::uniform(rng, -20, 20)), double(gen::uniform(rng, -20, 20))};
        bool distinct = true;
        for (int a = 0; a < 4; ++a)
            for (int b = a + 1; b < 4; ++b) distinct = distinct && !(q.points[a] == q.points[b]);
        if (!distinct) continue;
        const QuadrupleResult r = alexandrov_quadruple_check(q);
        CHECK(r.within_two_pi);
        CHECK(r.angle_sum == doctest::Approx(r.euclidean_angle_sum));
    }
}
