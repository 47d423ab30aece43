#include "prox/descriptive.hpp"

#include <algorithm>
#include <cmath>

#include "axiom_engine.hpp"
#include "prox/errors.hpp"

namespace prox {

namespace {

void check(const ProximitySpace& space, const PointSet& a) {
    space.check_members(a);
}

// Backtracking choice of one member per set, pairwise matching and matching x.
bool choose_members(const ProbeFunction& probe, std::span<const PointSet> family, std::size_t depth,
                    std::vector<std::size_t>& chosen) {
    if (depth == family.size()) return true;
    for (std::size_t e : family[depth]) {
        bool ok = true;
        for (std::size_t c : chosen)
            if (!probe.matches(c, e)) { ok = false; break; }
        if (!ok) continue;
        chosen.push_back(e);
        if (choose_members(probe, family, depth + 1, chosen)) return true;
        chosen.pop_back();
    }
    return false;
}

}  // namespace

bool descriptive_near(const ProximitySpace& space, const PointSet& a, const PointSet& b) {
    check(space, a);
    check(space, b);
    const ProbeFunction& probe = space.probe();
    for (std::size_t x : a)
        for (std::size_t y : b)
            if (probe.matches(x, y)) return true;
    return false;
}

PointSet descriptive_intersection(const ProximitySpace& space, const PointSet& a, const PointSet& b) {
    const PointSet pair[] = {a, b};
    return descriptive_intersection(space, pair);
}

PointSet descriptive_intersection(const ProximitySpace& space, std::span<const PointSet> family) {
    for (const PointSet& s : family) check(space, s);
    const ProbeFunction& probe = space.probe();
    if (family.empty()) return {};

    PointSet all;
    for (const PointSet& s : family) all = all | s;

    std::vector<std::size_t> out;
    for (std::size_t x : all) {
        std::vector<std::size_t> chosen{x};
        if (choose_members(probe, family, 0, chosen)) out.push_back(x);
    }
    return PointSet(std::move(out));
}

PointSet descriptive_closure(const ProximitySpace& space, const PointSet& a) {
    check(space, a);
    const ProbeFunction& probe = space.probe();
    std::vector<std::size_t> out;
    for (std::size_t x = 0; x < space.size(); ++x)
        for (std::size_t y : a)
            if (probe.matches(x, y)) {
                out.push_back(x);
                break;
            }
    return PointSet(std::move(out));
}

bool is_descriptively_closed(const ProximitySpace& space, const PointSet& a) {
    return descriptive_closure(space, a) == a;
}

PointSet descriptive_ball(const ProximitySpace& space, std::size_t x, double eps) {
    if (x >= space.size()) throw ForeignPointError("#" + std::to_string(x));
    if (!(eps > 0.0)) throw InvalidInputError("ball radius must be positive");
    const ProbeFunction& probe = space.probe();
    std::vector<std::size_t> out;
    for (std::size_t y = 0; y < space.size(); ++y)
        if (probe.distance(x, y) < eps) out.push_back(y);
    return PointSet(std::move(out));
}

std::vector<PointSet> descriptive_open_cover(const ProximitySpace& space, double eps) {
    std::vector<PointSet> cover;
    for (std::size_t x = 0; x < space.size(); ++x) {
        PointSet ball = descriptive_ball(space, x, eps);
        if (std::find(cover.begin(), cover.end(), ball) == cover.end()) cover.push_back(std::move(ball));
    }
    return cover;
}

AxiomReport check_descriptive_axioms(const ProximitySpace& space, std::uint64_t budget, std::uint64_t seed) {
    const ProbeFunction& probe = space.probe();
    const std::size_t n = space.size();

    detail::RelationModel model;
    model.space = &space;
    std::vector<std::uint64_t> matches;
    if (n <= kExhaustivePairLimit) {
        matches.assign(n, 0);
        for (std::size_t x = 0; x < n; ++x)
            for (std::size_t y = 0; y < n; ++y)
                if (probe.matches(x, y)) matches[x] |= std::uint64_t{1} << y;
    }
    model.related_mask = matches;
    // A ⋓ B nonempty, evaluated from the membership condition rather than via
    // the nearness table: some x in A∪B, a in A and b in B all matching.
    model.meet_mask = [matches](std::uint64_t a, std::uint64_t b) {
        const std::uint64_t both = a | b;
        for (std::size_t x = 0; x < matches.size(); ++x) {
            if (!(both >> x & 1U)) continue;
            std::uint64_t candidates = a & matches[x];
            while (candidates) {
                const auto y = static_cast<std::size_t>(__builtin_ctzll(candidates));
                candidates &= candidates - 1;
                if (matches[y] & b & matches[x]) return true;
            }
        }
        return false;
    };
    model.near_sets = [&space](const PointSet& a, const PointSet& b) { return descriptive_near(space, a, b); };
    model.meet_sets = [&space](const PointSet& a, const PointSet& b) {
        return !descriptive_intersection(space, a, b).empty();
    };
    model.near_points = [&space](std::size_t x, std::size_t y) {
        return descriptive_near(space, PointSet{x}, PointSet{y});
    };
    return detail::run_axiom_checks(model, {"(dP.0)", "(dP.1)", "(dP.2)", "(dP.3)"}, budget, seed);
}

}  // namespace prox
