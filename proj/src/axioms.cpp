#include <algorithm>
#include <random>

#include "axiom_engine.hpp"
#include "prox/errors.hpp"

namespace prox {

bool AxiomReport::passed() const {
    return std::all_of(axioms.begin(), axioms.end(), [](const AxiomResult& r) { return r.passed; });
}

namespace detail {
namespace {

using Mask = std::uint64_t;

std::vector<std::string> mask_ids(const ProximitySpace& space, Mask m) {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < space.size(); ++i)
        if (m >> i & 1U) out.push_back(space.point(i).id);
    return out;
}

class Recorder {
public:
    Recorder(const ProximitySpace& space, std::string name, bool exhaustive) : space_(space) {
        result_.name = std::move(name);
        result_.exhaustive = exhaustive;
    }

    void count() { ++result_.cases; }

    void fail(const PointSet& a, const PointSet& b, const PointSet& c = {}) {
        if (!result_.passed) return;
        result_.passed = false;
        result_.witness = AxiomWitness{space_.ids(a), space_.ids(b), space_.ids(c)};
    }

    void fail(Mask a, Mask b, Mask c = 0) {
        if (!result_.passed) return;
        result_.passed = false;
        result_.witness = AxiomWitness{mask_ids(space_, a), mask_ids(space_, b), mask_ids(space_, c)};
    }

    bool failed() const { return !result_.passed; }
    AxiomResult take() { return std::move(result_); }

private:
    const ProximitySpace& space_;
    AxiomResult result_;
};

class Exhaustive {
public:
    explicit Exhaustive(const RelationModel& model) : n_(model.space->size()) {
        const Mask subsets = Mask{1} << n_;
        out_.assign(subsets, 0);
        for (Mask a = 1; a < subsets; ++a) {
            const std::size_t low = static_cast<std::size_t>(__builtin_ctzll(a));
            out_[a] = out_[a & (a - 1)] | model.related_mask[low];
        }
    }

    bool near(Mask a, Mask b) const { return (out_[a] & b) != 0; }
    Mask subsets() const { return Mask{1} << n_; }

private:
    std::size_t n_;
    std::vector<Mask> out_;  // out_[A] = union of related masks over A
};

PointSet random_subset(std::mt19937_64& rng, std::size_t n) {
    std::vector<std::size_t> v;
    std::uint64_t bits = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (i % 64 == 0) bits = rng();
        if (bits & 1U) v.push_back(i);
        bits >>= 1;
    }
    return PointSet(std::move(v));
}

}  // namespace

AxiomReport run_axiom_checks(const RelationModel& model, const AxiomNames& names,
                             std::uint64_t budget, std::uint64_t seed) {
    const ProximitySpace& space = *model.space;
    const std::size_t n = space.size();
    const bool pairs_exhaustive = n <= kExhaustivePairLimit;
    const bool triples_exhaustive = n <= kExhaustiveTripleLimit;
    if (!pairs_exhaustive && budget == 0) throw InvalidInputError("axiom budget must be positive");

    Recorder empty(space, names.empty_set, pairs_exhaustive);
    Recorder symmetry(space, names.symmetry, pairs_exhaustive);
    Recorder overlap(space, names.overlap, pairs_exhaustive);
    Recorder union_law(space, names.union_law, triples_exhaustive);

    if (pairs_exhaustive) {
        const Exhaustive ex(model);
        const Mask all = ex.subsets();
        for (Mask a = 0; a < all; ++a) {
            empty.count();
            if (ex.near(a, 0) || ex.near(0, a)) empty.fail(a, 0);
            for (Mask b = 0; b < all; ++b) {
                const bool ab = ex.near(a, b);
                symmetry.count();
                if (ab && !ex.near(b, a)) symmetry.fail(a, b);
                overlap.count();
                if (!ab && model.meet_mask(a, b)) overlap.fail(a, b);
            }
        }
        if (triples_exhaustive) {
            for (Mask a = 0; a < all; ++a)
                for (Mask b = 0; b < all; ++b) {
                    const bool ab = ex.near(a, b);
                    for (Mask c = 0; c < all; ++c) {
                        union_law.count();
                        if (ex.near(a, b | c) != (ab || ex.near(a, c))) union_law.fail(a, b, c);
                    }
                }
        }
    }

    std::mt19937_64 rng(seed);
    if (!pairs_exhaustive) {
        for (std::uint64_t i = 0; i < budget; ++i) {
            const PointSet a = random_subset(rng, n);
            const PointSet b = random_subset(rng, n);
            empty.count();
            if (model.near_sets(a, PointSet{}) || model.near_sets(PointSet{}, a)) empty.fail(a, PointSet{});
            const bool ab = model.near_sets(a, b);
            symmetry.count();
            if (ab != model.near_sets(b, a)) symmetry.fail(ab ? a : b, ab ? b : a);
            overlap.count();
            if (!ab && model.meet_sets(a, b)) overlap.fail(a, b);
        }
    }
    if (!triples_exhaustive) {
        for (std::uint64_t i = 0; i < budget; ++i) {
            const PointSet a = random_subset(rng, n);
            const PointSet b = random_subset(rng, n);
            const PointSet c = random_subset(rng, n);
            union_law.count();
            if (model.near_sets(a, b | c) != (model.near_sets(a, b) || model.near_sets(a, c)))
                union_law.fail(a, b, c);
        }
    }

    Recorder points(space, "(*) point symmetry", true);
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) {
            points.count();
            if (model.near_points(x, y) && !model.near_points(y, x)) points.fail(PointSet{x}, PointSet{y});
        }

    AxiomReport report;
    report.axioms.push_back(empty.take());
    report.axioms.push_back(symmetry.take());
    report.axioms.push_back(overlap.take());
    report.axioms.push_back(union_law.take());
    report.point_symmetry = points.take();
    return report;
}

}  // namespace detail

AxiomReport check_cech_axioms(const ProximitySpace& space, std::uint64_t budget, std::uint64_t seed) {
    detail::RelationModel model;
    model.space = &space;
    if (space.size() <= kExhaustivePairLimit) {
        model.related_mask.assign(space.size(), 0);
        for (std::size_t x = 0; x < space.size(); ++x)
            for (std::size_t y = 0; y < space.size(); ++y)
                if (x == y || space.related(x, y)) model.related_mask[x] |= std::uint64_t{1} << y;
    }
    model.meet_mask = [](std::uint64_t a, std::uint64_t b) { return (a & b) != 0; };
    model.near_sets = [&space](const PointSet& a, const PointSet& b) { return near(space, a, b); };
    model.meet_sets = [](const PointSet& a, const PointSet& b) { return a.intersects(b); };
    model.near_points = [&space](std::size_t x, std::size_t y) { return near(space, PointSet{x}, PointSet{y}); };
    return detail::run_axiom_checks(model, {"(P.0)", "(P.1)", "(P.2)", "(P.3)"}, budget, seed);
}

}  // namespace prox
