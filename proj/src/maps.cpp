#include "prox/maps.hpp"

#include <cmath>
#include <limits>

#include "prox/cycles.hpp"
#include "prox/descriptive.hpp"
#include "prox/errors.hpp"
#include "prox/grid.hpp"

namespace prox {

namespace {

std::string quoted(const ProximitySpace& space, std::size_t i) { return "'" + space.point(i).id + "'"; }

void require_same(const SpacePtr& a, const SpacePtr& b, const char* what) {
    if (a != b) throw MismatchedSpacesError(what);
}

}  // namespace

bool points_near(const ProximitySpace& space, std::size_t x, std::size_t y, Mode mode) {
    if (mode == Mode::Descriptive) return space.probe().matches(x, y);
    return x == y || space.related(x, y);
}

FiniteMap::FiniteMap(SpacePtr source, SpacePtr target, std::vector<std::size_t> image)
    : source_(std::move(source)), target_(std::move(target)), image_(std::move(image)) {
    if (!source_ || !target_) throw InvalidInputError("map needs a source and a target space");
    if (image_.size() != source_->size()) throw InvalidInputError("map is not total on its source");
    for (std::size_t y : image_)
        if (y >= target_->size()) throw ForeignPointError("#" + std::to_string(y));
}

FiniteMap FiniteMap::identity(SpacePtr space) {
    const std::size_t n = space->size();
    return FiniteMap(space, space, PointSet::range(n).indices());
}

FiniteMap FiniteMap::constant(SpacePtr source, SpacePtr target, std::size_t value) {
    const std::size_t n = source->size();
    return FiniteMap(std::move(source), std::move(target), std::vector<std::size_t>(n, value));
}

ContinuityResult check_proximal_continuity(const FiniteMap& f, Mode mode) {
    const ProximitySpace& src = *f.source();
    const ProximitySpace& tgt = *f.target();
    if (mode == Mode::Descriptive) {
        (void)src.probe();
        (void)tgt.probe();
    }
    for (std::size_t x = 0; x < src.size(); ++x)
        for (std::size_t y = 0; y < src.size(); ++y)
            if (points_near(src, x, y, mode) && !points_near(tgt, f(x), f(y), mode))
                return ContinuityResult{false, std::make_pair(x, y)};
    return {};
}

FiniteMap compose(const FiniteMap& f, const FiniteMap& g) {
    require_same(f.target(), g.source(), "the first map's target is not the second map's source");
    std::vector<std::size_t> image(f.image().size());
    for (std::size_t x = 0; x < image.size(); ++x) image[x] = g(f(x));
    return FiniteMap(f.source(), g.target(), std::move(image));
}

FiniteMap glue(const FiniteMap& f, const FiniteMap& g, SpacePtr x, Mode mode) {
    require_same(f.target(), g.target(), "the two maps have different targets");
    const ProximitySpace& space = *x;

    auto embed = [&](const ProximitySpace& sub) {
        std::vector<std::size_t> v;
        for (const Point& p : sub.points()) v.push_back(space.index_of(p.id));
        return PointSet(std::move(v));
    };
    const PointSet a = embed(*f.source());
    const PointSet b = embed(*g.source());

    auto closed = [&](const PointSet& s) {
        return mode == Mode::Descriptive ? is_descriptively_closed(space, s) : is_closed(space, s);
    };
    using C = GluePreconditionError::Condition;
    if (!closed(a)) throw GluePreconditionError(C::NotClosed, "the first domain is not closed in X");
    if (!closed(b)) throw GluePreconditionError(C::NotClosed, "the second domain is not closed in X");
    if ((a | b) != space.all()) throw GluePreconditionError(C::NotCovering, "the two domains do not cover X");

    std::vector<std::size_t> image(space.size());
    for (std::size_t i = 0; i < space.size(); ++i) {
        const std::string& id = space.point(i).id;
        const auto in_a = f.source()->find(id);
        const auto in_b = g.source()->find(id);
        if (in_a && in_b && f(*in_a) != g(*in_b))
            throw GluePreconditionError(C::Disagreement, "the maps disagree at '" + id + "'");
        image[i] = in_a ? f(*in_a) : g(*in_b);
    }
    return FiniteMap(std::move(x), f.target(), std::move(image));
}

HomotopyWitness::HomotopyWitness(SpacePtr source, SpacePtr target, std::size_t k, std::vector<std::size_t> table,
                                 std::optional<PointSet> rel)
    : source_(std::move(source)), target_(std::move(target)), k_(k), table_(std::move(table)), rel_(std::move(rel)) {
    if (k_ == 0) throw ResolutionError("a homotopy witness needs at least one time step");
    if (!source_ || !target_) throw InvalidInputError("homotopy needs a source and a target space");
    if (table_.size() != source_->size() * (k_ + 1)) throw InvalidInputError("homotopy table is not total");
    for (std::size_t y : table_)
        if (y >= target_->size()) throw ForeignPointError("#" + std::to_string(y));
    if (rel_) source_->check_members(*rel_);
}

FiniteMap HomotopyWitness::slice(std::size_t step) const {
    if (step > k_) throw InvalidInputError("time step beyond the grid");
    std::vector<std::size_t> image(source_->size());
    for (std::size_t x = 0; x < image.size(); ++x) image[x] = at(x, step);
    return FiniteMap(source_, target_, std::move(image));
}

HomotopyWitness HomotopyWitness::with_rel(std::optional<PointSet> rel) const {
    return HomotopyWitness(source_, target_, k_, table_, std::move(rel));
}

HomotopyCheck verify_homotopy(const HomotopyWitness& h, const FiniteMap& f, const FiniteMap& g, Mode mode) {
    require_same(h.source(), f.source(), "homotopy and first map have different sources");
    require_same(h.source(), g.source(), "homotopy and second map have different sources");
    require_same(h.target(), f.target(), "homotopy and first map have different targets");
    require_same(h.target(), g.target(), "homotopy and second map have different targets");
    const ProximitySpace& src = *h.source();
    const ProximitySpace& tgt = *h.target();
    const std::size_t k = h.k();
    if (mode == Mode::Descriptive) {
        (void)src.probe();
        (void)tgt.probe();
    }

    for (std::size_t x = 0; x < src.size(); ++x) {
        if (h.at(x, 0) != f(x)) return {false, "H(" + quoted(src, x) + ", 0) differs from f"};
        if (h.at(x, k) != g(x)) return {false, "H(" + quoted(src, x) + ", 1) differs from g"};
    }
    if (h.rel()) {
        for (std::size_t a : *h.rel()) {
            if (f(a) != g(a)) return {false, "f and g differ on the fixed point " + quoted(src, a)};
            for (std::size_t i = 0; i <= k; ++i)
                if (h.at(a, i) != f(a)) return {false, "H moves the fixed point " + quoted(src, a)};
        }
    }
    for (std::size_t x = 0; x < src.size(); ++x)
        for (std::size_t y = 0; y < src.size(); ++y) {
            if (!points_near(src, x, y, mode)) continue;
            for (std::size_t i = 0; i <= k; ++i)
                for (std::size_t j = i == 0 ? 0 : i - 1; j <= std::min(k, i + 1); ++j)
                    if (!points_near(tgt, h.at(x, i), h.at(y, j), mode))
                        return {false, "H is not continuous at (" + quoted(src, x) + ", " + std::to_string(i) +
                                           "/" + std::to_string(k) + ") and (" + quoted(src, y) + ", " +
                                           std::to_string(j) + "/" + std::to_string(k) + ")"};
        }
    return {true, ""};
}

HomotopyWitness concatenate_homotopies(const HomotopyWitness& f, const HomotopyWitness& g) {
    require_same(f.source(), g.source(), "homotopies have different sources");
    require_same(f.target(), g.target(), "homotopies have different targets");
    if (f.k() != g.k()) throw ResolutionError("homotopies use different time resolutions");
    const std::size_t k = f.k();
    const std::size_t n = f.source()->size();
    for (std::size_t x = 0; x < n; ++x)
        if (f.at(x, k) != g.at(x, 0))
            throw MidpointMismatchError("F(" + quoted(*f.source(), x) + ", 1) differs from G(" +
                                        quoted(*f.source(), x) + ", 0)");
    std::vector<std::size_t> table(n * (2 * k + 1));
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t i = 0; i <= 2 * k; ++i) table[x * (2 * k + 1) + i] = i <= k ? f.at(x, i) : g.at(x, i - k);
    std::optional<PointSet> rel;
    if (f.rel() && g.rel()) rel = *f.rel() & *g.rel();
    return HomotopyWitness(f.source(), f.target(), 2 * k, std::move(table), std::move(rel));
}

HomotopyWitness reverse_homotopy(const HomotopyWitness& h) {
    const std::size_t k = h.k();
    std::vector<std::size_t> table(h.table().size());
    for (std::size_t x = 0; x < h.source()->size(); ++x)
        for (std::size_t i = 0; i <= k; ++i) table[x * (k + 1) + i] = h.at(x, k - i);
    return HomotopyWitness(h.source(), h.target(), k, std::move(table), h.rel());
}

HomotopyWitness constant_homotopy(const FiniteMap& f, std::size_t k) {
    std::vector<std::size_t> table;
    table.reserve(f.image().size() * (k + 1));
    for (std::size_t y : f.image()) table.insert(table.end(), k + 1, y);
    return HomotopyWitness(f.source(), f.target(), k, std::move(table));
}

HomotopyWitness straight_line_homotopy(const FiniteMap& f, const FiniteMap& g, std::size_t k) {
    require_same(f.source(), g.source(), "maps have different sources");
    require_same(f.target(), g.target(), "maps have different targets");
    if (k == 0) throw ResolutionError("a homotopy witness needs at least one time step");
    const ProximitySpace& tgt = *f.target();
    auto nearest = [&](double px, double py) {
        std::size_t best = 0;
        double best_d = std::numeric_limits<double>::infinity();
        for (std::size_t y = 0; y < tgt.size(); ++y) {
            const Coord& c = tgt.coords(y);
            const double d = std::hypot(c.x - px, c.y - py);
            if (d < best_d) {
                best_d = d;
                best = y;
            }
        }
        return best;
    };
    const std::size_t n = f.source()->size();
    std::vector<std::size_t> table(n * (k + 1));
    for (std::size_t x = 0; x < n; ++x) {
        const Coord& a = tgt.coords(f(x));
        const Coord& b = tgt.coords(g(x));
        for (std::size_t i = 0; i <= k; ++i) {
            std::size_t y;
            if (i == 0) {
                y = f(x);
            } else if (i == k) {
                y = g(x);
            } else {
                const double t = static_cast<double>(i) / static_cast<double>(k);
                y = nearest(std::round(a.x + (b.x - a.x) * t), std::round(a.y + (b.y - a.y) * t));
            }
            table[x * (k + 1) + i] = y;
        }
    }
    return HomotopyWitness(f.source(), f.target(), k, std::move(table));
}

HomotopyWitness post_compose(const FiniteMap& h, const HomotopyWitness& hw) {
    require_same(hw.target(), h.source(), "the map does not start at the homotopy's target");
    std::vector<std::size_t> table(hw.table().size());
    for (std::size_t i = 0; i < table.size(); ++i) table[i] = h(hw.table()[i]);
    return HomotopyWitness(hw.source(), h.target(), hw.k(), std::move(table), hw.rel());
}

HomotopyWitness pre_compose(const HomotopyWitness& hw, const FiniteMap& k) {
    require_same(k.target(), hw.source(), "the map does not end at the homotopy's source");
    const std::size_t steps = hw.k();
    const std::size_t n = k.source()->size();
    std::vector<std::size_t> table(n * (steps + 1));
    for (std::size_t w = 0; w < n; ++w)
        for (std::size_t i = 0; i <= steps; ++i) table[w * (steps + 1) + i] = hw.at(k(w), i);
    std::optional<PointSet> rel;
    if (hw.rel()) {
        std::vector<std::size_t> pre;
        for (std::size_t w = 0; w < n; ++w)
            if (hw.rel()->contains(k(w))) pre.push_back(w);
        rel = PointSet(std::move(pre));
    }
    return HomotopyWitness(k.source(), hw.target(), steps, std::move(table), std::move(rel));
}

const char* to_string(ConstantKind kind) {
    switch (kind) {
        case ConstantKind::Ordinary: return "ordinary";
        case ConstantKind::Degenerate: return "degenerate";
        case ConstantKind::NonConstant: return "non-constant";
    }
    return "unknown";
}

bool satisfies_degenerate(const FiniteMap& d) {
    const ProbeFunction& probe = d.target()->probe();
    const PointSet image = d.image_set();
    for (std::size_t a : image)
        for (std::size_t b : image)
            if (!probe.matches(a, b)) return false;
    return true;
}

ConstantKind classify_constant(const FiniteMap& d) {
    const bool degenerate = satisfies_degenerate(d);
    if (d.image_set().size() == 1) return ConstantKind::Ordinary;
    return degenerate ? ConstantKind::Degenerate : ConstantKind::NonConstant;
}

namespace {

// Witness from d to the constant map at x0 = d(first point): H(·,0) = d and
// H(·,t) = x0 afterwards. Continuous whenever every d(x) shares x0's description.
HomotopyWitness collapse_to_point(const FiniteMap& d, std::size_t k) {
    const std::size_t x0 = d(0);
    std::vector<std::size_t> table;
    for (std::size_t x = 0; x < d.image().size(); ++x) {
        table.push_back(d(x));
        table.insert(table.end(), k, x0);
    }
    return HomotopyWitness(d.source(), d.target(), k, std::move(table));
}

}  // namespace

Contractibility contractibility(const SpacePtr& space, ContractibilityMode mode, const HomotopyWitness* supplied,
                                std::size_t k) {
    Contractibility out;
    if (mode == ContractibilityMode::GridTopological) {
        std::vector<Pixel> px;
        for (std::size_t i = 0; i < space->size(); ++i) px.push_back(pixel_of(*space, i));
        const PixelSet set(bounding_window(px), px);
        const GridBetti b = grid_homology(set);
        out.certified = b.b0 == 1 && b.b1 == 0;
        out.certificate = "grid surrogate: b0=" + std::to_string(b.b0) + ", b1=" + std::to_string(b.b1);
        return out;
    }

    const FiniteMap id = FiniteMap::identity(space);
    if (satisfies_degenerate(id)) {
        if (mode == ContractibilityMode::DegenerateDescriptive) {
            HomotopyWitness w = constant_homotopy(id, k);
            const HomotopyCheck c = verify_homotopy(w, id, id, Mode::Descriptive);
            out.certified = c.verified;
            out.certificate = c.verified ? "description is constant: the identity is a degenerate constant map"
                                         : "reflexive witness failed: " + c.reason;
            if (c.verified) out.witness = std::move(w);
            return out;
        }
        HomotopyWitness w = collapse_to_point(id, k);
        const FiniteMap c0 = FiniteMap::constant(space, space, id(0));
        const HomotopyCheck c = verify_homotopy(w, id, c0, Mode::Descriptive);
        out.certified = c.verified;
        out.certificate = c.verified ? "degenerate certificate: identity collapses to the constant map at '" +
                                           space->point(0).id + "'"
                                     : "collapse witness failed: " + c.reason;
        if (c.verified) out.witness = std::move(w);
        return out;
    }
    if (mode == ContractibilityMode::DegenerateDescriptive) {
        out.certificate = "no certificate: descriptions are not constant";
        return out;
    }

    if (!supplied) {
        out.certificate = "no certificate found";
        return out;
    }
    const FiniteMap end = supplied->slice(supplied->k());
    const ConstantKind kind = classify_constant(end);
    if (kind == ConstantKind::NonConstant) {
        out.certificate = "supplied witness does not end in a constant map";
        return out;
    }
    HomotopyWitness w = *supplied;
    if (kind == ConstantKind::Degenerate) w = concatenate_homotopies(w, collapse_to_point(end, supplied->k()));
    const FiniteMap last = w.slice(w.k());
    const HomotopyCheck c = verify_homotopy(w, id, last, Mode::Descriptive);
    out.certified = c.verified;
    out.certificate = c.verified ? std::string("supplied witness verified, ending in an ") +
                                       (kind == ConstantKind::Ordinary ? "ordinary" : "degenerate (then collapsed)") +
                                       " constant map"
                                 : "supplied witness failed: " + c.reason;
    if (c.verified) out.witness = std::move(w);
    return out;
}

}  // namespace prox
