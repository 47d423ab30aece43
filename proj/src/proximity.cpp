#include "prox/proximity.hpp"

#include <algorithm>
#include <cmath>

#include "prox/errors.hpp"

namespace prox {

double feature_distance(const FeatureVector& a, const FeatureVector& b) {
    if (a.size() != b.size()) throw InvalidInputError("feature vectors differ in length");
    double sum = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double d = a[i] - b[i];
        sum += d * d;
    }
    return std::sqrt(sum);
}

ProbeFunction::ProbeFunction(std::vector<FeatureVector> descriptions, double tolerance)
    : descriptions_(std::move(descriptions)), tolerance_(tolerance) {
    if (!(tolerance_ >= 0.0) || !std::isfinite(tolerance_))
        throw InvalidInputError("feature tolerance must be a finite nonnegative number");
    if (!descriptions_.empty()) dimension_ = descriptions_.front().size();
    for (const auto& d : descriptions_) {
        if (d.size() != dimension_) throw InvalidInputError("feature vectors differ in length");
        for (double v : d)
            if (!std::isfinite(v)) throw InvalidInputError("feature entries must be finite");
    }
}

double ProbeFunction::distance(std::size_t i, std::size_t j) const {
    return feature_distance(descriptions_.at(i), descriptions_.at(j));
}

ProbeFunction ProbeFunction::restrict_to(const PointSet& subset) const {
    std::vector<FeatureVector> out;
    out.reserve(subset.size());
    for (std::size_t i : subset) out.push_back(descriptions_.at(i));
    return ProbeFunction(std::move(out), tolerance_);
}

ProximitySpace::ProximitySpace(std::vector<Point> points, ProximityRule rule, double feature_tolerance)
    : points_(std::move(points)), rule_(std::move(rule)), feature_tolerance_(feature_tolerance) {
    if (points_.empty()) throw InvalidInputError("a proximity space needs at least one point");

    for (std::size_t i = 0; i < points_.size(); ++i) {
        const Point& p = points_[i];
        if (!index_.emplace(p.id, i).second) throw InvalidInputError("duplicate point id '" + p.id + "'");
        if (p.coords && !(std::isfinite(p.coords->x) && std::isfinite(p.coords->y)))
            throw InvalidInputError("point '" + p.id + "' has non-finite coordinates");
    }

    if (const auto* metric = std::get_if<MetricGap>(&rule_)) {
        if (!(metric->tau >= 0.0) || !std::isfinite(metric->tau))
            throw InvalidInputError("tau must be a finite nonnegative number");
        for (const Point& p : points_)
            if (!p.coords) throw MissingCoordinatesError(p.id);
    } else {
        const auto& rel = std::get<ExplicitRelation>(rule_);
        out_.resize(points_.size());
        for (const auto& [from, to] : rel.pairs) out_[index_of(from)].push_back(index_of(to));
        for (auto& v : out_) {
            std::sort(v.begin(), v.end());
            v.erase(std::unique(v.begin(), v.end()), v.end());
        }
    }

    const auto with_features = std::count_if(points_.begin(), points_.end(),
                                             [](const Point& p) { return p.features.has_value(); });
    if (with_features == static_cast<std::ptrdiff_t>(points_.size())) {
        std::vector<FeatureVector> descriptions;
        descriptions.reserve(points_.size());
        for (const Point& p : points_) descriptions.push_back(*p.features);
        probe_.emplace(std::move(descriptions), feature_tolerance_);
    } else if (with_features != 0) {
        throw InvalidInputError("features must be given on every point or on none");
    } else if (!(feature_tolerance_ >= 0.0) || !std::isfinite(feature_tolerance_)) {
        throw InvalidInputError("feature tolerance must be a finite nonnegative number");
    }
}

std::optional<std::size_t> ProximitySpace::find(const std::string& id) const {
    auto it = index_.find(id);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

std::size_t ProximitySpace::index_of(const std::string& id) const {
    auto it = index_.find(id);
    if (it == index_.end()) throw ForeignPointError(id);
    return it->second;
}

PointSet ProximitySpace::resolve(std::span<const std::string> ids) const {
    std::vector<std::size_t> out;
    out.reserve(ids.size());
    for (const auto& id : ids) out.push_back(index_of(id));
    return PointSet(std::move(out));
}

std::vector<std::string> ProximitySpace::ids(const PointSet& set) const {
    check_members(set);
    std::vector<std::string> out;
    out.reserve(set.size());
    for (std::size_t i : set) out.push_back(points_[i].id);
    return out;
}

const Coord& ProximitySpace::coords(std::size_t i) const {
    const Point& p = points_.at(i);
    if (!p.coords) throw MissingCoordinatesError(p.id);
    return *p.coords;
}

void ProximitySpace::check_members(const PointSet& set) const {
    if (!set.empty() && set.back() >= points_.size())
        throw ForeignPointError("#" + std::to_string(set.back()));
}

bool ProximitySpace::related(std::size_t from, std::size_t to) const {
    if (const auto* metric = std::get_if<MetricGap>(&rule_)) {
        const Coord& a = *points_[from].coords;
        const Coord& b = *points_[to].coords;
        return std::hypot(a.x - b.x, a.y - b.y) <= metric->tau;
    }
    if (from == to) return true;
    const auto& v = out_[from];
    return std::binary_search(v.begin(), v.end(), to);
}

const ProbeFunction& ProximitySpace::probe() const {
    if (!probe_) throw TypeMismatchError("descriptive operation on a space without features");
    return *probe_;
}

ProximitySpace ProximitySpace::subspace(const PointSet& subset) const {
    check_members(subset);
    std::vector<Point> pts;
    pts.reserve(subset.size());
    for (std::size_t i : subset) pts.push_back(points_[i]);

    if (const auto* metric = std::get_if<MetricGap>(&rule_))
        return ProximitySpace(std::move(pts), *metric, feature_tolerance_);

    ExplicitRelation rel;
    for (std::size_t i : subset)
        for (std::size_t j : out_[i])
            if (subset.contains(j)) rel.pairs.emplace_back(points_[i].id, points_[j].id);
    return ProximitySpace(std::move(pts), std::move(rel), feature_tolerance_);
}

ProximitySpace ProximitySpace::with_probe(ProbeFunction probe) const {
    if (probe.size() != points_.size()) throw InvalidInputError("probe size differs from the space size");
    std::vector<Point> pts = points_;
    for (std::size_t i = 0; i < pts.size(); ++i) pts[i].features = probe[i];
    return ProximitySpace(std::move(pts), rule_, probe.tolerance());
}

ExtendedDistance hausdorff_gap(std::span<const Coord> a, std::span<const Coord> b) {
    if (a.empty() || b.empty()) return ExtendedDistance::infinite();
    double best = std::numeric_limits<double>::infinity();
    for (const Coord& p : a)
        for (const Coord& q : b) best = std::min(best, std::hypot(p.x - q.x, p.y - q.y));
    return ExtendedDistance::finite(best);
}

namespace {

std::vector<Coord> coords_of(const ProximitySpace& space, const PointSet& set) {
    std::vector<Coord> out;
    out.reserve(set.size());
    for (std::size_t i : set) out.push_back(space.coords(i));
    return out;
}

}  // namespace

ExtendedDistance hausdorff_gap(const ProximitySpace& space, const PointSet& a, const PointSet& b) {
    space.check_members(a);
    space.check_members(b);
    const auto ca = coords_of(space, a);
    const auto cb = coords_of(space, b);
    return hausdorff_gap(ca, cb);
}

bool near(const ProximitySpace& space, const PointSet& a, const PointSet& b) {
    space.check_members(a);
    space.check_members(b);
    if (a.empty() || b.empty()) return false;
    if (const auto* metric = std::get_if<MetricGap>(&space.rule()))
        return hausdorff_gap(space, a, b).value() <= metric->tau;
    if (a.intersects(b)) return true;
    for (std::size_t x : a)
        for (std::size_t y : b)
            if (space.related(x, y)) return true;
    return false;
}

PointSet closure(const ProximitySpace& space, const PointSet& a) {
    space.check_members(a);
    std::vector<std::size_t> out;
    for (std::size_t x = 0; x < space.size(); ++x)
        if (near(space, PointSet{x}, a)) out.push_back(x);
    return PointSet(std::move(out));
}

bool is_closed(const ProximitySpace& space, const PointSet& a) { return closure(space, a) == a; }

}  // namespace prox
