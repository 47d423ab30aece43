#pragma once

#include <cstdint>
#include <limits>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <variant>
#include <vector>

#include "prox/point_set.hpp"

namespace prox {

struct Coord {
    double x = 0.0;
    double y = 0.0;

    friend bool operator==(const Coord&, const Coord&) = default;
};

using FeatureVector = std::vector<double>;

struct Point {
    std::string id;
    std::optional<Coord> coords;
    std::optional<FeatureVector> features;
};

/// Point-pair relation given explicitly by ids. Pairs are directed as given;
/// nothing is symmetrized, so an asymmetric relation shows up as a (P.1)
/// failure in the axiom report.
struct ExplicitRelation {
    std::vector<std::pair<std::string, std::string>> pairs;
};

/// Metric-induced nearness: A near B iff the gap between them is at most tau.
struct MetricGap {
    double tau = 0.0;
};

using ProximityRule = std::variant<ExplicitRelation, MetricGap>;

/// Nonnegative real or +infinity.
class ExtendedDistance {
public:
    static ExtendedDistance infinite() { return ExtendedDistance(std::numeric_limits<double>::infinity()); }
    static ExtendedDistance finite(double v) { return ExtendedDistance(v); }

    bool is_infinite() const noexcept { return value_ == std::numeric_limits<double>::infinity(); }
    double value() const noexcept { return value_; }

    friend bool operator==(const ExtendedDistance&, const ExtendedDistance&) = default;

private:
    explicit ExtendedDistance(double v) : value_(v) {}
    double value_;
};

/**
 * Probe function: one feature vector per point plus the tolerance under which
 * two descriptions count as equal.
 *
 * Two descriptions match when their Euclidean distance is at most the
 * tolerance; with tolerance 0 that is exact equality of the stored values.
 */
class ProbeFunction {
public:
    ProbeFunction(std::vector<FeatureVector> descriptions, double tolerance = 0.0);

    std::size_t size() const noexcept { return descriptions_.size(); }
    std::size_t dimension() const noexcept { return dimension_; }
    double tolerance() const noexcept { return tolerance_; }
    const FeatureVector& operator[](std::size_t i) const { return descriptions_.at(i); }
    const std::vector<FeatureVector>& descriptions() const noexcept { return descriptions_; }

    double distance(std::size_t i, std::size_t j) const;
    bool matches(std::size_t i, std::size_t j) const { return distance(i, j) <= tolerance_; }

    ProbeFunction restrict_to(const PointSet& subset) const;

private:
    std::vector<FeatureVector> descriptions_;
    std::size_t dimension_ = 0;
    double tolerance_ = 0.0;
};

double feature_distance(const FeatureVector& a, const FeatureVector& b);

/**
 * Finite proximity space: a nonempty list of points with unique ids and a
 * proximity rule. When every point carries features the space also carries a
 * probe function and doubles as a descriptive proximity space.
 *
 * Immutable after construction.
 */
class ProximitySpace {
public:
    ProximitySpace(std::vector<Point> points, ProximityRule rule, double feature_tolerance = 0.0);

    std::size_t size() const noexcept { return points_.size(); }
    const Point& point(std::size_t i) const { return points_.at(i); }
    const std::vector<Point>& points() const noexcept { return points_; }
    const ProximityRule& rule() const noexcept { return rule_; }
    bool is_metric() const noexcept { return std::holds_alternative<MetricGap>(rule_); }
    PointSet all() const { return PointSet::range(points_.size()); }

    std::optional<std::size_t> find(const std::string& id) const;
    /// Throws ForeignPointError for unknown ids.
    std::size_t index_of(const std::string& id) const;
    PointSet resolve(std::span<const std::string> ids) const;
    std::vector<std::string> ids(const PointSet& set) const;

    /// Throws MissingCoordinatesError when point i has no coordinates.
    const Coord& coords(std::size_t i) const;

    /// Throws ForeignPointError if the set holds an index outside the space.
    void check_members(const PointSet& set) const;

    /// Point-pair relation underlying the set-level nearness. Directed for
    /// explicit relations.
    bool related(std::size_t from, std::size_t to) const;

    bool has_probe() const noexcept { return probe_.has_value(); }
    /// Throws TypeMismatchError when the space carries no probe function.
    const ProbeFunction& probe() const;
    double feature_tolerance() const noexcept { return feature_tolerance_; }

    /// Restriction to a subset; point order and ids are preserved.
    ProximitySpace subspace(const PointSet& subset) const;
    ProximitySpace with_probe(ProbeFunction probe) const;

private:
    std::vector<Point> points_;
    ProximityRule rule_;
    double feature_tolerance_ = 0.0;
    std::unordered_map<std::string, std::size_t> index_;
    std::vector<std::vector<std::size_t>> out_;  // explicit relation only
    std::optional<ProbeFunction> probe_;
};

using SpacePtr = std::shared_ptr<const ProximitySpace>;

ExtendedDistance hausdorff_gap(std::span<const Coord> a, std::span<const Coord> b);
ExtendedDistance hausdorff_gap(const ProximitySpace& space, const PointSet& a, const PointSet& b);

bool near(const ProximitySpace& space, const PointSet& a, const PointSet& b);
PointSet closure(const ProximitySpace& space, const PointSet& a);
bool is_closed(const ProximitySpace& space, const PointSet& a);

// ---------------------------------------------------------------------------
// Axiom verification

struct AxiomWitness {
    std::vector<std::string> a;
    std::vector<std::string> b;
    std::vector<std::string> c;
};

struct AxiomResult {
    std::string name;
    bool passed = true;
    bool exhaustive = true;
    std::uint64_t cases = 0;
    std::optional<AxiomWitness> witness;
};

struct AxiomReport {
    std::vector<AxiomResult> axioms;  // the four proximity axioms, in order
    AxiomResult point_symmetry;       // x near {y} => y near {x}; informational only

    bool passed() const;
};

inline constexpr std::size_t kExhaustivePairLimit = 12;
inline constexpr std::size_t kExhaustiveTripleLimit = 8;
inline constexpr std::uint64_t kDefaultAxiomBudget = 100000;

/**
 * Checks (P.0)-(P.3) for the set-level nearness of a space.
 *
 * Axioms over subset pairs are enumerated exhaustively when the space has at
 * most kExhaustivePairLimit points, those over triples when it has at most
 * kExhaustiveTripleLimit points. Larger spaces are checked on `budget`
 * uniformly random subsets drawn from a generator seeded with `seed`.
 */
AxiomReport check_cech_axioms(const ProximitySpace& space,
                              std::uint64_t budget = kDefaultAxiomBudget,
                              std::uint64_t seed = 0x5eedULL);

}  // namespace prox
