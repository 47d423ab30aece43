#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "prox/cycles.hpp"
#include "prox/grid.hpp"
#include "prox/maps.hpp"
#include "prox/proximity.hpp"

namespace prox {

/// Finite family of point sets whose union is the ambient space.
class Cover {
public:
    /// Throws EmptyCoverError for an empty family and InvalidInputError when
    /// the union misses a point.
    Cover(SpacePtr ambient, std::vector<PointSet> elements);

    const SpacePtr& ambient() const noexcept { return ambient_; }
    const std::vector<PointSet>& elements() const noexcept { return elements_; }
    std::size_t size() const noexcept { return elements_.size(); }

private:
    SpacePtr ambient_;
    std::vector<PointSet> elements_;
};

/// Family of pixel sets in one window; the ambient set is their union.
class PixelCover {
public:
    explicit PixelCover(std::vector<PixelSet> elements);

    const Window& window() const { return elements_.front().window(); }
    const std::vector<PixelSet>& elements() const noexcept { return elements_; }
    std::size_t size() const noexcept { return elements_.size(); }
    PixelSet united() const;

private:
    std::vector<PixelSet> elements_;
};

/// Filled axis-aligned rectangle, corners inclusive.
struct Rect {
    int x0 = 0;
    int y0 = 0;
    int x1 = 0;
    int y1 = 0;

    PixelSet pixels(Window window) const;
};

using Simplex = std::vector<std::size_t>;

/// Simplicial complex of dimension at most 2 over vertices 0..n-1. A vertex
/// is part of the complex only once it has been added.
class SimplicialComplex {
public:
    explicit SimplicialComplex(std::size_t vertices = 0);

    /// Adds a sorted simplex of 1 to 3 vertices; duplicates are ignored.
    void add(Simplex s);
    bool contains(const Simplex& s) const;

    std::size_t vertex_count() const noexcept { return vertices_; }
    /// Simplices sorted by dimension, then lexicographically.
    std::vector<Simplex> simplices() const;
    std::vector<Simplex> simplices(std::size_t dim) const;
    bool downward_closed() const;

private:
    std::size_t vertices_;
    std::vector<Simplex> edges_;
    std::vector<Simplex> triangles_;
    std::vector<char> vertex_present_;
};

using NerveComplex = SimplicialComplex;

/// One vertex per element; a simplex for every (descriptive) intersection
/// of up to three elements that is nonempty.
NerveComplex build_nerve(const Cover& cover, Mode mode);
NerveComplex build_nerve(const PixelCover& cover);

struct Betti {
    std::size_t b0 = 0;
    std::size_t b1 = 0;

    friend bool operator==(const Betti&, const Betti&) = default;
};

/// GF(2) ranks: b0 = V - rank d1, b1 = E - rank d1 - rank d2. Throws
/// NonClosedComplexError when a face of a simplex is missing.
Betti betti(const SimplicialComplex& complex);

/// Rank of a GF(2) matrix given as rows of packed 64-bit words.
std::size_t gf2_rank(std::vector<std::vector<std::uint64_t>> rows);

struct Graph {
    std::size_t vertex_count = 0;
    std::vector<std::pair<std::size_t, std::size_t>> edges;
};

struct FreeGroupPresentation {
    std::size_t rank = 0;
    std::vector<std::vector<std::size_t>> generators;  // edge indices of each fundamental cycle
};

/**
 * Fundamental cycles of a spanning forest. Edges are offered to the forest in
 * index order, or in `edge_order` when given; each non-forest edge closes one
 * generator. Self-loops count as generators of their own.
 */
FreeGroupPresentation free_group_presentation(const Graph& graph);
FreeGroupPresentation free_group_presentation(const Graph& graph, std::span<const std::size_t> edge_order);

SimplicialComplex complex_of(const Graph& graph);

enum class GoodCoverMode { Topological, Descriptive, Degenerate };

struct GoodCoverOptions {
    /// Intersections of fewer elements are not examined (1 examines the
    /// elements themselves).
    std::size_t min_order = 1;
};

struct IntersectionCheck {
    std::vector<std::size_t> members;
    std::size_t size = 0;
    bool contractible = false;
    std::string certificate;
};

struct GoodCoverReport {
    bool good = true;
    std::vector<IntersectionCheck> intersections;
};

/**
 * Runs the contractibility check of the chosen mode on every nonempty
 * intersection of cover elements. Intersections that are a single point are
 * certified directly. Topological mode uses the grid surrogate and needs
 * integer coordinates; the descriptive modes need a probe.
 */
GoodCoverReport check_good_cover(const Cover& cover, GoodCoverMode mode, GoodCoverOptions options = {});
GoodCoverReport check_good_cover(const PixelCover& cover, GoodCoverOptions options = {});

/// The member point sets of a cycle system as a cover of their union, checked
/// on intersections of two or more members.
GoodCoverReport check_cycle_system_cover(const SpacePtr& space, const CycleSystem& system, GoodCoverMode mode);

struct NerveUnionResult {
    bool equal = false;
    Betti nerve;
    Betti united;
    /// Disjoint elements whose pixels touch: the union joins them although
    /// the nerve does not.
    std::vector<std::pair<std::size_t, std::size_t>> touching_pairs;
};

/// Throws NonConvexElementError unless every element is a filled rectangle.
NerveUnionResult nerve_vs_union_check(const PixelCover& cover);

/// Angle at b of the model triangle with side lengths |ab|, |bc|, |ac| in the
/// plane of constant curvature kappa.
double comparison_angle(Coord a, Coord b, Coord c, double kappa);

struct AlexandrovQuadruple {
    std::array<Coord, 4> points;  // points[0] is the apex
    double kappa = 0.0;
};

struct QuadrupleResult {
    double angle_sum = 0.0;            // comparison angles at the apex
    double euclidean_angle_sum = 0.0;  // plane angles at the apex, for reference
    bool within_two_pi = false;        // angle_sum <= 2π + 1e-9
    bool perimeter_condition = true;   // kappa > 0: every apex triangle perimeter below π/√κ
    double max_perimeter = 0.0;
};

QuadrupleResult alexandrov_quadruple_check(const AlexandrovQuadruple& q);

}  // namespace prox
