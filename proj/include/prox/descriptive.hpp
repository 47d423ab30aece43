#pragma once

#include <span>
#include <vector>

#include "prox/proximity.hpp"

namespace prox {

// All functions here read the space's probe function and throw
// TypeMismatchError when the space has none. Descriptions match when their
// Euclidean distance is at most the space's feature tolerance.

bool descriptive_near(const ProximitySpace& space, const PointSet& a, const PointSet& b);

/// Points of A∪B whose description is shared (up to tolerance) by a member of
/// A and a member of B that also match each other.
PointSet descriptive_intersection(const ProximitySpace& space, const PointSet& a, const PointSet& b);

/**
 * Descriptive intersection of a whole family: points x of the union for which
 * one member from every set can be chosen so that all chosen descriptions and
 * Φ(x) are pairwise within tolerance. Equals the exact definition at
 * tolerance 0; an empty family yields the empty set.
 */
PointSet descriptive_intersection(const ProximitySpace& space, std::span<const PointSet> family);

PointSet descriptive_closure(const ProximitySpace& space, const PointSet& a);
bool is_descriptively_closed(const ProximitySpace& space, const PointSet& a);

/// {y : |Φ(x) - Φ(y)| < eps}. Throws InvalidInputError unless eps > 0.
PointSet descriptive_ball(const ProximitySpace& space, std::size_t x, double eps);

/// One ball per point, duplicates removed, first occurrence kept.
std::vector<PointSet> descriptive_open_cover(const ProximitySpace& space, double eps);

/// (dP.0)-(dP.3) with the same enumeration rules as check_cech_axioms.
AxiomReport check_descriptive_axioms(const ProximitySpace& space,
                                     std::uint64_t budget = kDefaultAxiomBudget,
                                     std::uint64_t seed = 0x5eedULL);

}  // namespace prox
