#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "prox/proximity.hpp"

namespace prox::detail {

/**
 * Set-level relation under test, given two ways: a per-point mask of related
 * points (used for exhaustive enumeration on small spaces, where near(A, B)
 * is "some a in A has a related point in B") and the public set functions
 * (used when sampling larger spaces).
 */
struct RelationModel {
    const ProximitySpace* space = nullptr;
    std::vector<std::uint64_t> related_mask;  // indexed by point, includes the point itself
    std::function<bool(std::uint64_t, std::uint64_t)> meet_mask;
    std::function<bool(const PointSet&, const PointSet&)> near_sets;
    std::function<bool(const PointSet&, const PointSet&)> meet_sets;
    std::function<bool(std::size_t, std::size_t)> near_points;
};

struct AxiomNames {
    std::string empty_set;
    std::string symmetry;
    std::string overlap;
    std::string union_law;
};

AxiomReport run_axiom_checks(const RelationModel& model, const AxiomNames& names,
                             std::uint64_t budget, std::uint64_t seed);

}  // namespace prox::detail
