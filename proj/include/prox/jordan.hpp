#pragma once

#include <span>
#include <string>
#include <vector>

#include "prox/cycles.hpp"
#include "prox/grid.hpp"

namespace prox {

struct RegionPartition {
    PixelSet boundary;
    PixelSet interior;
    PixelSet exterior;
};

struct JordanFlags {
    bool exactly_two_regions = false;
    bool common_boundary = false;
    bool nonvoid_interior = false;

    bool all() const { return exactly_two_regions && common_boundary && nonvoid_interior; }
};

struct JordanResult {
    RegionPartition partition;
    JordanFlags flags;
    int interior_components = 0;
    int exterior_components = 0;
};

/**
 * Splits the window along a curve: complement pixels 4-connected to the
 * window border are exterior, the rest interior. Common boundary means every
 * curve pixel is 8-adjacent to both an interior and an exterior pixel, where
 * positions beyond the window edge count as exterior.
 */
JordanResult partition_by_curve(const PixelSet& curve);

/// Strictly rasterizes the vertex cycle and partitions the window. Throws
/// PreconditionError when the curve encloses nothing.
JordanResult jordan_partition(std::span<const Pixel> cycle, Window window);

/// Validates the cycle first; PreconditionError names the failed condition.
JordanResult jordan_partition(const ProximitySpace& space, const HCycle& cycle, Window window);

struct SystemBoundaryResult {
    RegionPartition partition;
    int expected_interiors = 0;
    int interior_regions = 0;
    int exterior_regions = 0;
    bool region_count_ok = false;
    bool single_exterior = false;
    bool common_boundary = false;  // every region touched by its own cycle, which touches the exterior
    std::vector<Pixel> non_simple_points;  // curve pixels lying on more than one member curve

    bool passed() const { return region_count_ok && single_exterior && common_boundary; }
};

/**
 * Region check for a whole cycle system: the union of member curves must leave
 * one interior region per member and one exterior, each member curve must
 * bound its own interior region, and every curve pixel must be adjacent to
 * some interior region and to the exterior.
 */
SystemBoundaryResult system_boundary_check(const ProximitySpace& space, const CycleSystem& system, Window window);

/// Multi-path cycles are checked on their outer boundary: the union of all
/// member paths, reduced to the pixels adjacent to the exterior.
SystemBoundaryResult system_boundary_check(const ProximitySpace& space, const MultiCycle& cycle, Window window);
SystemBoundaryResult system_boundary_check(const ProximitySpace& space, const HCycle& cycle, Window window);

/// Window that fits every point of the space with a margin of two pixels.
Window auto_window(const ProximitySpace& space, const std::vector<std::size_t>& points);

std::string region_svg(const RegionPartition& partition, int scale = 8);

}  // namespace prox
