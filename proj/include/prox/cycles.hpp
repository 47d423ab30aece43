#pragma once

#include <optional>
#include <string>
#include <vector>

#include "prox/grid.hpp"
#include "prox/proximity.hpp"

namespace prox {

/// Proximal path: vertices are point indices of the ambient space.
struct HPath {
    std::vector<std::size_t> vertices;
};

/// Explicit list of paths sharing the same endpoints.
struct PathClass {
    std::vector<HPath> members;
};

/// Simple cycle; `edges[i]` runs from vertices[i] to vertices[i+1 mod n].
/// Empty `edges` means every edge is the direct two-vertex path.
struct HCycle {
    std::vector<std::size_t> vertices;
    std::vector<HPath> edges;
};

/// Cycle whose edges are path classes; `edges[i]` joins vertices[i] and
/// vertices[i+1 mod n]. Empty `edges` again means direct edges.
struct MultiCycle {
    std::vector<std::size_t> vertices;
    std::vector<PathClass> edges;
};

enum class SystemMode { Global, Chain };

struct CycleSystem {
    std::vector<MultiCycle> cycles;
    SystemMode mode = SystemMode::Global;
};

struct CycleValidation {
    bool valid = false;
    std::size_t interior_pixels = 0;
    std::vector<std::string> diagnostics;
};

struct SystemValidation {
    bool valid = false;
    std::optional<std::size_t> clasp;    // global mode
    std::vector<std::size_t> clasps;     // chain mode, one per consecutive pair
    std::vector<std::string> diagnostics;
};

MultiCycle as_multi_cycle(const HCycle& cycle);

/// Edge paths of a cycle with direct edges filled in (first class member for
/// multi-cycles).
std::vector<HPath> edge_paths(const HCycle& cycle);
std::vector<HPath> edge_paths(const MultiCycle& cycle);

/// Grid pixel of a point; coordinates must be present and integral.
Pixel pixel_of(const ProximitySpace& space, std::size_t point);

/// Vertex polyline of a closed path sequence: the concatenated edge paths
/// without repeating shared endpoints.
std::vector<std::size_t> closed_walk(const std::vector<HPath>& edges);

CycleValidation validate_hcyc(const ProximitySpace& space, const HCycle& cycle);

/// Throws InvalidInputError when a path class has no members.
CycleValidation validate_multi_cycle(const ProximitySpace& space, const MultiCycle& cycle);

SystemValidation validate_cycle_system(const ProximitySpace& space, const CycleSystem& system);

/// Distinct descriptions along the path (tolerance-collapsed, first seen kept).
std::vector<FeatureVector> path_description(const ProximitySpace& space, const HPath& path);
bool paths_descriptively_close(const ProximitySpace& space, const HPath& h, const HPath& k);

/// Vertex set of a multi-cycle: cycle vertices plus interior path vertices.
PointSet cycle_points(const MultiCycle& cycle);

}  // namespace prox
