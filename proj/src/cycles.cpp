#include "prox/cycles.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "prox/errors.hpp"

namespace prox {

namespace {

std::string id_of(const ProximitySpace& space, std::size_t i) { return "'" + space.point(i).id + "'"; }

void check_path_links(const ProximitySpace& space, const HPath& path, const std::string& where,
                      std::vector<std::string>& diag) {
    for (std::size_t k = 0; k + 1 < path.vertices.size(); ++k) {
        const std::size_t a = path.vertices[k];
        const std::size_t b = path.vertices[k + 1];
        if (!near(space, PointSet{a}, PointSet{b}))
            diag.push_back(where + ": " + id_of(space, a) + " and " + id_of(space, b) + " are not near");
    }
}

void check_members(const ProximitySpace& space, const std::vector<std::size_t>& v) {
    for (std::size_t i : v)
        if (i >= space.size()) throw ForeignPointError("#" + std::to_string(i));
}

}  // namespace

MultiCycle as_multi_cycle(const HCycle& cycle) {
    MultiCycle m;
    m.vertices = cycle.vertices;
    for (const HPath& p : cycle.edges) m.edges.push_back(PathClass{{p}});
    return m;
}

std::vector<HPath> edge_paths(const HCycle& cycle) {
    if (!cycle.edges.empty()) return cycle.edges;
    std::vector<HPath> out;
    const auto& v = cycle.vertices;
    for (std::size_t i = 0; i < v.size(); ++i) out.push_back(HPath{{v[i], v[(i + 1) % v.size()]}});
    return out;
}

std::vector<HPath> edge_paths(const MultiCycle& cycle) {
    HCycle base{cycle.vertices, {}};
    for (const PathClass& c : cycle.edges) {
        if (c.members.empty()) throw InvalidInputError("path class has no members");
        base.edges.push_back(c.members.front());
    }
    return edge_paths(base);
}

Pixel pixel_of(const ProximitySpace& space, std::size_t point) {
    const Coord& c = space.coords(point);
    if (c.x != std::floor(c.x) || c.y != std::floor(c.y) || std::abs(c.x) > 1e9 || std::abs(c.y) > 1e9)
        throw TypeMismatchError("point '" + space.point(point).id + "' does not have integer coordinates");
    return Pixel{static_cast<int>(c.x), static_cast<int>(c.y)};
}

std::vector<std::size_t> closed_walk(const std::vector<HPath>& edges) {
    std::vector<std::size_t> walk;
    for (const HPath& p : edges)
        for (std::size_t k = 0; k + 1 < p.vertices.size(); ++k) walk.push_back(p.vertices[k]);
    return walk;
}

CycleValidation validate_hcyc(const ProximitySpace& space, const HCycle& cycle) {
    CycleValidation out;
    auto& diag = out.diagnostics;
    const auto& v = cycle.vertices;
    check_members(space, v);
    for (const HPath& p : cycle.edges) check_members(space, p.vertices);

    if (v.size() < 3) diag.push_back("a cycle needs at least three vertices");
    if (!cycle.edges.empty() && cycle.edges.size() != v.size())
        diag.push_back("cycle has " + std::to_string(v.size()) + " vertices but " +
                       std::to_string(cycle.edges.size()) + " edges, so it has an end vertex");
    if (!diag.empty()) return out;

    const std::vector<HPath> edges = edge_paths(cycle);
    for (std::size_t i = 0; i < edges.size(); ++i) {
        const HPath& p = edges[i];
        const std::size_t from = v[i];
        const std::size_t to = v[(i + 1) % v.size()];
        if (p.vertices.size() < 2 || p.vertices.front() != from || p.vertices.back() != to) {
            diag.push_back("edge " + std::to_string(i) + " does not run from " + id_of(space, from) + " to " +
                           id_of(space, to));
            continue;
        }
        check_path_links(space, p, "edge " + std::to_string(i), diag);
    }
    if (!diag.empty()) return out;

    const std::vector<std::size_t> walk = closed_walk(edges);
    std::vector<std::size_t> sorted = walk;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t k = 0; k + 1 < sorted.size(); ++k)
        if (sorted[k] == sorted[k + 1]) diag.push_back("vertex " + id_of(space, sorted[k]) + " repeats");

    std::vector<Pixel> pixels;
    pixels.reserve(walk.size());
    for (std::size_t i : walk) pixels.push_back(pixel_of(space, i));
    const Window window = bounding_window(pixels);
    if (diag.empty()) {
        try {
            (void)rasterize_cycle(pixels, window);
        } catch (const SelfIntersectionError& e) {
            diag.push_back(std::string("curve is not simple: ") + e.what());
        }
    }

    const PixelSet curve = rasterize_polyline(pixels, window, true);
    const PixelSet inside = curve.complement() - exterior_of(curve);
    out.interior_pixels = inside.size();
    if (inside.empty()) diag.push_back("void interior: the curve encloses no pixel");

    out.valid = diag.empty();
    return out;
}

CycleValidation validate_multi_cycle(const ProximitySpace& space, const MultiCycle& cycle) {
    HCycle base{cycle.vertices, {}};
    std::vector<std::string> extra;
    for (std::size_t i = 0; i < cycle.edges.size(); ++i) {
        const PathClass& c = cycle.edges[i];
        if (c.members.empty()) throw InvalidInputError("edge " + std::to_string(i) + " has an empty path class");
        base.edges.push_back(c.members.front());
        if (cycle.vertices.empty() || cycle.edges.size() != cycle.vertices.size()) continue;
        const std::size_t from = cycle.vertices[i];
        const std::size_t to = cycle.vertices[(i + 1) % cycle.vertices.size()];
        for (std::size_t m = 1; m < c.members.size(); ++m) {
            const HPath& p = c.members[m];
            check_members(space, p.vertices);
            const std::string where = "edge " + std::to_string(i) + " member " + std::to_string(m);
            if (p.vertices.size() < 2 || p.vertices.front() != from || p.vertices.back() != to) {
                extra.push_back(where + " does not share the class endpoints");
                continue;
            }
            check_path_links(space, p, where, extra);
        }
    }

    CycleValidation out = validate_hcyc(space, base);
    out.diagnostics.insert(out.diagnostics.end(), extra.begin(), extra.end());
    out.valid = out.diagnostics.empty();
    return out;
}

PointSet cycle_points(const MultiCycle& cycle) {
    std::vector<std::size_t> v = cycle.vertices;
    for (const PathClass& c : cycle.edges)
        for (const HPath& p : c.members) v.insert(v.end(), p.vertices.begin(), p.vertices.end());
    return PointSet(std::move(v));
}

SystemValidation validate_cycle_system(const ProximitySpace& space, const CycleSystem& system) {
    SystemValidation out;
    auto& diag = out.diagnostics;
    if (system.cycles.size() < 2) diag.push_back("a cycle system needs at least two cycles");

    for (std::size_t i = 0; i < system.cycles.size(); ++i) {
        const CycleValidation v = validate_multi_cycle(space, system.cycles[i]);
        for (const auto& d : v.diagnostics) diag.push_back("cycle " + std::to_string(i) + ": " + d);
    }

    if (system.mode == SystemMode::Global) {
        PointSet common;
        for (std::size_t i = 0; i < system.cycles.size(); ++i) {
            const PointSet pts = cycle_points(system.cycles[i]);
            common = i == 0 ? pts : (common & pts);
        }
        if (common.size() == 1) {
            out.clasp = common.front();
        } else if (system.cycles.size() >= 2) {
            diag.push_back("member cycles share " + std::to_string(common.size()) + " points instead of one");
        }
    } else {
        for (std::size_t i = 0; i + 1 < system.cycles.size(); ++i) {
            const PointSet common = cycle_points(system.cycles[i]) & cycle_points(system.cycles[i + 1]);
            if (common.size() == 1) {
                out.clasps.push_back(common.front());
            } else {
                diag.push_back("cycles " + std::to_string(i) + " and " + std::to_string(i + 1) + " share " +
                               std::to_string(common.size()) + " points instead of one");
            }
        }
    }

    out.valid = diag.empty();
    return out;
}

std::vector<FeatureVector> path_description(const ProximitySpace& space, const HPath& path) {
    check_members(space, path.vertices);
    const ProbeFunction& probe = space.probe();
    std::vector<FeatureVector> out;
    std::vector<std::size_t> reps;
    for (std::size_t v : path.vertices) {
        const bool seen = std::any_of(reps.begin(), reps.end(), [&](std::size_t r) { return probe.matches(r, v); });
        if (seen) continue;
        reps.push_back(v);
        out.push_back(probe[v]);
    }
    return out;
}

bool paths_descriptively_close(const ProximitySpace& space, const HPath& h, const HPath& k) {
    check_members(space, h.vertices);
    check_members(space, k.vertices);
    const ProbeFunction& probe = space.probe();
    auto covered = [&](const HPath& from, const HPath& into) {
        return std::all_of(from.vertices.begin(), from.vertices.end(), [&](std::size_t a) {
            return std::any_of(into.vertices.begin(), into.vertices.end(),
                               [&](std::size_t b) { return probe.matches(a, b); });
        });
    };
    return covered(h, k) && covered(k, h);
}

}  // namespace prox
