#include "prox/jordan.hpp"

#include <sstream>

#include "prox/errors.hpp"

namespace prox {

namespace {

bool touches(const PixelSet& region, Pixel p, bool outside_counts) {
    for (int dy = -1; dy <= 1; ++dy)
        for (int dx = -1; dx <= 1; ++dx) {
            if (dx == 0 && dy == 0) continue;
            const Pixel q{p.x + dx, p.y + dy};
            if (!region.window().contains(q)) {
                if (outside_counts) return true;
                continue;
            }
            if (region.contains(q)) return true;
        }
    return false;
}

PixelSet member_curve(const ProximitySpace& space, const MultiCycle& cycle, Window window) {
    PixelSet curve(window);
    const std::vector<HPath> base = edge_paths(cycle);
    for (const PathClass& c : cycle.edges)
        for (const HPath& p : c.members) {
            std::vector<Pixel> px;
            for (std::size_t v : p.vertices) px.push_back(pixel_of(space, v));
            curve = curve | rasterize_polyline(px, window, false);
        }
    if (cycle.edges.empty()) {
        std::vector<Pixel> px;
        for (std::size_t v : closed_walk(base)) px.push_back(pixel_of(space, v));
        curve = curve | rasterize_polyline(px, window, true);
    }
    return curve;
}

PixelSet interior_of(const PixelSet& curve) { return curve.complement() - exterior_of(curve); }

SystemBoundaryResult from_partition(const JordanResult& r) {
    SystemBoundaryResult out{r.partition, 1, r.interior_components, r.exterior_components, false, false, false, {}};
    out.region_count_ok = r.interior_components == 1;
    out.single_exterior = r.exterior_components == 1;
    out.common_boundary = r.flags.common_boundary;
    return out;
}

}  // namespace

JordanResult partition_by_curve(const PixelSet& curve) {
    const PixelSet exterior = exterior_of(curve);
    const PixelSet interior = curve.complement() - exterior;
    JordanResult r{RegionPartition{curve, interior, exterior}, {}, 0, 0};
    r.interior_components = label_components(interior, Connectivity::Four).count;
    r.exterior_components = label_components(exterior, Connectivity::Four).count;
    r.flags.exactly_two_regions = r.interior_components == 1 && r.exterior_components == 1;
    r.flags.nonvoid_interior = !interior.empty();
    bool common = !curve.empty();
    for (Pixel p : curve.pixels()) {
        if (!touches(interior, p, false) || !touches(exterior, p, true)) {
            common = false;
            break;
        }
    }
    r.flags.common_boundary = common;
    return r;
}

JordanResult jordan_partition(std::span<const Pixel> cycle, Window window) {
    const PixelSet curve = rasterize_cycle(cycle, window);
    JordanResult r = partition_by_curve(curve);
    if (!r.flags.nonvoid_interior) throw PreconditionError("void interior: the curve encloses no pixel");
    return r;
}

JordanResult jordan_partition(const ProximitySpace& space, const HCycle& cycle, Window window) {
    const CycleValidation v = validate_hcyc(space, cycle);
    if (!v.valid) throw PreconditionError("not a valid cycle: " + v.diagnostics.front());
    std::vector<Pixel> px;
    for (std::size_t i : closed_walk(edge_paths(cycle))) px.push_back(pixel_of(space, i));
    return jordan_partition(px, window);
}

SystemBoundaryResult system_boundary_check(const ProximitySpace& space, const HCycle& cycle, Window window) {
    return from_partition(jordan_partition(space, cycle, window));
}

SystemBoundaryResult system_boundary_check(const ProximitySpace& space, const MultiCycle& cycle, Window window) {
    const CycleValidation v = validate_multi_cycle(space, cycle);
    if (!v.valid) throw PreconditionError("not a valid cycle: " + v.diagnostics.front());
    const PixelSet curve = member_curve(space, cycle, window);
    const PixelSet exterior = exterior_of(curve);
    PixelSet outer(window);
    for (Pixel p : curve.pixels())
        if (touches(exterior, p, true)) outer.insert(p);
    return from_partition(partition_by_curve(outer));
}

SystemBoundaryResult system_boundary_check(const ProximitySpace& space, const CycleSystem& system, Window window) {
    const SystemValidation v = validate_cycle_system(space, system);
    if (!v.valid) throw PreconditionError("not a valid cycle system: " + v.diagnostics.front());

    std::vector<PixelSet> curves;
    PixelSet all(window);
    for (const MultiCycle& c : system.cycles) {
        curves.push_back(member_curve(space, c, window));
        all = all | curves.back();
    }

    const JordanResult whole = partition_by_curve(all);
    SystemBoundaryResult out{whole.partition, static_cast<int>(system.cycles.size()), whole.interior_components,
                             whole.exterior_components, false, false, false, {}};
    out.region_count_ok = out.interior_regions == out.expected_interiors;
    out.single_exterior = out.exterior_regions == 1;

    bool adjacency = !all.empty();
    for (Pixel p : all.pixels()) {
        if (!touches(whole.partition.interior, p, false) || !touches(whole.partition.exterior, p, true))
            adjacency = false;
        int owners = 0;
        for (const PixelSet& c : curves) owners += c.contains(p) ? 1 : 0;
        if (owners > 1) out.non_simple_points.push_back(p);
    }

    // Each member must enclose a whole region of the union's interior.
    const Labelling regions = label_components(whole.partition.interior, Connectivity::Four);
    for (const PixelSet& c : curves) {
        const PixelSet own = interior_of(c);
        std::vector<char> inside(static_cast<std::size_t>(regions.count), 1);
        for (Pixel p : whole.partition.interior.pixels()) {
            const int l = regions.labels[whole.partition.interior.offset(p)];
            if (!own.contains(p)) inside[static_cast<std::size_t>(l)] = 0;
        }
        bool bounds_region = false;
        for (char f : inside) bounds_region = bounds_region || f;
        adjacency = adjacency && bounds_region;
    }
    out.common_boundary = adjacency;
    return out;
}

Window auto_window(const ProximitySpace& space, const std::vector<std::size_t>& points) {
    std::vector<Pixel> px;
    for (std::size_t i : points) px.push_back(pixel_of(space, i));
    return bounding_window(px);
}

std::string region_svg(const RegionPartition& partition, int scale) {
    const Window w = partition.boundary.window();
    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w.width * scale << "\" height=\""
        << w.height * scale << "\" viewBox=\"0 0 " << w.width << ' ' << w.height
        << "\" shape-rendering=\"crispEdges\">\n";
    auto layer = [&](const char* name, const PixelSet& set, const char* fill) {
        svg << "  <g id=\"" << name << "\" fill=\"" << fill << "\">\n";
        for (int y = 0; y < w.height; ++y) {
            int x = 0;
            while (x < w.width) {
                if (!set.contains({x, y})) {
                    ++x;
                    continue;
                }
                int end = x;
                while (end < w.width && set.contains({end, y})) ++end;
                svg << "    <rect x=\"" << x << "\" y=\"" << y << "\" width=\"" << end - x << "\" height=\"1\"/>\n";
                x = end;
            }
        }
        svg << "  </g>\n";
    };
    layer("exterior", partition.exterior, "#ffffff");
    layer("interior", partition.interior, "#9ecae1");
    layer("boundary", partition.boundary, "#000000");
    svg << "</svg>\n";
    return svg.str();
}

}  // namespace prox
