#include "prox/grid.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

#include "prox/errors.hpp"

namespace prox {

namespace {

constexpr int kDx4[] = {1, -1, 0, 0};
constexpr int kDy4[] = {0, 0, 1, -1};
constexpr int kDx8[] = {1, -1, 0, 0, 1, 1, -1, -1};
constexpr int kDy8[] = {0, 0, 1, -1, 1, -1, 1, -1};

std::string describe(Pixel p) { return "(" + std::to_string(p.x) + "," + std::to_string(p.y) + ")"; }

void check_same_window(const PixelSet& a, const PixelSet& b) {
    if (!(a.window() == b.window())) throw InvalidInputError("pixel sets live in different windows");
}

}  // namespace

PixelSet::PixelSet(Window window) : window_(window) {
    if (window.width <= 0 || window.height <= 0) throw InvalidInputError("window must have positive size");
    bits_.assign(window.area(), 0);
}

PixelSet::PixelSet(Window window, std::span<const Pixel> pixels) : PixelSet(window) {
    for (Pixel p : pixels) insert(p);
}

bool PixelSet::contains(Pixel p) const { return window_.contains(p) && bits_[offset(p)] != 0; }

void PixelSet::insert(Pixel p) {
    if (!window_.contains(p))
        throw OutOfWindowError("pixel " + describe(p) + " is outside the " + std::to_string(window_.width) + "x" +
                               std::to_string(window_.height) + " window");
    auto& b = bits_[offset(p)];
    if (!b) {
        b = 1;
        ++count_;
    }
}

void PixelSet::erase(Pixel p) {
    if (!window_.contains(p)) return;
    auto& b = bits_[offset(p)];
    if (b) {
        b = 0;
        --count_;
    }
}

std::vector<Pixel> PixelSet::pixels() const {
    std::vector<Pixel> out;
    out.reserve(count_);
    for (int y = 0; y < window_.height; ++y)
        for (int x = 0; x < window_.width; ++x)
            if (bits_[offset({x, y})]) out.push_back({x, y});
    return out;
}

PixelSet PixelSet::complement() const {
    PixelSet r(window_);
    for (std::size_t i = 0; i < bits_.size(); ++i) r.bits_[i] = bits_[i] ? 0 : 1;
    r.count_ = bits_.size() - count_;
    return r;
}

namespace {

template <class Op>
PixelSet combine(const PixelSet& a, const PixelSet& b, Op op) {
    check_same_window(a, b);
    PixelSet r(a.window());
    for (int y = 0; y < a.window().height; ++y)
        for (int x = 0; x < a.window().width; ++x)
            if (op(a.contains({x, y}), b.contains({x, y}))) r.insert({x, y});
    return r;
}

}  // namespace

PixelSet operator|(const PixelSet& a, const PixelSet& b) {
    return combine(a, b, [](bool p, bool q) { return p || q; });
}
PixelSet operator&(const PixelSet& a, const PixelSet& b) {
    return combine(a, b, [](bool p, bool q) { return p && q; });
}
PixelSet operator-(const PixelSet& a, const PixelSet& b) {
    return combine(a, b, [](bool p, bool q) { return p && !q; });
}

Labelling label_components(const PixelSet& set, Connectivity connectivity) {
    const Window w = set.window();
    const int steps = connectivity == Connectivity::Four ? 4 : 8;
    const int* dx = connectivity == Connectivity::Four ? kDx4 : kDx8;
    const int* dy = connectivity == Connectivity::Four ? kDy4 : kDy8;

    Labelling out;
    out.labels.assign(w.area(), -1);
    std::vector<Pixel> stack;
    for (int y = 0; y < w.height; ++y)
        for (int x = 0; x < w.width; ++x) {
            const Pixel start{x, y};
            if (!set.contains(start) || out.labels[set.offset(start)] >= 0) continue;
            const int label = out.count++;
            out.labels[set.offset(start)] = label;
            stack.push_back(start);
            while (!stack.empty()) {
                const Pixel p = stack.back();
                stack.pop_back();
                for (int k = 0; k < steps; ++k) {
                    const Pixel q{p.x + dx[k], p.y + dy[k]};
                    if (!set.contains(q) || out.labels[set.offset(q)] >= 0) continue;
                    out.labels[set.offset(q)] = label;
                    stack.push_back(q);
                }
            }
        }
    return out;
}

std::vector<Pixel> digital_segment(Pixel a, Pixel b) {
    std::vector<Pixel> out;
    const int dx = std::abs(b.x - a.x);
    const int dy = -std::abs(b.y - a.y);
    const int sx = a.x < b.x ? 1 : -1;
    const int sy = a.y < b.y ? 1 : -1;
    int err = dx + dy;
    Pixel p = a;
    while (true) {
        out.push_back(p);
        if (p == b) break;
        const int e2 = 2 * err;
        if (e2 >= dy) {
            err += dy;
            p.x += sx;
        }
        if (e2 <= dx) {
            err += dx;
            p.y += sy;
        }
    }
    return out;
}

PixelSet rasterize_cycle(std::span<const Pixel> vertices, Window window) {
    if (vertices.size() < 3) throw SelfIntersectionError("a cycle needs at least three vertices");
    for (Pixel v : vertices)
        if (!window.contains(v)) throw OutOfWindowError("vertex " + describe(v) + " is outside the window");
    for (std::size_t i = 0; i < vertices.size(); ++i)
        for (std::size_t j = i + 1; j < vertices.size(); ++j)
            if (vertices[i] == vertices[j]) throw SelfIntersectionError("vertex " + describe(vertices[i]) + " repeats");

    PixelSet out(window);
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        const auto seg = digital_segment(vertices[i], vertices[(i + 1) % vertices.size()]);
        for (std::size_t k = 0; k + 1 < seg.size(); ++k) {
            if (out.contains(seg[k])) throw SelfIntersectionError("curve revisits pixel " + describe(seg[k]));
            out.insert(seg[k]);
        }
    }
    return out;
}

PixelSet rasterize_polyline(std::span<const Pixel> vertices, Window window, bool closed) {
    PixelSet out(window);
    if (vertices.empty()) return out;
    out.insert(vertices.front());
    const std::size_t segments = closed ? vertices.size() : vertices.size() - 1;
    for (std::size_t i = 0; i < segments; ++i)
        for (Pixel p : digital_segment(vertices[i], vertices[(i + 1) % vertices.size()])) out.insert(p);
    return out;
}

ClosureParts closure_boundary_interior(const PixelSet& set) {
    const Window w = set.window();
    ClosureParts parts{set, PixelSet(w), PixelSet(w), set.complement()};
    for (Pixel p : set.pixels()) {
        bool edge = false;
        for (int k = 0; k < 8 && !edge; ++k) edge = !set.contains({p.x + kDx8[k], p.y + kDy8[k]});
        (edge ? parts.boundary : parts.interior).insert(p);
    }
    return parts;
}

PixelSet exterior_of(const PixelSet& curve) {
    const Window w = curve.window();
    const PixelSet free = curve.complement();
    const Labelling lab = label_components(free, Connectivity::Four);
    std::vector<char> touches(static_cast<std::size_t>(lab.count), 0);
    for (int y = 0; y < w.height; ++y)
        for (int x = 0; x < w.width; ++x) {
            if (x != 0 && y != 0 && x != w.width - 1 && y != w.height - 1) continue;
            const int l = lab.labels[free.offset({x, y})];
            if (l >= 0) touches[static_cast<std::size_t>(l)] = 1;
        }
    PixelSet out(w);
    for (int y = 0; y < w.height; ++y)
        for (int x = 0; x < w.width; ++x) {
            const int l = lab.labels[free.offset({x, y})];
            if (l >= 0 && touches[static_cast<std::size_t>(l)]) out.insert({x, y});
        }
    return out;
}

GridBetti grid_homology(const PixelSet& set) {
    const Window w = set.window();
    const PixelSet free = set.complement();
    const Labelling lab = label_components(free, Connectivity::Four);
    std::vector<char> touches(static_cast<std::size_t>(lab.count), 0);
    for (int y = 0; y < w.height; ++y)
        for (int x = 0; x < w.width; ++x) {
            if (x != 0 && y != 0 && x != w.width - 1 && y != w.height - 1) continue;
            const int l = lab.labels[free.offset({x, y})];
            if (l >= 0) touches[static_cast<std::size_t>(l)] = 1;
        }
    GridBetti b;
    b.b0 = label_components(set, Connectivity::Eight).count;
    b.b1 = static_cast<int>(std::count(touches.begin(), touches.end(), 0));
    return b;
}

Window bounding_window(std::span<const Pixel> pixels, int margin) {
    int mx = 0;
    int my = 0;
    for (Pixel p : pixels) {
        if (p.x < 0 || p.y < 0) throw OutOfWindowError("pixel " + describe(p) + " has a negative coordinate");
        mx = std::max(mx, p.x);
        my = std::max(my, p.y);
    }
    return Window{mx + 1 + margin, my + 1 + margin};
}

}  // namespace prox
