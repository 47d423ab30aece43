#pragma once

// Independent reference computations. Nothing here calls into the library's
// algorithms; only plain data types are shared.

#include <cmath>
#include <cstdint>
#include <numeric>
#include <utility>
#include <vector>

#include "prox/grid.hpp"
#include "prox/proximity.hpp"

namespace oracle {

struct UnionFind {
    std::vector<std::size_t> parent;

    explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    std::size_t find(std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    bool unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[a] = b;
        return true;
    }
    std::size_t components() {
        std::size_t c = 0;
        for (std::size_t i = 0; i < parent.size(); ++i) c += find(i) == i;
        return c;
    }
};

struct GraphBetti {
    std::size_t b0 = 0;
    std::size_t b1 = 0;
};

/// b0 by union-find; b1 by counting even-degree edge subsets (the cycle
/// space has 2^b1 elements), walking all subsets in Gray-code order.
inline GraphBetti graph_betti(std::size_t vertices, const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
    UnionFind uf(vertices);
    for (auto [a, b] : edges) uf.unite(a, b);
    GraphBetti out;
    out.b0 = uf.components();

    const std::size_t m = edges.size();
    std::vector<std::uint64_t> flip(m);
    for (std::size_t e = 0; e < m; ++e) {
        const auto [a, b] = edges[e];
        flip[e] = (std::uint64_t{1} << a) ^ (std::uint64_t{1} << b);  // a loop flips nothing
    }
    std::uint64_t parity = 0;
    std::uint64_t even = 1;  // the empty subset
    for (std::uint64_t i = 1; i < (std::uint64_t{1} << m); ++i) {
        parity ^= flip[static_cast<std::size_t>(__builtin_ctzll(i))];
        even += parity == 0;
    }
    while (even > 1) {
        even >>= 1;
        ++out.b1;
    }
    return out;
}

struct GridBetti {
    int b0 = 0;
    int b1 = 0;
};

/// 8-connected foreground components, and 4-connected background components
/// that do not reach the border of a one-pixel padding ring.
inline GridBetti grid_betti(const prox::PixelSet& set) {
    const int w = set.window().width + 2;
    const int h = set.window().height + 2;
    auto fg = [&](int x, int y) { return set.contains({x - 1, y - 1}); };
    auto id = [&](int x, int y) { return static_cast<std::size_t>(y) * static_cast<std::size_t>(w) + static_cast<std::size_t>(x); };
    UnionFind uf(static_cast<std::size_t>(w) * static_cast<std::size_t>(h));
    for (int y = 0; y < h; ++y)
        for (int x = 0; x < w; ++x) {
            const bool f = fg(x, y);
            for (int dy = -1; dy <= 1; ++dy)
                for (int dx = -1; dx <= 1; ++dx) {
                    if (dx == 0 && dy == 0) continue;
                    const int nx = x + dx, ny = y + dy;
                    if (nx < 0 || ny < 0 || nx >= w || ny >= h || fg(nx, ny) != f) continue;
                    if (!f && dx != 0 && dy != 0) continue;  // background is 4-connected
                    uf.unite(id(x, y), id(nx, ny));
                }
        }
    GridBetti out;
    const std::size_t outside = uf.find(id(0, 0));
    std::vector<char> seen(static_cast<std::size_t>(w) * static_cast<std::size_t>(h), 0);
    for (int y = 0; y < h; ++y)
        for (int x = 0; x < w; ++x) {
            const std::size_t r = uf.find(id(x, y));
            if (seen[r]) continue;
            seen[r] = 1;
            if (fg(x, y)) ++out.b0;
            else if (r != outside) ++out.b1;
        }
    return out;
}

/// Metric closure straight from coordinates: points within tau of the set.
inline std::vector<std::size_t> metric_closure(const std::vector<prox::Coord>& pts, const std::vector<std::size_t>& a,
                                               double tau) {
    std::vector<std::size_t> out;
    for (std::size_t x = 0; x < pts.size(); ++x)
        for (std::size_t y : a)
            if (std::hypot(pts[x].x - pts[y].x, pts[x].y - pts[y].y) <= tau) {
                out.push_back(x);
                break;
            }
    return out;
}

inline double min_distance(const std::vector<prox::Coord>& a, const std::vector<prox::Coord>& b) {
    double best = INFINITY;
    for (const auto& p : a)
        for (const auto& q : b) best = std::min(best, std::hypot(p.x - q.x, p.y - q.y));
    return best;
}

}  // namespace oracle
