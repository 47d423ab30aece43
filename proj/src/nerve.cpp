#include "prox/nerve.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <functional>
#include <numeric>

#include "prox/descriptive.hpp"
#include "prox/errors.hpp"

namespace prox {

Cover::Cover(SpacePtr ambient, std::vector<PointSet> elements)
    : ambient_(std::move(ambient)), elements_(std::move(elements)) {
    if (elements_.empty()) throw EmptyCoverError("a cover needs at least one element");
    PointSet all;
    for (const PointSet& e : elements_) {
        ambient_->check_members(e);
        all = all | e;
    }
    if (all != ambient_->all()) throw InvalidInputError("cover elements do not cover the space");
}

PixelCover::PixelCover(std::vector<PixelSet> elements) : elements_(std::move(elements)) {
    if (elements_.empty()) throw EmptyCoverError("a cover needs at least one element");
    for (const PixelSet& e : elements_)
        if (!(e.window() == elements_.front().window()))
            throw InvalidInputError("cover elements live in different windows");
}

PixelSet PixelCover::united() const {
    PixelSet all(window());
    for (const PixelSet& e : elements_) all = all | e;
    return all;
}

PixelSet Rect::pixels(Window window) const {
    PixelSet s(window);
    for (int y = std::min(y0, y1); y <= std::max(y0, y1); ++y)
        for (int x = std::min(x0, x1); x <= std::max(x0, x1); ++x) s.insert({x, y});
    return s;
}

// ---------------------------------------------------------------------------

SimplicialComplex::SimplicialComplex(std::size_t vertices) : vertices_(vertices), vertex_present_(vertices, 0) {}

void SimplicialComplex::add(Simplex s) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    if (s.empty() || s.size() > 3) throw InvalidInputError("simplices must have one to three vertices");
    if (s.back() >= vertices_) {
        vertices_ = s.back() + 1;
        vertex_present_.resize(vertices_, 0);
    }
    if (s.size() == 1) {
        vertex_present_[s[0]] = 1;
        return;
    }
    auto& bucket = s.size() == 2 ? edges_ : triangles_;
    auto it = std::lower_bound(bucket.begin(), bucket.end(), s);
    if (it == bucket.end() || *it != s) bucket.insert(it, std::move(s));
}

bool SimplicialComplex::contains(const Simplex& s) const {
    Simplex t = s;
    std::sort(t.begin(), t.end());
    if (t.size() == 1) return t[0] < vertices_ && vertex_present_[t[0]];
    const auto& bucket = t.size() == 2 ? edges_ : triangles_;
    return t.size() <= 3 && std::binary_search(bucket.begin(), bucket.end(), t);
}

std::vector<Simplex> SimplicialComplex::simplices(std::size_t dim) const {
    if (dim == 0) {
        std::vector<Simplex> out;
        for (std::size_t v = 0; v < vertices_; ++v)
            if (vertex_present_[v]) out.push_back({v});
        return out;
    }
    if (dim == 1) return edges_;
    if (dim == 2) return triangles_;
    return {};
}

std::vector<Simplex> SimplicialComplex::simplices() const {
    std::vector<Simplex> out = simplices(0);
    out.insert(out.end(), edges_.begin(), edges_.end());
    out.insert(out.end(), triangles_.begin(), triangles_.end());
    return out;
}

bool SimplicialComplex::downward_closed() const {
    for (const Simplex& e : edges_)
        if (!vertex_present_[e[0]] || !vertex_present_[e[1]]) return false;
    for (const Simplex& t : triangles_)
        if (!contains({t[0], t[1]}) || !contains({t[0], t[2]}) || !contains({t[1], t[2]})) return false;
    return true;
}

std::size_t gf2_rank(std::vector<std::vector<std::uint64_t>> rows) {
    std::size_t rank = 0;
    if (rows.empty()) return 0;
    const std::size_t words = rows.front().size();
    for (std::size_t col = 0; col < words * 64 && rank < rows.size(); ++col) {
        const std::size_t w = col / 64;
        const std::uint64_t bit = std::uint64_t{1} << (col % 64);
        std::size_t pivot = rank;
        while (pivot < rows.size() && !(rows[pivot][w] & bit)) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[rank], rows[pivot]);
        for (std::size_t r = 0; r < rows.size(); ++r)
            if (r != rank && (rows[r][w] & bit))
                for (std::size_t k = 0; k < words; ++k) rows[r][k] ^= rows[rank][k];
        ++rank;
    }
    return rank;
}

Betti betti(const SimplicialComplex& complex) {
    if (!complex.downward_closed()) throw NonClosedComplexError("a face of some simplex is missing");
    const auto vertices = complex.simplices(0);
    const auto edges = complex.simplices(1);
    const auto triangles = complex.simplices(2);

    const std::size_t vwords = complex.vertex_count() / 64 + 1;
    std::vector<std::vector<std::uint64_t>> d1;
    for (const Simplex& e : edges) {
        std::vector<std::uint64_t> row(vwords, 0);
        for (std::size_t v : e) row[v / 64] ^= std::uint64_t{1} << (v % 64);
        d1.push_back(std::move(row));
    }

    const std::size_t ewords = edges.size() / 64 + 1;
    std::vector<std::vector<std::uint64_t>> d2;
    for (const Simplex& t : triangles) {
        std::vector<std::uint64_t> row(ewords, 0);
        for (const Simplex& face : {Simplex{t[0], t[1]}, Simplex{t[0], t[2]}, Simplex{t[1], t[2]}}) {
            const auto idx = static_cast<std::size_t>(std::lower_bound(edges.begin(), edges.end(), face) - edges.begin());
            row[idx / 64] ^= std::uint64_t{1} << (idx % 64);
        }
        d2.push_back(std::move(row));
    }

    const std::size_t r1 = gf2_rank(std::move(d1));
    const std::size_t r2 = gf2_rank(std::move(d2));
    return Betti{vertices.size() - r1, edges.size() - r1 - r2};
}

// ---------------------------------------------------------------------------

FreeGroupPresentation free_group_presentation(const Graph& graph) {
    std::vector<std::size_t> order(graph.edges.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    return free_group_presentation(graph, order);
}

FreeGroupPresentation free_group_presentation(const Graph& graph, std::span<const std::size_t> edge_order) {
    const std::size_t n = graph.vertex_count;
    for (const auto& [u, v] : graph.edges)
        if (u >= n || v >= n) throw InvalidInputError("edge endpoint outside the graph");
    if (edge_order.size() != graph.edges.size()) throw InvalidInputError("edge order must list every edge once");

    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };

    std::vector<char> seen(graph.edges.size(), 0);
    std::vector<char> in_tree(graph.edges.size(), 0);
    std::vector<std::vector<std::pair<std::size_t, std::size_t>>> adj(n);  // (neighbour, edge)
    std::vector<std::size_t> chords;
    for (std::size_t e : edge_order) {
        if (e >= graph.edges.size() || seen[e]) throw InvalidInputError("edge order must list every edge once");
        seen[e] = 1;
        const auto [u, v] = graph.edges[e];
        const std::size_t ru = find(u);
        const std::size_t rv = find(v);
        if (ru == rv) {
            chords.push_back(e);
            continue;
        }
        parent[ru] = rv;
        in_tree[e] = 1;
        adj[u].emplace_back(v, e);
        adj[v].emplace_back(u, e);
    }

    // Root every tree at its smallest vertex; record depth and parent edge.
    constexpr std::size_t none = static_cast<std::size_t>(-1);
    std::vector<std::size_t> depth(n, none);
    std::vector<std::size_t> up(n, none);
    std::vector<std::size_t> up_edge(n, none);
    for (std::size_t root = 0; root < n; ++root) {
        if (depth[root] != none) continue;
        depth[root] = 0;
        std::vector<std::size_t> queue{root};
        for (std::size_t qi = 0; qi < queue.size(); ++qi) {
            const std::size_t x = queue[qi];
            for (const auto& [y, e] : adj[x]) {
                if (depth[y] != none) continue;
                depth[y] = depth[x] + 1;
                up[y] = x;
                up_edge[y] = e;
                queue.push_back(y);
            }
        }
    }

    FreeGroupPresentation out;
    for (std::size_t e : chords) {
        auto [u, v] = graph.edges[e];
        std::vector<std::size_t> cycle{e};
        std::vector<std::size_t> tail;
        while (u != v) {
            if (depth[u] >= depth[v]) {
                cycle.push_back(up_edge[u]);
                u = up[u];
            } else {
                tail.push_back(up_edge[v]);
                v = up[v];
            }
        }
        cycle.insert(cycle.end(), tail.rbegin(), tail.rend());
        out.generators.push_back(std::move(cycle));
    }
    out.rank = out.generators.size();
    return out;
}

SimplicialComplex complex_of(const Graph& graph) {
    SimplicialComplex c(graph.vertex_count);
    for (std::size_t v = 0; v < graph.vertex_count; ++v) c.add({v});
    for (const auto& [u, v] : graph.edges)
        if (u != v) c.add({u, v});
    return c;
}

// ---------------------------------------------------------------------------

namespace {

template <class Intersect>
void enumerate_nonempty(std::size_t m, std::size_t max_size, Intersect intersect,
                        const std::function<void(const std::vector<std::size_t>&)>& visit) {
    std::vector<std::size_t> members;
    std::function<void(std::size_t)> dfs = [&](std::size_t next) {
        for (std::size_t i = next; i < m; ++i) {
            members.push_back(i);
            if (intersect(members)) {
                visit(members);
                if (members.size() < max_size) dfs(i + 1);
            }
            members.pop_back();
        }
    };
    dfs(0);
}

PointSet plain_intersection(const Cover& cover, const std::vector<std::size_t>& members) {
    PointSet s = cover.elements()[members.front()];
    for (std::size_t k = 1; k < members.size(); ++k) s = s & cover.elements()[members[k]];
    return s;
}

PointSet family_intersection(const Cover& cover, const std::vector<std::size_t>& members, Mode mode) {
    if (mode == Mode::Plain) return plain_intersection(cover, members);
    std::vector<PointSet> family;
    for (std::size_t i : members) family.push_back(cover.elements()[i]);
    return descriptive_intersection(*cover.ambient(), family);
}

PixelSet pixel_intersection(const PixelCover& cover, const std::vector<std::size_t>& members) {
    PixelSet s = cover.elements()[members.front()];
    for (std::size_t k = 1; k < members.size(); ++k) s = s & cover.elements()[members[k]];
    return s;
}

}  // namespace

NerveComplex build_nerve(const Cover& cover, Mode mode) {
    if (mode == Mode::Descriptive) (void)cover.ambient()->probe();
    NerveComplex nerve(cover.size());
    enumerate_nonempty(
        cover.size(), 3, [&](const std::vector<std::size_t>& m) { return !family_intersection(cover, m, mode).empty(); },
        [&](const std::vector<std::size_t>& m) { nerve.add(m); });
    return nerve;
}

NerveComplex build_nerve(const PixelCover& cover) {
    NerveComplex nerve(cover.size());
    enumerate_nonempty(
        cover.size(), 3, [&](const std::vector<std::size_t>& m) { return !pixel_intersection(cover, m).empty(); },
        [&](const std::vector<std::size_t>& m) { nerve.add(m); });
    return nerve;
}

GoodCoverReport check_good_cover(const Cover& cover, GoodCoverMode mode, GoodCoverOptions options) {
    const Mode meet = mode == GoodCoverMode::Topological ? Mode::Plain : Mode::Descriptive;
    if (meet == Mode::Descriptive) (void)cover.ambient()->probe();
    const ContractibilityMode cmode = mode == GoodCoverMode::Topological   ? ContractibilityMode::GridTopological
                                      : mode == GoodCoverMode::Descriptive ? ContractibilityMode::Descriptive
                                                                           : ContractibilityMode::DegenerateDescriptive;
    GoodCoverReport report;
    enumerate_nonempty(
        cover.size(), cover.size(),
        [&](const std::vector<std::size_t>& m) { return !family_intersection(cover, m, meet).empty(); },
        [&](const std::vector<std::size_t>& m) {
            if (m.size() < options.min_order) return;
            const PointSet s = family_intersection(cover, m, meet);
            IntersectionCheck check{m, s.size(), false, ""};
            if (s.size() == 1) {
                check.contractible = true;
                check.certificate = "single point '" + cover.ambient()->point(s.front()).id + "'";
            } else {
                const auto sub = std::make_shared<const ProximitySpace>(cover.ambient()->subspace(s));
                const Contractibility c = contractibility(sub, cmode);
                check.contractible = c.certified;
                check.certificate = c.certificate;
            }
            report.good = report.good && check.contractible;
            report.intersections.push_back(std::move(check));
        });
    return report;
}

GoodCoverReport check_good_cover(const PixelCover& cover, GoodCoverOptions options) {
    GoodCoverReport report;
    enumerate_nonempty(
        cover.size(), cover.size(), [&](const std::vector<std::size_t>& m) { return !pixel_intersection(cover, m).empty(); },
        [&](const std::vector<std::size_t>& m) {
            if (m.size() < options.min_order) return;
            const PixelSet s = pixel_intersection(cover, m);
            IntersectionCheck check{m, s.size(), false, ""};
            const GridBetti b = grid_homology(s);
            check.contractible = b.b0 == 1 && b.b1 == 0;
            check.certificate = s.size() == 1 ? std::string("single pixel")
                                              : "grid surrogate: b0=" + std::to_string(b.b0) +
                                                    ", b1=" + std::to_string(b.b1);
            report.good = report.good && check.contractible;
            report.intersections.push_back(std::move(check));
        });
    return report;
}

GoodCoverReport check_cycle_system_cover(const SpacePtr& space, const CycleSystem& system, GoodCoverMode mode) {
    std::vector<PointSet> members;
    PointSet all;
    for (const MultiCycle& c : system.cycles) {
        members.push_back(cycle_points(c));
        space->check_members(members.back());
        all = all | members.back();
    }
    // Re-index the members inside the subspace spanned by their union.
    const auto sub = std::make_shared<const ProximitySpace>(space->subspace(all));
    std::vector<PointSet> elements;
    for (const PointSet& m : members) {
        std::vector<std::size_t> idx;
        for (std::size_t i : m) idx.push_back(sub->index_of(space->point(i).id));
        elements.emplace_back(std::move(idx));
    }
    return check_good_cover(Cover(sub, std::move(elements)), mode, GoodCoverOptions{2});
}

NerveUnionResult nerve_vs_union_check(const PixelCover& cover) {
    for (std::size_t i = 0; i < cover.size(); ++i) {
        const PixelSet& e = cover.elements()[i];
        const auto px = e.pixels();
        if (px.empty()) throw NonConvexElementError("element " + std::to_string(i) + " is empty");
        int x0 = px.front().x, x1 = x0, y0 = px.front().y, y1 = y0;
        for (Pixel p : px) {
            x0 = std::min(x0, p.x);
            x1 = std::max(x1, p.x);
            y0 = std::min(y0, p.y);
            y1 = std::max(y1, p.y);
        }
        if (static_cast<std::size_t>(x1 - x0 + 1) * static_cast<std::size_t>(y1 - y0 + 1) != e.size())
            throw NonConvexElementError("element " + std::to_string(i) + " is not a filled rectangle");
    }

    NerveUnionResult out;
    out.nerve = betti(build_nerve(cover));
    const GridBetti u = grid_homology(cover.united());
    out.united = Betti{static_cast<std::size_t>(u.b0), static_cast<std::size_t>(u.b1)};
    out.equal = out.nerve == out.united;

    for (std::size_t i = 0; i < cover.size(); ++i)
        for (std::size_t j = i + 1; j < cover.size(); ++j) {
            const PixelSet& a = cover.elements()[i];
            const PixelSet& b = cover.elements()[j];
            if (!(a & b).empty()) continue;
            bool touch = false;
            for (Pixel p : a.pixels()) {
                for (int dy = -1; dy <= 1 && !touch; ++dy)
                    for (int dx = -1; dx <= 1 && !touch; ++dx) touch = b.contains({p.x + dx, p.y + dy});
                if (touch) break;
            }
            if (touch) out.touching_pairs.emplace_back(i, j);
        }
    return out;
}

// ---------------------------------------------------------------------------

namespace {

double dist(Coord a, Coord b) { return std::hypot(a.x - b.x, a.y - b.y); }

double clamp_cos(double c) {
    constexpr double slack = 1e-12;
    if (c > 1.0 + slack || c < -1.0 - slack) throw DegenerateTriangleError("no model triangle with these sides");
    return std::clamp(c, -1.0, 1.0);
}

}  // namespace

double comparison_angle(Coord a, Coord b, Coord c, double kappa) {
    if (!std::isfinite(kappa)) throw InvalidInputError("curvature must be finite");
    const double ab = dist(a, b);
    const double cb = dist(c, b);
    const double ac = dist(a, c);
    if (ab == 0.0 || cb == 0.0 || ac == 0.0) throw DegenerateTriangleError("triangle has coincident vertices");
    const double tol = 1e-12 * (ab + cb + ac);
    if (ab > cb + ac + tol || cb > ab + ac + tol || ac > ab + cb + tol)
        throw DegenerateTriangleError("side lengths violate the triangle inequality");

    if (kappa == 0.0) return std::acos(clamp_cos((ab * ab + cb * cb - ac * ac) / (2.0 * ab * cb)));
    if (kappa > 0.0) {
        const double s = std::sqrt(kappa);
        const double x = ab * s, y = cb * s, z = ac * s;
        if (x >= std::numbers::pi || y >= std::numbers::pi || z >= std::numbers::pi || x + y + z >= 2 * std::numbers::pi)
            throw DegenerateTriangleError("triangle does not fit on the model sphere");
        return std::acos(clamp_cos((std::cos(z) - std::cos(x) * std::cos(y)) / (std::sin(x) * std::sin(y))));
    }
    const double s = std::sqrt(-kappa);
    const double x = ab * s, y = cb * s, z = ac * s;
    return std::acos(clamp_cos((std::cosh(x) * std::cosh(y) - std::cosh(z)) / (std::sinh(x) * std::sinh(y))));
}

QuadrupleResult alexandrov_quadruple_check(const AlexandrovQuadruple& q) {
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = i + 1; j < 4; ++j)
            if (q.points[i] == q.points[j]) throw DegenerateTriangleError("quadruple points must be distinct");
    QuadrupleResult r;
    const Coord p = q.points[0];
    for (std::size_t i = 1; i <= 3; ++i)
        for (std::size_t j = i + 1; j <= 3; ++j) {
            const Coord a = q.points[i];
            const Coord b = q.points[j];
            r.angle_sum += comparison_angle(a, p, b, q.kappa);
            r.euclidean_angle_sum += comparison_angle(a, p, b, 0.0);
            r.max_perimeter = std::max(r.max_perimeter, dist(p, a) + dist(p, b) + dist(a, b));
        }
    if (q.kappa > 0.0) r.perimeter_condition = r.max_perimeter < std::numbers::pi / std::sqrt(q.kappa);
    r.within_two_pi = r.angle_sum <= 2 * std::numbers::pi + 1e-9;
    return r;
}

}  // namespace prox
