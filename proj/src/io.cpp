#include "prox/io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "prox/errors.hpp"

namespace prox::io {

namespace {

[[noreturn]] void fail(const std::string& file, const std::string& field, const std::string& reason) {
    throw ParseError(file, field.empty() ? "(document)" : field, reason);
}

std::string sub(const std::string& field, const std::string& key) {
    return field.empty() ? key : field + "." + key;
}

std::string at(const std::string& field, std::size_t i) {
    return field + "[" + std::to_string(i) + "]";
}

const Json& require(const Json& j, const std::string& key, const std::string& file, const std::string& field) {
    if (!j.is_object()) fail(file, field, "expected an object");
    const auto it = j.find(key);
    if (it == j.end()) fail(file, sub(field, key), "missing");
    return *it;
}

const Json* optional(const Json& j, const std::string& key) {
    if (!j.is_object()) return nullptr;
    const auto it = j.find(key);
    return it == j.end() || it->is_null() ? nullptr : &*it;
}

const Json& array(const Json& j, const std::string& file, const std::string& field) {
    if (!j.is_array()) fail(file, field, "expected an array");
    return j;
}

double number(const Json& j, const std::string& file, const std::string& field) {
    if (!j.is_number()) fail(file, field, "expected a number");
    const double v = j.get<double>();
    if (!std::isfinite(v)) fail(file, field, "not finite");
    return v;
}

std::size_t count(const Json& j, const std::string& file, const std::string& field) {
    if (!j.is_number_integer() || j.get<long long>() < 0) fail(file, field, "expected a nonnegative integer");
    return j.get<std::size_t>();
}

int integer(const Json& j, const std::string& file, const std::string& field) {
    if (!j.is_number_integer()) fail(file, field, "expected an integer");
    return j.get<int>();
}

std::string text(const Json& j, const std::string& file, const std::string& field) {
    if (!j.is_string()) fail(file, field, "expected a string");
    return j.get<std::string>();
}

std::vector<std::string> id_list(const Json& j, const std::string& file, const std::string& field) {
    std::vector<std::string> out;
    const Json& a = array(j, file, field);
    for (std::size_t i = 0; i < a.size(); ++i) out.push_back(text(a[i], file, at(field, i)));
    return out;
}

std::size_t index(const ProximitySpace& space, const Json& j, const std::string& file, const std::string& field) {
    const std::string id = text(j, file, field);
    const auto i = space.find(id);
    if (!i) fail(file, field, "unknown point '" + id + "'");
    return *i;
}

std::vector<std::size_t> indices(const ProximitySpace& space, const Json& j, const std::string& file,
                                 const std::string& field) {
    std::vector<std::size_t> out;
    const Json& a = array(j, file, field);
    for (std::size_t i = 0; i < a.size(); ++i) out.push_back(index(space, a[i], file, at(field, i)));
    return out;
}

Pixel pixel(const Json& j, const std::string& file, const std::string& field) {
    const Json& a = array(j, file, field);
    if (a.size() != 2) fail(file, field, "expected [x, y]");
    return Pixel{integer(a[0], file, at(field, 0)), integer(a[1], file, at(field, 1))};
}

Window window(const Json& j, const std::string& file, const std::string& field) {
    const Json& a = array(j, file, field);
    if (a.size() != 2) fail(file, field, "expected [width, height]");
    const int w = integer(a[0], file, at(field, 0));
    const int h = integer(a[1], file, at(field, 1));
    if (w <= 0 || h <= 0) fail(file, field, "window dimensions must be positive");
    return Window{w, h};
}

FeatureVector features(const Json& j, const std::string& file, const std::string& field) {
    FeatureVector out;
    const Json& a = array(j, file, field);
    for (std::size_t i = 0; i < a.size(); ++i) out.push_back(number(a[i], file, at(field, i)));
    return out;
}

// Library errors raised while building objects from already-typed fields.
template <class F>
auto guarded(const std::string& file, const std::string& field, F&& build) {
    try {
        return build();
    } catch (const ParseError&) {
        throw;
    } catch (const Error& e) {
        fail(file, field, e.what());
    }
}

}  // namespace

ProximitySpace parse_space(const Json& j, const std::string& file, const std::string& field) {
    if (!j.is_object()) fail(file, field, "expected a space object");
    const std::string pf = sub(field, "points");
    const Json& pts = array(require(j, "points", file, field), file, pf);
    std::vector<Point> points;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        const std::string f = at(pf, i);
        Point p;
        p.id = text(require(pts[i], "id", file, f), file, sub(f, "id"));
        if (const Json* c = optional(pts[i], "coords")) {
            const Json& a = array(*c, file, sub(f, "coords"));
            if (a.size() != 2) fail(file, sub(f, "coords"), "expected [x, y]");
            p.coords = Coord{number(a[0], file, sub(f, "coords[0]")), number(a[1], file, sub(f, "coords[1]"))};
        }
        if (const Json* v = optional(pts[i], "features")) p.features = features(*v, file, sub(f, "features"));
        points.push_back(std::move(p));
    }

    const std::string rf = sub(field, "rule");
    const Json& rule = require(j, "rule", file, field);
    const std::string kind = text(require(rule, "kind", file, rf), file, sub(rf, "kind"));
    ProximityRule r;
    if (kind == "metric") {
        const double tau = number(require(rule, "tau", file, rf), file, sub(rf, "tau"));
        if (tau < 0.0) fail(file, sub(rf, "tau"), "must be nonnegative");
        r = MetricGap{tau};
    } else if (kind == "relation") {
        ExplicitRelation rel;
        bool symmetric = false;
        if (const Json* s = optional(rule, "symmetric")) {
            if (!s->is_boolean()) fail(file, sub(rf, "symmetric"), "expected a boolean");
            symmetric = s->get<bool>();
        }
        if (const Json* pairs = optional(rule, "pairs")) {
            const std::string ff = sub(rf, "pairs");
            array(*pairs, file, ff);
            for (std::size_t i = 0; i < pairs->size(); ++i) {
                const auto ids = id_list((*pairs)[i], file, at(ff, i));
                if (ids.size() != 2) fail(file, at(ff, i), "expected a pair of ids");
                rel.pairs.emplace_back(ids[0], ids[1]);
                if (symmetric) rel.pairs.emplace_back(ids[1], ids[0]);
            }
        }
        r = std::move(rel);
    } else {
        fail(file, sub(rf, "kind"), "expected \"relation\" or \"metric\"");
    }

    double tolerance = 0.0;
    if (const Json* t = optional(j, "feature_tolerance")) {
        tolerance = number(*t, file, sub(field, "feature_tolerance"));
        if (tolerance < 0.0) fail(file, sub(field, "feature_tolerance"), "must be nonnegative");
    }
    return guarded(file, field, [&] { return ProximitySpace(std::move(points), std::move(r), tolerance); });
}

Json space_to_json(const ProximitySpace& space) {
    Json j;
    j["points"] = Json::array();
    for (const Point& p : space.points()) {
        Json pj;
        pj["id"] = p.id;
        if (p.coords) pj["coords"] = {p.coords->x, p.coords->y};
        if (p.features) pj["features"] = *p.features;
        j["points"].push_back(pj);
    }
    if (const auto* m = std::get_if<MetricGap>(&space.rule())) {
        j["rule"] = {{"kind", "metric"}, {"tau", m->tau}};
    } else {
        Json pairs = Json::array();
        for (const auto& [a, b] : std::get<ExplicitRelation>(space.rule()).pairs) pairs.push_back({a, b});
        j["rule"] = {{"kind", "relation"}, {"pairs", pairs}};
    }
    if (space.feature_tolerance() != 0.0) j["feature_tolerance"] = space.feature_tolerance();
    return j;
}

Origin Loader::origin_of(const std::string& path) const {
    return Origin{path, std::filesystem::path(path).parent_path()};
}

Json Loader::read(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(path, "", "cannot open file");
    try {
        return Json::parse(in);
    } catch (const Json::parse_error& e) {
        fail(path, "", std::string("malformed JSON: ") + e.what());
    }
}

SpacePtr Loader::space_file(const std::string& path) {
    std::error_code ec;
    auto canonical = std::filesystem::weakly_canonical(path, ec);
    const std::string key = "file:" + (ec ? path : canonical.string());
    if (auto it = cache_.find(key); it != cache_.end()) return it->second;
    const Json j = read(path);
    // A document may wrap its space under "space".
    const Json* inner = optional(j, "space");
    auto s = std::make_shared<const ProximitySpace>(inner && inner->is_object() ? parse_space(*inner, path, "space")
                                                                                : parse_space(j, path));
    cache_.emplace(key, s);
    return s;
}

SpacePtr Loader::space(const Json& j, const Origin& origin, const std::string& field) {
    if (j.is_string()) {
        const std::filesystem::path p = origin.dir / j.get<std::string>();
        if (!std::filesystem::exists(p)) fail(origin.file, field, "no such file '" + p.string() + "'");
        return space_file(p.string());
    }
    const std::string key = "inline:" + j.dump();
    if (auto it = cache_.find(key); it != cache_.end()) return it->second;
    auto s = std::make_shared<const ProximitySpace>(parse_space(j, origin.file, field));
    cache_.emplace(key, s);
    return s;
}

FiniteMap Loader::map(const Json& j, const Origin& origin, const std::string& field) {
    if (j.is_string()) {
        const std::filesystem::path p = origin.dir / j.get<std::string>();
        if (!std::filesystem::exists(p)) fail(origin.file, field, "no such file '" + p.string() + "'");
        return map(read(p.string()), origin_of(p.string()), "");
    }
    const std::string& file = origin.file;
    SpacePtr source = space(require(j, "source", file, field), origin, sub(field, "source"));
    SpacePtr target = space(require(j, "target", file, field), origin, sub(field, "target"));
    const std::string af = sub(field, "assignment");
    const Json& a = array(require(j, "assignment", file, field), file, af);
    std::vector<std::optional<std::size_t>> image(source->size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        const std::string f = at(af, i);
        if (!a[i].is_array() || a[i].size() != 2) fail(file, f, "expected [x, y]");
        const std::size_t x = index(*source, a[i][0], file, at(f, 0));
        const std::size_t y = index(*target, a[i][1], file, at(f, 1));
        if (image[x]) fail(file, f, "point '" + source->point(x).id + "' assigned twice");
        image[x] = y;
    }
    std::vector<std::size_t> values;
    for (std::size_t x = 0; x < image.size(); ++x) {
        if (!image[x]) fail(file, af, "no image for '" + source->point(x).id + "'");
        values.push_back(*image[x]);
    }
    return FiniteMap(std::move(source), std::move(target), std::move(values));
}

HomotopyWitness Loader::homotopy(const Json& j, const Origin& origin, const std::string& field, SpacePtr source,
                                 SpacePtr target) {
    const std::string& file = origin.file;
    const std::size_t k = count(require(j, "k", file, field), file, sub(field, "k"));
    if (k == 0) fail(file, sub(field, "k"), "must be at least 1");
    const std::string tf = sub(field, "table");
    const Json& t = array(require(j, "table", file, field), file, tf);
    std::vector<std::optional<std::size_t>> table(source->size() * (k + 1));
    for (std::size_t i = 0; i < t.size(); ++i) {
        const std::string f = at(tf, i);
        if (!t[i].is_array() || t[i].size() != 3) fail(file, f, "expected [x, t_index, y]");
        const std::size_t x = index(*source, t[i][0], file, at(f, 0));
        const std::size_t step = count(t[i][1], file, at(f, 1));
        if (step > k) fail(file, at(f, 1), "time index beyond k");
        const std::size_t y = index(*target, t[i][2], file, at(f, 2));
        auto& cell = table[x * (k + 1) + step];
        if (cell) fail(file, f, "entry given twice");
        cell = y;
    }
    std::vector<std::size_t> values;
    for (std::size_t c = 0; c < table.size(); ++c) {
        if (!table[c])
            fail(file, tf,
                 "no entry for '" + source->point(c / (k + 1)).id + "' at step " + std::to_string(c % (k + 1)));
        values.push_back(*table[c]);
    }
    std::optional<PointSet> rel;
    if (const Json* r = optional(j, "rel")) rel = PointSet(indices(*source, *r, file, sub(field, "rel")));
    return guarded(file, field, [&] {
        return HomotopyWitness(std::move(source), std::move(target), k, std::move(values), std::move(rel));
    });
}

MultiCycle Loader::cycle(const Json& j, const ProximitySpace& s, const Origin& origin, const std::string& field) {
    const std::string& file = origin.file;
    MultiCycle c;
    c.vertices = indices(s, require(j, "vertices", file, field), file, sub(field, "vertices"));
    if (const Json* e = optional(j, "edges")) {
        const std::string ef = sub(field, "edges");
        array(*e, file, ef);
        for (std::size_t i = 0; i < e->size(); ++i) {
            const std::string f = at(ef, i);
            const std::string pf = sub(f, "paths");
            const Json& paths = array(require((*e)[i], "paths", file, f), file, pf);
            if (paths.empty()) fail(file, pf, "a path class needs at least one member");
            PathClass pc;
            for (std::size_t m = 0; m < paths.size(); ++m) pc.members.push_back(HPath{indices(s, paths[m], file, at(pf, m))});
            c.edges.push_back(std::move(pc));
        }
    }
    return c;
}

CycleSystem Loader::system(const Json& j, const ProximitySpace& s, const Origin& origin, const std::string& field) {
    const std::string& file = origin.file;
    CycleSystem sys;
    const std::string cf = sub(field, "cycles");
    const Json& cs = array(require(j, "cycles", file, field), file, cf);
    for (std::size_t i = 0; i < cs.size(); ++i) sys.cycles.push_back(cycle(cs[i], s, origin, at(cf, i)));
    if (const Json* m = optional(j, "mode")) {
        const std::string mode = text(*m, file, sub(field, "mode"));
        if (mode == "global") sys.mode = SystemMode::Global;
        else if (mode == "chain") sys.mode = SystemMode::Chain;
        else fail(file, sub(field, "mode"), "expected \"global\" or \"chain\"");
    }
    return sys;
}

CycleInput Loader::cycles(const Json& j, const Origin& origin) {
    CycleInput in;
    in.space = space(require(j, "space", origin.file, ""), origin, "space");
    if (const Json* c = optional(j, "cycle")) in.cycle = cycle(*c, *in.space, origin, "cycle");
    else if (const Json* s = optional(j, "system")) in.system = system(*s, *in.space, origin, "system");
    else fail(origin.file, "cycle", "missing (expected \"cycle\" or \"system\")");
    return in;
}

CoverInput Loader::cover(const Json& j, const Origin& origin) {
    const std::string& file = origin.file;
    const Json& elements = array(require(j, "elements", file, ""), file, "elements");
    if (elements.empty()) fail(file, "elements", "a cover needs at least one element");
    CoverInput in;

    const bool by_ids = elements[0].is_object() && elements[0].contains("ids");
    if (by_ids) {
        SpacePtr s = space(require(j, "space", file, ""), origin, "space");
        std::vector<PointSet> sets;
        for (std::size_t i = 0; i < elements.size(); ++i) {
            const std::string f = at("elements", i);
            sets.emplace_back(indices(*s, require(elements[i], "ids", file, f), file, sub(f, "ids")));
        }
        in.cover = guarded(file, "elements", [&] { return Cover(s, std::move(sets)); });
        return in;
    }

    std::vector<Rect> rects;
    std::vector<std::vector<Pixel>> lists;
    for (std::size_t i = 0; i < elements.size(); ++i) {
        const std::string f = at("elements", i);
        if (const Json* r = optional(elements[i], "rect")) {
            const Json& a = array(*r, file, sub(f, "rect"));
            if (a.size() != 4) fail(file, sub(f, "rect"), "expected [x0, y0, x1, y1]");
            Rect rect;
            rect.x0 = integer(a[0], file, sub(f, "rect[0]"));
            rect.y0 = integer(a[1], file, sub(f, "rect[1]"));
            rect.x1 = integer(a[2], file, sub(f, "rect[2]"));
            rect.y1 = integer(a[3], file, sub(f, "rect[3]"));
            rects.push_back(rect);
            lists.emplace_back();
        } else if (const Json* p = optional(elements[i], "pixels")) {
            const std::string pf = sub(f, "pixels");
            array(*p, file, pf);
            std::vector<Pixel> px;
            for (std::size_t k = 0; k < p->size(); ++k) px.push_back(pixel((*p)[k], file, at(pf, k)));
            rects.push_back(Rect{-1, -1, -1, -1});
            lists.push_back(std::move(px));
        } else {
            fail(file, f, "expected \"ids\", \"rect\" or \"pixels\"");
        }
    }

    Window w{0, 0};
    if (const Json* wj = optional(j, "window")) {
        w = window(*wj, file, "window");
    } else {
        std::vector<Pixel> all;
        for (std::size_t i = 0; i < rects.size(); ++i) {
            if (rects[i].x0 >= 0 || !lists[i].empty()) {
                if (lists[i].empty()) {
                    all.push_back({std::max(rects[i].x0, rects[i].x1), std::max(rects[i].y0, rects[i].y1)});
                    all.push_back({std::min(rects[i].x0, rects[i].x1), std::min(rects[i].y0, rects[i].y1)});
                } else {
                    all.insert(all.end(), lists[i].begin(), lists[i].end());
                }
            }
        }
        w = guarded(file, "elements", [&] { return bounding_window(all); });
    }
    std::vector<PixelSet> sets;
    for (std::size_t i = 0; i < rects.size(); ++i) {
        const std::string f = at("elements", i);
        sets.push_back(guarded(file, f, [&] {
            return lists[i].empty() ? rects[i].pixels(w) : PixelSet(w, lists[i]);
        }));
    }
    in.pixels = guarded(file, "elements", [&] { return PixelCover(std::move(sets)); });
    return in;
}

GraphInput Loader::graph(const Json& j, const Origin& origin) {
    const std::string& file = origin.file;
    GraphInput in;
    const Json& v = require(j, "vertices", file, "");
    std::map<std::string, std::size_t> by_label;
    if (v.is_number_integer()) {
        const std::size_t n = count(v, file, "vertices");
        for (std::size_t i = 0; i < n; ++i) in.labels.push_back(std::to_string(i));
    } else {
        in.labels = id_list(v, file, "vertices");
    }
    for (std::size_t i = 0; i < in.labels.size(); ++i)
        if (!by_label.emplace(in.labels[i], i).second) fail(file, at("vertices", i), "duplicate vertex");
    in.graph.vertex_count = in.labels.size();

    auto vertex = [&](const Json& e, const std::string& f) -> std::size_t {
        if (e.is_number_integer()) {
            const std::size_t i = count(e, file, f);
            if (i >= in.labels.size()) fail(file, f, "vertex index out of range");
            return i;
        }
        const std::string label = text(e, file, f);
        const auto it = by_label.find(label);
        if (it == by_label.end()) fail(file, f, "unknown vertex '" + label + "'");
        return it->second;
    };
    const Json& edges = array(require(j, "edges", file, ""), file, "edges");
    for (std::size_t i = 0; i < edges.size(); ++i) {
        const std::string f = at("edges", i);
        if (!edges[i].is_array() || edges[i].size() != 2) fail(file, f, "expected a pair of vertices");
        in.graph.edges.emplace_back(vertex(edges[i][0], at(f, 0)), vertex(edges[i][1], at(f, 1)));
    }
    return in;
}

AlexandrovQuadruple Loader::quadruple(const Json& j, const Origin& origin) {
    const std::string& file = origin.file;
    AlexandrovQuadruple q;
    const Json& pts = array(require(j, "points", file, ""), file, "points");
    if (pts.size() != 4) fail(file, "points", "expected four points, the apex first");
    for (std::size_t i = 0; i < 4; ++i) {
        const std::string f = at("points", i);
        const Json& a = array(pts[i], file, f);
        if (a.size() != 2) fail(file, f, "expected [x, y]");
        q.points[i] = Coord{number(a[0], file, at(f, 0)), number(a[1], file, at(f, 1))};
    }
    if (const Json* k = optional(j, "kappa")) q.kappa = number(*k, file, "kappa");
    return q;
}

std::vector<Frame> Loader::frames(const Json& j, const Origin& origin) {
    const std::string& file = origin.file;
    const Json& fs = array(require(j, "frames", file, ""), file, "frames");
    const Json* default_space = optional(j, "space");
    std::vector<Frame> out;
    for (std::size_t i = 0; i < fs.size(); ++i) {
        const std::string f = at("frames", i);
        Frame frame;
        const Json& id = require(fs[i], "id", file, f);
        frame.id = id.is_string() ? id.get<std::string>() : id.dump();
        frame.time = number(require(fs[i], "time", file, f), file, sub(f, "time"));
        if (frame.time < 0.0) fail(file, sub(f, "time"), "must be nonnegative");
        if (const Json* v = optional(fs[i], "features")) frame.features = features(*v, file, sub(f, "features"));

        if (const Json* shape = optional(fs[i], "shape")) {
            const std::string sf = sub(f, "shape");
            if (!shape->is_object()) fail(file, sf, "expected an object");
            if (const Json* px = optional(*shape, "pixels")) {
                const std::string pf = sub(sf, "pixels");
                array(*px, file, pf);
                std::vector<Pixel> pixels;
                for (std::size_t k = 0; k < px->size(); ++k) pixels.push_back(pixel((*px)[k], file, at(pf, k)));
                const Window w = optional(*shape, "window") ? window((*shape)["window"], file, sub(sf, "window"))
                                                            : guarded(file, pf, [&] { return bounding_window(pixels); });
                frame.shape = PixelShape{guarded(file, pf, [&] { return PixelSet(w, pixels); })};
            } else if (const Json* pnm = optional(*shape, "pnm")) {
                const std::filesystem::path p = origin.dir / text(*pnm, file, sub(sf, "pnm"));
                frame.shape = PixelShape{guarded(file, sub(sf, "pnm"), [&] { return read_pnm(p.string()); })};
            } else {
                const Json* sj = optional(*shape, "space");
                if (!sj) sj = default_space;
                if (!sj) fail(file, sub(sf, "space"), "missing (and no top-level space)");
                CycleShape cs;
                cs.space = space(*sj, origin, optional(*shape, "space") ? sub(sf, "space") : "space");
                if (const Json* c = optional(*shape, "cycle")) {
                    cs.cycles.push_back(cycle(*c, *cs.space, origin, sub(sf, "cycle")));
                } else {
                    CycleSystem sys = system(*shape, *cs.space, origin, sf);
                    cs.cycles = std::move(sys.cycles);
                    cs.mode = sys.mode;
                }
                frame.shape = std::move(cs);
            }
        }
        out.push_back(std::move(frame));
    }
    return out;
}

PixelSet read_pnm(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(path, "", "cannot open file");
    // Strip comments, then read whitespace separated tokens.
    std::string content, line;
    while (std::getline(in, line)) {
        if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        content += line + '\n';
    }
    std::istringstream tokens(content);
    std::string magic;
    tokens >> magic;
    if (magic != "P1" && magic != "P2") fail(path, "magic", "expected plain P1 or P2");
    int w = 0, h = 0, maxval = 1;
    if (!(tokens >> w >> h) || w <= 0 || h <= 0) fail(path, "size", "expected positive width and height");
    if (magic == "P2" && (!(tokens >> maxval) || maxval <= 0)) fail(path, "maxval", "expected a positive maxval");
    PixelSet set(Window{w, h});
    for (int y = 0; y < h; ++y)
        for (int x = 0; x < w; ++x) {
            int v = 0;
            if (magic == "P1") {
                // P1 digits may be packed without separators.
                char c = 0;
                do {
                    if (!tokens.get(c)) fail(path, "raster", "too few pixels");
                } while (std::isspace(static_cast<unsigned char>(c)));
                if (c != '0' && c != '1') fail(path, "raster", "expected 0 or 1");
                v = c - '0';
            } else if (!(tokens >> v) || v < 0 || v > maxval) {
                fail(path, "raster", "bad or missing gray value");
            }
            if (magic == "P1" ? v == 1 : 2 * v > maxval) set.insert({x, y});
        }
    return set;
}

std::string write_pbm(const PixelSet& set) {
    std::ostringstream out;
    const Window& w = set.window();
    out << "P1\n" << w.width << ' ' << w.height << '\n';
    for (int y = 0; y < w.height; ++y) {
        for (int x = 0; x < w.width; ++x) out << (x ? " " : "") << (set.contains({x, y}) ? '1' : '0');
        out << '\n';
    }
    return out.str();
}

std::vector<std::string> split_ids(const std::string& text) {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream in(text);
    while (std::getline(in, cur, ','))
        if (!cur.empty()) out.push_back(cur);
    return out;
}

}  // namespace prox::io
