#include "prox/cli.hpp"

#include <chrono>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <functional>
#include <optional>

#include <CLI11.hpp>

#include "prox/descriptive.hpp"
#include "prox/errors.hpp"
#include "prox/io.hpp"
#include "prox/jordan.hpp"

namespace prox::cli {

namespace {

using OJson = nlohmann::ordered_json;

struct Options {
    bool json = false;
    bool stamp = false;
    bool descriptive = false;
    std::optional<double> tau;
    std::optional<double> feature_tolerance;
    std::optional<double> epsilon;
    std::optional<double> kappa;
    std::uint64_t budget = kDefaultAxiomBudget;
    std::uint64_t seed = 0x5eed;
    std::string input;
    std::string set, a, b;
    std::string mode;
    std::string contract;
    std::string window;
    std::string emit_svg;
    std::string report, barcode, csv;
    std::size_t tolerance = 0;
    std::size_t gap = 0;
};

struct Outcome {
    OJson report;
    bool passed = true;
    std::function<void(std::ostream&)> table;  // replaces the generic text rendering
};

// --- rendering --------------------------------------------------------------

std::string scalar(const OJson& v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_boolean()) return v.get<bool>() ? "yes" : "no";
    if (v.is_number_float()) return format_number(v.get<double>());
    if (v.is_null()) return "-";
    return v.dump();
}

bool flat(const OJson& v) {
    if (!v.is_array()) return !v.is_object();
    for (const auto& e : v)
        if (e.is_array() || e.is_object()) return false;
    return true;
}

void render(std::ostream& out, const OJson& j, int indent) {
    const std::string pad(static_cast<std::size_t>(indent), ' ');
    for (const auto& [key, v] : j.items()) {
        if (!flat(v)) {
            out << pad << key << ":\n";
            if (v.is_array()) {
                for (std::size_t i = 0; i < v.size(); ++i) {
                    if (flat(v[i])) {
                        out << pad << "  - " << (v[i].is_array() ? "" : scalar(v[i]));
                        if (v[i].is_array())
                            for (std::size_t k = 0; k < v[i].size(); ++k) out << (k ? " " : "") << scalar(v[i][k]);
                        out << '\n';
                    } else {
                        out << pad << "  [" << i << "]\n";
                        render(out, v[i], indent + 4);
                    }
                }
            } else {
                render(out, v, indent + 2);
            }
            continue;
        }
        out << pad << key << ":";
        if (v.is_array()) {
            if (v.empty()) out << " (none)";
            for (const auto& e : v) out << ' ' << scalar(e);
        } else {
            out << ' ' << scalar(v);
        }
        out << '\n';
    }
}

std::string utc_now() {
    const std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream f(path, std::ios::binary);
    if (!f || !(f << content)) throw ParseError(path, "(output)", "cannot write file");
}

// --- shared helpers ---------------------------------------------------------

OJson ids_json(const ProximitySpace& s, const PointSet& set) {
    OJson a = OJson::array();
    for (std::size_t i : set) a.push_back(s.point(i).id);
    return a;
}

OJson ids_json(const ProximitySpace& s, const std::vector<std::size_t>& v) {
    OJson a = OJson::array();
    for (std::size_t i : v) a.push_back(s.point(i).id);
    return a;
}

OJson pixels_json(const PixelSet& set) {
    OJson a = OJson::array();
    for (const Pixel& p : set.pixels()) a.push_back({p.x, p.y});
    return a;
}

OJson betti_json(const Betti& b) { return OJson{{"b0", b.b0}, {"b1", b.b1}}; }

SpacePtr adjusted(SpacePtr s, const Options& o) {
    if (!o.tau && !o.feature_tolerance) return s;
    ProximityRule rule = s->rule();
    if (o.tau) {
        if (*o.tau < 0.0) throw InvalidInputError("--tau must be nonnegative");
        rule = MetricGap{*o.tau};
    }
    const double tol = o.feature_tolerance ? *o.feature_tolerance : s->feature_tolerance();
    if (tol < 0.0) throw InvalidInputError("--feature-tolerance must be nonnegative");
    return std::make_shared<const ProximitySpace>(s->points(), rule, tol);
}

Mode mode_of(const Options& o) { return o.descriptive ? Mode::Descriptive : Mode::Plain; }

PointSet resolve_ids(const ProximitySpace& s, const std::string& text) {
    const std::vector<std::string> ids = io::split_ids(text);
    return s.resolve(ids);
}

Window parse_window(const std::string& text) {
    const auto x = text.find('x');
    int w = 0, h = 0;
    try {
        if (x == std::string::npos) throw std::invalid_argument("no x");
        std::size_t used = 0;
        w = std::stoi(text.substr(0, x), &used);
        if (used != x) throw std::invalid_argument("trailing");
        h = std::stoi(text.substr(x + 1), &used);
        if (used != text.size() - x - 1) throw std::invalid_argument("trailing");
    } catch (const std::exception&) {
        throw InvalidInputError("--window expects WIDTHxHEIGHT, got '" + text + "'");
    }
    if (w <= 0 || h <= 0) throw InvalidInputError("--window dimensions must be positive");
    return Window{w, h};
}

bool has_extension(const std::string& path, std::initializer_list<const char*> exts) {
    const std::string e = std::filesystem::path(path).extension().string();
    for (const char* x : exts)
        if (e == x) return true;
    return false;
}

OJson axiom_json(const AxiomResult& r) {
    OJson j{{"name", r.name}, {"passed", r.passed}, {"exhaustive", r.exhaustive}, {"cases", r.cases}};
    if (r.witness) j["witness"] = {{"a", r.witness->a}, {"b", r.witness->b}, {"c", r.witness->c}};
    return j;
}

// --- subcommands ------------------------------------------------------------

Outcome check_axioms(const Options& o) {
    io::Loader loader;
    const SpacePtr s = adjusted(loader.space_file(o.input), o);
    const AxiomReport r = o.descriptive ? check_descriptive_axioms(*s, o.budget, o.seed)
                                        : check_cech_axioms(*s, o.budget, o.seed);
    Outcome out;
    out.report["points"] = s->size();
    out.report["mode"] = o.descriptive ? "descriptive" : "plain";
    out.report["axioms"] = OJson::array();
    for (const AxiomResult& a : r.axioms) out.report["axioms"].push_back(axiom_json(a));
    out.report["point_symmetry"] = axiom_json(r.point_symmetry);
    out.report["passed"] = r.passed();
    out.passed = r.passed();
    out.table = [r](std::ostream& os) {
        auto line = [&](const AxiomResult& a, const char* note) {
            os << a.name << "  " << (a.passed ? "pass" : "FAIL") << "  " << (a.exhaustive ? "exhaustive" : "sampled")
               << "  cases=" << a.cases << note << '\n';
            if (a.witness) {
                auto join = [](const std::vector<std::string>& v) {
                    std::string s = "{";
                    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i];
                    return s + "}";
                };
                os << "    witness A=" << join(a.witness->a) << " B=" << join(a.witness->b);
                if (!a.witness->c.empty()) os << " C=" << join(a.witness->c);
                os << '\n';
            }
        };
        for (const AxiomResult& a : r.axioms) line(a, "");
        line(r.point_symmetry, "  (informational)");
        os << (r.passed() ? "all axioms hold\n" : "axiom violation found\n");
    };
    return out;
}

Outcome closure_cmd(const Options& o) {
    io::Loader loader;
    const SpacePtr s = adjusted(loader.space_file(o.input), o);
    const PointSet a = resolve_ids(*s, o.set);
    const PointSet cl = o.descriptive ? descriptive_closure(*s, a) : closure(*s, a);
    Outcome out;
    out.report["mode"] = o.descriptive ? "descriptive" : "plain";
    out.report["set"] = ids_json(*s, a);
    out.report["closure"] = ids_json(*s, cl);
    out.report["closed"] = cl == a;
    return out;
}

Outcome dintersect(const Options& o) {
    io::Loader loader;
    const SpacePtr s = adjusted(loader.space_file(o.input), o);
    const PointSet a = resolve_ids(*s, o.a);
    const PointSet b = resolve_ids(*s, o.b);
    Outcome out;
    out.report["a"] = ids_json(*s, a);
    out.report["b"] = ids_json(*s, b);
    out.report["feature_tolerance"] = s->feature_tolerance();
    out.report["descriptively_near"] = descriptive_near(*s, a, b);
    out.report["intersection"] = ids_json(*s, descriptive_intersection(*s, a, b));
    if (o.epsilon) {
        OJson cover = OJson::array();
        for (const PointSet& ball : descriptive_open_cover(*s, *o.epsilon)) cover.push_back(ids_json(*s, ball));
        out.report["open_cover"] = cover;
    }
    return out;
}

OJson continuity_json(const FiniteMap& f, const ContinuityResult& r) {
    OJson j{{"continuous", r.continuous}};
    if (r.witness)
        j["witness"] = {f.source()->point(r.witness->first).id, f.source()->point(r.witness->second).id};
    return j;
}

OJson assignment_json(const FiniteMap& f) {
    OJson a = OJson::array();
    for (std::size_t x = 0; x < f.source()->size(); ++x)
        a.push_back({f.source()->point(x).id, f.target()->point(f(x)).id});
    return a;
}

Outcome continuity(const Options& o) {
    io::Loader loader;
    const io::Json j = loader.read(o.input);
    const FiniteMap f = loader.map(j, loader.origin_of(o.input), "");
    const ContinuityResult r = check_proximal_continuity(f, mode_of(o));
    Outcome out;
    out.report["mode"] = o.descriptive ? "descriptive" : "plain";
    out.report.update(continuity_json(f, r));
    out.passed = r.continuous;
    return out;
}

Outcome glue_cmd(const Options& o) {
    io::Loader loader;
    const io::Json j = loader.read(o.input);
    const io::Origin origin = loader.origin_of(o.input);
    const SpacePtr x = loader.space(j.contains("space") ? j["space"] : io::Json(), origin, "space");
    const FiniteMap f = loader.map(j.contains("f") ? j["f"] : io::Json::object(), origin, "f");
    const FiniteMap g = loader.map(j.contains("g") ? j["g"] : io::Json::object(), origin, "g");
    const Mode mode = mode_of(o);
    Outcome out;
    out.report["mode"] = o.descriptive ? "descriptive" : "plain";
    out.report["f"] = continuity_json(f, check_proximal_continuity(f, mode));
    out.report["g"] = continuity_json(g, check_proximal_continuity(g, mode));
    try {
        const FiniteMap h = glue(f, g, x, mode);
        const ContinuityResult r = check_proximal_continuity(h, mode);
        out.report["glued"] = assignment_json(h);
        out.report["h"] = continuity_json(h, r);
        out.passed = r.continuous;
    } catch (const GluePreconditionError& e) {
        out.report["precondition"] = e.what();
        out.passed = false;
    }
    return out;
}

Outcome homotopy_cmd(const Options& o) {
    io::Loader loader;
    Outcome out;
    if (!o.contract.empty()) {
        ContractibilityMode mode;
        if (o.contract == "degenerate") mode = ContractibilityMode::DegenerateDescriptive;
        else if (o.contract == "descriptive") mode = ContractibilityMode::Descriptive;
        else if (o.contract == "grid") mode = ContractibilityMode::GridTopological;
        else throw InvalidInputError("--contract expects degenerate, descriptive or grid");
        const SpacePtr s = adjusted(loader.space_file(o.input), o);
        const Contractibility c = contractibility(s, mode);
        out.report["contract"] = o.contract;
        out.report["certified"] = c.certified;
        out.report["certificate"] = c.certificate;
        out.passed = c.certified;
        return out;
    }
    const io::Json j = loader.read(o.input);
    const io::Origin origin = loader.origin_of(o.input);
    const FiniteMap f = loader.map(j.contains("f") ? j["f"] : io::Json::object(), origin, "f");
    const FiniteMap g = loader.map(j.contains("g") ? j["g"] : io::Json::object(), origin, "g");
    const HomotopyWitness h = loader.homotopy(j.contains("homotopy") ? j["homotopy"] : io::Json::object(), origin,
                                              "homotopy", f.source(), f.target());
    const HomotopyCheck c = verify_homotopy(h, f, g, mode_of(o));
    out.report["mode"] = o.descriptive ? "descriptive" : "plain";
    out.report["k"] = h.k();
    out.report["verified"] = c.verified;
    if (!c.reason.empty()) out.report["reason"] = c.reason;
    out.passed = c.verified;
    return out;
}

Outcome cycles_cmd(const Options& o) {
    io::Loader loader;
    const io::Json j = loader.read(o.input);
    const io::CycleInput in = loader.cycles(j, loader.origin_of(o.input));
    const ProximitySpace& s = *in.space;
    Outcome out;
    if (in.cycle) {
        const CycleValidation v = validate_multi_cycle(s, *in.cycle);
        out.report["kind"] = "cycle";
        out.report["valid"] = v.valid;
        out.report["interior_pixels"] = v.interior_pixels;
        out.report["diagnostics"] = v.diagnostics;
        out.passed = v.valid;
    } else {
        const SystemValidation v = validate_cycle_system(s, *in.system);
        out.report["kind"] = "system";
        out.report["mode"] = in.system->mode == SystemMode::Global ? "global" : "chain";
        out.report["valid"] = v.valid;
        if (v.clasp) out.report["clasp"] = s.point(*v.clasp).id;
        if (!v.clasps.empty()) out.report["clasps"] = ids_json(s, v.clasps);
        out.report["diagnostics"] = v.diagnostics;
        out.passed = v.valid;
    }
    return out;
}

OJson complex_json(const SimplicialComplex& c) {
    OJson a = OJson::array();
    for (const Simplex& s : c.simplices()) a.push_back(s);
    return a;
}

Outcome nerve_cmd(const Options& o) {
    io::Loader loader;
    const io::Json j = loader.read(o.input);
    const io::CoverInput in = loader.cover(j, loader.origin_of(o.input));
    Outcome out;
    if (in.cover) {
        const NerveComplex n = build_nerve(*in.cover, mode_of(o));
        out.report["mode"] = o.descriptive ? "descriptive" : "plain";
        out.report["simplices"] = complex_json(n);
        out.report["betti"] = betti_json(betti(n));
        return out;
    }
    const NerveComplex n = build_nerve(*in.pixels);
    out.report["simplices"] = complex_json(n);
    out.report["betti"] = betti_json(betti(n));
    try {
        const NerveUnionResult r = nerve_vs_union_check(*in.pixels);
        out.report["union_betti"] = betti_json(r.united);
        out.report["equal"] = r.equal;
        OJson touching = OJson::array();
        for (const auto& [p, q] : r.touching_pairs) touching.push_back({p, q});
        out.report["touching_pairs"] = touching;
        out.passed = r.equal;
    } catch (const NonConvexElementError&) {
        out.report["union_betti"] = nullptr;  // comparison needs rectangles
    }
    return out;
}

Outcome betti_cmd(const Options& o) {
    Outcome out;
    if (has_extension(o.input, {".pbm", ".pgm"})) {
        const PixelSet set = io::read_pnm(o.input);
        const GridBetti b = grid_homology(set);
        out.report["kind"] = "pixels";
        out.report["pixels"] = set.size();
        out.report["betti"] = OJson{{"b0", b.b0}, {"b1", b.b1}};
        return out;
    }
    io::Loader loader;
    const io::Json j = loader.read(o.input);
    const io::GraphInput in = loader.graph(j, loader.origin_of(o.input));
    const Betti b = betti(complex_of(in.graph));
    const FreeGroupPresentation p = free_group_presentation(in.graph);
    out.report["kind"] = "graph";
    out.report["vertices"] = in.graph.vertex_count;
    out.report["edges"] = in.graph.edges.size();
    out.report["betti"] = betti_json(b);
    out.report["rank"] = p.rank;
    OJson gens = OJson::array();
    for (const auto& g : p.generators) gens.push_back(g);
    out.report["generators"] = gens;
    return out;
}

Outcome goodcover_cmd(const Options& o) {
    GoodCoverMode mode = o.descriptive ? GoodCoverMode::Descriptive : GoodCoverMode::Topological;
    if (!o.mode.empty()) {
        if (o.mode == "topological") mode = GoodCoverMode::Topological;
        else if (o.mode == "descriptive") mode = GoodCoverMode::Descriptive;
        else if (o.mode == "degenerate") mode = GoodCoverMode::Degenerate;
        else throw InvalidInputError("--mode expects topological, descriptive or degenerate");
    }
    io::Loader loader;
    const io::Json j = loader.read(o.input);
    const io::Origin origin = loader.origin_of(o.input);

    GoodCoverReport r;
    std::function<std::string(std::size_t)> name = [](std::size_t i) { return std::to_string(i); };
    if (o.epsilon) {
        const SpacePtr s = adjusted(loader.space_file(o.input), o);
        r = check_good_cover(Cover(s, descriptive_open_cover(*s, *o.epsilon)), GoodCoverMode::Descriptive);
    } else if (j.contains("system")) {
        const io::CycleInput in = loader.cycles(j, origin);
        r = check_cycle_system_cover(in.space, *in.system, mode);
    } else {
        const io::CoverInput in = loader.cover(j, origin);
        r = in.cover ? check_good_cover(*in.cover, mode) : check_good_cover(*in.pixels);
    }
    Outcome out;
    out.report["good"] = r.good;
    OJson checks = OJson::array();
    for (const IntersectionCheck& c : r.intersections)
        checks.push_back({{"members", c.members},
                          {"size", c.size},
                          {"contractible", c.contractible},
                          {"certificate", c.certificate}});
    out.report["intersections"] = checks;
    out.passed = r.good;
    return out;
}

OJson partition_json(const RegionPartition& p) {
    return OJson{{"boundary", pixels_json(p.boundary)},
                 {"interior", pixels_json(p.interior)},
                 {"exterior", pixels_json(p.exterior)}};
}

Outcome jordan_cmd(const Options& o) {
    std::optional<Window> window;
    if (!o.window.empty()) window = parse_window(o.window);
    Outcome out;
    RegionPartition partition{PixelSet(Window{1, 1}), PixelSet(Window{1, 1}), PixelSet(Window{1, 1})};

    auto plain = [&](const JordanResult& r) {
        partition = r.partition;
        out.report["kind"] = "curve";
        out.report["exactly_two_regions"] = r.flags.exactly_two_regions;
        out.report["common_boundary"] = r.flags.common_boundary;
        out.report["nonvoid_interior"] = r.flags.nonvoid_interior;
        out.report["interior_components"] = r.interior_components;
        out.report["exterior_components"] = r.exterior_components;
        out.passed = r.flags.all();
    };

    if (has_extension(o.input, {".pbm", ".pgm"})) {
        plain(partition_by_curve(io::read_pnm(o.input)));
    } else {
        io::Loader loader;
        const io::Json j = loader.read(o.input);
        const io::Origin origin = loader.origin_of(o.input);
        if (!window && j.contains("window")) {
            const auto& w = j["window"];
            if (!w.is_array() || w.size() != 2 || !w[0].is_number_integer() || !w[1].is_number_integer() ||
                w[0].get<int>() <= 0 || w[1].get<int>() <= 0)
                throw ParseError(o.input, "window", "expected [width, height]");
            window = Window{w[0].get<int>(), w[1].get<int>()};
        }
        if (j.contains("vertices") && !j.contains("space")) {
            std::vector<Pixel> vertices;
            const auto& v = j["vertices"];
            if (!v.is_array()) throw ParseError(o.input, "vertices", "expected an array");
            for (std::size_t i = 0; i < v.size(); ++i) {
                if (!v[i].is_array() || v[i].size() != 2 || !v[i][0].is_number_integer() ||
                    !v[i][1].is_number_integer())
                    throw ParseError(o.input, "vertices[" + std::to_string(i) + "]", "expected [x, y]");
                vertices.push_back({v[i][0].get<int>(), v[i][1].get<int>()});
            }
            const Window w = window ? *window : bounding_window(vertices);
            plain(jordan_partition(vertices, w));
        } else {
            const io::CycleInput in = loader.cycles(j, origin);
            const ProximitySpace& s = *in.space;
            std::vector<std::size_t> pts;
            if (in.cycle) {
                pts = in.cycle->vertices;
            } else {
                for (const MultiCycle& c : in.system->cycles)
                    for (std::size_t v : cycle_points(c)) pts.push_back(v);
            }
            const Window w = window ? *window : auto_window(s, pts);
            const SystemBoundaryResult r =
                in.cycle ? system_boundary_check(s, *in.cycle, w) : system_boundary_check(s, *in.system, w);
            partition = r.partition;
            out.report["kind"] = in.cycle ? "cycle" : "system";
            out.report["expected_interiors"] = r.expected_interiors;
            out.report["interior_regions"] = r.interior_regions;
            out.report["exterior_regions"] = r.exterior_regions;
            out.report["region_count_ok"] = r.region_count_ok;
            out.report["single_exterior"] = r.single_exterior;
            out.report["common_boundary"] = r.common_boundary;
            OJson ns = OJson::array();
            for (const Pixel& p : r.non_simple_points) ns.push_back({p.x, p.y});
            out.report["non_simple_points"] = ns;
            out.passed = r.passed();
        }
    }
    out.report["window"] = {partition.boundary.window().width, partition.boundary.window().height};
    out.report["sizes"] = {{"boundary", partition.boundary.size()},
                           {"interior", partition.interior.size()},
                           {"exterior", partition.exterior.size()}};
    out.report["partition"] = partition_json(partition);
    if (!o.emit_svg.empty()) write_file(o.emit_svg, region_svg(partition));
    out.table = [report = out.report](std::ostream& os) {
        OJson brief = report;
        brief.erase("partition");
        render(os, brief, 0);
    };
    return out;
}

Outcome alexandrov_cmd(const Options& o) {
    io::Loader loader;
    const io::Json j = loader.read(o.input);
    AlexandrovQuadruple q = loader.quadruple(j, loader.origin_of(o.input));
    if (o.kappa) q.kappa = *o.kappa;
    const QuadrupleResult r = alexandrov_quadruple_check(q);
    Outcome out;
    out.report["kappa"] = q.kappa;
    out.report["angle_sum"] = r.angle_sum;
    out.report["euclidean_angle_sum"] = r.euclidean_angle_sum;
    out.report["two_pi"] = 2.0 * std::acos(-1.0);
    out.report["within_two_pi"] = r.within_two_pi;
    if (q.kappa > 0.0) {
        out.report["perimeter_condition"] = r.perimeter_condition;
        out.report["max_perimeter"] = r.max_perimeter;
        out.report["asserted"] = false;  // positive curvature is reported, not judged
    } else {
        out.report["asserted"] = true;
        out.passed = r.within_two_pi;
    }
    return out;
}

Outcome track_cmd(const Options& o) {
    io::Loader loader;
    const io::Json j = loader.read(o.input);
    const std::vector<Frame> frames = loader.frames(j, loader.origin_of(o.input));
    TrackOptions opts;
    opts.tolerance = o.tolerance;
    opts.gap = o.gap;
    if (o.feature_tolerance) {
        if (*o.feature_tolerance < 0.0) throw InvalidInputError("--feature-tolerance must be nonnegative");
        opts.feature_tolerance = *o.feature_tolerance;
    }
    const std::vector<PersistenceTrack> tracks = track(frames, opts);
    if (!o.report.empty()) write_file(o.report, report_json(tracks, frames));
    if (!o.barcode.empty()) write_file(o.barcode, barcode_svg(tracks));
    if (!o.csv.empty()) write_file(o.csv, report_csv(tracks));

    Outcome out;
    out.report = OJson::parse(report_json(tracks, frames));
    out.report["frames"] = frames.size();
    out.table = [csv = report_csv(tracks)](std::ostream& os) { os << csv; };
    return out;
}

int code_for(const Error& e) {
    if (dynamic_cast<const ParseError*>(&e) || dynamic_cast<const InvalidInputError*>(&e) ||
        dynamic_cast<const ForeignPointError*>(&e) || dynamic_cast<const MissingCoordinatesError*>(&e) ||
        dynamic_cast<const TypeMismatchError*>(&e) || dynamic_cast<const UnsortedInputError*>(&e) ||
        dynamic_cast<const InvalidShapeError*>(&e) || dynamic_cast<const OutOfWindowError*>(&e) ||
        dynamic_cast<const SelfIntersectionError*>(&e) || dynamic_cast<const EmptyCoverError*>(&e) ||
        dynamic_cast<const DegenerateTriangleError*>(&e))
        return kInputError;
    return kVerificationFailure;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Proximity space topology toolkit", "prox"};
    app.require_subcommand(1);
    app.fallthrough();
    Options o;
    app.add_flag("--json", o.json, "Machine readable JSON on stdout");
    app.add_flag("--stamp", o.stamp, "Add a generation timestamp to reports");

    std::function<Outcome(const Options&)> action;
    auto command = [&](const std::string& name, const std::string& help, Outcome (*fn)(const Options&)) {
        CLI::App* sub = app.add_subcommand(name, help);
        sub->add_option("input", o.input, "Input file")->required();
        sub->callback([&action, fn] { action = fn; });
        return sub;
    };
    auto nonneg = CLI::NonNegativeNumber;

    CLI::App* c = command("check-axioms", "Check the proximity axioms of a space", check_axioms);
    c->add_flag("--descriptive", o.descriptive, "Check the descriptive axioms");
    c->add_option("--tau", o.tau, "Override the rule with a metric gap")->check(nonneg);
    c->add_option("--feature-tolerance", o.feature_tolerance, "Description matching tolerance")->check(nonneg);
    c->add_option("--budget", o.budget, "Random samples when the space is too large for exhaustive checking");
    c->add_option("--seed", o.seed, "Sampling seed");

    c = command("closure", "Closure of a subset", closure_cmd);
    c->add_option("--set", o.set, "Comma separated point ids")->required();
    c->add_flag("--descriptive", o.descriptive, "Descriptive closure");
    c->add_option("--tau", o.tau, "Override the rule with a metric gap")->check(nonneg);
    c->add_option("--feature-tolerance", o.feature_tolerance, "Description matching tolerance")->check(nonneg);

    c = command("dintersect", "Descriptive intersection of two subsets", dintersect);
    c->add_option("--a", o.a, "Comma separated point ids")->required();
    c->add_option("--b", o.b, "Comma separated point ids")->required();
    c->add_option("--feature-tolerance", o.feature_tolerance, "Description matching tolerance")->check(nonneg);
    c->add_option("--epsilon", o.epsilon, "Also list the open cover by description balls")
        ->check(CLI::PositiveNumber);

    c = command("continuity", "Proximal continuity of a map", continuity);
    c->add_flag("--descriptive", o.descriptive, "Descriptive continuity");

    c = command("glue", "Glue two maps on closed domains", glue_cmd);
    c->add_flag("--descriptive", o.descriptive, "Descriptive mode");

    c = command("homotopy", "Verify a homotopy witness or certify contractibility", homotopy_cmd);
    c->add_flag("--descriptive", o.descriptive, "Descriptive mode");
    c->add_option("--contract", o.contract, "Contractibility of a space: degenerate, descriptive or grid");
    c->add_option("--feature-tolerance", o.feature_tolerance, "Description matching tolerance")->check(nonneg);

    command("cycles", "Validate a cycle or a cycle system", cycles_cmd);

    c = command("nerve", "Nerve of a cover", nerve_cmd);
    c->add_flag("--descriptive", o.descriptive, "Descriptive intersections");

    command("betti", "Betti numbers of a graph or a PBM/PGM image", betti_cmd);

    c = command("goodcover", "Check that every intersection of a cover is contractible", goodcover_cmd);
    c->add_flag("--descriptive", o.descriptive, "Descriptive intersections");
    c->add_option("--mode", o.mode, "topological, descriptive or degenerate");
    c->add_option("--epsilon", o.epsilon, "Use the open cover by description balls of this radius")
        ->check(CLI::PositiveNumber);
    c->add_option("--feature-tolerance", o.feature_tolerance, "Description matching tolerance")->check(nonneg);

    c = command("jordan", "Partition a window by a closed curve", jordan_cmd);
    c->add_option("--window", o.window, "WIDTHxHEIGHT");
    c->add_option("--emit-svg", o.emit_svg, "Write the region overlay");

    c = command("alexandrov", "Comparison angle sum of a quadruple", alexandrov_cmd);
    c->add_option("--kappa", o.kappa, "Curvature bound");

    c = command("track", "Persistence tracks over a frame sequence", track_cmd);
    c->add_option("--tolerance", o.tolerance, "Allowed rank difference");
    c->add_option("--gap", o.gap, "Frames a track may miss before it closes");
    c->add_option("--feature-tolerance", o.feature_tolerance, "Feature summary tolerance")->check(nonneg);
    c->add_option("--report", o.report, "Write the JSON report");
    c->add_option("--barcode", o.barcode, "Write the barcode SVG");
    c->add_option("--csv", o.csv, "Write the CSV table");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kPass;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kPass;
    } catch (const CLI::ParseError& e) {
        err << "prox: " << e.what() << '\n';
        return kInputError;
    }

    try {
        Outcome result = action(o);
        if (o.stamp) result.report["generated_at"] = utc_now();
        if (o.json) {
            out << result.report.dump(2) << '\n';
        } else if (result.table) {
            result.table(out);
            if (o.stamp) out << "generated_at: " << result.report["generated_at"].get<std::string>() << '\n';
        } else {
            render(out, result.report, 0);
        }
        return result.passed ? kPass : kVerificationFailure;
    } catch (const Error& e) {
        err << "prox: " << e.what() << '\n';
        return code_for(e);
    } catch (const std::exception& e) {
        err << "prox: " << e.what() << '\n';
        return kInputError;
    }
}

}  // namespace prox::cli
