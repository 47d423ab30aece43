#include "prox/persistence.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <map>
#include <sstream>

#include <json.hpp>

#include "prox/errors.hpp"

namespace prox {

std::string format_number(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

namespace {

FrameDescriptor describe_cycles(const CycleShape& shape) {
    if (!shape.space) throw InvalidShapeError("cycle shape has no space");
    if (shape.cycles.empty()) throw InvalidShapeError("empty shape");
    const ProximitySpace& space = *shape.space;

    if (shape.cycles.size() == 1) {
        const CycleValidation v = validate_multi_cycle(space, shape.cycles.front());
        if (!v.valid) throw InvalidShapeError("invalid cycle: " + v.diagnostics.front());
    } else {
        const SystemValidation v = validate_cycle_system(space, CycleSystem{shape.cycles, shape.mode});
        if (!v.valid) throw InvalidShapeError("invalid cycle system: " + v.diagnostics.front());
    }

    std::map<std::size_t, std::size_t> local;  // space index -> graph vertex
    auto vertex = [&](std::size_t i) { return local.emplace(i, local.size()).first->second; };
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    auto add_path = [&](const HPath& p) {
        for (std::size_t k = 0; k + 1 < p.vertices.size(); ++k) {
            std::size_t a = vertex(p.vertices[k]);
            std::size_t b = vertex(p.vertices[k + 1]);
            if (a == b) continue;
            if (a > b) std::swap(a, b);
            edges.emplace_back(a, b);
        }
    };
    for (const MultiCycle& c : shape.cycles) {
        for (std::size_t v : c.vertices) vertex(v);
        if (c.edges.empty()) {
            for (const HPath& p : edge_paths(c)) add_path(p);
        } else {
            for (const PathClass& pc : c.edges)
                for (const HPath& p : pc.members) add_path(p);
        }
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

    const Graph graph{local.size(), edges};
    FrameDescriptor d;
    d.betti = betti(complex_of(graph));
    d.rank = free_group_presentation(graph).rank;
    return d;
}

FrameDescriptor describe_pixels(const PixelShape& shape) {
    if (shape.pixels.empty()) throw InvalidShapeError("empty shape");
    const GridBetti b = grid_homology(shape.pixels);
    FrameDescriptor d;
    d.betti = Betti{static_cast<std::size_t>(b.b0), static_cast<std::size_t>(b.b1)};
    d.rank = d.betti.b1;
    return d;
}

}  // namespace

FrameDescriptor frame_descriptor(const Frame& frame) {
    if (!frame.shape) throw InvalidShapeError("frame '" + frame.id + "' has no shape");
    FrameDescriptor d = std::holds_alternative<CycleShape>(*frame.shape)
                            ? describe_cycles(std::get<CycleShape>(*frame.shape))
                            : describe_pixels(std::get<PixelShape>(*frame.shape));
    d.features = frame.features;
    return d;
}

bool descriptors_near(const FrameDescriptor& a, const FrameDescriptor& b, std::size_t tolerance,
                      double feature_tolerance) {
    const std::size_t diff = a.rank > b.rank ? a.rank - b.rank : b.rank - a.rank;
    if (diff > tolerance) return false;
    if (a.features && b.features) {
        if (a.features->size() != b.features->size()) return false;
        return feature_distance(*a.features, *b.features) <= feature_tolerance;
    }
    return true;
}

double PersistenceTrack::lifetime() const {
    double total = 0.0;
    for (const Interval& i : intervals) total += i.death - i.birth;
    return total;
}

std::vector<PersistenceTrack> track(std::span<const Frame> frames, TrackOptions options) {
    for (std::size_t p = 0; p < frames.size(); ++p) {
        if (!std::isfinite(frames[p].time) || frames[p].time < 0.0)
            throw InvalidInputError("frame '" + frames[p].id + "' has an invalid time");
        if (p > 0 && frames[p].time < frames[p - 1].time)
            throw UnsortedInputError("frame '" + frames[p].id + "' comes before its predecessor in time");
    }

    struct Open {
        std::size_t track;
        std::size_t last_frame;
        std::size_t missed;
    };
    std::vector<PersistenceTrack> tracks;
    std::vector<Open> open;  // oldest first

    for (std::size_t p = 0; p < frames.size(); ++p) {
        const Frame& f = frames[p];
        std::optional<std::size_t> matched;
        if (f.shape) {
            const FrameDescriptor d = frame_descriptor(f);
            for (std::size_t o = 0; o < open.size(); ++o)
                if (descriptors_near(tracks[open[o].track].descriptor, d, options.tolerance,
                                     options.feature_tolerance)) {
                    matched = o;
                    break;
                }
            if (matched) {
                Open& o = open[*matched];
                PersistenceTrack& t = tracks[o.track];
                if (o.last_frame + 1 == p) {
                    t.intervals.back().last_frame = p;
                    t.intervals.back().death = f.time;
                } else {
                    t.intervals.push_back(Interval{p, p, f.time, f.time});
                }
                o.last_frame = p;
                o.missed = 0;
            } else {
                PersistenceTrack t;
                t.id = tracks.size();
                t.descriptor = d;
                t.intervals.push_back(Interval{p, p, f.time, f.time});
                tracks.push_back(std::move(t));
                open.push_back(Open{tracks.size() - 1, p, 0});
                matched = open.size() - 1;
            }
        }
        std::vector<Open> still;
        for (std::size_t o = 0; o < open.size(); ++o) {
            if (matched && o == *matched) {
                still.push_back(open[o]);
                continue;
            }
            if (++open[o].missed <= options.gap) still.push_back(open[o]);
        }
        open = std::move(still);
    }
    return tracks;
}

std::string report_json(const std::vector<PersistenceTrack>& tracks, std::span<const Frame> frames) {
    nlohmann::ordered_json doc;
    doc["tracks"] = nlohmann::ordered_json::array();
    for (const PersistenceTrack& t : tracks) {
        nlohmann::ordered_json j;
        j["id"] = t.id;
        j["rank"] = t.descriptor.rank;
        j["betti"] = {t.descriptor.betti.b0, t.descriptor.betti.b1};
        if (t.descriptor.features) j["features"] = *t.descriptor.features;
        j["intervals"] = nlohmann::ordered_json::array();
        for (const Interval& i : t.intervals) {
            nlohmann::ordered_json ij;
            ij["first_frame"] = i.first_frame < frames.size() ? frames[i.first_frame].id : std::string();
            ij["last_frame"] = i.last_frame < frames.size() ? frames[i.last_frame].id : std::string();
            ij["birth"] = i.birth;
            ij["death"] = i.death;
            j["intervals"].push_back(ij);
        }
        j["lifetime"] = t.lifetime();
        doc["tracks"].push_back(j);
    }
    return doc.dump(2) + "\n";
}

std::string report_csv(const std::vector<PersistenceTrack>& tracks) {
    std::ostringstream out;
    out << "track_id,rank,beta0,beta1,intervals,lifetime_s\n";
    for (const PersistenceTrack& t : tracks) {
        out << t.id << ',' << t.descriptor.rank << ',' << t.descriptor.betti.b0 << ',' << t.descriptor.betti.b1 << ',';
        for (std::size_t k = 0; k < t.intervals.size(); ++k)
            out << (k ? ";" : "") << format_number(t.intervals[k].birth) << '-' << format_number(t.intervals[k].death);
        out << ',' << format_number(t.lifetime()) << '\n';
    }
    return out.str();
}

std::string barcode_svg(const std::vector<PersistenceTrack>& tracks) {
    std::vector<const PersistenceTrack*> rows;
    for (const PersistenceTrack& t : tracks) rows.push_back(&t);
    std::stable_sort(rows.begin(), rows.end(), [](const PersistenceTrack* a, const PersistenceTrack* b) {
        return a->intervals.front().birth < b->intervals.front().birth;
    });

    double t0 = 0.0;
    double t1 = 1.0;
    if (!rows.empty()) {
        t0 = rows.front()->intervals.front().birth;
        t1 = t0;
        for (const auto* t : rows)
            for (const Interval& i : t->intervals) t1 = std::max(t1, i.death);
        if (t1 == t0) t1 = t0 + 1.0;
    }

    constexpr int left = 140, plot = 480, row_h = 24, top = 10;
    const int height = top * 2 + row_h * static_cast<int>(rows.size());
    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << left + plot + 20 << "\" height=\"" << height
        << "\">\n";
    auto x_of = [&](double t) { return left + (t - t0) / (t1 - t0) * plot; };
    for (std::size_t r = 0; r < rows.size(); ++r) {
        const PersistenceTrack& t = *rows[r];
        const int y = top + static_cast<int>(r) * row_h;
        svg << "  <g id=\"track-" << t.id << "\">\n";
        svg << "    <text x=\"4\" y=\"" << y + 16 << "\" font-family=\"monospace\" font-size=\"12\">track " << t.id
            << " rank " << t.descriptor.rank << "</text>\n";
        for (const Interval& i : t.intervals) {
            const double x = x_of(i.birth);
            const double w = std::max(2.0, x_of(i.death) - x);
            svg << "    <rect x=\"" << format_number(x) << "\" y=\"" << y + 4 << "\" width=\"" << format_number(w)
                << "\" height=\"16\" fill=\"#3b6ea5\"/>\n";
        }
        svg << "  </g>\n";
    }
    svg << "</svg>\n";
    return svg.str();
}

}  // namespace prox
