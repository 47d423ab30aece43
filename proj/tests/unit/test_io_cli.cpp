#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "prox/cli.hpp"
#include "prox/errors.hpp"
#include "prox/io.hpp"

using namespace prox;
namespace fs = std::filesystem;

namespace {

std::string data(const std::string& name) { return std::string(PROX_DATA_DIR) + "/" + name; }

struct Run {
    int code = 0;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

// Scratch directory removed at the end of the test case.
struct Scratch {
    fs::path dir;
    Scratch() {
        dir = fs::temp_directory_path() / ("prox-test-" + std::to_string(std::random_device{}()));
        fs::create_directories(dir);
    }
    ~Scratch() { fs::remove_all(dir); }
    std::string write(const std::string& name, const std::string& text) const {
        std::ofstream(dir / name) << text;
        return (dir / name).string();
    }
    std::string path(const std::string& name) const { return (dir / name).string(); }
};

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    return std::string(std::istreambuf_iterator<char>(in), {});
}

std::size_t count(const std::string& text, const std::string& what) {
    std::size_t n = 0;
    for (auto p = text.find(what); p != std::string::npos; p = text.find(what, p + 1)) ++n;
    return n;
}

}  // namespace

TEST_CASE("space documents") {
    const auto j = nlohmann::json::parse(R"({
        "points": [{"id": "a", "coords": [0, 0], "features": [1]},
                   {"id": "b", "coords": [1, 0], "features": [2]}],
        "rule": {"kind": "metric", "tau": 1.5},
        "feature_tolerance": 0.5
    })");
    const ProximitySpace s = io::parse_space(j, "mem.json");
    CHECK(s.size() == 2);
    CHECK(s.point(1).id == "b");
    CHECK(s.probe().tolerance() == 0.5);
    CHECK(near(s, PointSet{0}, PointSet{1}));

    const ProximitySpace back = io::parse_space(io::space_to_json(s), "again.json");
    CHECK(io::space_to_json(back) == io::space_to_json(s));

    const auto rel = nlohmann::json::parse(R"({
        "points": [{"id": "a"}, {"id": "b"}, {"id": "c"}],
        "rule": {"kind": "relation", "pairs": [["a", "b"]], "symmetric": true}
    })");
    const ProximitySpace r = io::parse_space(rel, "rel.json");
    CHECK(r.related(0, 1));
    CHECK(r.related(1, 0));
    CHECK_FALSE(r.related(0, 2));
}

TEST_CASE("parse errors name file, field and reason") {
    auto error_of = [](const char* text) -> std::optional<ParseError> {
        try {
            (void)io::parse_space(nlohmann::json::parse(text), "bad.json");
        } catch (const ParseError& e) {
            return e;
        }
        return std::nullopt;
    };
    const auto coords = error_of(R"({"points": [{"id": "a", "coords": [0, 0]}, {"id": "b", "coords": [1]}],
                                     "rule": {"kind": "metric", "tau": 1}})");
    REQUIRE(coords);
    CHECK(coords->file() == "bad.json");
    CHECK(coords->field() == "points[1].coords");
    CHECK_FALSE(coords->reason().empty());

    const auto kind = error_of(R"({"points": [{"id": "a"}], "rule": {"kind": "fuzzy"}})");
    REQUIRE(kind);
    CHECK(kind->field() == "rule.kind");

    CHECK(error_of(R"({"points": [], "rule": {"kind": "metric", "tau": 1}})"));
    CHECK(error_of(R"({"points": [{"id": 3}], "rule": {"kind": "metric", "tau": 1}})"));

    io::Loader loader;
    CHECK_THROWS_AS(loader.read(data("malformed.json")), ParseError);
    CHECK_THROWS_AS(loader.read(data("does_not_exist.json")), ParseError);
}

TEST_CASE("identical inline spaces are shared") {
    io::Loader loader;
    const auto j = nlohmann::json::parse(R"({"points": [{"id": "a", "coords": [0, 0]}],
                                             "rule": {"kind": "metric", "tau": 1}})");
    const io::Origin o{"mem.json", "."};
    CHECK(loader.space(j, o, "f.source") == loader.space(j, o, "g.source"));
    CHECK(loader.space_file(data("line_space.json")) == loader.space_file(data("line_space.json")));
}

TEST_CASE("netpbm images") {
    Scratch tmp;
    const std::string pbm = tmp.write("ring.pbm", "P1\n# ring\n3 3\n1 1 1\n1 0 1\n1 1 1\n");
    const PixelSet ring = io::read_pnm(pbm);
    CHECK(ring.window() == Window{3, 3});
    CHECK(ring.size() == 8);
    CHECK_FALSE(ring.contains({1, 1}));
    CHECK(io::read_pnm(tmp.write("again.pbm", io::write_pbm(ring))) == ring);

    const PixelSet grey = io::read_pnm(tmp.write("g.pgm", "P2\n2 1\n10\n6 5\n"));
    CHECK(grey.contains({0, 0}));
    CHECK_FALSE(grey.contains({1, 0}));

    CHECK_THROWS_AS(io::read_pnm(tmp.write("short.pbm", "P1\n2 2\n1 0 1\n")), ParseError);
    CHECK_THROWS_AS(io::read_pnm(tmp.write("p4.pbm", "P4\n1 1\n")), ParseError);
}

TEST_CASE("id lists") {
    CHECK(io::split_ids("a,b,c") == std::vector<std::string>{"a", "b", "c"});
    CHECK(io::split_ids("a") == std::vector<std::string>{"a"});
}

TEST_CASE("exit codes on the sample inputs") {
    CHECK(run({"check-axioms", data("metric_grid.json")}).code == cli::kPass);
    CHECK(run({"continuity", data("shift_map.json")}).code == cli::kPass);
    CHECK(run({"homotopy", data("retract_homotopy.json")}).code == cli::kPass);
    CHECK(run({"glue", data("glue.json")}).code == cli::kPass);
    CHECK(run({"cycles", data("figure_eight.json")}).code == cli::kPass);
    CHECK(run({"nerve", data("ring_cover.json")}).code == cli::kPass);
    CHECK(run({"betti", data("graph_theta.json")}).code == cli::kPass);
    CHECK(run({"goodcover", data("figure_eight.json")}).code == cli::kPass);
    CHECK(run({"alexandrov", data("quadruple_flat.json")}).code == cli::kPass);
    CHECK(run({"track", data("butterfly_frames.json")}).code == cli::kPass);
    CHECK(run({"closure", data("line_space.json"), "--set", "a"}).code == cli::kPass);

    const Run bad = run({"check-axioms", data("malformed.json")});
    CHECK(bad.code == cli::kInputError);
    CHECK(bad.err.find("malformed.json") != std::string::npos);
    CHECK(bad.out.empty());

    CHECK(run({"check-axioms", data("nope.json")}).code == cli::kInputError);
    CHECK(run({"closure", data("line_space.json"), "--set", "zz"}).code == cli::kInputError);
    CHECK(run({"frobnicate"}).code == cli::kInputError);
    CHECK(run({"jordan", data("square.json"), "--window", "nonsense"}).code == cli::kInputError);
}

TEST_CASE("verification failures exit with 1") {
    Scratch tmp;
    const std::string asym = tmp.write("asym.json", R"({"points": [{"id": "a"}, {"id": "b"}],
        "rule": {"kind": "relation", "pairs": [["a", "b"]]}})");
    CHECK(run({"check-axioms", asym}).code == cli::kVerificationFailure);

    const std::string touching = tmp.write("touch.json", R"({"window": [8, 8],
        "elements": [{"rect": [0, 0, 2, 2]}, {"rect": [3, 3, 5, 5]}]})");
    const Run r = run({"--json", "nerve", touching});
    CHECK(r.code == cli::kVerificationFailure);
    const auto doc = nlohmann::json::parse(r.out);
    CHECK(doc["equal"] == false);
    CHECK(doc["touching_pairs"].size() == 1);
}

TEST_CASE("json output parses and is stable") {
    const std::vector<std::string> args{"--json", "betti", data("graph_theta.json")};
    const Run a = run(args), b = run(args);
    CHECK(a.out == b.out);
    const auto doc = nlohmann::json::parse(a.out);
    CHECK(doc["rank"] == 2);
    CHECK(doc.find("generated_at") == doc.end());

    const Run stamped = run({"--json", "--stamp", "betti", data("graph_theta.json")});
    const auto s = nlohmann::json::parse(stamped.out);
    REQUIRE(s.contains("generated_at"));
    CHECK(s["generated_at"].get<std::string>().back() == 'Z');

    for (const char* sub : {"cycles", "goodcover"})
        CHECK(nlohmann::json::accept(run({"--json", sub, data("figure_eight.json")}).out));
    CHECK(nlohmann::json::accept(run({"--json", "check-axioms", data("metric_grid.json")}).out));
}

TEST_CASE("jordan writes a region overlay") {
    Scratch tmp;
    const std::string svg = tmp.path("square.svg");
    const Run r = run({"jordan", data("square.json"), "--window", "9x9", "--emit-svg", svg});
    CHECK(r.code == cli::kPass);
    const std::string text = slurp(svg);
    CHECK(count(text, "<g id=") == 3);

    const std::string pbm = tmp.write("ring.pbm", "P1\n5 5\n0 0 0 0 0\n0 1 1 1 0\n0 1 0 1 0\n0 1 1 1 0\n0 0 0 0 0\n");
    CHECK(run({"jordan", pbm}).code == cli::kPass);
}

TEST_CASE("track writes its reports") {
    Scratch tmp;
    const Run r = run({"track", data("butterfly_frames.json"), "--report", tmp.path("r.json"), "--barcode",
                       tmp.path("b.svg"), "--csv", tmp.path("t.csv")});
    CHECK(r.code == cli::kPass);
    const auto report = nlohmann::json::parse(slurp(tmp.path("r.json")));
    REQUIRE(report["tracks"].size() == 1);
    CHECK(report["tracks"][0]["rank"] == 3);
    CHECK(slurp(tmp.path("t.csv")) == r.out);
    CHECK(count(slurp(tmp.path("b.svg")), "id=\"track-") == 1);
}
