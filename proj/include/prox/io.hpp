#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "prox/cycles.hpp"
#include "prox/grid.hpp"
#include "prox/maps.hpp"
#include "prox/nerve.hpp"
#include "prox/persistence.hpp"
#include "prox/proximity.hpp"

namespace prox::io {

using Json = nlohmann::json;

/// Where a JSON value came from, for diagnostics and for resolving
/// relative paths.
struct Origin {
    std::string file;
    std::filesystem::path dir;
};

/// The cycle part of a `cycles` input: a single cycle or a system.
struct CycleInput {
    SpacePtr space;
    std::optional<MultiCycle> cycle;
    std::optional<CycleSystem> system;
};

/// Either a cover of a proximity space or a cover of a pixel window by
/// rectangles / pixel lists.
struct CoverInput {
    std::optional<Cover> cover;
    std::optional<PixelCover> pixels;
};

struct GraphInput {
    Graph graph;
    std::vector<std::string> labels;  // vertex names, in index order
};

/**
 * Reads the JSON schemas of the toolkit. Spaces referenced from several
 * places, by the same path or by identical inline documents, come back as
 * the same SpacePtr so maps between them compose. Every failure is a
 * ParseError naming file, field and reason.
 */
class Loader {
public:
    Json read(const std::string& path);

    SpacePtr space_file(const std::string& path);
    /// An inline space object or a path string relative to origin.dir.
    SpacePtr space(const Json& j, const Origin& origin, const std::string& field);

    /// An inline map object or a path string relative to origin.dir.
    FiniteMap map(const Json& j, const Origin& origin, const std::string& field);
    HomotopyWitness homotopy(const Json& j, const Origin& origin, const std::string& field, SpacePtr source,
                             SpacePtr target);
    MultiCycle cycle(const Json& j, const ProximitySpace& space, const Origin& origin, const std::string& field);
    CycleSystem system(const Json& j, const ProximitySpace& space, const Origin& origin, const std::string& field);
    CycleInput cycles(const Json& j, const Origin& origin);
    CoverInput cover(const Json& j, const Origin& origin);
    GraphInput graph(const Json& j, const Origin& origin);
    AlexandrovQuadruple quadruple(const Json& j, const Origin& origin);
    std::vector<Frame> frames(const Json& j, const Origin& origin);

    Origin origin_of(const std::string& path) const;

private:
    std::map<std::string, SpacePtr> cache_;
};

/// Parses a space document without caching.
ProximitySpace parse_space(const Json& j, const std::string& file, const std::string& field = "");

Json space_to_json(const ProximitySpace& space);

/// Plain (P1) or ASCII (P2) netpbm. PBM ones and PGM values above half of
/// maxval are foreground.
PixelSet read_pnm(const std::string& path);
std::string write_pbm(const PixelSet& set);

/// Comma separated ids.
std::vector<std::string> split_ids(const std::string& text);

}  // namespace prox::io
