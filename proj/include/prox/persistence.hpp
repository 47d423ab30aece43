#pragma once

#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "prox/cycles.hpp"
#include "prox/grid.hpp"
#include "prox/nerve.hpp"

namespace prox {

/// One cycle reads as a multi-path cycle, two or more as a cycle system.
struct CycleShape {
    SpacePtr space;
    std::vector<MultiCycle> cycles;
    SystemMode mode = SystemMode::Global;
};

struct PixelShape {
    PixelSet pixels;
};

using Shape = std::variant<CycleShape, PixelShape>;

struct Frame {
    std::string id;
    double time = 0.0;
    std::optional<Shape> shape;  // absent: the shape is not visible in this frame
    std::optional<FeatureVector> features;
};

struct FrameDescriptor {
    Betti betti;
    std::size_t rank = 0;
    std::optional<FeatureVector> features;
};

/**
 * Cycle shapes: Betti numbers and free-group rank of the union graph whose
 * edges join consecutive vertices of every member path. Pixel shapes: grid
 * homology, with rank = b1. Throws InvalidShapeError for missing, empty or
 * invalid shapes.
 */
FrameDescriptor frame_descriptor(const Frame& frame);

/// |rank difference| <= tolerance, and feature summaries within
/// feature_tolerance when both descriptors carry one.
bool descriptors_near(const FrameDescriptor& a, const FrameDescriptor& b, std::size_t tolerance,
                      double feature_tolerance = 0.0);

struct Interval {
    std::size_t first_frame = 0;  // positions in the frame sequence
    std::size_t last_frame = 0;
    double birth = 0.0;
    double death = 0.0;
};

struct PersistenceTrack {
    std::size_t id = 0;
    FrameDescriptor descriptor;  // descriptor of the frame that opened the track
    std::vector<Interval> intervals;

    double lifetime() const;
};

struct TrackOptions {
    std::size_t tolerance = 0;
    std::size_t gap = 0;  // frames a track may go unmatched before it closes
    double feature_tolerance = 0.0;
};

/**
 * Greedy forward matching. Each frame with a shape joins the oldest open
 * track whose opening descriptor is near its own; a match right after the
 * previous one extends the current interval, a later one starts a new
 * interval. Unmatched frames open new tracks. A track closes once it has
 * gone unmatched for more than `gap` consecutive frames. Throws
 * UnsortedInputError when times decrease.
 */
std::vector<PersistenceTrack> track(std::span<const Frame> frames, TrackOptions options = {});

std::string report_json(const std::vector<PersistenceTrack>& tracks, std::span<const Frame> frames);
std::string report_csv(const std::vector<PersistenceTrack>& tracks);
/// One row per track, ordered by first birth.
std::string barcode_svg(const std::vector<PersistenceTrack>& tracks);

/// Shortest decimal text that reads back to the same double.
std::string format_number(double v);

}  // namespace prox
