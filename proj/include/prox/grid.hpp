#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace prox {

struct Pixel {
    int x = 0;
    int y = 0;

    friend bool operator==(const Pixel&, const Pixel&) = default;
    friend auto operator<=>(const Pixel& a, const Pixel& b) {
        if (auto c = a.y <=> b.y; c != 0) return c;
        return a.x <=> b.x;
    }
};

struct Window {
    int width = 0;
    int height = 0;

    bool contains(Pixel p) const { return p.x >= 0 && p.y >= 0 && p.x < width && p.y < height; }
    std::size_t area() const { return static_cast<std::size_t>(width) * static_cast<std::size_t>(height); }

    friend bool operator==(const Window&, const Window&) = default;
};

/// Set of pixels inside a fixed window, stored as a dense bitmap.
class PixelSet {
public:
    explicit PixelSet(Window window);
    PixelSet(Window window, std::span<const Pixel> pixels);

    const Window& window() const noexcept { return window_; }
    std::size_t size() const noexcept { return count_; }
    bool empty() const noexcept { return count_ == 0; }

    /// False for pixels outside the window.
    bool contains(Pixel p) const;
    /// Throws OutOfWindowError for pixels outside the window.
    void insert(Pixel p);
    void erase(Pixel p);

    /// Row-major order (y, then x).
    std::vector<Pixel> pixels() const;

    PixelSet complement() const;
    friend PixelSet operator|(const PixelSet& a, const PixelSet& b);
    friend PixelSet operator&(const PixelSet& a, const PixelSet& b);
    friend PixelSet operator-(const PixelSet& a, const PixelSet& b);
    friend bool operator==(const PixelSet& a, const PixelSet& b) {
        return a.window_ == b.window_ && a.bits_ == b.bits_;
    }

    bool test(std::size_t offset) const { return bits_[offset] != 0; }
    std::size_t offset(Pixel p) const {
        return static_cast<std::size_t>(p.y) * static_cast<std::size_t>(window_.width) + static_cast<std::size_t>(p.x);
    }

private:
    Window window_;
    std::vector<std::uint8_t> bits_;
    std::size_t count_ = 0;
};

enum class Connectivity { Four, Eight };

/// Component labels: -1 for pixels not in the set, else 0..count-1 in
/// row-major order of first appearance.
struct Labelling {
    std::vector<int> labels;
    int count = 0;
};

Labelling label_components(const PixelSet& set, Connectivity connectivity);

/// Integer line rasterization from a to b, both endpoints included.
std::vector<Pixel> digital_segment(Pixel a, Pixel b);

/**
 * Strict rasterization of a closed vertex cycle: each segment is walked with
 * digital_segment and the curve may not revisit a pixel. Needs at least three
 * distinct vertices, all inside the window.
 */
PixelSet rasterize_cycle(std::span<const Pixel> vertices, Window window);

/// Union of the digital segments of a polyline; no simplicity requirement.
PixelSet rasterize_polyline(std::span<const Pixel> vertices, Window window, bool closed);

struct ClosureParts {
    PixelSet closure;
    PixelSet boundary;
    PixelSet interior;
    PixelSet complement;
};

/// Boundary pixels are the members 8-adjacent to a non-member; pixels beyond
/// the window edge count as non-members.
ClosureParts closure_boundary_interior(const PixelSet& set);

struct GridBetti {
    int b0 = 0;
    int b1 = 0;

    friend bool operator==(const GridBetti&, const GridBetti&) = default;
};

/// b0: 8-connected components of the set; b1: 4-connected components of the
/// complement that do not touch the window border.
GridBetti grid_homology(const PixelSet& set);

/// Complement pixels that are 4-connected to the window border.
PixelSet exterior_of(const PixelSet& curve);

/// Smallest window containing every pixel with `margin` free pixels around.
Window bounding_window(std::span<const Pixel> pixels, int margin = 2);

}  // namespace prox
