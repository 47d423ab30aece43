#pragma once

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "prox/proximity.hpp"

namespace prox {

enum class Mode { Plain, Descriptive };

/// Nearness of two single points: the space's rule in plain mode, matching
/// descriptions in descriptive mode.
bool points_near(const ProximitySpace& space, std::size_t x, std::size_t y, Mode mode);

/// Total map between finite spaces, stored as the image index of each source point.
class FiniteMap {
public:
    FiniteMap(SpacePtr source, SpacePtr target, std::vector<std::size_t> image);

    static FiniteMap identity(SpacePtr space);
    static FiniteMap constant(SpacePtr source, SpacePtr target, std::size_t value);

    const SpacePtr& source() const noexcept { return source_; }
    const SpacePtr& target() const noexcept { return target_; }
    std::size_t operator()(std::size_t x) const { return image_.at(x); }
    const std::vector<std::size_t>& image() const noexcept { return image_; }
    PointSet image_set() const { return PointSet(image_); }

    friend bool operator==(const FiniteMap& a, const FiniteMap& b) {
        return a.source_ == b.source_ && a.target_ == b.target_ && a.image_ == b.image_;
    }

private:
    SpacePtr source_;
    SpacePtr target_;
    std::vector<std::size_t> image_;
};

struct ContinuityResult {
    bool continuous = true;
    std::optional<std::pair<std::size_t, std::size_t>> witness;  // near source pair with far images
};

/// With pointwise-lifted nearness it is enough to test pairs of points.
ContinuityResult check_proximal_continuity(const FiniteMap& f, Mode mode);

/// g ∘ f; f's target must be g's source (same space object).
FiniteMap compose(const FiniteMap& f, const FiniteMap& g);

/**
 * Pastes f (defined on the subspace A) and g (on B) into one map on X.
 * Points are matched by id. A and B must be closed in X (descriptively
 * closed in descriptive mode), cover X, and f and g must agree on A∩B; the
 * thrown GluePreconditionError names the condition that failed.
 */
FiniteMap glue(const FiniteMap& f, const FiniteMap& g, SpacePtr x, Mode mode);

/**
 * Discretized homotopy H: X × T_k → Y with T_k = {0, 1/k, ..., 1}.
 * The table is row-major by point: at(x, i) = table[x * (k + 1) + i].
 */
class HomotopyWitness {
public:
    HomotopyWitness(SpacePtr source, SpacePtr target, std::size_t k, std::vector<std::size_t> table,
                    std::optional<PointSet> rel = std::nullopt);

    const SpacePtr& source() const noexcept { return source_; }
    const SpacePtr& target() const noexcept { return target_; }
    std::size_t k() const noexcept { return k_; }
    const std::optional<PointSet>& rel() const noexcept { return rel_; }
    const std::vector<std::size_t>& table() const noexcept { return table_; }
    std::size_t at(std::size_t x, std::size_t step) const { return table_.at(x * (k_ + 1) + step); }
    FiniteMap slice(std::size_t step) const;

    HomotopyWitness with_rel(std::optional<PointSet> rel) const;

private:
    SpacePtr source_;
    SpacePtr target_;
    std::size_t k_;
    std::vector<std::size_t> table_;
    std::optional<PointSet> rel_;
};

inline constexpr std::size_t kDefaultSteps = 8;

struct HomotopyCheck {
    bool verified = false;
    std::string reason;
};

/**
 * Checks H(·,0) = f, H(·,k) = g, continuity of H for the product nearness
 * ((x,i) near (y,j) iff x near y and |i - j| <= 1), and, when a rel set is
 * present, that H is constant in t there.
 */
HomotopyCheck verify_homotopy(const HomotopyWitness& h, const FiniteMap& f, const FiniteMap& g, Mode mode);

/// Same spaces and resolution required; the result lives on T_2k. Throws
/// MidpointMismatchError if F(·,1) differs from G(·,0) and ResolutionError
/// when the resolutions differ.
HomotopyWitness concatenate_homotopies(const HomotopyWitness& f, const HomotopyWitness& g);
HomotopyWitness reverse_homotopy(const HomotopyWitness& h);
HomotopyWitness constant_homotopy(const FiniteMap& f, std::size_t k = kDefaultSteps);

/**
 * Witness from f to g that moves each point's image along the digital
 * segment between f(x) and g(x) in the target's coordinates, snapping every
 * intermediate position to the nearest target point (lowest index on ties).
 * Only a candidate: run verify_homotopy on it.
 */
HomotopyWitness straight_line_homotopy(const FiniteMap& f, const FiniteMap& g, std::size_t k = kDefaultSteps);

/// (h ∘ H)(x, t) = h(H(x, t)).
HomotopyWitness post_compose(const FiniteMap& h, const HomotopyWitness& hw);
/// (H ∘ k)(w, t) = H(k(w), t).
HomotopyWitness pre_compose(const HomotopyWitness& hw, const FiniteMap& k);

enum class ConstantKind { Ordinary, Degenerate, NonConstant };

const char* to_string(ConstantKind kind);

/// Needs a probe on the target.
ConstantKind classify_constant(const FiniteMap& d);
/// All image descriptions coincide (within the feature tolerance of the target).
bool satisfies_degenerate(const FiniteMap& d);

enum class ContractibilityMode { DegenerateDescriptive, Descriptive, GridTopological };

struct Contractibility {
    bool certified = false;
    std::string certificate;
    std::optional<HomotopyWitness> witness;
};

/**
 * Certificate search for contractibility of a whole space.
 *
 * DegenerateDescriptive: Φ constant, witnessed by the reflexive homotopy of
 * the identity (itself a degenerate constant map). Descriptive: a degenerate
 * certificate is turned into an explicit witness from the identity to the
 * constant map at the first point; otherwise a supplied witness starting at
 * the identity and ending in a constant map is verified. GridTopological:
 * points must sit on integer coordinates; certified iff the pixel set has
 * b0 = 1 and b1 = 0.
 *
 * A false result means no certificate was found, not that the space is
 * non-contractible.
 */
Contractibility contractibility(const SpacePtr& space, ContractibilityMode mode,
                                const HomotopyWitness* supplied = nullptr, std::size_t k = kDefaultSteps);

}  // namespace prox
