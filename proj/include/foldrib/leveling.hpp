#pragma once

// Bisected vertex levelings: search, verification, portion labels and flips.

#include <string>
#include <utility>
#include <vector>

#include "foldrib/model.hpp"

namespace foldrib {

struct LevelingOptions {
    /// Enumerate all levelings instead of the first one per bottom vertex
    /// and rotation; either way the kept leveling has the fewest T1- after
    /// flips, then the fewest T1 portions.
    bool exhaustive = false;
    /// Cap on complete levelings visited in exhaustive mode.
    long max_levelings = 200000;
};

/// Backtracking search for a vertex order satisfying the cut condition with
/// monotone edges. Requires a connected, nugatory-free diagram.
LeveledDiagram find_leveling(const PlanarDiagram& d, const LevelingOptions& options = {});

/// Rebuild frames, portions and strand columns for a fixed order. The bottom
/// vertex's up edges are given left to right. Throws NoLevelingFound if the
/// order cannot be drawn with monotone edges.
LeveledDiagram level_from_order(const PlanarDiagram& d, const std::vector<int>& order,
                                const std::vector<EdgeId>& bottom_up_edges);

/// Problems with a leveling (cut condition, monotonicity, portion counts);
/// empty when valid.
std::vector<std::string> check_leveling(const LeveledDiagram& l);

/// Portion of the k-th vertex from the bottom. The sign is + when the
/// expansion needs a single counted block (see expand_portion).
PortionType classify_portion(const LeveledDiagram& l, int k);

/// x-flip: rotate by pi about the horizontal axis (order reversed).
/// y-flip: rotate by pi about the vertical axis (columns mirrored).
/// Both rotate the diagram out of the plane, so the knot type is unchanged.
LeveledDiagram apply_flip(const LeveledDiagram& l, const FlipChoice& f);

/// The flip minimizing T1-, ties broken identity, y, x, xy.
std::pair<LeveledDiagram, FlipChoice> optimize_flips(const LeveledDiagram& l);

/// Predicted portion counts after a flip, from the exchange table alone.
PortionCounts flip_counts(const PortionCounts& counts, const FlipChoice& f);

/// The planar diagram drawn by the leveling: every vertex gets its slots from
/// the frame (down edges left to right, then up edges right to left).
PlanarDiagram leveled_to_pd(const LeveledDiagram& l);

}  // namespace foldrib
