#pragma once

// The folded ribbon built from a normal-form grid diagram: a pile of paper
// planes (one per counted row) whose wings are joined by caps on top.

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "foldrib/invariants.hpp"
#include "foldrib/model.hpp"

namespace foldrib {

struct PaperPlane {
    int index = 0;
    int row = 0;          // source row in the grid diagram
    int left_wing = 0;    // wing ids are 2 * index and 2 * index + 1
    int right_wing = 0;
    Rational left_slot;   // stable fractional slot keys in the wing sequence
    Rational right_slot;
    std::optional<int> crossed_wing;  // wing passed over (B1 rows only)
};

struct Cap {
    int row = 0;
    int left_wing = 0;
    int right_wing = 0;
};

struct FoldSchedule {
    std::vector<PaperPlane> planes;  // insertion order, bottom to top
    std::vector<Cap> caps;           // upper-part rows, bottom to top
    std::vector<int> connection_order;  // cap indices, left to right by left wing
    /// Wing ids left to right after each insertion.
    std::vector<std::vector<int>> wing_sequences;

    int wing_count() const { return 2 * static_cast<int>(planes.size()); }
};

/// Throws NotNormalForm unless the lower part is B1/B1o and the upper part B3o.
FoldSchedule build_pile(const BinaryGridDiagram& g);

/// Problems with the pile invariant (2k wings after k planes, strictly
/// increasing slot keys so every consecutive pair has room between them).
std::vector<std::string> pile_issues(const FoldSchedule& s);

/// 2 (#planes) + epsilon (#wings + 3 #caps), in width units.
Rational ribbon_length(const FoldSchedule& s, const Rational& epsilon);

struct SvgConfig {
    double width = 1.0;       // ribbon width in layout units
    double epsilon = 0.05;    // wing allowance, in widths
    double scale = 100.0;     // pixels per width unit
    double margin = 1.0;      // in width units
};

struct Segment2 {
    Point a, b;
};

struct LayoutGeometry {
    std::vector<std::vector<Point>> core;  // closed polylines, one per component
    std::vector<Segment2> folds;
    std::vector<Point> crossings;          // where a plane passes over a wing
    double min_x = 0, max_x = 0, min_y = 0, max_y = 0;
};

/// Wing j (by slot order) stands at x = 2j, plane k lies at y = 2k, cap r
/// at 2 (#planes + r + 1). Throws LayoutOverlap when fold lines meet.
LayoutGeometry layout_geometry(const FoldSchedule& s, const SvgConfig& config);

std::string emit_svg(const FoldSchedule& s, const SvgConfig& config = {});

/// Planar diagram of the layout's core, plane segments over wings.
PlanarDiagram core_to_pd(const FoldSchedule& s);

nlohmann::json to_json(const FoldSchedule& s, const Rational& epsilon, double width);

}  // namespace foldrib
