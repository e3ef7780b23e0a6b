#pragma once

// Diagram-level value types shared by every pipeline stage.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "foldrib/error.hpp"

namespace foldrib {

using Rational = boost::rational<std::int64_t>;
using EdgeId = int;

std::string to_string(const Rational& r);
double to_double(const Rational& r);

// ---------------------------------------------------------------------------
// Planar diagrams (PD-code semantics)
// ---------------------------------------------------------------------------

/// One crossing of a planar diagram. `slots` lists the four incident edges in
/// counterclockwise order; slots 0/2 and 1/3 are the two transversal strands.
/// `over_pair` is 0 when the 0-2 strand passes over, 1 when 1-3 does.
struct Crossing {
    int id = 0;
    std::array<EdgeId, 4> slots{};
    int over_pair = 1;

    int under_pair() const { return over_pair ^ 1; }
    bool slot_is_over(int slot) const { return slot % 2 == over_pair; }
    bool operator==(const Crossing&) const = default;
};

struct PlanarDiagram {
    std::vector<Crossing> crossings;
    /// Components that carry no crossing at all (trivial circles).
    int free_loops = 0;

    int crossing_count() const { return static_cast<int>(crossings.size()); }
    /// Sorted distinct edge identifiers.
    std::vector<EdgeId> edges() const;
    /// Number of link components, counting free loops.
    int components() const;

    bool operator==(const PlanarDiagram&) const = default;
};

/// Position of one edge end: (crossing index, slot).
struct SlotRef {
    int crossing = -1;
    int slot = -1;
    bool operator==(const SlotRef&) const = default;
};

/// The two ends of every edge, indexed by edge id. Throws DanglingEdge /
/// BadArity when an edge does not appear exactly twice.
std::vector<std::array<SlotRef, 2>> edge_ends(const PlanarDiagram& d);

/// The other end of the edge leaving `from`.
SlotRef across(const std::vector<std::array<SlotRef, 2>>& ends, const PlanarDiagram& d,
               SlotRef from);

/// A strand passing through a crossing, entering at `in_slot`.
struct Passage {
    int crossing = -1;
    int in_slot = -1;
};

/// Components traced through crossings (free loops are not listed). Each
/// component is a cyclic list of passages in a canonical direction: the first
/// under-passage of the component (in crossing order) enters through the
/// lower-numbered slot of the under pair; a component that is never under is
/// oriented the same way along its first over-passage.
std::vector<std::vector<Passage>> trace_components(const PlanarDiagram& d);

/// Per crossing, which slots are incoming. `reversed` flips the orientation of
/// the listed components (indices into trace_components order).
std::vector<std::array<bool, 4>> orientation(const PlanarDiagram& d,
                                             const std::vector<bool>& reversed = {});

/// Crossing signs (+1 / -1) under the given orientation.
std::vector<int> crossing_signs(const PlanarDiagram& d, const std::vector<bool>& reversed = {});

/// Faces of the underlying 4-valent map, via the rotation system.
int face_count(const PlanarDiagram& d);

/// Mirror the projection and switch every crossing: the effect of rotating the
/// diagram by pi about an axis lying in the projection plane.
PlanarDiagram rotate_out_of_plane(const PlanarDiagram& d);

/// Switch every crossing only (the mirror image knot).
PlanarDiagram mirror_image(const PlanarDiagram& d);

enum class ValidationIssue { DanglingEdge, BadArity, Disconnected, NonPlanar };

struct ValidationResult {
    bool ok = true;
    bool zero_crossing = false;
    std::vector<std::pair<ValidationIssue, std::string>> issues;
};

ValidationResult validate_diagram(const PlanarDiagram& d);

// ---------------------------------------------------------------------------
// Leveled diagrams
// ---------------------------------------------------------------------------

struct PortionType {
    int index = 0;     // edge-ends leaving the vertex downward, 0..4
    bool plus = true;  // + when the cheap expansion applies

    std::string label() const;
    bool operator==(const PortionType&) const = default;
};

/// Local picture of one leveled vertex.
struct VertexFrame {
    int crossing = -1;
    int position = 0;            // frontier index of the leftmost down edge
    int rotation = 0;            // slot of the leftmost down edge; up edges, left to right, sit at rotation-1, rotation-2, ...
    std::vector<EdgeId> down;    // left to right
    std::vector<EdgeId> up;      // left to right
};

struct LeveledDiagram {
    PlanarDiagram diagram;
    std::vector<int> order;                         // crossing indices, bottom to top
    std::vector<PortionType> portions;              // parallel to order
    std::vector<VertexFrame> frames;                // parallel to order
    /// strand_columns[k] lists the edges crossing the level line below the
    /// k-th vertex (k = 0..n, level n above the top vertex), left to right.
    std::vector<std::vector<EdgeId>> strand_columns;
};

struct PortionCounts {
    std::array<int, 5> plus{};
    std::array<int, 5> minus{};

    int total(int index) const { return plus[index] + minus[index]; }
    int t1_minus() const { return minus[1]; }
    bool operator==(const PortionCounts&) const = default;
};

PortionCounts count_portions(const LeveledDiagram& l);

struct FlipChoice {
    bool x_flipped = false;
    bool y_flipped = false;

    std::string label() const;
    bool operator==(const FlipChoice&) const = default;
};

// ---------------------------------------------------------------------------
// Binary grid diagrams
// ---------------------------------------------------------------------------

enum class Shape { Min, Trans, Max };

struct BlockType {
    Shape shape = Shape::Min;
    bool crossed = false;

    /// "B1", "B2", "B3" for crossed blocks, "B1o", "B2o", "B3o" otherwise.
    std::string name() const;
    /// Counted blocks are B1, B2, B3 and uncrossed B1.
    bool counted() const { return crossed || shape == Shape::Min; }
    int strand_delta() const { return shape == Shape::Min ? 2 : shape == Shape::Max ? -2 : 0; }
    bool operator==(const BlockType&) const = default;
};

inline constexpr BlockType kB1{Shape::Min, true};
inline constexpr BlockType kB2{Shape::Trans, true};
inline constexpr BlockType kB3{Shape::Max, true};
inline constexpr BlockType kB1o{Shape::Min, false};
inline constexpr BlockType kB2o{Shape::Trans, false};
inline constexpr BlockType kB3o{Shape::Max, false};

/// up: a vertical strand starts here and runs upward.
/// down: a vertical strand arriving from below terminates here.
enum class EndKind { Up, Down };

struct Row {
    int left = 0;
    int right = 0;
    EndKind left_end = EndKind::Up;
    EndKind right_end = EndKind::Up;
    std::optional<int> crossed_column;
    std::vector<int> columns_below;
    std::vector<int> columns_above;

    Shape shape() const;
    BlockType type() const { return {shape(), crossed_column.has_value()}; }
    bool operator==(const Row&) const = default;
};

struct BinaryGridDiagram {
    std::vector<Row> rows;  // bottom to top

    bool operator==(const BinaryGridDiagram&) const = default;
};

/// Structural problems of a grid diagram; empty when valid.
std::vector<std::string> grid_issues(const BinaryGridDiagram& g);

/// Throws InvalidGrid listing the first issue.
void require_valid(const BinaryGridDiagram& g);

/// Rebuild columns_below/columns_above from the row geometry alone.
BinaryGridDiagram with_derived_columns(std::vector<Row> rows);

enum class Side { Left, Right };

/// Combinatorial description of one row, relative to the strand positions
/// (0-based, left to right) of the level below it.
///   Min, uncrossed: two new strands inserted before position `position`.
///   Min, crossed:   new strands on both sides of the strand at `position`.
///   Trans:          the strand at `position` moves toward `side`; when crossed
///                   it passes over its neighbour on that side.
///   Max, uncrossed: strands `position` and `position + 1` are joined.
///   Max, crossed:   strands `position` and `position + 2` are joined over
///                   the strand between them.
struct Move {
    BlockType type;
    int position = 0;
    Side side = Side::Right;

    bool operator==(const Move&) const = default;
};

/// Lay out moves as a grid diagram: every vertical segment gets its own
/// integer column, assigned by a deterministic topological order.
BinaryGridDiagram from_moves(const std::vector<Move>& moves);

/// Inverse of from_moves for any valid grid diagram.
std::vector<Move> to_moves(const BinaryGridDiagram& g);

/// Strand count above each row (size rows + 1, starting with 0).
std::vector<int> strand_profile(const std::vector<Move>& moves);

}  // namespace foldrib
