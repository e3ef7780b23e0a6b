#pragma once

// Knot-type oracle: Kauffman bracket state sum, writhe and the
// writhe-normalized bracket (Jones polynomial in the variable A), plus
// reconstruction of planar diagrams from rectilinear drawings.

#include <vector>

#include "foldrib/laurent.hpp"
#include "foldrib/model.hpp"

namespace foldrib {

inline constexpr int kDefaultBracketCap = 14;

int writhe(const PlanarDiagram& d, const std::vector<bool>& reversed = {});

/// Sum over all 2^c smoothings of A^(a-b) d^(loops-1), d = -A^2 - A^-2.
Laurent kauffman_bracket(const PlanarDiagram& d, int max_crossings = kDefaultBracketCap);

/// (-A^3)^(-writhe) times the bracket. For links the orientation of every
/// component but the first is enumerated and the smallest polynomial is
/// returned, which makes the value an invariant of the unoriented link.
Laurent jones_normalized(const PlanarDiagram& d, int max_crossings = kDefaultBracketCap);

struct Point {
    double x = 0;
    double y = 0;
    bool operator==(const Point&) const = default;
};

/// Closed axis-parallel polylines (last point joins the first). Every
/// interior intersection of a horizontal and a vertical segment becomes a
/// crossing with the horizontal segment over.
PlanarDiagram rectilinear_to_pd(const std::vector<std::vector<Point>>& components);

/// Core curve of a grid diagram as closed polylines, one per component.
std::vector<std::vector<Point>> grid_polylines(const BinaryGridDiagram& g);

PlanarDiagram bgd_to_pd(const BinaryGridDiagram& g);

}  // namespace foldrib
