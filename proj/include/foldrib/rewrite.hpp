#pragma once

// Block rewriting toward the normal form: only B1, B1o and B3o rows, with
// every B3o row above all the others.

#include <functional>
#include <string>

#include "foldrib/model.hpp"

namespace foldrib {

/// Replace a B2 row by a crossed cup and one cap, or a B3 row by a crossed
/// cup and two caps; the horizontal segment keeps passing over the same
/// strand. Columns of the whole diagram are re-laid.
BinaryGridDiagram convert_block(const BinaryGridDiagram& g, int row_index);

/// Exchange a B3o row with the B1/B1o row directly above it. Overlapping
/// extents are first pulled apart by translating the part of the diagram to
/// the right of a staircase path. Two stacked B3o rows are left unchanged.
BinaryGridDiagram switch_adjacent(const BinaryGridDiagram& g, int lower_row_index);

/// Renumber columns to 0..k-1 keeping their left-to-right order.
BinaryGridDiagram compact_columns(const BinaryGridDiagram& g);

bool is_normal_form(const BinaryGridDiagram& g);

/// Called after every rule application with the rule name and the result.
using RewriteTrace = std::function<void(const std::string& rule, const BinaryGridDiagram&)>;

/// Drop B2o rows, convert every B2/B3 row (lowest first), then bubble B3o
/// rows to the top.
BinaryGridDiagram normalize(const BinaryGridDiagram& g, const RewriteTrace& trace = {});

}  // namespace foldrib
