#pragma once

// Text formats: PD codes, the knot-table CSV and the grid-diagram row format.

#include <string>
#include <vector>

#include "foldrib/model.hpp"

namespace foldrib {

struct ParseOptions {
    /// Accept an empty PD as the zero-crossing unknot.
    bool allow_unknot = false;
};

/// Whitespace (or comma) separated `X(a,b,c,d)` tokens; `X[a,b,c,d]` and a
/// surrounding `PD[...]` are accepted too. The first listed edge of each
/// crossing is the incoming under-strand, slots counterclockwise.
PlanarDiagram parse_pd(const std::string& text, const ParseOptions& options = {});

/// Canonical `X(a,b,c,d)` text; parse_pd(emit_pd(d)) == d whenever every
/// crossing stores over_pair 1 (crossings with over_pair 0 are rotated).
std::string emit_pd(const PlanarDiagram& d);

/// Crossings that are cut vertices of the underlying 4-valent graph or carry
/// a loop edge.
std::vector<int> detect_nugatory(const PlanarDiagram& d);

/// Throws PreconditionViolated for split diagrams and nugatory crossings,
/// and the matching validation code for malformed diagrams.
void require_pipeline_input(const PlanarDiagram& d);

struct KnotTableEntry {
    int line = 0;  // 1-based line number in the file
    std::string name;
    int crossing_number = 0;
    std::string pd_text;
    PlanarDiagram diagram;
};

struct RowError {
    int line = 0;  // 1-based line number in the file
    ErrorCode code = ErrorCode::SyntaxError;
    std::string message;
};

struct KnotTable {
    std::vector<KnotTableEntry> entries;
    std::vector<RowError> errors;
};

/// CSV with header `name,crossings,pd`. Bad rows are reported in `errors`
/// and skipped; a missing file throws IoError.
KnotTable load_table(const std::string& path);
KnotTable parse_table(const std::string& csv_text);

/// One row per line, bottom row first:
///   `MIN|TRANS|MAX [X@col] extent=[a,b] ends=(up|down,up|down)`
std::string emit_bgd(const BinaryGridDiagram& g);
BinaryGridDiagram parse_bgd(const std::string& text);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace foldrib
