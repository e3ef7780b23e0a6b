#pragma once

// Block counts, the certified ribbonlength bound and reference bounds.

#include <string>

#include <json.hpp>

#include "foldrib/model.hpp"

namespace foldrib {

struct BlockCounts {
    int b1 = 0, b2 = 0, b3 = 0;
    int b1o = 0, b2o = 0, b3o = 0;

    /// b1 + b2 + b3 + b1o
    int counted() const { return b1 + b2 + b3 + b1o; }
    bool operator==(const BlockCounts&) const = default;
};

BlockCounts block_counts(const BinaryGridDiagram& g);

/// 2 (b1 + b2 + b3 + b1o), in width units.
Rational rib_upper_bound(const BlockCounts& counts);

struct TheoreticalBound {
    Rational floor_form;   // 2 (c + 1 + floor((c - 2) / 4))
    Rational linear_form;  // 5c/2 + 1
};

/// Throws DomainError for c < 2.
TheoreticalBound theoretical_bound(int c);

struct ComparisonBounds {
    Rational tian;  // 2c^2 + 6c + 4
    double denne = 0;  // 72 c^(3/2) + 32 c + 12 c^(1/2) + 4
};

ComparisonBounds comparison_bounds(int c);

struct BoundReport {
    std::string name;
    int crossing_number = 0;
    PortionCounts portions;
    FlipChoice flip;
    BlockCounts expanded;    // grid straight from the leveling
    BlockCounts normalized;  // after rewriting
    Rational certified_bound{0};
    Rational floor_form{0};
    Rational linear_form{0};
    bool has_theoretical = false;  // false below two crossings
    Rational tian{0};
    double denne = 0;
    std::string note;
};

/// Report for a zero-crossing diagram: bound 0 with an explanatory note.
BoundReport unknot_report(const std::string& name);

nlohmann::json to_json(const BlockCounts& c);
nlohmann::json to_json(const PortionCounts& c);
nlohmann::json to_json(const BoundReport& r);

}  // namespace foldrib
