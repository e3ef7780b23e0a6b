#include "foldrib/bound.hpp"

#include <cmath>

namespace foldrib {

BlockCounts block_counts(const BinaryGridDiagram& g) {
    BlockCounts c;
    for (const Row& r : g.rows) {
        const BlockType t = r.type();
        if (t == kB1) ++c.b1;
        else if (t == kB2) ++c.b2;
        else if (t == kB3) ++c.b3;
        else if (t == kB1o) ++c.b1o;
        else if (t == kB2o) ++c.b2o;
        else ++c.b3o;
    }
    return c;
}

Rational rib_upper_bound(const BlockCounts& counts) {
    return Rational(2 * counts.counted());
}

TheoreticalBound theoretical_bound(int c) {
    if (c < 2) throw Error(ErrorCode::DomainError, "theoretical bound needs c >= 2, got " + std::to_string(c));
    return {Rational(2 * (c + 1 + (c - 2) / 4)), Rational(5 * c, 2) + 1};
}

ComparisonBounds comparison_bounds(int c) {
    const double x = c;
    return {Rational(2 * std::int64_t{c} * c + 6 * std::int64_t{c} + 4), 72 * std::pow(x, 1.5) + 32 * x + 12 * std::sqrt(x) + 4};
}

BoundReport unknot_report(const std::string& name) {
    BoundReport r;
    r.name = name;
    r.note = "zero-crossing diagram: a trivial loop can be folded with arbitrarily small ribbonlength, so the bound is 0";
    auto cmp = comparison_bounds(0);
    r.tian = cmp.tian;
    r.denne = cmp.denne;
    return r;
}

nlohmann::json to_json(const BlockCounts& c) {
    return {{"b1", c.b1}, {"b2", c.b2}, {"b3", c.b3}, {"b1o", c.b1o}, {"b2o", c.b2o}, {"b3o", c.b3o}, {"counted", c.counted()}};
}

nlohmann::json to_json(const PortionCounts& c) {
    nlohmann::json j = nlohmann::json::object();
    for (int i = 0; i <= 4; ++i) {
        j["T" + std::to_string(i) + "+"] = c.plus[i];
        j["T" + std::to_string(i) + "-"] = c.minus[i];
    }
    return j;
}

nlohmann::json to_json(const BoundReport& r) {
    nlohmann::json j;
    j["name"] = r.name;
    j["crossing_number"] = r.crossing_number;
    j["portion_counts"] = to_json(r.portions);
    j["flip_choice"] = r.flip.label();
    j["block_counts"] = to_json(r.expanded);
    j["normal_form_counts"] = to_json(r.normalized);
    // Bounds are halves of integers, so the doubles below are exact.
    j["certified_bound"] = to_double(r.certified_bound);
    j["certified_bound_exact"] = to_string(r.certified_bound);
    if (r.has_theoretical) {
        j["theoretical_bound"] = to_double(r.linear_form);
        j["theoretical_bound_exact"] = to_string(r.linear_form);
        j["floor_form_bound"] = to_double(r.floor_form);
    } else {
        j["theoretical_bound"] = nullptr;
        j["theoretical_bound_exact"] = nullptr;
        j["floor_form_bound"] = nullptr;
    }
    j["tian_bound"] = to_double(r.tian);
    j["denne_bound"] = r.denne;
    if (!r.note.empty()) j["note"] = r.note;
    return j;
}

}  // namespace foldrib
