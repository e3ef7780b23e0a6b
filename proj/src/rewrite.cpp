#include "foldrib/rewrite.hpp"

#include <algorithm>
#include <map>

namespace foldrib {

namespace {

std::vector<Move> conversion(const Move& m) {
    if (m.type == kB2) {
        if (m.side == Side::Right) return {{kB1, m.position + 1}, {kB3o, m.position}};
        return {{kB1, m.position - 1}, {kB3o, m.position + 1}};
    }
    if (m.type == kB3) return {{kB1, m.position + 1}, {kB3o, m.position}, {kB3o, m.position + 1}};
    throw Error(ErrorCode::NotConvertible, "block " + m.type.name() + " is not B2 or B3");
}

std::string row_label(const std::string& rule, int row) {
    return rule + " row " + std::to_string(row);
}

}  // namespace

BinaryGridDiagram convert_block(const BinaryGridDiagram& g, int row_index) {
    if (row_index < 0 || row_index >= static_cast<int>(g.rows.size()))
        throw Error(ErrorCode::NotConvertible, "row " + std::to_string(row_index) + " does not exist");
    auto moves = to_moves(g);
    auto replacement = conversion(moves[row_index]);
    moves.erase(moves.begin() + row_index);
    moves.insert(moves.begin() + row_index, replacement.begin(), replacement.end());
    return compact_columns(from_moves(moves));
}

BinaryGridDiagram switch_adjacent(const BinaryGridDiagram& g, int n) {
    if (n < 0 || n + 1 >= static_cast<int>(g.rows.size()))
        throw Error(ErrorCode::NotSwitchable, "no row pair at " + std::to_string(n));
    const Row& lower = g.rows[n];
    const Row& upper = g.rows[n + 1];
    if (!(lower.type() == kB3o)) throw Error(ErrorCode::NotSwitchable, "lower row is " + lower.type().name() + ", not B3o");
    if (upper.type() == kB3o) return g;
    if (upper.type().shape != Shape::Min)
        throw Error(ErrorCode::NotSwitchable, "upper row is " + upper.type().name() + ", not B1 or B1o");

    const int l1 = lower.left, l2 = lower.right, u1 = upper.left, u2 = upper.right;
    std::vector<Row> rows = g.rows;
    const bool disjoint = l2 < u1 || u2 < l1;
    if (!disjoint) {
        // Translate everything right of a staircase path: above the pair the
        // path runs at x = upper_from - 1/2, below it at x = lower_from - 1/2.
        int delta, upper_from, lower_from;
        const bool first_case = upper.crossed_column ? l2 < *upper.crossed_column : l2 <= u2;
        if (first_case) {
            delta = l2 - u1 + 1;
            upper_from = u1;
            lower_from = l2 + 1;
        } else {
            delta = u2 - l1 + 1;
            upper_from = u2 + 1;
            lower_from = l1;
        }
        for (int i = 0; i < static_cast<int>(rows.size()); ++i) {
            const int from = i >= n + 1 ? upper_from : lower_from;
            auto shift = [&](int x) { return x >= from ? x + delta : x; };
            Row& r = rows[i];
            r.left = shift(r.left);
            r.right = shift(r.right);
            if (r.crossed_column) r.crossed_column = shift(*r.crossed_column);
        }
    }
    std::swap(rows[n], rows[n + 1]);
    try {
        return compact_columns(with_derived_columns(std::move(rows)));
    } catch (const Error& e) {
        throw Error(ErrorCode::NotSwitchable, std::string("re-routing failed: ") + e.what());
    }
}

BinaryGridDiagram compact_columns(const BinaryGridDiagram& g) {
    std::map<int, int> rank;
    for (const Row& r : g.rows) {
        rank[r.left];
        rank[r.right];
        if (r.crossed_column) rank[*r.crossed_column];
    }
    int next = 0;
    for (auto& [x, v] : rank) v = next++;
    std::vector<Row> rows = g.rows;
    for (Row& r : rows) {
        r.left = rank[r.left];
        r.right = rank[r.right];
        if (r.crossed_column) r.crossed_column = rank[*r.crossed_column];
    }
    return with_derived_columns(std::move(rows));
}

bool is_normal_form(const BinaryGridDiagram& g) {
    bool in_caps = false;
    for (const Row& r : g.rows) {
        BlockType t = r.type();
        if (t == kB3o) {
            in_caps = true;
        } else if (!(t == kB1 || t == kB1o) || in_caps) {
            return false;
        }
    }
    return true;
}

BinaryGridDiagram normalize(const BinaryGridDiagram& input, const RewriteTrace& trace) {
    require_valid(input);
    auto emit = [&](const std::string& rule, const BinaryGridDiagram& g) {
        if (trace) trace(rule, g);
    };

    BinaryGridDiagram g = input;
    auto moves = to_moves(g);
    const auto before = moves.size();
    std::erase_if(moves, [](const Move& m) { return m.type == kB2o; });
    if (moves.size() != before) {
        g = compact_columns(from_moves(moves));
        emit("drop B2o", g);
    }

    while (true) {
        int target = -1;
        for (int i = 0; i < static_cast<int>(g.rows.size()); ++i) {
            BlockType t = g.rows[i].type();
            if (t == kB2 || t == kB3) {
                target = i;
                break;
            }
        }
        if (target < 0) break;
        g = convert_block(g, target);
        emit(row_label("convert", target), g);
    }

    while (true) {
        int target = -1;
        for (int i = 0; i + 1 < static_cast<int>(g.rows.size()); ++i) {
            if (g.rows[i].type() == kB3o && !(g.rows[i + 1].type() == kB3o)) {
                target = i;
                break;
            }
        }
        if (target < 0) break;
        g = switch_adjacent(g, target);
        emit(row_label("switch", target), g);
    }
    return g;
}

}  // namespace foldrib
