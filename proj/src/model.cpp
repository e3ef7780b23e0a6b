#include "foldrib/model.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>

namespace foldrib {

std::string_view to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::DanglingEdge: return "DanglingEdge";
        case ErrorCode::BadArity: return "BadArity";
        case ErrorCode::Disconnected: return "Disconnected";
        case ErrorCode::NonPlanar: return "NonPlanar";
        case ErrorCode::SyntaxError: return "SyntaxError";
        case ErrorCode::LabelError: return "LabelError";
        case ErrorCode::EmptyDiagram: return "EmptyDiagram";
        case ErrorCode::CountMismatch: return "CountMismatch";
        case ErrorCode::IoError: return "IoError";
        case ErrorCode::PreconditionViolated: return "PreconditionViolated";
        case ErrorCode::NoLevelingFound: return "NoLevelingFound";
        case ErrorCode::RoutingError: return "RoutingError";
        case ErrorCode::InvalidGrid: return "InvalidGrid";
        case ErrorCode::NotConvertible: return "NotConvertible";
        case ErrorCode::NotSwitchable: return "NotSwitchable";
        case ErrorCode::NotNormalForm: return "NotNormalForm";
        case ErrorCode::DomainError: return "DomainError";
        case ErrorCode::TooLarge: return "TooLarge";
        case ErrorCode::LayoutOverlap: return "LayoutOverlap";
        case ErrorCode::InternalCheck: return "InternalCheck";
    }
    return "Unknown";
}

std::string to_string(const Rational& r) {
    if (r.denominator() == 1) return std::to_string(r.numerator());
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

double to_double(const Rational& r) {
    return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
}

// ---------------------------------------------------------------------------
// PlanarDiagram
// ---------------------------------------------------------------------------

std::vector<EdgeId> PlanarDiagram::edges() const {
    std::set<EdgeId> all;
    for (const auto& c : crossings) all.insert(c.slots.begin(), c.slots.end());
    return {all.begin(), all.end()};
}

int PlanarDiagram::components() const {
    return static_cast<int>(trace_components(*this).size()) + free_loops;
}

std::vector<std::array<SlotRef, 2>> edge_ends(const PlanarDiagram& d) {
    EdgeId max_id = 0;
    for (const auto& c : d.crossings) {
        for (EdgeId e : c.slots) {
            if (e <= 0) throw Error(ErrorCode::BadArity, "edge label " + std::to_string(e) + " is not positive");
            max_id = std::max(max_id, e);
        }
    }
    std::vector<std::array<SlotRef, 2>> ends(static_cast<std::size_t>(max_id) + 1);
    std::vector<int> seen(ends.size(), 0);
    for (int ci = 0; ci < d.crossing_count(); ++ci) {
        for (int s = 0; s < 4; ++s) {
            EdgeId e = d.crossings[ci].slots[s];
            if (seen[e] >= 2) throw Error(ErrorCode::BadArity, "edge " + std::to_string(e) + " used more than twice");
            ends[e][seen[e]++] = SlotRef{ci, s};
        }
    }
    for (std::size_t e = 1; e < seen.size(); ++e) {
        if (seen[e] == 1) throw Error(ErrorCode::DanglingEdge, "edge " + std::to_string(e) + " used once");
    }
    return ends;
}

SlotRef across(const std::vector<std::array<SlotRef, 2>>& ends, const PlanarDiagram& d, SlotRef from) {
    EdgeId e = d.crossings[from.crossing].slots[from.slot];
    return ends[e][0] == from ? ends[e][1] : ends[e][0];
}

std::vector<std::vector<Passage>> trace_components(const PlanarDiagram& d) {
    auto ends = edge_ends(d);
    const int n = d.crossing_count();
    std::vector<std::array<bool, 2>> visited(n, {false, false});
    std::vector<std::vector<Passage>> out;

    auto trace = [&](int c0, int in0) {
        std::vector<Passage> comp;
        int c = c0, in = in0;
        do {
            comp.push_back({c, in});
            visited[c][in % 2] = true;
            SlotRef next = across(ends, d, {c, (in + 2) % 4});
            c = next.crossing;
            in = next.slot;
        } while (!(c == c0 && in == in0));
        out.push_back(std::move(comp));
    };

    for (int c = 0; c < n; ++c) {
        int u = d.crossings[c].under_pair();
        if (!visited[c][u]) trace(c, u);
    }
    for (int c = 0; c < n; ++c) {
        int o = d.crossings[c].over_pair;
        if (!visited[c][o]) trace(c, o);
    }
    return out;
}

std::vector<std::array<bool, 4>> orientation(const PlanarDiagram& d, const std::vector<bool>& reversed) {
    std::vector<std::array<bool, 4>> incoming(d.crossings.size(), {false, false, false, false});
    auto comps = trace_components(d);
    for (std::size_t i = 0; i < comps.size(); ++i) {
        bool rev = i < reversed.size() && reversed[i];
        for (const auto& p : comps[i]) {
            incoming[p.crossing][rev ? (p.in_slot + 2) % 4 : p.in_slot] = true;
        }
    }
    return incoming;
}

std::vector<int> crossing_signs(const PlanarDiagram& d, const std::vector<bool>& reversed) {
    auto incoming = orientation(d, reversed);
    std::vector<int> signs;
    signs.reserve(d.crossings.size());
    for (std::size_t c = 0; c < d.crossings.size(); ++c) {
        int u = d.crossings[c].under_pair();
        int o = d.crossings[c].over_pair;
        int u_in = incoming[c][u] ? u : u + 2;
        int o_in = incoming[c][o] ? o : o + 2;
        signs.push_back(o_in == (u_in + 3) % 4 ? 1 : -1);
    }
    return signs;
}

int face_count(const PlanarDiagram& d) {
    auto ends = edge_ends(d);
    const int n = d.crossing_count();
    std::vector<std::array<bool, 4>> seen(n, {false, false, false, false});
    int faces = 0;
    for (int c0 = 0; c0 < n; ++c0) {
        for (int s0 = 0; s0 < 4; ++s0) {
            if (seen[c0][s0]) continue;
            ++faces;
            SlotRef at{c0, s0};
            while (!seen[at.crossing][at.slot]) {
                seen[at.crossing][at.slot] = true;
                SlotRef far = across(ends, d, at);
                at = {far.crossing, (far.slot + 1) % 4};
            }
        }
    }
    return faces;
}

PlanarDiagram rotate_out_of_plane(const PlanarDiagram& d) {
    PlanarDiagram out = d;
    for (auto& c : out.crossings) {
        c.slots = {c.slots[0], c.slots[3], c.slots[2], c.slots[1]};
        c.over_pair ^= 1;
    }
    return out;
}

PlanarDiagram mirror_image(const PlanarDiagram& d) {
    PlanarDiagram out = d;
    for (auto& c : out.crossings) c.over_pair ^= 1;
    return out;
}

ValidationResult validate_diagram(const PlanarDiagram& d) {
    ValidationResult r;
    auto fail = [&](ValidationIssue issue, std::string msg) {
        r.ok = false;
        r.issues.emplace_back(issue, std::move(msg));
    };

    if (d.crossings.empty()) {
        r.zero_crossing = true;
        if (d.free_loops > 1) fail(ValidationIssue::Disconnected, "split diagram of trivial circles");
        return r;
    }

    std::map<EdgeId, int> uses;
    for (const auto& c : d.crossings) {
        if (c.over_pair != 0 && c.over_pair != 1)
            fail(ValidationIssue::BadArity, "crossing " + std::to_string(c.id) + " has no valid over strand");
        for (EdgeId e : c.slots) {
            if (e <= 0) fail(ValidationIssue::BadArity, "edge label " + std::to_string(e) + " is not positive");
            ++uses[e];
        }
    }
    for (auto [e, count] : uses) {
        if (count == 1) fail(ValidationIssue::DanglingEdge, "edge " + std::to_string(e) + " used once");
        if (count > 2) fail(ValidationIssue::BadArity, "edge " + std::to_string(e) + " used " + std::to_string(count) + " times");
    }
    if (!r.ok) return r;

    const int n = d.crossing_count();
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
    auto ends = edge_ends(d);
    for (const auto& pair : ends) {
        if (pair[0].crossing < 0) continue;
        parent[find(pair[0].crossing)] = find(pair[1].crossing);
    }
    int roots = 0;
    for (int i = 0; i < n; ++i) roots += find(i) == i;
    if (roots > 1 || d.free_loops > 0) {
        fail(ValidationIssue::Disconnected, "underlying graph has " + std::to_string(roots + d.free_loops) + " pieces");
        return r;
    }
    int faces = face_count(d);
    if (faces != n + 2) {
        fail(ValidationIssue::NonPlanar, "rotation system has " + std::to_string(faces) + " faces, expected " +
                                             std::to_string(n + 2));
    }
    return r;
}

// ---------------------------------------------------------------------------
// Leveling types
// ---------------------------------------------------------------------------

std::string PortionType::label() const {
    return "T" + std::to_string(index) + (plus ? "+" : "-");
}

std::string FlipChoice::label() const {
    if (x_flipped && y_flipped) return "xy";
    if (x_flipped) return "x";
    if (y_flipped) return "y";
    return "identity";
}

PortionCounts count_portions(const LeveledDiagram& l) {
    PortionCounts counts;
    for (const auto& p : l.portions) {
        (p.plus ? counts.plus : counts.minus)[p.index] += 1;
    }
    return counts;
}

// ---------------------------------------------------------------------------
// Grid diagrams
// ---------------------------------------------------------------------------

std::string BlockType::name() const {
    std::string n = shape == Shape::Min ? "B1" : shape == Shape::Trans ? "B2" : "B3";
    return crossed ? n : n + "o";
}

Shape Row::shape() const {
    if (left_end == EndKind::Up && right_end == EndKind::Up) return Shape::Min;
    if (left_end == EndKind::Down && right_end == EndKind::Down) return Shape::Max;
    return Shape::Trans;
}

namespace {

bool contains(const std::vector<int>& sorted, int x) {
    return std::binary_search(sorted.begin(), sorted.end(), x);
}

// Applies one row to the live column set; reports the first problem found.
std::optional<std::string> step_row(const Row& row, std::vector<int>& live) {
    if (row.left >= row.right) return "extent is empty";
    std::vector<int> continuing = live;
    std::vector<int> started;
    for (auto [x, kind] : {std::pair{row.left, row.left_end}, std::pair{row.right, row.right_end}}) {
        if (kind == EndKind::Down) {
            if (!contains(live, x)) return "down end at column " + std::to_string(x) + " has no strand below";
            continuing.erase(std::find(continuing.begin(), continuing.end(), x));
        } else {
            if (contains(live, x)) return "up end at occupied column " + std::to_string(x);
            started.push_back(x);
        }
    }
    std::vector<int> inside;
    for (int x : continuing) {
        if (x > row.left && x < row.right) inside.push_back(x);
    }
    if (inside.size() > 1) return "horizontal segment crosses " + std::to_string(inside.size()) + " strands";
    if (inside.empty() && row.crossed_column) return "crossed column " + std::to_string(*row.crossed_column) + " is not crossed";
    if (inside.size() == 1 && (!row.crossed_column || *row.crossed_column != inside[0]))
        return "crossing with column " + std::to_string(inside[0]) + " not recorded";
    continuing.insert(continuing.end(), started.begin(), started.end());
    std::sort(continuing.begin(), continuing.end());
    live = std::move(continuing);
    return std::nullopt;
}

}  // namespace

std::vector<std::string> grid_issues(const BinaryGridDiagram& g) {
    std::vector<std::string> issues;
    std::vector<int> live;
    for (std::size_t i = 0; i < g.rows.size(); ++i) {
        const Row& row = g.rows[i];
        const std::string where = "row " + std::to_string(i) + ": ";
        if (row.columns_below != live) issues.push_back(where + "columns below disagree with the row underneath");
        if (auto problem = step_row(row, live)) {
            issues.push_back(where + *problem);
            return issues;
        }
        if (row.columns_above != live) issues.push_back(where + "columns above are inconsistent");
    }
    if (!live.empty()) issues.push_back("diagram does not close: " + std::to_string(live.size()) + " strands remain");
    return issues;
}

void require_valid(const BinaryGridDiagram& g) {
    auto issues = grid_issues(g);
    if (!issues.empty()) throw Error(ErrorCode::InvalidGrid, issues.front());
}

BinaryGridDiagram with_derived_columns(std::vector<Row> rows) {
    std::vector<int> live;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        rows[i].columns_below = live;
        if (auto problem = step_row(rows[i], live))
            throw Error(ErrorCode::InvalidGrid, "row " + std::to_string(i) + ": " + *problem);
        rows[i].columns_above = live;
    }
    BinaryGridDiagram g{std::move(rows)};
    require_valid(g);
    return g;
}

std::vector<int> strand_profile(const std::vector<Move>& moves) {
    std::vector<int> profile{0};
    for (const auto& m : moves) profile.push_back(profile.back() + m.type.strand_delta());
    return profile;
}

BinaryGridDiagram from_moves(const std::vector<Move>& moves) {
    // Vertical segments are numbered as they are created.
    struct RowSegments {
        int a = -1, b = -1;  // left/right end for Min and Max; down/up for Trans
        std::optional<int> crossed;
    };
    std::vector<RowSegments> row_segs;
    std::vector<std::vector<int>> levels{{}};
    std::vector<std::pair<int, int>> before;  // (left, right) ordering constraints
    int next_seg = 0;

    auto bad = [](std::size_t i, const std::string& msg) {
        return Error(ErrorCode::InvalidGrid, "move " + std::to_string(i) + ": " + msg);
    };

    for (std::size_t i = 0; i < moves.size(); ++i) {
        const Move& mv = moves[i];
        std::vector<int> cur = levels.back();
        const int m = static_cast<int>(cur.size());
        const int p = mv.position;
        RowSegments rs;
        switch (mv.type.shape) {
            case Shape::Min: {
                rs.a = next_seg++;
                rs.b = next_seg++;
                if (mv.type.crossed) {
                    if (p < 0 || p >= m) throw bad(i, "crossed strand out of range");
                    rs.crossed = cur[p];
                    cur.insert(cur.begin() + p + 1, rs.b);
                    cur.insert(cur.begin() + p, rs.a);
                } else {
                    if (p < 0 || p > m) throw bad(i, "insertion point out of range");
                    cur.insert(cur.begin() + p, {rs.a, rs.b});
                }
                break;
            }
            case Shape::Trans: {
                if (p < 0 || p >= m) throw bad(i, "moving strand out of range");
                rs.a = cur[p];
                rs.b = next_seg++;
                if (mv.type.crossed) {
                    int q = mv.side == Side::Right ? p + 1 : p - 1;
                    if (q < 0 || q >= m) throw bad(i, "no neighbour to cross");
                    rs.crossed = cur[q];
                    cur[p] = cur[q];
                    cur[q] = rs.b;
                } else {
                    cur[p] = rs.b;
                    if (mv.side == Side::Right) before.emplace_back(rs.a, rs.b);
                    else before.emplace_back(rs.b, rs.a);
                }
                break;
            }
            case Shape::Max: {
                int span = mv.type.crossed ? 2 : 1;
                if (p < 0 || p + span >= m) throw bad(i, "cap out of range");
                rs.a = cur[p];
                rs.b = cur[p + span];
                if (mv.type.crossed) rs.crossed = cur[p + 1];
                cur.erase(cur.begin() + p + span);
                cur.erase(cur.begin() + p);
                break;
            }
        }
        row_segs.push_back(rs);
        levels.push_back(std::move(cur));
    }
    if (!levels.back().empty()) throw Error(ErrorCode::InvalidGrid, "moves leave open strands");

    for (const auto& level : levels) {
        for (std::size_t k = 1; k < level.size(); ++k) before.emplace_back(level[k - 1], level[k]);
    }
    std::vector<std::vector<int>> succ(next_seg);
    std::vector<int> indegree(next_seg, 0);
    for (auto [l, r] : before) {
        succ[l].push_back(r);
        ++indegree[r];
    }
    std::priority_queue<int, std::vector<int>, std::greater<>> ready;
    for (int s = 0; s < next_seg; ++s) {
        if (indegree[s] == 0) ready.push(s);
    }
    std::vector<int> column(next_seg, -1);
    int rank = 0;
    while (!ready.empty()) {
        int s = ready.top();
        ready.pop();
        column[s] = rank++;
        for (int t : succ[s]) {
            if (--indegree[t] == 0) ready.push(t);
        }
    }
    if (rank != next_seg) throw Error(ErrorCode::RoutingError, "column constraints are cyclic");

    BinaryGridDiagram g;
    for (std::size_t i = 0; i < moves.size(); ++i) {
        const auto& rs = row_segs[i];
        Row row;
        int xa = column[rs.a], xb = column[rs.b];
        switch (moves[i].type.shape) {
            case Shape::Min:
                row.left = xa, row.right = xb;
                row.left_end = row.right_end = EndKind::Up;
                break;
            case Shape::Max:
                row.left = xa, row.right = xb;
                row.left_end = row.right_end = EndKind::Down;
                break;
            case Shape::Trans:
                row.left = std::min(xa, xb);
                row.right = std::max(xa, xb);
                row.left_end = xa < xb ? EndKind::Down : EndKind::Up;
                row.right_end = xa < xb ? EndKind::Up : EndKind::Down;
                break;
        }
        if (rs.crossed) row.crossed_column = column[*rs.crossed];
        auto to_cols = [&](const std::vector<int>& segs) {
            std::vector<int> cols;
            for (int s : segs) cols.push_back(column[s]);
            return cols;
        };
        row.columns_below = to_cols(levels[i]);
        row.columns_above = to_cols(levels[i + 1]);
        g.rows.push_back(std::move(row));
    }
    require_valid(g);
    return g;
}

std::vector<Move> to_moves(const BinaryGridDiagram& g) {
    std::vector<Move> moves;
    auto index_of = [](const std::vector<int>& cols, int x) {
        auto it = std::lower_bound(cols.begin(), cols.end(), x);
        return static_cast<int>(it - cols.begin());
    };
    for (const Row& row : g.rows) {
        const auto& below = row.columns_below;
        Move mv;
        mv.type = row.type();
        switch (mv.type.shape) {
            case Shape::Min:
                mv.position = mv.type.crossed ? index_of(below, *row.crossed_column) : index_of(below, row.left);
                break;
            case Shape::Trans: {
                int down = row.left_end == EndKind::Down ? row.left : row.right;
                int up = row.left_end == EndKind::Down ? row.right : row.left;
                mv.position = index_of(below, down);
                mv.side = up > down ? Side::Right : Side::Left;
                break;
            }
            case Shape::Max:
                mv.position = index_of(below, row.left);
                break;
        }
        moves.push_back(mv);
    }
    return moves;
}

}  // namespace foldrib
