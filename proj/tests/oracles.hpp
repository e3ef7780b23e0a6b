#pragma once

// Oracles that share no code with the library: coloring-matrix determinants,
// brute-force cut vertices and a few corpus helpers.

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <cstdint>
#include <cstdlib>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "foldrib/ingest.hpp"
#include "foldrib/laurent.hpp"
#include "foldrib/layout.hpp"
#include "foldrib/model.hpp"

namespace oracle {

inline std::string data_path(const std::string& file) { return std::string(FOLDRIB_DATA_DIR) + "/" + file; }

inline const foldrib::KnotTable& corpus() {
    static const foldrib::KnotTable table = foldrib::load_table(data_path("knot_table.csv"));
    return table;
}

inline const foldrib::PlanarDiagram& diagram(const std::string& name) {
    for (const auto& e : corpus().entries)
        if (e.name == name) return e.diagram;
    std::abort();
}

/// |det| of a square integer matrix (Bareiss, exact).
inline std::int64_t abs_det(std::vector<std::vector<std::int64_t>> m) {
    const int n = static_cast<int>(m.size());
    if (n == 0) return 1;
    std::int64_t sign = 1, prev = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (m[k][k] == 0) {
            int swap = -1;
            for (int i = k + 1; i < n; ++i)
                if (m[i][k] != 0) swap = i;
            if (swap < 0) return 0;
            std::swap(m[k], m[swap]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j) m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
        prev = m[k][k];
    }
    return std::llabs(sign * m[n - 1][n - 1]);
}

/// Knot or link determinant from Fox 3-coloring relations: arcs are the
/// edges glued through over-passages, each crossing gives
/// 2 over - under_in - under_out, and any first minor is taken.
inline std::int64_t coloring_determinant(const foldrib::PlanarDiagram& d) {
    std::map<int, int> parent;
    std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
    for (const auto& c : d.crossings)
        for (int e : c.slots) parent[e] = e;
    for (const auto& c : d.crossings) {
        int a = find(c.slots[c.over_pair]), b = find(c.slots[c.over_pair + 2]);
        parent[a] = b;
    }
    std::map<int, int> arc_index;
    for (auto& [e, p] : parent) {
        int r = find(e);
        if (!arc_index.count(r)) arc_index[r] = static_cast<int>(arc_index.size());
    }
    const int n = d.crossing_count();
    const int arcs = static_cast<int>(arc_index.size());
    std::vector<std::vector<std::int64_t>> m(n, std::vector<std::int64_t>(arcs, 0));
    for (int i = 0; i < n; ++i) {
        const auto& c = d.crossings[i];
        const int u = c.over_pair ^ 1;
        m[i][arc_index[find(c.slots[c.over_pair])]] += 2;
        m[i][arc_index[find(c.slots[u])]] -= 1;
        m[i][arc_index[find(c.slots[u + 2])]] -= 1;
    }
    std::vector<std::vector<std::int64_t>> minor;
    for (int i = 1; i < n; ++i) minor.emplace_back(m[i].begin() + 1, m[i].end());
    return abs_det(minor);
}

inline std::complex<double> evaluate(const foldrib::Laurent& p, std::complex<double> a) {
    std::complex<double> sum = 0;
    for (const auto& [exp, coef] : p.terms()) sum += static_cast<double>(coef) * std::pow(a, exp);
    return sum;
}

/// Crossings whose removal disconnects the rest of the 4-valent graph, plus
/// crossings carrying a loop edge. Plain BFS per removed vertex.
inline std::vector<int> brute_force_cut_vertices(const foldrib::PlanarDiagram& d) {
    const int n = d.crossing_count();
    std::map<int, std::vector<int>> at;
    for (int i = 0; i < n; ++i)
        for (int e : d.crossings[i].slots) at[e].push_back(i);
    std::vector<std::set<int>> adj(n);
    std::vector<bool> loop(n, false);
    for (auto& [e, ends] : at) {
        if (ends.size() != 2) continue;
        if (ends[0] == ends[1]) loop[ends[0]] = true;
        else {
            adj[ends[0]].insert(ends[1]);
            adj[ends[1]].insert(ends[0]);
        }
    }
    std::vector<int> out;
    for (int v = 0; v < n; ++v) {
        bool cut = loop[v];
        if (!cut && n > 2) {
            int start = v == 0 ? 1 : 0;
            std::vector<bool> seen(n, false);
            seen[v] = seen[start] = true;
            std::vector<int> stack{start};
            int reached = 1;
            while (!stack.empty()) {
                int x = stack.back();
                stack.pop_back();
                for (int y : adj[x])
                    if (!seen[y]) {
                        seen[y] = true;
                        ++reached;
                        stack.push_back(y);
                    }
            }
            cut = reached != n - 1;
        }
        if (cut) out.push_back(d.crossings[v].id);
    }
    return out;
}

/// A random closed move sequence with every block type, at most `extra`
/// opening moves and never more than ten strands.
inline std::vector<foldrib::Move> random_moves(std::mt19937& rng, int extra = 14) {
    using namespace foldrib;
    std::vector<Move> moves;
    int s = 0;
    const int len = 4 + static_cast<int>(rng() % extra);
    for (int i = 0; i < len || s > 0; ++i) {
        std::vector<Move> options;
        if (i < len && s <= 10) {
            for (int p = 0; p <= s; ++p) options.push_back({kB1o, p});
            for (int p = 0; p < s; ++p) options.push_back({kB1, p});
        }
        for (int p = 0; p < s; ++p) {
            if (p + 1 < s) options.push_back({kB2, p, Side::Right});
            if (p > 0) options.push_back({kB2, p, Side::Left});
            options.push_back({kB2o, p, Side::Left});
        }
        for (int p = 0; p + 1 < s; ++p) options.push_back({kB3o, p});
        for (int p = 0; p + 2 < s; ++p) options.push_back({kB3, p});
        if (i >= len) std::erase_if(options, [](const Move& m) { return m.type.shape != Shape::Max; });
        Move m = options[rng() % options.size()];
        moves.push_back(m);
        s += m.type.strand_delta();
    }
    return moves;
}

inline int crossed_rows(const foldrib::BinaryGridDiagram& g) {
    int n = 0;
    for (const auto& r : g.rows) n += r.crossed_column.has_value();
    return n;
}

inline int counted_rows(const foldrib::BinaryGridDiagram& g) {
    int n = 0;
    for (const auto& r : g.rows) n += r.type().counted();
    return n;
}

inline double cross(foldrib::Point o, foldrib::Point a, foldrib::Point b) { return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x); }

inline bool on_segment(foldrib::Point p, foldrib::Point a, foldrib::Point b) {
    return std::min(a.x, b.x) - 1e-12 <= p.x && p.x <= std::max(a.x, b.x) + 1e-12 && std::min(a.y, b.y) - 1e-12 <= p.y &&
           p.y <= std::max(a.y, b.y) + 1e-12;
}

/// Closed segments share a point.
inline bool segments_meet(const foldrib::Segment2& s, const foldrib::Segment2& t) {
    const double d1 = cross(t.a, t.b, s.a), d2 = cross(t.a, t.b, s.b);
    const double d3 = cross(s.a, s.b, t.a), d4 = cross(s.a, s.b, t.b);
    if (((d1 > 0 && d2 < 0) || (d1 < 0 && d2 > 0)) && ((d3 > 0 && d4 < 0) || (d3 < 0 && d4 > 0))) return true;
    return (std::abs(d1) < 1e-12 && on_segment(s.a, t.a, t.b)) || (std::abs(d2) < 1e-12 && on_segment(s.b, t.a, t.b)) ||
           (std::abs(d3) < 1e-12 && on_segment(t.a, s.a, s.b)) || (std::abs(d4) < 1e-12 && on_segment(t.b, s.a, s.b));
}

}  // namespace oracle
