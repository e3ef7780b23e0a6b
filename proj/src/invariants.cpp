#include "foldrib/invariants.hpp"

#include <algorithm>
#include <cstdint>
#include <future>
#include <map>
#include <numeric>
#include <thread>

namespace foldrib {

int writhe(const PlanarDiagram& d, const std::vector<bool>& reversed) {
    auto signs = crossing_signs(d, reversed);
    return std::accumulate(signs.begin(), signs.end(), 0);
}

namespace {

// histogram[a][loops] = number of states with `a` A-smoothings and `loops` circles.
using Histogram = std::vector<std::vector<std::int64_t>>;

struct StateCounter {
    const PlanarDiagram& d;
    std::vector<int> edge_index;  // edge label -> dense index
    int edge_count = 0;

    explicit StateCounter(const PlanarDiagram& diagram) : d(diagram) {
        EdgeId max_id = 0;
        for (const auto& c : d.crossings) {
            for (EdgeId e : c.slots) max_id = std::max(max_id, e);
        }
        edge_index.assign(static_cast<std::size_t>(max_id) + 1, -1);
        for (const auto& c : d.crossings) {
            for (EdgeId e : c.slots) {
                if (edge_index[e] < 0) edge_index[e] = edge_count++;
            }
        }
    }

    Histogram count(std::uint64_t begin, std::uint64_t end) const {
        const int n = d.crossing_count();
        Histogram hist(n + 1, std::vector<std::int64_t>(edge_count + 2, 0));
        std::vector<int> parent(edge_count);
        auto find = [&](int x) {
            while (parent[x] != x) x = parent[x] = parent[parent[x]];
            return x;
        };
        for (std::uint64_t state = begin; state < end; ++state) {
            std::iota(parent.begin(), parent.end(), 0);
            int merges = 0;
            auto join = [&](EdgeId a, EdgeId b) {
                int ra = find(edge_index[a]), rb = find(edge_index[b]);
                if (ra != rb) {
                    parent[ra] = rb;
                    ++merges;
                }
            };
            int a_count = 0;
            for (int c = 0; c < n; ++c) {
                const auto& s = d.crossings[c].slots;
                int u = d.crossings[c].under_pair();
                if ((state >> c) & 1U) {
                    // B-smoothing
                    join(s[u], s[(u + 3) % 4]);
                    join(s[(u + 1) % 4], s[(u + 2) % 4]);
                } else {
                    ++a_count;
                    join(s[u], s[(u + 1) % 4]);
                    join(s[(u + 2) % 4], s[(u + 3) % 4]);
                }
            }
            int loops = edge_count - merges;
            hist[a_count][loops] += 1;
        }
        return hist;
    }
};

}  // namespace

Laurent kauffman_bracket(const PlanarDiagram& d, int max_crossings) {
    const int n = d.crossing_count();
    if (n > max_crossings || n > 40)
        throw Error(ErrorCode::TooLarge, std::to_string(n) + " crossings exceed the state-sum cap of " +
                                             std::to_string(max_crossings));
    const Laurent loop_value = Laurent::monomial(-1, 2) + Laurent::monomial(-1, -2);
    if (n == 0) return loop_value.pow(std::max(d.free_loops, 1) - 1);

    StateCounter counter(d);
    const std::uint64_t states = std::uint64_t{1} << n;
    unsigned workers = 1;
    if (states >= 4096) workers = std::max(1U, std::min(8U, std::thread::hardware_concurrency()));

    Histogram total;
    if (workers == 1) {
        total = counter.count(0, states);
    } else {
        std::vector<std::future<Histogram>> parts;
        const std::uint64_t chunk = (states + workers - 1) / workers;
        for (unsigned w = 0; w < workers; ++w) {
            std::uint64_t lo = w * chunk, hi = std::min(states, lo + chunk);
            parts.push_back(std::async(std::launch::async, [&counter, lo, hi] { return counter.count(lo, hi); }));
        }
        for (auto& f : parts) {
            Histogram h = f.get();
            if (total.empty()) {
                total = std::move(h);
                continue;
            }
            for (std::size_t a = 0; a < h.size(); ++a)
                for (std::size_t l = 0; l < h[a].size(); ++l) total[a][l] += h[a][l];
        }
    }

    std::vector<Laurent> loop_powers{Laurent(1)};
    Laurent bracket;
    for (int a = 0; a <= n; ++a) {
        for (std::size_t loops = 1; loops < total[a].size(); ++loops) {
            std::int64_t count = total[a][loops];
            if (count == 0) continue;
            // Free loops add further circles to every state.
            std::size_t extra = loops - 1 + static_cast<std::size_t>(d.free_loops);
            while (loop_powers.size() <= extra) loop_powers.push_back(loop_powers.back() * loop_value);
            bracket += Laurent::monomial(count, a - (n - a)) * loop_powers[extra];
        }
    }
    return bracket;
}

Laurent jones_normalized(const PlanarDiagram& d, int max_crossings) {
    Laurent bracket = kauffman_bracket(d, max_crossings);
    const int k = static_cast<int>(trace_components(d).size());
    const int choices = k <= 1 ? 1 : 1 << (k - 1);
    Laurent best;
    for (int mask = 0; mask < choices; ++mask) {
        std::vector<bool> reversed(k, false);
        for (int i = 1; i < k; ++i) reversed[i] = (mask >> (i - 1)) & 1;
        int w = writhe(d, reversed);
        Laurent factor = Laurent::monomial(w % 2 == 0 ? 1 : -1, -3 * w);
        Laurent value = factor * bracket;
        if (mask == 0 || value < best) best = value;
    }
    return best;
}

PlanarDiagram rectilinear_to_pd(const std::vector<std::vector<Point>>& components) {
    struct Segment {
        int comp;
        Point a, b;
        bool horizontal() const { return a.y == b.y; }
    };
    std::vector<std::vector<Segment>> segs(components.size());
    for (std::size_t c = 0; c < components.size(); ++c) {
        const auto& pts = components[c];
        for (std::size_t i = 0; i < pts.size(); ++i) {
            const Point& a = pts[i];
            const Point& b = pts[(i + 1) % pts.size()];
            if (a == b) continue;
            if (a.x != b.x && a.y != b.y) throw Error(ErrorCode::RoutingError, "polyline is not axis-parallel");
            segs[c].push_back({static_cast<int>(c), a, b});
        }
    }

    // Events on each segment: (distance from segment start, crossing, over?).
    struct Event {
        double t;
        int crossing;
    };
    std::map<std::pair<int, int>, std::vector<Event>> events;
    int crossings = 0;
    auto strictly_between = [](double v, double lo, double hi) {
        if (lo > hi) std::swap(lo, hi);
        return v > lo && v < hi;
    };
    for (std::size_t c1 = 0; c1 < segs.size(); ++c1) {
        for (std::size_t i = 0; i < segs[c1].size(); ++i) {
            const Segment& h = segs[c1][i];
            if (!h.horizontal()) continue;
            for (std::size_t c2 = 0; c2 < segs.size(); ++c2) {
                for (std::size_t j = 0; j < segs[c2].size(); ++j) {
                    const Segment& v = segs[c2][j];
                    if (v.horizontal()) continue;
                    if (!strictly_between(v.a.x, h.a.x, h.b.x) || !strictly_between(h.a.y, v.a.y, v.b.y)) continue;
                    int id = crossings++;
                    events[{static_cast<int>(c1), static_cast<int>(i)}].push_back({std::abs(v.a.x - h.a.x), id});
                    events[{static_cast<int>(c2), static_cast<int>(j)}].push_back({std::abs(h.a.y - v.a.y), id});
                }
            }
        }
    }

    PlanarDiagram pd;
    pd.crossings.resize(crossings);
    for (int i = 0; i < crossings; ++i) {
        pd.crossings[i].id = i;
        pd.crossings[i].over_pair = 1;  // slots: 0 south, 1 east, 2 north, 3 west
    }
    EdgeId next_label = 1;
    for (std::size_t c = 0; c < segs.size(); ++c) {
        struct Visit {
            int crossing;
            int in_slot;
            int out_slot;
        };
        std::vector<Visit> visits;
        for (std::size_t i = 0; i < segs[c].size(); ++i) {
            auto it = events.find({static_cast<int>(c), static_cast<int>(i)});
            if (it == events.end()) continue;
            auto list = it->second;
            std::sort(list.begin(), list.end(), [](const Event& x, const Event& y) { return x.t < y.t; });
            const Segment& s = segs[c][i];
            int in_slot, out_slot;
            if (s.horizontal()) {
                bool east = s.b.x > s.a.x;
                in_slot = east ? 3 : 1;
                out_slot = east ? 1 : 3;
            } else {
                bool north = s.b.y > s.a.y;
                in_slot = north ? 0 : 2;
                out_slot = north ? 2 : 0;
            }
            for (const auto& e : list) visits.push_back({e.crossing, in_slot, out_slot});
        }
        if (visits.empty()) {
            ++pd.free_loops;
            continue;
        }
        const int m = static_cast<int>(visits.size());
        const EdgeId base = next_label;
        next_label += m;
        for (int j = 0; j < m; ++j) {
            // Arc j runs from visit j to visit j + 1.
            pd.crossings[visits[j].crossing].slots[visits[j].out_slot] = base + j;
            pd.crossings[visits[(j + 1) % m].crossing].slots[visits[(j + 1) % m].in_slot] = base + j;
        }
    }
    return pd;
}

std::vector<std::vector<Point>> grid_polylines(const BinaryGridDiagram& g) {
    require_valid(g);
    const int n = static_cast<int>(g.rows.size());
    // partner[(row, x)] = row at the other end of the vertical segment at column x.
    std::map<std::pair<int, int>, int> partner;
    std::map<int, int> open;  // column -> row where its current strand started
    for (int i = 0; i < n; ++i) {
        const Row& r = g.rows[i];
        for (auto [x, kind] : {std::pair{r.left, r.left_end}, std::pair{r.right, r.right_end}}) {
            if (kind == EndKind::Down) {
                int start = open.at(x);
                open.erase(x);
                partner[{i, x}] = start;
                partner[{start, x}] = i;
            }
        }
        for (auto [x, kind] : {std::pair{r.left, r.left_end}, std::pair{r.right, r.right_end}}) {
            if (kind == EndKind::Up) open[x] = i;
        }
    }

    std::vector<bool> used(n, false);
    std::vector<std::vector<Point>> out;
    for (int start = 0; start < n; ++start) {
        if (used[start]) continue;
        std::vector<Point> poly;
        int row = start;
        int x = g.rows[row].left;
        while (true) {
            used[row] = true;
            const Row& r = g.rows[row];
            int other = x == r.left ? r.right : r.left;
            poly.push_back({static_cast<double>(x), static_cast<double>(row)});
            poly.push_back({static_cast<double>(other), static_cast<double>(row)});
            int next_row = partner.at({row, other});
            row = next_row;
            x = other;
            if (row == start && x == g.rows[start].left) break;
        }
        // Consecutive corners share coordinates; drop duplicates.
        std::vector<Point> clean;
        for (const auto& p : poly) {
            if (clean.empty() || !(clean.back() == p)) clean.push_back(p);
        }
        if (clean.size() > 1 && clean.front() == clean.back()) clean.pop_back();
        out.push_back(std::move(clean));
    }
    return out;
}

PlanarDiagram bgd_to_pd(const BinaryGridDiagram& g) {
    return rectilinear_to_pd(grid_polylines(g));
}

}  // namespace foldrib
