#include "foldrib/leveling.hpp"

#include <algorithm>
#include <limits>
#include <optional>

namespace foldrib {

namespace {

class Embedding {
public:
    explicit Embedding(const PlanarDiagram& d) : d_(d), ends_(edge_ends(d)) {}

    int size() const { return d_.crossing_count(); }
    EdgeId edge(int v, int slot) const { return d_.crossings[v].slots[((slot % 4) + 4) % 4]; }
    int neighbour(int v, int slot) const { return across(ends_, d_, {v, slot}).crossing; }

    int slot_of(int v, EdgeId e) const {
        const auto& s = d_.crossings[v].slots;
        for (int i = 0; i < 4; ++i) {
            if (s[i] == e) return i;
        }
        return -1;
    }

    /// Connectivity of the subgraph induced by `members`.
    bool connected(const std::vector<bool>& members) const {
        int start = -1, total = 0;
        for (int v = 0; v < size(); ++v) {
            if (members[v]) {
                ++total;
                if (start < 0) start = v;
            }
        }
        if (total <= 1) return true;
        std::vector<bool> seen(size(), false);
        std::vector<int> stack{start};
        seen[start] = true;
        int reached = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int s = 0; s < 4; ++s) {
                int w = neighbour(v, s);
                if (members[w] && !seen[w]) {
                    seen[w] = true;
                    ++reached;
                    stack.push_back(w);
                }
            }
        }
        return reached == total;
    }

    /// Frame for placing v above the current frontier, if the down edges of v
    /// are contiguous and in the rotation order of v.
    std::optional<VertexFrame> place(int v, const std::vector<EdgeId>& frontier, const std::vector<bool>& placed) const {
        std::vector<int> positions;
        for (int s = 0; s < 4; ++s) {
            if (!placed[neighbour(v, s)]) continue;
            auto it = std::find(frontier.begin(), frontier.end(), edge(v, s));
            if (it == frontier.end()) return std::nullopt;
            positions.push_back(static_cast<int>(it - frontier.begin()));
        }
        if (positions.empty()) return std::nullopt;
        std::sort(positions.begin(), positions.end());
        const int k = static_cast<int>(positions.size());
        if (positions.back() - positions.front() != k - 1) return std::nullopt;

        VertexFrame f;
        f.crossing = v;
        f.position = positions.front();
        f.down.assign(frontier.begin() + f.position, frontier.begin() + f.position + k);
        f.rotation = slot_of(v, f.down[0]);
        for (int j = 0; j < k; ++j) {
            if (edge(v, f.rotation + j) != f.down[j]) return std::nullopt;
        }
        for (int j = 0; j < 4 - k; ++j) f.up.push_back(edge(v, f.rotation - 1 - j));
        return f;
    }

    VertexFrame bottom(int v, int rotation) const {
        VertexFrame f;
        f.crossing = v;
        f.rotation = rotation;
        for (int j = 0; j < 4; ++j) f.up.push_back(edge(v, rotation - 1 - j));
        return f;
    }

private:
    const PlanarDiagram& d_;
    std::vector<std::array<SlotRef, 2>> ends_;
};

std::vector<EdgeId> step_frontier(const std::vector<EdgeId>& frontier, const VertexFrame& f) {
    std::vector<EdgeId> next(frontier.begin(), frontier.begin() + f.position);
    next.insert(next.end(), f.up.begin(), f.up.end());
    next.insert(next.end(), frontier.begin() + f.position + static_cast<long>(f.down.size()), frontier.end());
    return next;
}

LeveledDiagram assemble(const PlanarDiagram& d, const std::vector<VertexFrame>& frames) {
    LeveledDiagram l;
    l.diagram = d;
    l.frames = frames;
    std::vector<EdgeId> frontier;
    for (const auto& f : frames) {
        l.order.push_back(f.crossing);
        l.strand_columns.push_back(frontier);
        frontier = step_frontier(frontier, f);
    }
    l.strand_columns.push_back(frontier);
    for (int k = 0; k < static_cast<int>(frames.size()); ++k) l.portions.push_back(classify_portion(l, k));
    return l;
}

class Search {
public:
    Search(const PlanarDiagram& d, const LevelingOptions& options)
        : d_(d), g_(d), options_(options), placed_(d.crossing_count(), false) {}

    std::optional<LeveledDiagram> run() {
        const int n = g_.size();
        for (int v = 0; v < n && !done_; ++v) {
            placed_[v] = true;
            std::vector<bool> rest(n);
            for (int w = 0; w < n; ++w) rest[w] = !placed_[w];
            if (g_.connected(rest)) {
                for (int r = 0; r < 4 && !done_; ++r) {
                    VertexFrame f = g_.bottom(v, r);
                    frames_.push_back(f);
                    start_done_ = false;
                    extend(f.up);
                    frames_.pop_back();
                }
            }
            placed_[v] = false;
        }
        return best_;
    }

private:
    void extend(const std::vector<EdgeId>& frontier) {
        const int n = g_.size();
        if (static_cast<int>(frames_.size()) == n) {
            if (!frontier.empty()) return;
            complete();
            return;
        }
        std::vector<VertexFrame> candidates;
        for (int v = 0; v < n; ++v) {
            if (placed_[v]) continue;
            auto f = g_.place(v, frontier, placed_);
            if (!f) continue;
            bool last = static_cast<int>(frames_.size()) == n - 1;
            if ((f->down.size() == 4) != last) continue;
            candidates.push_back(*f);
        }
        std::stable_sort(candidates.begin(), candidates.end(),
                         [](const VertexFrame& a, const VertexFrame& b) {
                             // Most edges into the boundary first, then leftmost.
                             if (a.down.size() != b.down.size()) return a.down.size() > b.down.size();
                             return a.position < b.position;
                         });
        for (const auto& f : candidates) {
            placed_[f.crossing] = true;
            std::vector<bool> rest(n);
            for (int w = 0; w < n; ++w) rest[w] = !placed_[w];
            if (g_.connected(rest)) {
                frames_.push_back(f);
                extend(step_frontier(frontier, f));
                frames_.pop_back();
            }
            placed_[f.crossing] = false;
            if (done_ || start_done_) return;
        }
    }

    // Without exhaustive mode only the first leveling of each bottom choice
    // is scored; the best of those (fewest T1- after flips, then fewest T1)
    // is kept.
    void complete() {
        LeveledDiagram l = assemble(d_, frames_);
        auto counts = count_portions(l);
        std::pair<int, int> score{std::numeric_limits<int>::max(), counts.total(1)};
        for (auto f : {FlipChoice{false, false}, FlipChoice{false, true}, FlipChoice{true, false}, FlipChoice{true, true}})
            score.first = std::min(score.first, flip_counts(counts, f).t1_minus());
        if (!best_ || score < best_score_) {
            best_score_ = score;
            best_ = std::move(l);
        }
        start_done_ = !options_.exhaustive;
        if (best_score_ == std::pair{0, 0} || ++visited_ >= options_.max_levelings) done_ = true;
    }

    const PlanarDiagram& d_;
    Embedding g_;
    LevelingOptions options_;
    std::vector<bool> placed_;
    std::vector<VertexFrame> frames_;
    std::optional<LeveledDiagram> best_;
    std::pair<int, int> best_score_;
    long visited_ = 0;
    bool done_ = false;
    bool start_done_ = false;
};

}  // namespace

LeveledDiagram find_leveling(const PlanarDiagram& d, const LevelingOptions& options) {
    if (d.crossing_count() == 0) throw Error(ErrorCode::PreconditionViolated, "diagram has no crossings");
    auto check = validate_diagram(d);
    if (!check.ok) throw Error(ErrorCode::PreconditionViolated, check.issues.front().second);
    for (const auto& pair : edge_ends(d)) {
        if (pair[0].crossing >= 0 && pair[0].crossing == pair[1].crossing)
            throw Error(ErrorCode::PreconditionViolated, "diagram has a loop edge");
    }
    auto found = Search(d, options).run();
    if (!found) throw Error(ErrorCode::NoLevelingFound, "no bisected vertex leveling exists for this diagram");
    return *found;
}

LeveledDiagram level_from_order(const PlanarDiagram& d, const std::vector<int>& order,
                                const std::vector<EdgeId>& bottom_up_edges) {
    Embedding g(d);
    const int n = g.size();
    if (static_cast<int>(order.size()) != n || n == 0) throw Error(ErrorCode::NoLevelingFound, "order does not list every crossing");
    std::vector<bool> placed(n, false);
    std::vector<VertexFrame> frames;
    const int v0 = order[0];
    if (bottom_up_edges.size() != 4) throw Error(ErrorCode::NoLevelingFound, "bottom vertex needs four up edges");
    int s0 = g.slot_of(v0, bottom_up_edges[0]);
    if (s0 < 0) throw Error(ErrorCode::NoLevelingFound, "bottom edge not at the bottom vertex");
    VertexFrame first = g.bottom(v0, (s0 + 1) % 4);
    if (first.up != bottom_up_edges) throw Error(ErrorCode::NoLevelingFound, "bottom edge order is not a rotation");
    placed[v0] = true;
    frames.push_back(first);
    std::vector<EdgeId> frontier = first.up;
    for (int k = 1; k < n; ++k) {
        int v = order[k];
        if (v < 0 || v >= n || placed[v]) throw Error(ErrorCode::NoLevelingFound, "order is not a permutation");
        auto f = g.place(v, frontier, placed);
        if (!f) throw Error(ErrorCode::NoLevelingFound, "vertex " + std::to_string(v) + " cannot be placed at level " + std::to_string(k));
        placed[v] = true;
        frontier = step_frontier(frontier, *f);
        frames.push_back(*f);
    }
    if (!frontier.empty()) throw Error(ErrorCode::NoLevelingFound, "strands remain above the top vertex");
    return assemble(d, frames);
}

PortionType classify_portion(const LeveledDiagram& l, int k) {
    const VertexFrame& f = l.frames.at(k);
    const Crossing& c = l.diagram.crossings.at(f.crossing);
    const int r = f.rotation;
    auto over = [&](int slot) { return c.slot_is_over(((slot % 4) + 4) % 4); };
    PortionType p;
    p.index = static_cast<int>(f.down.size());
    switch (p.index) {
        case 0: p.plus = over(r - 1); break;      // leftmost up edge
        case 1: p.plus = over(r + 3); break;      // outer up edges f1, f3
        case 2: p.plus = over(r); break;          // left down edge
        case 3: p.plus = over(r); break;          // outer down edges e1, e3
        default: p.plus = over(r); break;         // leftmost down edge
    }
    return p;
}

std::vector<std::string> check_leveling(const LeveledDiagram& l) {
    std::vector<std::string> issues;
    const PlanarDiagram& d = l.diagram;
    const int n = d.crossing_count();
    std::vector<int> sorted = l.order;
    std::sort(sorted.begin(), sorted.end());
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(sorted.size()) != n || sorted[i] != i) {
            issues.push_back("order is not a permutation of the crossings");
            return issues;
        }
    }
    if (static_cast<int>(l.frames.size()) != n || static_cast<int>(l.portions.size()) != n) {
        issues.push_back("frames or portions missing");
        return issues;
    }

    Embedding g(d);
    std::vector<int> level(n);
    for (int k = 0; k < n; ++k) level[l.order[k]] = k;
    for (int k = 1; k < n; ++k) {
        std::vector<bool> lower(n), upper(n);
        for (int v = 0; v < n; ++v) {
            lower[v] = level[v] < k;
            upper[v] = !lower[v];
        }
        if (!g.connected(lower)) issues.push_back("piece below level " + std::to_string(k) + " is disconnected");
        if (!g.connected(upper)) issues.push_back("piece above level " + std::to_string(k) + " is disconnected");
    }

    for (int k = 0; k < n; ++k) {
        const auto& f = l.frames[k];
        if (f.crossing != l.order[k]) issues.push_back("frame " + std::to_string(k) + " is for the wrong crossing");
        for (EdgeId e : f.down) {
            int other = -1;
            for (int s = 0; s < 4; ++s) {
                if (g.edge(f.crossing, s) == e) other = g.neighbour(f.crossing, s);
            }
            if (other < 0 || level[other] >= k) issues.push_back("edge " + std::to_string(e) + " is not monotone");
        }
    }

    try {
        LeveledDiagram again = level_from_order(d, l.order, l.frames[0].up);
        for (int k = 0; k < n; ++k) {
            if (again.frames[k].down != l.frames[k].down || again.frames[k].up != l.frames[k].up)
                issues.push_back("frame " + std::to_string(k) + " disagrees with the drawing");
        }
        if (again.strand_columns != l.strand_columns) issues.push_back("strand columns disagree with the drawing");
    } catch (const Error& e) {
        issues.push_back(e.what());
    }

    auto counts = count_portions(l);
    if (counts.total(0) != 1) issues.push_back("expected exactly one T0 portion");
    if (counts.total(4) != 1) issues.push_back("expected exactly one T4 portion");
    if (counts.total(1) != counts.total(3)) issues.push_back("T1 and T3 counts differ");
    for (int k = 0; k < n; ++k) {
        if (!(l.portions[k] == classify_portion(l, k))) issues.push_back("portion " + std::to_string(k) + " is mislabelled");
    }
    return issues;
}

LeveledDiagram apply_flip(const LeveledDiagram& l, const FlipChoice& f) {
    LeveledDiagram out = l;
    if (f.x_flipped) {
        std::vector<int> order(out.order.rbegin(), out.order.rend());
        out = level_from_order(rotate_out_of_plane(out.diagram), order, out.frames.back().down);
    }
    if (f.y_flipped) {
        std::vector<EdgeId> up(out.frames.front().up.rbegin(), out.frames.front().up.rend());
        out = level_from_order(rotate_out_of_plane(out.diagram), out.order, up);
    }
    return out;
}

PortionCounts flip_counts(const PortionCounts& c, const FlipChoice& f) {
    PortionCounts out = c;
    if (f.x_flipped) {
        PortionCounts x;
        x.plus[0] = out.minus[4];
        x.minus[0] = out.plus[4];
        x.plus[4] = out.minus[0];
        x.minus[4] = out.plus[0];
        x.plus[1] = out.minus[3];
        x.minus[1] = out.plus[3];
        x.plus[3] = out.minus[1];
        x.minus[3] = out.plus[1];
        x.plus[2] = out.plus[2];
        x.minus[2] = out.minus[2];
        out = x;
    }
    if (f.y_flipped) {
        std::swap(out.plus[1], out.minus[1]);
        std::swap(out.plus[3], out.minus[3]);
    }
    return out;
}

std::pair<LeveledDiagram, FlipChoice> optimize_flips(const LeveledDiagram& l) {
    std::optional<std::pair<LeveledDiagram, FlipChoice>> best;
    for (auto f : {FlipChoice{false, false}, FlipChoice{false, true}, FlipChoice{true, false}, FlipChoice{true, true}}) {
        LeveledDiagram v = apply_flip(l, f);
        if (!best || count_portions(v).t1_minus() < count_portions(best->first).t1_minus()) best.emplace(std::move(v), f);
    }
    return *best;
}

PlanarDiagram leveled_to_pd(const LeveledDiagram& l) {
    PlanarDiagram out;
    out.free_loops = l.diagram.free_loops;
    out.crossings.resize(l.diagram.crossings.size());
    for (const auto& f : l.frames) {
        const Crossing& src = l.diagram.crossings.at(f.crossing);
        Crossing c;
        c.id = src.id;
        std::vector<EdgeId> ccw = f.down;
        ccw.insert(ccw.end(), f.up.rbegin(), f.up.rend());
        if (ccw.size() != 4) throw Error(ErrorCode::NoLevelingFound, "frame does not have four edges");
        std::copy(ccw.begin(), ccw.end(), c.slots.begin());
        int src_slot = -1;
        for (int s = 0; s < 4; ++s) {
            if (src.slots[s] == c.slots[0]) src_slot = s;
        }
        c.over_pair = src.slot_is_over(src_slot) ? 0 : 1;
        out.crossings[f.crossing] = c;
    }
    return out;
}

}  // namespace foldrib
