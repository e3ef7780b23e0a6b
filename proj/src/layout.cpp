#include "foldrib/layout.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <map>
#include <sstream>

namespace foldrib {

FoldSchedule build_pile(const BinaryGridDiagram& g) {
    require_valid(g);
    FoldSchedule s;
    const auto moves = to_moves(g);
    std::vector<int> wings;
    std::vector<Rational> keys;
    std::size_t i = 0;

    for (; i < moves.size(); ++i) {
        const Move& m = moves[i];
        if (!(m.type == kB1 || m.type == kB1o)) break;
        const int k = static_cast<int>(s.planes.size());
        PaperPlane plane;
        plane.index = k;
        plane.row = static_cast<int>(i);
        plane.left_wing = 2 * k;
        plane.right_wing = 2 * k + 1;
        const int p = m.position;
        if (m.type == kB1o) {
            // Both wings go into the space before wing p.
            std::optional<Rational> lo, hi;
            if (p > 0) lo = keys[p - 1];
            if (p < static_cast<int>(keys.size())) hi = keys[p];
            if (lo && hi) {
                plane.left_slot = *lo + (*hi - *lo) / 3;
                plane.right_slot = *lo + (*hi - *lo) * 2 / 3;
            } else if (lo) {
                plane.left_slot = *lo + 1;
                plane.right_slot = *lo + 2;
            } else if (hi) {
                plane.left_slot = *hi - 2;
                plane.right_slot = *hi - 1;
            } else {
                plane.left_slot = 0;
                plane.right_slot = 1;
            }
            wings.insert(wings.begin() + p, {plane.left_wing, plane.right_wing});
            keys.insert(keys.begin() + p, {plane.left_slot, plane.right_slot});
        } else {
            // The wings straddle wing p, which the plane passes over.
            const Rational mid = keys[p];
            const Rational lo = p > 0 ? keys[p - 1] : mid - 1;
            const Rational hi = p + 1 < static_cast<int>(keys.size()) ? keys[p + 1] : mid + 1;
            plane.left_slot = (lo + mid) / 2;
            plane.right_slot = (mid + hi) / 2;
            plane.crossed_wing = wings[p];
            wings.insert(wings.begin() + p + 1, plane.right_wing);
            keys.insert(keys.begin() + p + 1, plane.right_slot);
            wings.insert(wings.begin() + p, plane.left_wing);
            keys.insert(keys.begin() + p, plane.left_slot);
        }
        s.planes.push_back(plane);
        s.wing_sequences.push_back(wings);
    }

    for (; i < moves.size(); ++i) {
        const Move& m = moves[i];
        if (!(m.type == kB3o))
            throw Error(ErrorCode::NotNormalForm, "row " + std::to_string(i) + " is " + m.type.name() + " above the pile");
        Cap cap;
        cap.row = static_cast<int>(i);
        cap.left_wing = wings[m.position];
        cap.right_wing = wings[m.position + 1];
        wings.erase(wings.begin() + m.position, wings.begin() + m.position + 2);
        s.caps.push_back(cap);
    }

    std::map<int, Rational> key_of;
    for (const auto& p : s.planes) {
        key_of[p.left_wing] = p.left_slot;
        key_of[p.right_wing] = p.right_slot;
    }
    for (int c = 0; c < static_cast<int>(s.caps.size()); ++c) s.connection_order.push_back(c);
    std::sort(s.connection_order.begin(), s.connection_order.end(),
              [&](int a, int b) { return key_of[s.caps[a].left_wing] < key_of[s.caps[b].left_wing]; });
    return s;
}

std::vector<std::string> pile_issues(const FoldSchedule& s) {
    std::vector<std::string> issues;
    std::map<int, Rational> key_of;
    for (std::size_t k = 0; k < s.planes.size(); ++k) {
        const auto& p = s.planes[k];
        key_of[p.left_wing] = p.left_slot;
        key_of[p.right_wing] = p.right_slot;
        if (k >= s.wing_sequences.size()) {
            issues.push_back("missing wing sequence after plane " + std::to_string(k));
            continue;
        }
        const auto& seq = s.wing_sequences[k];
        if (seq.size() != 2 * (k + 1))
            issues.push_back("after plane " + std::to_string(k) + ": " + std::to_string(seq.size()) + " wings");
        for (std::size_t j = 1; j < seq.size(); ++j) {
            if (!(key_of.at(seq[j - 1]) < key_of.at(seq[j])))
                issues.push_back("after plane " + std::to_string(k) + ": no space between wings " + std::to_string(seq[j - 1]) +
                                 " and " + std::to_string(seq[j]));
        }
    }
    if (s.caps.size() != s.planes.size()) issues.push_back("caps do not close every wing pair");
    return issues;
}

Rational ribbon_length(const FoldSchedule& s, const Rational& epsilon) {
    const auto planes = static_cast<std::int64_t>(s.planes.size());
    const auto caps = static_cast<std::int64_t>(s.caps.size());
    return Rational(2 * planes) + epsilon * (s.wing_count() + 3 * caps);
}

namespace {

struct WingPlacement {
    std::map<int, double> x;          // wing id -> column
    std::map<int, double> base;       // wing id -> plane height
    std::map<int, double> top;        // wing id -> cap height
    std::map<int, int> plane_partner;
    std::map<int, int> cap_partner;
};

WingPlacement place_wings(const FoldSchedule& s) {
    WingPlacement w;
    std::vector<std::pair<Rational, int>> order;
    for (const auto& p : s.planes) {
        order.emplace_back(p.left_slot, p.left_wing);
        order.emplace_back(p.right_slot, p.right_wing);
        w.base[p.left_wing] = w.base[p.right_wing] = 2.0 * p.index;
        w.plane_partner[p.left_wing] = p.right_wing;
        w.plane_partner[p.right_wing] = p.left_wing;
    }
    std::sort(order.begin(), order.end());
    for (std::size_t j = 0; j < order.size(); ++j) w.x[order[j].second] = 2.0 * static_cast<double>(j);
    const double roof = 2.0 * static_cast<double>(s.planes.size());
    for (std::size_t r = 0; r < s.caps.size(); ++r) {
        const auto& c = s.caps[r];
        w.top[c.left_wing] = w.top[c.right_wing] = roof + 2.0 * static_cast<double>(r + 1);
        w.cap_partner[c.left_wing] = c.right_wing;
        w.cap_partner[c.right_wing] = c.left_wing;
    }
    return w;
}

std::vector<std::vector<Point>> trace_core(const FoldSchedule& s, const WingPlacement& w) {
    std::vector<std::vector<Point>> out;
    std::map<int, bool> used;
    for (const auto& p : s.planes) {
        if (used[p.left_wing]) continue;
        std::vector<Point> poly;
        int wing = p.left_wing;
        while (true) {
            used[wing] = true;
            const int mate = w.cap_partner.at(wing);
            poly.push_back({w.x.at(wing), w.base.at(wing)});
            poly.push_back({w.x.at(wing), w.top.at(wing)});
            poly.push_back({w.x.at(mate), w.top.at(mate)});
            poly.push_back({w.x.at(mate), w.base.at(mate)});
            used[mate] = true;
            wing = w.plane_partner.at(mate);
            if (wing == p.left_wing) break;
        }
        out.push_back(std::move(poly));
    }
    return out;
}

double cross(const Point& o, const Point& a, const Point& b) {
    return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

bool on_segment(const Point& p, const Point& a, const Point& b) {
    return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) && std::min(a.y, b.y) <= p.y && p.y <= std::max(a.y, b.y);
}

bool intersects(const Segment2& s, const Segment2& t) {
    const double d1 = cross(t.a, t.b, s.a), d2 = cross(t.a, t.b, s.b);
    const double d3 = cross(s.a, s.b, t.a), d4 = cross(s.a, s.b, t.b);
    if (((d1 > 0 && d2 < 0) || (d1 < 0 && d2 > 0)) && ((d3 > 0 && d4 < 0) || (d3 < 0 && d4 > 0))) return true;
    if (d1 == 0 && on_segment(s.a, t.a, t.b)) return true;
    if (d2 == 0 && on_segment(s.b, t.a, t.b)) return true;
    if (d3 == 0 && on_segment(t.a, s.a, s.b)) return true;
    if (d4 == 0 && on_segment(t.b, s.a, s.b)) return true;
    return false;
}

std::string fmt(double v) {
    std::ostringstream out;
    out << std::fixed << std::setprecision(2) << v;
    return out.str();
}

}  // namespace

LayoutGeometry layout_geometry(const FoldSchedule& s, const SvgConfig& config) {
    LayoutGeometry geo;
    if (s.planes.empty()) return geo;
    const WingPlacement w = place_wings(s);
    geo.core = trace_core(s, w);
    const double h = config.width / 2;

    // Corner folds: the diagonal of the width-sized square at every turn.
    for (const auto& poly : geo.core) {
        const std::size_t m = poly.size();
        for (std::size_t i = 0; i < m; ++i) {
            const Point& prev = poly[(i + m - 1) % m];
            const Point& c = poly[i];
            const Point& next = poly[(i + 1) % m];
            auto unit = [](const Point& a, const Point& b) {
                double dx = b.x - a.x, dy = b.y - a.y;
                double len = std::hypot(dx, dy);
                return Point{dx / len, dy / len};
            };
            const Point din = unit(prev, c), dout = unit(c, next);
            geo.folds.push_back({{c.x + h * (dout.x - din.x), c.y + h * (dout.y - din.y)},
                                 {c.x + h * (din.x - dout.x), c.y + h * (din.y - dout.y)}});
        }
    }
    // Join folds where each wing leaves its paper plane.
    for (const auto& [wing, x] : w.x) {
        const double y = w.base.at(wing) + h + config.epsilon * config.width;
        if (y + h >= w.top.at(wing))
            throw Error(ErrorCode::LayoutOverlap, "epsilon " + fmt(config.epsilon) + " pushes the join fold of wing " +
                                                      std::to_string(wing) + " past its cap");
        geo.folds.push_back({{x - h, y}, {x + h, y}});
    }
    for (std::size_t i = 0; i < geo.folds.size(); ++i) {
        for (std::size_t j = i + 1; j < geo.folds.size(); ++j) {
            if (intersects(geo.folds[i], geo.folds[j]))
                throw Error(ErrorCode::LayoutOverlap, "fold lines " + std::to_string(i) + " and " + std::to_string(j) +
                                                          " meet; retry with a smaller epsilon or width");
        }
    }
    for (const auto& p : s.planes) {
        if (p.crossed_wing) geo.crossings.push_back({w.x.at(*p.crossed_wing), 2.0 * p.index});
    }

    geo.min_x = geo.max_x = geo.core[0][0].x;
    geo.min_y = geo.max_y = geo.core[0][0].y;
    for (const auto& poly : geo.core) {
        for (const auto& pt : poly) {
            geo.min_x = std::min(geo.min_x, pt.x);
            geo.max_x = std::max(geo.max_x, pt.x);
            geo.min_y = std::min(geo.min_y, pt.y);
            geo.max_y = std::max(geo.max_y, pt.y);
        }
    }
    return geo;
}

std::string emit_svg(const FoldSchedule& s, const SvgConfig& config) {
    const LayoutGeometry geo = layout_geometry(s, config);
    const double k = config.scale;
    const double pad = config.margin + config.width;
    const double width_px = (geo.max_x - geo.min_x + 2 * pad) * k;
    const double height_px = (geo.max_y - geo.min_y + 2 * pad) * k;
    // SVG y grows downward; layout y grows upward.
    auto X = [&](double x) { return fmt((x - geo.min_x + pad) * k); };
    auto Y = [&](double y) { return fmt((geo.max_y - y + pad) * k); };

    std::ostringstream out;
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << fmt(width_px) << "\" height=\""
        << fmt(height_px) << "\" viewBox=\"0 0 " << fmt(width_px) << ' ' << fmt(height_px) << "\">\n";
    if (s.planes.empty()) {
        out << "</svg>\n";
        return out.str();
    }

    auto band = [&](const Point& a, const Point& b, const char* cls) {
        out << "  <line class=\"" << cls << "\" x1=\"" << X(a.x) << "\" y1=\"" << Y(a.y) << "\" x2=\"" << X(b.x) << "\" y2=\""
            << Y(b.y) << "\" stroke=\"#c8d8e8\" stroke-width=\"" << fmt(config.width * k)
            << "\" stroke-linecap=\"square\"/>\n";
    };
    auto is_vertical = [](const Point& a, const Point& b) { return a.x == b.x; };

    out << "  <g id=\"ribbon\">\n";
    for (int pass = 0; pass < 2; ++pass) {
        for (const auto& poly : geo.core) {
            for (std::size_t i = 0; i < poly.size(); ++i) {
                const Point& a = poly[i];
                const Point& b = poly[(i + 1) % poly.size()];
                if (is_vertical(a, b) != (pass == 0)) continue;
                const char* cls = pass == 0 ? "wing" : a.y < 2.0 * static_cast<double>(s.planes.size()) ? "plane" : "cap";
                band(a, b, cls);
            }
        }
    }
    out << "  </g>\n";

    // Core: vertical pieces are cut around every crossing to show the gap.
    const double gap = config.width * 0.6;
    out << "  <g id=\"core\" stroke=\"#000000\" stroke-width=\"2\" fill=\"none\">\n";
    for (const auto& poly : geo.core) {
        for (std::size_t i = 0; i < poly.size(); ++i) {
            const Point& a = poly[i];
            const Point& b = poly[(i + 1) % poly.size()];
            if (!is_vertical(a, b)) {
                out << "    <line x1=\"" << X(a.x) << "\" y1=\"" << Y(a.y) << "\" x2=\"" << X(b.x) << "\" y2=\"" << Y(b.y) << "\"/>\n";
                continue;
            }
            double lo = std::min(a.y, b.y), hi = std::max(a.y, b.y);
            std::vector<double> cuts;
            for (const auto& c : geo.crossings) {
                if (c.x == a.x && c.y > lo && c.y < hi) cuts.push_back(c.y);
            }
            std::sort(cuts.begin(), cuts.end());
            double from = lo;
            for (double c : cuts) {
                out << "    <line x1=\"" << X(a.x) << "\" y1=\"" << Y(from) << "\" x2=\"" << X(a.x) << "\" y2=\"" << Y(c - gap / 2) << "\"/>\n";
                from = c + gap / 2;
            }
            out << "    <line x1=\"" << X(a.x) << "\" y1=\"" << Y(from) << "\" x2=\"" << X(a.x) << "\" y2=\"" << Y(hi) << "\"/>\n";
        }
    }
    out << "  </g>\n";

    out << "  <g id=\"folds\" stroke=\"#d03030\" stroke-width=\"1.5\" stroke-dasharray=\"4 3\">\n";
    for (const auto& f : geo.folds) {
        out << "    <line x1=\"" << X(f.a.x) << "\" y1=\"" << Y(f.a.y) << "\" x2=\"" << X(f.b.x) << "\" y2=\"" << Y(f.b.y) << "\"/>\n";
    }
    out << "  </g>\n";
    out << "</svg>\n";
    return out.str();
}

PlanarDiagram core_to_pd(const FoldSchedule& s) {
    if (s.planes.empty()) return {};
    return rectilinear_to_pd(trace_core(s, place_wings(s)));
}

nlohmann::json to_json(const FoldSchedule& s, const Rational& epsilon, double width) {
    nlohmann::json j;
    j["planes"] = nlohmann::json::array();
    for (const auto& p : s.planes) {
        nlohmann::json plane = {{"index", p.index},           {"row", p.row},
                                {"left_wing", p.left_wing},   {"right_wing", p.right_wing},
                                {"left_slot", to_string(p.left_slot)}, {"right_slot", to_string(p.right_slot)}};
        plane["crossed_wing"] = p.crossed_wing ? nlohmann::json(*p.crossed_wing) : nlohmann::json(nullptr);
        j["planes"].push_back(plane);
    }
    j["caps"] = nlohmann::json::array();
    for (const auto& c : s.caps) j["caps"].push_back({{"row", c.row}, {"left_wing", c.left_wing}, {"right_wing", c.right_wing}});
    j["connection_order"] = s.connection_order;
    j["epsilon"] = to_string(epsilon);
    j["width"] = width;
    j["wing_count"] = s.wing_count();
    j["ribbon_length"] = to_string(ribbon_length(s, epsilon));
    return j;
}

}  // namespace foldrib
