#include "foldrib/pipeline.hpp"

#include "foldrib/expand.hpp"
#include "foldrib/ingest.hpp"
#include "foldrib/invariants.hpp"
#include "foldrib/rewrite.hpp"

namespace foldrib {

namespace {

void expect(bool condition, const std::string& what) {
    if (!condition) throw Error(ErrorCode::InternalCheck, what);
}

void expect_no_issues(const std::vector<std::string>& issues, const std::string& stage) {
    if (!issues.empty()) throw Error(ErrorCode::InternalCheck, stage + ": " + issues.front());
}

void finish_from_grid(PipelineResult& r) {
    r.normal = normalize(r.expanded);
    expect(is_normal_form(r.normal), "rewriting did not reach the normal form");
    r.report.expanded = block_counts(r.expanded);
    r.report.normalized = block_counts(r.normal);
    expect(r.report.expanded.counted() == r.report.normalized.counted(), "rewriting changed the counted block total");
    r.schedule = build_pile(r.normal);
    expect_no_issues(pile_issues(r.schedule), "pile");
    r.report.certified_bound = rib_upper_bound(r.report.normalized);
    expect(r.schedule.wing_count() == 2 * r.report.normalized.counted(), "pile does not have one plane per counted row");
}

}  // namespace

PipelineResult run_pipeline(const PlanarDiagram& d, const std::string& name, const PipelineOptions& options) {
    PipelineResult r;
    r.input = d;
    if (d.crossing_count() == 0) {
        auto check = validate_diagram(d);
        if (!check.ok) throw Error(ErrorCode::PreconditionViolated, check.issues.front().second + "; run each component separately");
        r.report = unknot_report(name);
        return r;
    }
    require_pipeline_input(d);
    const int c = d.crossing_count();

    r.leveling = find_leveling(d, {options.exhaustive});
    expect_no_issues(check_leveling(r.leveling), "leveling");
    std::tie(r.flipped, r.flip) = optimize_flips(r.leveling);
    expect_no_issues(check_leveling(r.flipped), "flipped leveling");
    const PortionCounts portions = count_portions(r.flipped);
    expect(4 * portions.t1_minus() <= c - 2, "flips left more than (c-2)/4 T1- portions");

    r.expanded = build_bgd(r.flipped);
    r.report.name = name;
    r.report.crossing_number = c;
    r.report.portions = portions;
    r.report.flip = r.flip;
    expect(block_counts(r.expanded).counted() == c + 1 + portions.t1_minus(), "expansion broke the counted-block identity");
    finish_from_grid(r);

    const TheoreticalBound t = theoretical_bound(c);
    r.report.has_theoretical = true;
    r.report.floor_form = t.floor_form;
    r.report.linear_form = t.linear_form;
    const ComparisonBounds cmp = comparison_bounds(c);
    r.report.tian = cmp.tian;
    r.report.denne = cmp.denne;
    expect(r.report.certified_bound == Rational(2 * (c + 1 + portions.t1_minus())), "certified bound disagrees with the portion count");
    expect(r.report.certified_bound <= t.floor_form && t.floor_form <= t.linear_form, "certified bound exceeds the theoretical bound");
    return r;
}

PipelineResult run_grid_pipeline(const BinaryGridDiagram& g, const std::string& name) {
    require_valid(g);
    PipelineResult r;
    r.expanded = g;
    r.report.name = name;
    int crossed = 0;
    for (const Row& row : g.rows) crossed += row.crossed_column.has_value();
    r.report.crossing_number = crossed;
    finish_from_grid(r);
    if (crossed >= 2) {
        const TheoreticalBound t = theoretical_bound(crossed);
        r.report.has_theoretical = true;
        r.report.floor_form = t.floor_form;
        r.report.linear_form = t.linear_form;
    }
    const ComparisonBounds cmp = comparison_bounds(crossed);
    r.report.tian = cmp.tian;
    r.report.denne = cmp.denne;
    r.report.note = "grid diagram input: leveling and flips skipped; the theoretical bound uses its crossed-row count";
    return r;
}

bool VerifyReport::ok() const {
    for (const auto& s : stages) {
        if (!s.ok) return false;
    }
    return true;
}

namespace {

class Checker {
public:
    Checker(VerifyReport& report, Laurent reference, int cap) : report_(report), reference_(std::move(reference)), cap_(cap) {
        report_.reference = reference_.to_string();
    }

    void check(const std::string& stage, const PlanarDiagram& d) {
        Laurent j = jones_normalized(d, cap_);
        report_.stages.push_back({stage, j == reference_, j.to_string()});
    }

    void check_grid(const std::string& stage, const BinaryGridDiagram& g) { check(stage, bgd_to_pd(g)); }

    void rewrite_and_layout(const BinaryGridDiagram& g, bool per_step) {
        RewriteTrace trace;
        if (per_step) trace = [&](const std::string& rule, const BinaryGridDiagram& step) { check_grid("rewrite: " + rule, step); };
        BinaryGridDiagram normal = normalize(g, trace);
        check_grid("normal form", normal);
        check("layout core", core_to_pd(build_pile(normal)));
    }

private:
    VerifyReport& report_;
    Laurent reference_;
    int cap_;
};

}  // namespace

VerifyReport verify_stages(const PlanarDiagram& d, bool per_step, const PipelineOptions& options) {
    VerifyReport report;
    Checker checker(report, jones_normalized(d, options.bracket_cap), options.bracket_cap);
    if (d.crossing_count() == 0) return report;
    require_pipeline_input(d);
    LeveledDiagram l = find_leveling(d, {options.exhaustive});
    checker.check("leveling", leveled_to_pd(l));
    for (auto f : {FlipChoice{false, false}, FlipChoice{false, true}, FlipChoice{true, false}, FlipChoice{true, true}}) {
        LeveledDiagram v = apply_flip(l, f);
        checker.check("flip " + f.label(), leveled_to_pd(v));
        checker.check_grid("expansion after flip " + f.label(), build_bgd(v));
    }
    auto [best, flip] = optimize_flips(l);
    checker.rewrite_and_layout(build_bgd(best), per_step);
    return report;
}

VerifyReport verify_grid_stages(const BinaryGridDiagram& g, bool per_step, const PipelineOptions& options) {
    VerifyReport report;
    Checker checker(report, jones_normalized(bgd_to_pd(g), options.bracket_cap), options.bracket_cap);
    checker.rewrite_and_layout(g, per_step);
    return report;
}

nlohmann::json to_json(const VerifyReport& v) {
    nlohmann::json j;
    j["reference_jones"] = v.reference;
    j["ok"] = v.ok();
    j["stages"] = nlohmann::json::array();
    for (const auto& s : v.stages) j["stages"].push_back({{"stage", s.stage}, {"ok", s.ok}, {"jones", s.jones}});
    return j;
}

}  // namespace foldrib
