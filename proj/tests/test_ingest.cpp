#include <gtest/gtest.h>

#include "foldrib/expand.hpp"
#include "foldrib/ingest.hpp"
#include "foldrib/leveling.hpp"
#include "foldrib/rewrite.hpp"
#include "oracles.hpp"

using namespace foldrib;

namespace {

ErrorCode code_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    ADD_FAILURE() << "no error thrown";
    return ErrorCode::InternalCheck;
}

// Two trefoils joined through one extra crossing whose opposite corners lead
// into different summands: the joining crossing is a cut vertex.
PlanarDiagram clasp_bridged_sum() {
    PlanarDiagram d = parse_pd("X(6,3,1,4) X(2,5,3,6) X(4,1,5,2) X(16,13,11,14) X(12,15,13,16) X(14,11,15,12)");
    d.crossings[0].slots[2] = 101;
    d.crossings[3].slots[2] = 111;
    Crossing bridge;
    bridge.id = 6;
    bridge.slots = {1, 11, 111, 101};
    d.crossings.push_back(bridge);
    return d;
}

}  // namespace

TEST(ParsePd, StandardTrefoil) {
    PlanarDiagram d = parse_pd("X(6,3,1,4) X(2,5,3,6) X(4,1,5,2)");
    EXPECT_EQ(d.crossing_count(), 3);
    EXPECT_TRUE(validate_diagram(d).ok);
    EXPECT_EQ(d.components(), 1);
    EXPECT_EQ(d.crossings[1].slots, (std::array<EdgeId, 4>{2, 5, 3, 6}));
}

TEST(ParsePd, AlternativeSpellings) {
    PlanarDiagram plain = parse_pd("X(6,3,1,4) X(2,5,3,6) X(4,1,5,2)");
    EXPECT_EQ(parse_pd("PD[X[6,3,1,4], X[2,5,3,6], X[4,1,5,2]]"), plain);
    EXPECT_EQ(parse_pd("  X(6, 3, 1, 4),X(2,5,3,6)\n X(4,1,5,2) "), plain);
}

TEST(ParsePd, CyclicLabellingReadsAsThreeLoops) {
    // Under the first-edge-is-incoming-under convention this labelling gives
    // three unknotted components rather than a knot.
    PlanarDiagram d = parse_pd("X(1,4,2,3) X(3,6,4,5) X(5,2,6,1)");
    EXPECT_EQ(d.crossing_count(), 3);
    EXPECT_EQ(d.components(), 3);
}

TEST(ParsePd, Errors) {
    EXPECT_EQ(code_of([] { parse_pd("X(1,2,3)"); }), ErrorCode::SyntaxError);
    EXPECT_EQ(code_of([] { parse_pd("Y(1,2,3,4)"); }), ErrorCode::SyntaxError);
    EXPECT_EQ(code_of([] { parse_pd("X(1,2,3,4"); }), ErrorCode::SyntaxError);
    EXPECT_EQ(code_of([] { parse_pd("X(1,a,3,4)"); }), ErrorCode::SyntaxError);
    EXPECT_EQ(code_of([] { parse_pd("X(1,2,3,4) X(1,2,3,5)"); }), ErrorCode::LabelError);
    EXPECT_EQ(code_of([] { parse_pd("X(0,1,0,1)"); }), ErrorCode::LabelError);
    EXPECT_EQ(code_of([] { parse_pd(""); }), ErrorCode::EmptyDiagram);
}

TEST(ParsePd, UnknotWhenAllowed) {
    PlanarDiagram d = parse_pd("", ParseOptions{true});
    EXPECT_EQ(d.crossing_count(), 0);
    EXPECT_EQ(d.free_loops, 1);
    auto v = validate_diagram(d);
    EXPECT_TRUE(v.ok);
    EXPECT_TRUE(v.zero_crossing);
}

TEST(ParsePd, RoundTripCorpus) {
    for (const auto& e : oracle::corpus().entries) {
        EXPECT_EQ(parse_pd(emit_pd(e.diagram)), e.diagram) << e.name;
    }
}

TEST(Validate, DanglingEdge) {
    PlanarDiagram d;
    d.crossings.push_back({0, {1, 2, 3, 4}, 1});
    d.crossings.push_back({1, {4, 3, 2, 5}, 1});
    auto v = validate_diagram(d);
    ASSERT_FALSE(v.ok);
    EXPECT_EQ(v.issues.front().first, ValidationIssue::DanglingEdge);
}

TEST(Nugatory, TrefoilHasNone) {
    EXPECT_TRUE(detect_nugatory(oracle::diagram("3_1")).empty());
}

TEST(Nugatory, Kink) {
    EXPECT_EQ(detect_nugatory(parse_pd("X(1,2,2,1)")), std::vector<int>{0});
}

TEST(Nugatory, ClaspBridge) {
    PlanarDiagram d = clasp_bridged_sum();
    ASSERT_TRUE(validate_diagram(d).ok);
    EXPECT_EQ(detect_nugatory(d), std::vector<int>{6});
    EXPECT_EQ(oracle::brute_force_cut_vertices(d), std::vector<int>{6});
    EXPECT_EQ(code_of([&] { require_pipeline_input(d); }), ErrorCode::PreconditionViolated);
}

TEST(Nugatory, AgreesWithBruteForce) {
    for (const auto& e : oracle::corpus().entries)
        EXPECT_EQ(detect_nugatory(e.diagram), oracle::brute_force_cut_vertices(e.diagram)) << e.name;
    for (const char* pd : {"X(1,2,2,1)", "X(1,2,2,3) X(3,4,4,1)", "X(6,3,1,4) X(2,5,3,6) X(4,1,5,7) X(7,8,8,2)"}) {
        PlanarDiagram d = parse_pd(pd);
        EXPECT_EQ(detect_nugatory(d), oracle::brute_force_cut_vertices(d)) << pd;
        EXPECT_FALSE(detect_nugatory(d).empty()) << pd;
    }
}

TEST(PipelineInput, SplitDiagramRejected) {
    PlanarDiagram d = parse_pd("X(6,3,1,4) X(2,5,3,6) X(4,1,5,2) X(11,13,12,14) X(14,12,13,11)");
    try {
        require_pipeline_input(d);
        FAIL() << "split diagram accepted";
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::PreconditionViolated);
        EXPECT_NE(std::string(e.what()).find("separately"), std::string::npos);
    }
}

TEST(PipelineInput, KinkMessageNamesCrossing) {
    try {
        require_pipeline_input(parse_pd("X(1,2,2,1)"));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::PreconditionViolated);
        EXPECT_NE(std::string(e.what()).find("nugatory crossings: 0"), std::string::npos);
    }
}

TEST(Table, BundledCorpus) {
    const auto& t = oracle::corpus();
    EXPECT_TRUE(t.errors.empty());
    EXPECT_GE(t.entries.size(), 38u);
    int knots = 0;
    for (const auto& e : t.entries) {
        EXPECT_EQ(e.diagram.crossing_count(), e.crossing_number) << e.name;
        EXPECT_NO_THROW(require_pipeline_input(e.diagram)) << e.name;
        knots += e.diagram.components() == 1;
    }
    EXPECT_EQ(knots, 35);
}

TEST(Table, HeaderOnlyIsEmpty) {
    KnotTable t = parse_table("name,crossings,pd\n");
    EXPECT_TRUE(t.entries.empty());
    EXPECT_TRUE(t.errors.empty());
}

TEST(Table, RowErrors) {
    KnotTable t = parse_table(
        "name,crossings,pd\n"
        "bad,3,\"X(8,3,1,4) X(2,6,3,5) X(4,7,5,8) X(6,2,7,1)\"\n"
        "trefoil,3,\"X(6,3,1,4) X(2,5,3,6) X(4,1,5,2)\"\n"
        "short,3\n"
        "junk,x,\"X(1,2,2,1)\"\n");
    ASSERT_EQ(t.entries.size(), 1u);
    EXPECT_EQ(t.entries[0].name, "trefoil");
    EXPECT_EQ(t.entries[0].line, 3);
    ASSERT_EQ(t.errors.size(), 3u);
    EXPECT_EQ(t.errors[0].code, ErrorCode::CountMismatch);
    EXPECT_EQ(t.errors[0].line, 2);
    EXPECT_EQ(t.errors[1].code, ErrorCode::SyntaxError);
    EXPECT_EQ(t.errors[2].code, ErrorCode::SyntaxError);
}

TEST(Table, BadHeaderAndMissingFile) {
    KnotTable t = parse_table("knot,c,code\n3_1,3,X(1,2,2,1)\n");
    EXPECT_TRUE(t.entries.empty());
    ASSERT_EQ(t.errors.size(), 1u);
    EXPECT_EQ(code_of([] { load_table("/nonexistent/table.csv"); }), ErrorCode::IoError);
}

TEST(Bgd, RoundTripPipelineGrids) {
    for (const auto& e : oracle::corpus().entries) {
        BinaryGridDiagram g = build_bgd(find_leveling(e.diagram));
        EXPECT_EQ(parse_bgd(emit_bgd(g)), g) << e.name;
        BinaryGridDiagram n = normalize(g);
        EXPECT_EQ(parse_bgd(emit_bgd(n)), n) << e.name;
    }
}

TEST(Bgd, RowFormat) {
    BinaryGridDiagram g = parse_bgd(
        "# hopf\n"
        "MIN extent=[1,3] ends=(up,up)\n"
        "MIN X@1 extent=[0,2] ends=(up,up)\n"
        "MAX X@2 extent=[1,3] ends=(down,down)\n"
        "MAX extent=[0,2] ends=(down,down)\n");
    EXPECT_TRUE(grid_issues(g).empty());
    EXPECT_EQ(g.rows.size(), 4u);
    EXPECT_EQ(g.rows[1].type(), kB1);
    EXPECT_EQ(code_of([] { parse_bgd("MIN extent=[0,1] ends=(up,down)\n"); }), ErrorCode::SyntaxError);
    EXPECT_EQ(code_of([] { parse_bgd("CUP extent=[0,1]\n"); }), ErrorCode::SyntaxError);
}
