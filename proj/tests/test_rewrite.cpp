#include <gtest/gtest.h>

#include "foldrib/expand.hpp"
#include "foldrib/invariants.hpp"
#include "foldrib/leveling.hpp"
#include "foldrib/rewrite.hpp"
#include "oracles.hpp"

using namespace foldrib;

namespace {

Row row(int left, int right, EndKind l, EndKind r, std::optional<int> crossed = std::nullopt) {
    Row out;
    out.left = left;
    out.right = right;
    out.left_end = l;
    out.right_end = r;
    out.crossed_column = crossed;
    return out;
}

constexpr EndKind U = EndKind::Up;
constexpr EndKind D = EndKind::Down;

BinaryGridDiagram expanded(const std::string& name) {
    return build_bgd(optimize_flips(find_leveling(oracle::diagram(name))).first);
}

int count_type(const BinaryGridDiagram& g, const BlockType& t) {
    int n = 0;
    for (const auto& r : g.rows) n += r.type() == t;
    return n;
}

int first_row(const BinaryGridDiagram& g, const BlockType& t) {
    for (int i = 0; i < static_cast<int>(g.rows.size()); ++i)
        if (g.rows[i].type() == t) return i;
    return -1;
}

}  // namespace

TEST(ConvertBlock, B2GivesCrossedCupAndOneCap) {
    BinaryGridDiagram g = expanded("3_1");
    const int i = first_row(g, kB2);
    ASSERT_GE(i, 0);
    BinaryGridDiagram h = convert_block(g, i);
    EXPECT_TRUE(grid_issues(h).empty());
    EXPECT_EQ(h.rows.size(), g.rows.size() + 1);
    EXPECT_EQ(count_type(h, kB2), count_type(g, kB2) - 1);
    EXPECT_EQ(count_type(h, kB1), count_type(g, kB1) + 1);
    EXPECT_EQ(count_type(h, kB3o), count_type(g, kB3o) + 1);
    EXPECT_EQ(jones_normalized(bgd_to_pd(h)), jones_normalized(bgd_to_pd(g)));
}

TEST(ConvertBlock, B3GivesCrossedCupAndTwoCaps) {
    BinaryGridDiagram g = expanded("3_1");
    const int i = first_row(g, kB3);
    ASSERT_GE(i, 0);
    BinaryGridDiagram h = convert_block(g, i);
    EXPECT_TRUE(grid_issues(h).empty());
    EXPECT_EQ(h.rows.size(), g.rows.size() + 2);
    EXPECT_EQ(count_type(h, kB3), count_type(g, kB3) - 1);
    EXPECT_EQ(count_type(h, kB1), count_type(g, kB1) + 1);
    EXPECT_EQ(count_type(h, kB3o), count_type(g, kB3o) + 2);
    EXPECT_EQ(jones_normalized(bgd_to_pd(h)), jones_normalized(bgd_to_pd(g)));
}

TEST(ConvertBlock, OtherRowsRejected) {
    BinaryGridDiagram g = expanded("3_1");
    try {
        convert_block(g, first_row(g, kB1));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::NotConvertible);
    }
    EXPECT_THROW(convert_block(g, 99), Error);
}

TEST(SwitchAdjacent, DisjointIsPlainSwap) {
    BinaryGridDiagram g = with_derived_columns(
        {row(1, 2, U, U), row(1, 2, D, D), row(4, 5, U, U), row(4, 5, D, D)});
    ASSERT_TRUE(grid_issues(g).empty());
    BinaryGridDiagram want = compact_columns(with_derived_columns(
        {row(1, 2, U, U), row(4, 5, U, U), row(1, 2, D, D), row(4, 5, D, D)}));
    EXPECT_EQ(switch_adjacent(g, 1), want);
}

TEST(SwitchAdjacent, OverlapIsTranslated) {
    // Cap over columns 1..3 below a crossed cup 2..5 whose crossed column 4
    // lies right of the cap.
    BinaryGridDiagram g = with_derived_columns({row(1, 4, U, U), row(3, 6, U, U, 4), row(1, 3, D, D),
                                                row(2, 5, U, U, 4), row(4, 6, D, D, 5), row(2, 5, D, D)});
    ASSERT_TRUE(grid_issues(g).empty());
    BinaryGridDiagram h = switch_adjacent(g, 2);
    // Translation by 3 - 2 + 1 = 2, swap, then compaction of columns
    // {1,3,4,6,7,8}.
    BinaryGridDiagram want = with_derived_columns({row(0, 3, U, U), row(1, 5, U, U, 3), row(2, 4, U, U, 3),
                                                   row(0, 1, D, D), row(3, 5, D, D, 4), row(2, 4, D, D)});
    EXPECT_EQ(h, want);
    EXPECT_EQ(jones_normalized(bgd_to_pd(h)), jones_normalized(bgd_to_pd(g)));
}

TEST(SwitchAdjacent, Rejections) {
    BinaryGridDiagram hopf = expanded("L2a1");
    try {
        switch_adjacent(hopf, first_row(hopf, kB1));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::NotSwitchable);
    }
    EXPECT_THROW(switch_adjacent(hopf, 3), Error);
    BinaryGridDiagram caps = with_derived_columns({row(0, 1, U, U), row(2, 3, U, U), row(0, 1, D, D), row(2, 3, D, D)});
    EXPECT_EQ(switch_adjacent(caps, 2), caps);
}

TEST(SwitchAdjacent, RandomPairsKeepKnotType) {
    std::mt19937 rng(3);
    int checked = 0;
    for (int trial = 0; trial < 300 && checked < 150; ++trial) {
        BinaryGridDiagram g = from_moves(oracle::random_moves(rng));
        if (oracle::crossed_rows(g) > 12) continue;
        for (int i = 0; i + 1 < static_cast<int>(g.rows.size()); ++i) {
            if (!(g.rows[i].type() == kB3o) || g.rows[i + 1].type().shape != Shape::Min) continue;
            BinaryGridDiagram h = switch_adjacent(g, i);
            ASSERT_TRUE(grid_issues(h).empty()) << trial;
            EXPECT_EQ(h.rows[i].type(), g.rows[i + 1].type());
            EXPECT_EQ(h.rows[i + 1].type(), kB3o);
            EXPECT_EQ(jones_normalized(bgd_to_pd(h), 30), jones_normalized(bgd_to_pd(g), 30)) << trial;
            ++checked;
            break;
        }
    }
    EXPECT_GT(checked, 50);
}

TEST(Normalize, Trefoil) {
    BinaryGridDiagram n = normalize(expanded("3_1"));
    EXPECT_TRUE(is_normal_form(n));
    EXPECT_EQ(count_type(n, kB1) + count_type(n, kB1o), 4);
    EXPECT_EQ(count_type(n, kB3o), 4);
    for (int i = 4; i < 8; ++i) EXPECT_EQ(n.rows[i].type(), kB3o);
}

TEST(Normalize, Hopf) {
    BinaryGridDiagram n = normalize(expanded("L2a1"));
    EXPECT_TRUE(is_normal_form(n));
    EXPECT_EQ(oracle::counted_rows(n), 3);
    EXPECT_EQ(count_type(n, kB3o), 3);
}

TEST(Normalize, FixedPoint) {
    BinaryGridDiagram n = normalize(expanded("5_2"));
    int steps = 0;
    EXPECT_EQ(normalize(n, [&](const std::string&, const BinaryGridDiagram&) { ++steps; }), n);
    EXPECT_EQ(steps, 0);
    EXPECT_EQ(compact_columns(n), n);
}

TEST(Normalize, TraceSeesEveryStep) {
    BinaryGridDiagram g = expanded("4_1");
    const Laurent j = jones_normalized(oracle::diagram("4_1"));
    std::vector<std::string> rules;
    BinaryGridDiagram last;
    BinaryGridDiagram n = normalize(g, [&](const std::string& rule, const BinaryGridDiagram& s) {
        rules.push_back(rule);
        last = s;
        EXPECT_TRUE(grid_issues(s).empty()) << rule;
        EXPECT_EQ(jones_normalized(bgd_to_pd(s)), j) << rule;
    });
    EXPECT_FALSE(rules.empty());
    EXPECT_EQ(last, n);
}

TEST(Normalize, DropsUncrossedTransitions) {
    BinaryGridDiagram g = from_moves({{kB1o, 0}, {kB2o, 0, Side::Left}, {kB2o, 1, Side::Left}, {kB3o, 0}});
    BinaryGridDiagram n = normalize(g);
    EXPECT_EQ(n.rows.size(), 2u);
    EXPECT_TRUE(is_normal_form(n));
}

TEST(Normalize, RandomGrids) {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        BinaryGridDiagram g = from_moves(oracle::random_moves(rng));
        BinaryGridDiagram n = normalize(g);
        EXPECT_TRUE(is_normal_form(n)) << trial;
        EXPECT_EQ(oracle::counted_rows(n), oracle::counted_rows(g)) << trial;
        if (oracle::crossed_rows(g) <= 12)
            EXPECT_EQ(jones_normalized(bgd_to_pd(n), 30), jones_normalized(bgd_to_pd(g), 30)) << trial;
    }
}
