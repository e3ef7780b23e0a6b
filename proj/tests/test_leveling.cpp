#include <gtest/gtest.h>

#include "foldrib/ingest.hpp"
#include "foldrib/invariants.hpp"
#include "foldrib/leveling.hpp"
#include "oracles.hpp"

using namespace foldrib;

namespace {

std::multiset<int> indices(const LeveledDiagram& l) {
    std::multiset<int> out;
    for (const auto& p : l.portions) out.insert(p.index);
    return out;
}

PortionCounts t1_t3(int t1p, int t1m, int t3p, int t3m) {
    PortionCounts c;
    c.plus[1] = t1p;
    c.minus[1] = t1m;
    c.plus[3] = t3p;
    c.minus[3] = t3m;
    return c;
}

const FlipChoice kFlips[] = {{false, false}, {false, true}, {true, false}, {true, true}};

}  // namespace

TEST(FindLeveling, SmallExamples) {
    LeveledDiagram hopf = find_leveling(oracle::diagram("L2a1"));
    EXPECT_EQ(hopf.order.size(), 2u);
    EXPECT_EQ(indices(hopf), (std::multiset<int>{0, 4}));
    EXPECT_EQ(indices(find_leveling(oracle::diagram("3_1"))), (std::multiset<int>{0, 2, 4}));
    EXPECT_EQ(indices(find_leveling(oracle::diagram("4_1"))), (std::multiset<int>{0, 2, 2, 4}));
}

TEST(FindLeveling, CorpusLevelingsAreValid) {
    for (const auto& e : oracle::corpus().entries) {
        LeveledDiagram l = find_leveling(e.diagram);
        EXPECT_TRUE(check_leveling(l).empty()) << e.name;
        PortionCounts c = count_portions(l);
        EXPECT_EQ(c.plus[0] + c.minus[0], 1) << e.name;
        EXPECT_EQ(c.plus[4] + c.minus[4], 1) << e.name;
        EXPECT_EQ(c.plus[1] + c.minus[1], c.plus[3] + c.minus[3]) << e.name;
        EXPECT_EQ(l.portions.front().index, 0);
        EXPECT_EQ(l.portions.back().index, 4);
        for (int k = 0; k < static_cast<int>(l.order.size()); ++k) EXPECT_EQ(classify_portion(l, k), l.portions[k]);
        EXPECT_TRUE(l.strand_columns.front().empty());
        EXPECT_TRUE(l.strand_columns.back().empty());
    }
}

TEST(FindLeveling, DrawnDiagramKeepsKnotType) {
    for (const auto& e : oracle::corpus().entries) {
        LeveledDiagram l = find_leveling(e.diagram);
        EXPECT_EQ(jones_normalized(leveled_to_pd(l)), jones_normalized(e.diagram)) << e.name;
    }
}

TEST(FindLeveling, RejectsNugatory) {
    EXPECT_THROW(find_leveling(parse_pd("X(1,2,2,1)")), Error);
}

TEST(FindLeveling, ExhaustiveNeverWorse) {
    for (const char* name : {"3_1", "4_1", "5_2", "6_2", "7_4", "L4a1"}) {
        const PlanarDiagram& d = oracle::diagram(name);
        LeveledDiagram fast = optimize_flips(find_leveling(d)).first;
        LeveledDiagram full = optimize_flips(find_leveling(d, {true, 200000})).first;
        EXPECT_TRUE(check_leveling(full).empty()) << name;
        EXPECT_LE(count_portions(full).t1_minus(), count_portions(fast).t1_minus()) << name;
    }
}

TEST(LevelFromOrder, Reproduces) {
    for (const auto& e : oracle::corpus().entries) {
        LeveledDiagram l = find_leveling(e.diagram);
        LeveledDiagram again = level_from_order(e.diagram, l.order, l.frames.front().up);
        EXPECT_EQ(again.portions, l.portions) << e.name;
        EXPECT_EQ(again.strand_columns, l.strand_columns) << e.name;
    }
}

TEST(FlipCounts, ExchangeTable) {
    PortionCounts c = t1_t3(3, 5, 2, 1);
    EXPECT_EQ(flip_counts(c, {false, false}), c);
    EXPECT_EQ(flip_counts(c, {true, false}), t1_t3(1, 2, 5, 3));
    EXPECT_EQ(flip_counts(c, {false, true}), t1_t3(5, 3, 1, 2));
    PortionCounts ends;
    ends.plus[0] = 1;
    ends.minus[4] = 1;
    ends.plus[2] = 3;
    PortionCounts x = flip_counts(ends, {true, false});
    EXPECT_EQ(x.minus[4], 1);
    EXPECT_EQ(x.plus[0], 1);
    EXPECT_EQ(x.plus[2], 3);
}

TEST(FlipCounts, BestImage) {
    auto best = [](const PortionCounts& c) {
        int m = 1 << 20;
        for (const auto& f : kFlips) m = std::min(m, flip_counts(c, f).t1_minus());
        return m;
    };
    EXPECT_EQ(best(t1_t3(3, 5, 2, 1)), 1);
    EXPECT_EQ(best(t1_t3(0, 0, 0, 0)), 0);
    EXPECT_EQ(best(t1_t3(2, 2, 2, 2)), 2);
    EXPECT_LE(best(t1_t3(2, 2, 2, 2)), (10 - 2) / 4);
}

TEST(ApplyFlip, MatchesTableAndKeepsKnotType) {
    for (const auto& e : oracle::corpus().entries) {
        LeveledDiagram l = find_leveling(e.diagram);
        const Laurent j = jones_normalized(e.diagram);
        for (const auto& f : kFlips) {
            LeveledDiagram g = apply_flip(l, f);
            EXPECT_TRUE(check_leveling(g).empty()) << e.name << ' ' << f.label();
            EXPECT_EQ(count_portions(g), flip_counts(count_portions(l), f)) << e.name << ' ' << f.label();
            EXPECT_EQ(jones_normalized(leveled_to_pd(g)), j) << e.name << ' ' << f.label();
        }
    }
}

TEST(OptimizeFlips, PicksMinimumWithinBound) {
    for (const auto& e : oracle::corpus().entries) {
        LeveledDiagram l = find_leveling(e.diagram);
        auto [best, choice] = optimize_flips(l);
        for (const auto& f : kFlips) EXPECT_LE(count_portions(best).t1_minus(), count_portions(apply_flip(l, f)).t1_minus());
        EXPECT_EQ(count_portions(best), count_portions(apply_flip(l, choice)));
        EXPECT_LE(4 * count_portions(best).t1_minus(), e.crossing_number - 2) << e.name;
    }
}
