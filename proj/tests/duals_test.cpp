#include <gtest/gtest.h>

#include "mwpm/duals.hpp"
#include "support.hpp"

namespace mwpm {
namespace {

using test::make_graph;

// Triangle 0,1,2 with (1,2) matched and a pendant edge (2,3).
struct Triangle {
    Graph g = make_graph(4, {{0, 1, 0}, {1, 2, 0}, {2, 0, 0}, {2, 3, 0}});
    SolverState s{g};
    int b = kNone;
    Triangle() {
        s.set_mate(1);
        b = test::shrink_triangle(s, 0, 1, 2, 0, 1, 1, 2, 2, 0);
    }
};

// Seven-vertex blossom: the triangle above as one child of a 5-cycle.
struct Nested {
    Graph g = make_graph(7, {{0, 1, 0}, {1, 2, 0}, {2, 0, 0}, {0, 3, 0}, {3, 4, 0}, {4, 5, 0}, {5, 6, 0}, {6, 0, 0}});
    SolverState s{g};
    int inner = kNone, outer = kNone;
    Nested() {
        s.set_mate(1);
        s.set_mate(4);
        s.set_mate(6);
        inner = test::shrink_triangle(s, 0, 1, 2, 0, 1, 1, 2, 2, 0);
        std::vector<CycleEdge> cyc{{3, 0, 3}, {4, 3, 4}, {5, 4, 5}, {6, 5, 6}, {7, 6, 0}};
        outer = shrink_blossom(s, {inner, 3, 4, 5, 6}, cyc);
    }
};

int matched_inside(const SolverState& s, int b) {
    std::vector<int> lv = s.forest.leaves(b);
    int cnt = 0;
    for (int u : lv)
        for (int v : lv)
            if (u < v && s.mate(u) == v) ++cnt;
    return cnt;
}

TEST(YzEdge, Examples) {
    Triangle t;
    EXPECT_EQ(yz_edge(t.s, 0), 0);
    t.s.y[0] = 1;
    t.s.y[1] = 2;
    t.s.forest.set_z(t.b, 4);
    EXPECT_EQ(yz_edge(t.s, 0), 7);
    t.s.y[0] = t.s.y[1] = 0;
    EXPECT_EQ(yz_edge(t.s, 3), 0);
    t.s.w[3] = 4;
    EXPECT_EQ(slack(t.s, 3), -4);
}

TEST(DualObjective, Examples) {
    Triangle t;
    EXPECT_EQ(dual_objective(t.s), 0);
    for (int v = 0; v < 4; ++v) t.s.y[v] = 1;
    t.s.forest.set_z(t.b, 2);
    EXPECT_EQ(dual_objective(t.s), 6);
    EXPECT_EQ(dual_objective(t.s, {0, 1, 2, 3}), 6);
    EXPECT_EQ(dual_objective(t.s, {0, 1, 2}), 5);
    EXPECT_EQ(dual_objective(t.s, {0, 1}), 4);
}

TEST(DualObjective, MatchesDirectSumOnNestedForest) {
    Nested t;
    t.s.forest.set_z(t.inner, 6);
    t.s.forest.set_z(t.outer, 4);
    for (int v = 0; v < 7; ++v) t.s.y[v] = v - 2;
    Weight direct = 0;
    for (int v = 0; v < 7; ++v) direct += t.s.y[v];
    direct += 6 * 1 + 4 * 3;
    EXPECT_EQ(dual_objective(t.s), direct);
}

TEST(Liquidate, RaisesObjectiveByHalfZ) {
    Triangle t;
    for (int v = 0; v < 4; ++v) t.s.y[v] = 1;
    t.s.forest.set_z(t.b, 4);
    const Weight before = dual_objective(t.s);
    const Weight inside = yz_edge(t.s, 0), straddle = yz_edge(t.s, 3);
    liquidate(t.s, t.b);
    EXPECT_FALSE(t.s.forest.is_blossom(t.b));
    for (int v = 0; v < 3; ++v) EXPECT_EQ(t.s.y[v], 3);
    EXPECT_EQ(t.s.y[3], 1);
    EXPECT_EQ(dual_objective(t.s), before + 2);
    EXPECT_EQ(yz_edge(t.s, 0), inside);
    EXPECT_EQ(yz_edge(t.s, 3), straddle + 2);
}

TEST(Liquidate, ZeroZOnlyRemovesNode) {
    Triangle t;
    liquidate(t.s, t.b);
    EXPECT_FALSE(t.s.forest.is_blossom(t.b));
    for (int v = 0; v < 4; ++v) EXPECT_EQ(t.s.y[v], 0);
}

TEST(Liquidate, RejectsBlossomInsideCurrentBlossom) {
    Nested t;
    EXPECT_THROW(liquidate(t.s, t.inner), ContractViolation);
}

TEST(Translate, UnitArithmetic) {
    Triangle t;
    t.s.forest.set_z(t.b, 4);
    const Weight inside = yz_edge(t.s, 0), straddle = yz_edge(t.s, 3);
    translate_unit(t.s, t.b);
    EXPECT_EQ(t.s.forest.z(t.b), 2);
    for (int v = 0; v < 3; ++v) EXPECT_EQ(t.s.y[v], 1);
    EXPECT_EQ(yz_edge(t.s, 0), inside);
    EXPECT_EQ(yz_edge(t.s, 3), straddle + 1);
    translate_unit(t.s, t.b);
    EXPECT_THROW(translate_unit(t.s, t.b), ContractViolation);
}

TEST(Translate, TwoUnitsEqualLiquidation) {
    Triangle a, b;
    a.s.forest.set_z(a.b, 4);
    b.s.forest.set_z(b.b, 4);
    translate(a.s, a.b, 2);
    liquidate(b.s, b.b);
    EXPECT_EQ(a.s.y, b.s.y);
    EXPECT_EQ(a.s.forest.z(a.b), 0);
}

TEST(Shrink, SmallestBlossom) {
    Triangle t;
    EXPECT_EQ(t.s.forest.size(t.b), 3);
    EXPECT_EQ(t.s.forest.base(t.b), 0);
    EXPECT_EQ(t.s.forest.z(t.b), 0);
    EXPECT_TRUE(blossom_consistent(t.s, t.b));
}

TEST(Shrink, NestedCountsLeaves) {
    Nested t;
    EXPECT_EQ(t.s.forest.size(t.outer), 7);
    EXPECT_EQ(t.s.forest.leaves(t.outer).size(), 7u);
    EXPECT_TRUE(blossom_consistent(t.s, t.outer));
    for (int e = 0; e < t.g.edge_count(); ++e) EXPECT_EQ(yz_edge(t.s, e), 0);
}

TEST(Shrink, RejectsBadCycles) {
    Graph g = make_graph(4, {{0, 1, 0}, {1, 2, 0}, {2, 3, 0}, {3, 0, 0}, {2, 0, 0}});
    SolverState s(g);
    s.set_mate(1);
    std::vector<CycleEdge> even{{0, 0, 1}, {1, 1, 2}, {2, 2, 3}, {3, 3, 0}};
    EXPECT_THROW(shrink_blossom(s, {0, 1, 2, 3}, even), ContractViolation);
    Graph tri = make_graph(3, {{0, 1, 0}, {1, 2, 0}, {2, 0, 0}});
    SolverState bare(tri);
    std::vector<CycleEdge> flat{{0, 0, 1}, {1, 1, 2}, {2, 2, 0}};
    EXPECT_THROW(shrink_blossom(bare, {0, 1, 2}, flat), ContractViolation);
}

TEST(Dissolve, Examples) {
    Triangle t;
    std::vector<int> kids = dissolve_root(t.s, t.b);
    EXPECT_EQ(kids, (std::vector<int>{0, 1, 2}));
    for (int v : kids) EXPECT_EQ(t.s.forest.parent(v), kNone);

    Nested n;
    n.s.forest.set_z(n.outer, 2);
    EXPECT_THROW(dissolve_root(n.s, n.outer), ContractViolation);
    kids = dissolve_root(n.s, n.outer, true);
    EXPECT_EQ(kids.size(), 5u);
    EXPECT_TRUE(n.s.forest.is_blossom(n.inner));
    EXPECT_EQ(n.s.forest.parent(n.inner), kNone);
    EXPECT_EQ(matched_inside(n.s, n.inner), 1);
}

TEST(BasePath, Examples) {
    Triangle t;
    EXPECT_EQ(base_path(t.s, t.b, 0), (std::vector<int>{0}));
    EXPECT_EQ(base_path(t.s, t.b, 1), (std::vector<int>{1, 2, 0}));
    EXPECT_EQ(base_path(t.s, t.b, 2), (std::vector<int>{2, 1, 0}));
    EXPECT_THROW(base_path(t.s, t.b, 3), ContractViolation);
}

TEST(BasePath, EvenAlternatingToBase) {
    Nested t;
    for (int v = 0; v < 7; ++v) {
        std::vector<int> p = base_path(t.s, t.outer, v);
        ASSERT_EQ(p.front(), v);
        ASSERT_EQ(p.back(), t.s.forest.base(t.outer));
        ASSERT_EQ((p.size() - 1) % 2, 0u);
        for (std::size_t i = 0; i + 1 < p.size(); ++i) {
            int e = t.g.find_edge(p[i], p[i + 1]);
            ASSERT_NE(e, kNone);
            EXPECT_EQ(t.s.is_matched_edge(e), i % 2 == 0);
        }
    }
}

TEST(AugmentThrough, SingleEdge) {
    Graph g = make_graph(2, {{0, 1, 3}});
    SolverState s(g);
    augment_through(s, {0, 1}, {0});
    EXPECT_TRUE(s.perfect());
}

TEST(AugmentThrough, MovesBaseOfTraversedBlossom) {
    Graph g = make_graph(4, {{0, 1, 0}, {1, 2, 0}, {2, 0, 0}, {1, 3, 0}});
    SolverState s(g);
    s.set_mate(1);
    int b = test::shrink_triangle(s, 0, 1, 2, 0, 1, 1, 2, 2, 0);
    augment_through(s, {3, b}, {3});
    EXPECT_TRUE(s.perfect());
    EXPECT_EQ(s.mate(3), 1);
    EXPECT_EQ(s.mate(0), 2);
    EXPECT_EQ(s.forest.base(b), 1);
    EXPECT_TRUE(blossom_consistent(s, b));
    EXPECT_EQ(matched_inside(s, b), 1);
}

TEST(AugmentThrough, NestedBlossomKeepsInternalCounts) {
    for (int entry = 1; entry < 7; ++entry) {
        Graph g = make_graph(8, {{0, 1, 0}, {1, 2, 0}, {2, 0, 0}, {0, 3, 0}, {3, 4, 0}, {4, 5, 0}, {5, 6, 0}, {6, 0, 0},
                                 {entry, 7, 0}});
        SolverState s(g);
        s.set_mate(1);
        s.set_mate(4);
        s.set_mate(6);
        int inner = test::shrink_triangle(s, 0, 1, 2, 0, 1, 1, 2, 2, 0);
        std::vector<CycleEdge> cyc{{3, 0, 3}, {4, 3, 4}, {5, 4, 5}, {6, 5, 6}, {7, 6, 0}};
        int outer = shrink_blossom(s, {inner, 3, 4, 5, 6}, cyc);
        augment_through(s, {7, outer}, {8});
        EXPECT_TRUE(s.perfect()) << entry;
        EXPECT_EQ(s.forest.base(outer), entry);
        EXPECT_TRUE(blossom_consistent(s, outer));
        EXPECT_TRUE(blossom_consistent(s, inner));
        EXPECT_EQ(matched_inside(s, outer), 3);
        EXPECT_EQ(matched_inside(s, inner), 1);
        EXPECT_TRUE(s.original_matching().valid(g));
    }
}

}  // namespace
}  // namespace mwpm
