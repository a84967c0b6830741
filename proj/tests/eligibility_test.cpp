#include <gtest/gtest.h>

#include "mwpm/eligibility.hpp"
#include "support.hpp"

namespace mwpm {
namespace {

using test::make_graph;

TEST(Slack, Examples) {
    Graph g = make_graph(2, {{0, 1, 0}});
    SolverState s(g);
    EXPECT_EQ(slack(s, 0), 0);
    s.y[0] = s.y[1] = 3;
    s.w[0] = 4;
    EXPECT_EQ(slack(s, 0), 2);
}

TEST(SlackStar, Examples) {
    EXPECT_EQ(slack_star(-2, Criterion::Relaxed, false), 0);
    EXPECT_EQ(slack_star(0, Criterion::Relaxed, true), 0);
    EXPECT_EQ(slack_star(4, Criterion::Tight, false), 4);
    EXPECT_EQ(slack_star(-1, Criterion::Near, false), 1);
    EXPECT_EQ(slack_star(-2, Criterion::Near, true), 0);
    EXPECT_EQ(slack_star(3, Criterion::Near, false), 3);
    EXPECT_EQ(slack_star(-2, Criterion::Relaxed, true), 2);
    EXPECT_THROW(slack_star(-3, Criterion::Near, false), InvariantViolation);
    EXPECT_THROW(slack_star(-1, Criterion::Tight, false), InvariantViolation);
    EXPECT_THROW(slack_star(1, Criterion::Relaxed, true), InvariantViolation);
}

TEST(SlackStar, ZeroExactlyWhenEligible) {
    for (Criterion c : {Criterion::Tight, Criterion::Relaxed, Criterion::Near})
        for (bool matched : {false, true})
            for (Weight s = -2; s <= 4; ++s) {
                Weight st;
                try {
                    st = slack_star(s, c, matched);
                } catch (const InvariantViolation&) {
                    EXPECT_FALSE(eligible_by_slack(s, c, matched));
                    continue;
                }
                EXPECT_GE(st, 0);
                EXPECT_EQ(st == 0, eligible_by_slack(s, c, matched))
                    << criterion_name(c) << " slack=" << s << " matched=" << matched;
            }
}

TEST(IsEligible, SlackClauses) {
    Graph g = make_graph(2, {{0, 1, 4}});
    SolverState s(g);
    s.w[0] = 4;
    s.y[0] = s.y[1] = 1;
    EXPECT_FALSE(is_eligible(s, 0, Criterion::Tight));
    EXPECT_TRUE(is_eligible(s, 0, Criterion::Relaxed));
    EXPECT_TRUE(is_eligible(s, 0, Criterion::Near));
    s.y[1] = 4;
    for (Criterion c : {Criterion::Tight, Criterion::Relaxed, Criterion::Near}) EXPECT_FALSE(is_eligible(s, 0, c));
}

TEST(IsEligible, BlossomEdgeUnderRelaxedCriterion) {
    Graph g = make_graph(3, {{0, 1, 0}, {1, 2, 0}, {2, 0, 0}});
    SolverState s(g);
    s.set_mate(1);
    test::shrink_triangle(s, 0, 1, 2, 0, 1, 1, 2, 2, 0);
    s.y[0] = 5;
    EXPECT_TRUE(is_eligible(s, 0, Criterion::Relaxed));
    EXPECT_FALSE(is_eligible(s, 0, Criterion::Tight));
    EXPECT_FALSE(is_eligible(s, 0, Criterion::Near));
}

TEST(EligibleView, HidesEdgesInsideRootBlossoms) {
    Graph g = make_graph(4, {{0, 1, 0}, {1, 2, 0}, {2, 0, 0}, {2, 3, 0}});
    SolverState s(g);
    s.set_mate(1);
    int b = test::shrink_triangle(s, 0, 1, 2, 0, 1, 1, 2, 2, 0);
    EligibleView v = build_eligible_view(s, Criterion::Tight);
    ASSERT_EQ(v.nodes.size(), 2u);
    EXPECT_EQ(v.node_of[0], b);
    EXPECT_EQ(v.node_of[3], 3);
    const int ib = v.index_of[b];
    ASSERT_EQ(v.adj[ib].size(), 1u);
    EXPECT_EQ(v.adj[ib][0].first, 3);
}

}  // namespace
}  // namespace mwpm
