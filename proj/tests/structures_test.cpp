#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <random>

#include "mwpm/dual_clock.hpp"
#include "mwpm/event_queue.hpp"
#include "mwpm/split_findmin.hpp"
#include "mwpm/union_find.hpp"
#include "reference.hpp"

namespace mwpm {
namespace {

TEST(SplitFindmin, Examples) {
    SplitFindmin s;
    s.init(3);
    SplitFindmin::Min m = s.findmin(s.list(0));
    EXPECT_EQ(m.key, kInfinity);
    EXPECT_EQ(m.element, kNone);
    EXPECT_TRUE(s.decrease_key(1, 5, 42));
    s.split(0);
    EXPECT_NE(s.list(0), s.list(1));
    EXPECT_EQ(s.list(1), s.list(2));
    m = s.findmin(s.list(1));
    EXPECT_EQ(m.key, 5);
    EXPECT_EQ(m.element, 1);
    EXPECT_EQ(m.witness, 42);
    EXPECT_EQ(s.findmin(s.list(0)).key, kInfinity);
    EXPECT_THROW(s.split(2), ContractViolation);
}

TEST(SplitFindmin, MatchesNaiveReferenceOverRandomOperations) {
    test::OracleRun r = test::sfm_random_check(20240611, 100000);
    EXPECT_TRUE(r.ok()) << r.failure;
    EXPECT_GT(r.comparisons, 10000);
}

TEST(ForestUnionFind, Examples) {
    ForestUnionFind uf;
    uf.init(4);
    for (int v = 0; v < 4; ++v) EXPECT_EQ(uf.find(v), v);
    uf.add_root(0);
    uf.add_edge(1, 0);
    uf.add_edge(2, 1);
    uf.unite(2, 1);
    EXPECT_EQ(uf.find(2), 1);
    EXPECT_EQ(uf.find(1), 1);
    uf.unite(0, 1);
    EXPECT_EQ(uf.find(2), 0);
    uf.add_root(3);
    EXPECT_THROW(uf.unite(0, 3), ContractViolation);
}

TEST(ForestUnionFind, MatchesNaiveReferenceOverRandomOperations) {
    test::OracleRun r = test::uf_random_check(77, 100000);
    EXPECT_TRUE(r.ok()) << r.failure;
    EXPECT_GT(r.comparisons, 10000);
}

TEST(EventQueue, EqualTimesDrainByKind) {
    for (QueueKind kind : {QueueKind::Bucket, QueueKind::Ordered}) {
        EventQueue q;
        q.reset(kind, 10);
        q.push({3, EventKind::Blossom, 0, 1, kNone, 0});
        q.push({3, EventKind::Grow, 0, 2, kNone, 0});
        q.push({3, EventKind::Dissolve, 0, 3, kNone, 0});
        q.push({1, EventKind::Blossom, 0, 4, kNone, 0});
        q.push({11, EventKind::Grow, 0, 5, kNone, 0});
        EXPECT_EQ(q.dropped(), 1u);
        EXPECT_EQ(q.next_time(), 1);
        Event ev;
        EXPECT_FALSE(q.pop(1, EventKind::Grow, ev));
        ASSERT_TRUE(q.pop(1, EventKind::Blossom, ev));
        EXPECT_EQ(ev.a, 4);
        EXPECT_EQ(q.next_time(), 3);
        std::vector<int> order;
        while (q.pop(3, EventKind::Blossom, ev)) order.push_back(ev.a);
        EXPECT_EQ(order, (std::vector<int>{3, 2, 1}));
        EXPECT_TRUE(q.empty());
        EXPECT_EQ(q.next_time(), kInfinity);
    }
}

TEST(EventQueue, BucketAndOrderedAgree) {
    std::mt19937_64 rng(5);
    for (int round = 0; round < 50; ++round) {
        EventQueue a, b;
        const Weight horizon = 1 + static_cast<Weight>(rng() % 200);
        a.reset(QueueKind::Bucket, horizon);
        b.reset(QueueKind::Ordered, horizon);
        Weight now = 0;
        std::map<std::pair<Weight, int>, std::multiset<int>> got_a, got_b;
        std::vector<std::pair<Weight, int>> seq_a, seq_b;
        int id = 0;
        for (int step = 0; step < 400; ++step) {
            if (rng() % 3 != 0) {
                Event ev;
                ev.time = now + static_cast<Weight>(rng() % 30);
                ev.kind = static_cast<EventKind>(rng() % 3);
                ev.a = id++;
                a.push(ev);
                b.push(ev);
            } else {
                Weight ta = a.next_time(), tb = b.next_time();
                if (tb > horizon) tb = kInfinity;
                ASSERT_EQ(ta, tb);
                if (ta >= kInfinity) continue;
                now = ta;
                Event ev;
                while (a.pop(now, EventKind::Blossom, ev)) {
                    seq_a.push_back({now, static_cast<int>(ev.kind)});
                    got_a[{now, static_cast<int>(ev.kind)}].insert(ev.a);
                }
                while (b.pop(now, EventKind::Blossom, ev)) {
                    seq_b.push_back({now, static_cast<int>(ev.kind)});
                    got_b[{now, static_cast<int>(ev.kind)}].insert(ev.a);
                }
            }
        }
        EXPECT_EQ(seq_a, seq_b);
        EXPECT_EQ(got_a, got_b);
    }
}

TEST(DualClock, InnerIntervalsThenOuter) {
    test::OracleRun r = test::dual_clock_walkthrough();
    EXPECT_TRUE(r.ok()) << r.failure;
}

TEST(DualClock, IdentityAtTimeZero) {
    DualClock c;
    c.resize_nodes(3);
    c.resize_vertices(2);
    c.reset_node(2, 6, 0);
    EXPECT_EQ(c.y(0, 3, 2, 0), 3);
    EXPECT_EQ(c.z(2, 0), 6);
    c.set_outer(2, 0);
    EXPECT_EQ(c.z(2, 3), 12);
}

}  // namespace
}  // namespace mwpm
