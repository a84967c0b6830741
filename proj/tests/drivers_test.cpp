#include <gtest/gtest.h>

#include <functional>

#include "mwpm/hybrid.hpp"
#include "mwpm/liquidationist.hpp"
#include "mwpm/scaling.hpp"
#include "mwpm/verification.hpp"
#include "support.hpp"

namespace mwpm {
namespace {

using test::make_graph;
using test::small_spec;

using Driver = std::function<SolveResult(const Graph&, const DriverOptions&)>;

struct NamedDriver {
    const char* name;
    Driver run;
};

const NamedDriver kDrivers[] = {{"liquidationist", run_liquidationist}, {"hybrid", run_hybrid}};

DriverOptions checked() {
    DriverOptions o;
    o.check_invariants = true;
    o.engine_check = true;
    o.exhaustive_search_one = true;
    return o;
}

TEST(Tau, Defaults) {
    EXPECT_EQ(default_tau_liquidationist(1), 1);
    EXPECT_EQ(default_tau_liquidationist(16), 4);
    EXPECT_EQ(default_tau_liquidationist(17), 5);
    for (int n : {2, 16, 100, 1000, 100000}) {
        int t = default_tau_hybrid(n);
        EXPECT_GE(t, default_tau_liquidationist(n)) << n;
        EXPECT_GE(static_cast<double>(t) * t * t, static_cast<double>(n) * n * 0.999) << n;
    }
}

TEST(Drivers, SingleEdge) {
    Graph g = make_graph(2, {{0, 1, 5}});
    for (const auto& d : kDrivers) {
        SolveResult r = d.run(g, checked());
        EXPECT_EQ(r.weight, 5) << d.name;
        EXPECT_TRUE(r.matching.is_perfect()) << d.name;
        EXPECT_EQ(r.report.verified, "passed") << d.name;
    }
}

TEST(Drivers, FourCycle) {
    Graph g = make_graph(4, {{0, 1, 1}, {1, 2, 3}, {2, 3, 1}, {3, 0, 1}});
    for (const auto& d : kDrivers) {
        SolveResult r = d.run(g, checked());
        EXPECT_EQ(r.weight, 4) << d.name;
        EXPECT_EQ(matching_weight(g, r.matching), 4) << d.name;
    }
}

TEST(Drivers, TriangleWithPendant) {
    Graph g = make_graph(4, {{0, 1, 2}, {1, 2, 2}, {2, 0, 2}, {2, 3, 0}});
    for (const auto& d : kDrivers) {
        SolveResult r = d.run(g, checked());
        EXPECT_EQ(r.weight, 2) << d.name;
        EXPECT_EQ(r.matching.edge_of(3), 3) << d.name;
    }
}

TEST(Drivers, ZeroWeightsAndEmptyGraph) {
    for (const auto& d : kDrivers) {
        EXPECT_EQ(d.run(make_graph(4, {{0, 1, 0}, {2, 3, 0}}), checked()).weight, 0) << d.name;
        EXPECT_EQ(d.run(Graph(0), checked()).weight, 0) << d.name;
    }
}

TEST(Drivers, InfeasibleThrows) {
    Graph star = make_graph(4, {{0, 1, 1}, {0, 2, 1}, {0, 3, 1}});
    Graph odd = make_graph(3, {{0, 1, 1}, {1, 2, 1}});
    for (const auto& d : kDrivers) {
        EXPECT_THROW(d.run(star, checked()), Infeasible) << d.name;
        EXPECT_THROW(d.run(odd, {}), Infeasible) << d.name;
    }
}

TEST(Drivers, CertificateIsOptimal) {
    Graph g = generate(small_spec(7));
    for (const auto& d : kDrivers) {
        SolveResult r = d.run(g, {});
        EXPECT_EQ(r.certificate.view, "2wbar");
        EXPECT_TRUE(check_invariants(r.certificate).ok()) << d.name;
        GapReport gap = check_optimality_gap(r.certificate, &g);
        EXPECT_TRUE(gap.ok) << d.name << ": " << gap.detail;
    }
}

TEST(Drivers, ScaleCountFollowsWeights) {
    Graph g = make_graph(2, {{0, 1, 1000}});
    WeightScales sc = init_scales(g);
    EXPECT_EQ(sc.multiplier, 2);
    SolveResult r = run_liquidationist(g, checked());
    EXPECT_EQ(r.report.scales, sc.scale_count);
    EXPECT_EQ(static_cast<int>(r.report.per_scale.size()), sc.scale_count);
    for (const ScaleStats& st : r.report.per_scale) EXPECT_TRUE(st.certified);
}

void agree_with_oracle(const char* gen, int count) {
    for (int i = 0; i < count; ++i) {
        Graph g = generate(small_spec(i, gen));
        OracleResult o = brute_force_mwpm(g);
        for (const auto& d : kDrivers) {
            if (!o.feasible) {
                EXPECT_THROW(d.run(g, checked()), Infeasible) << d.name << " " << i;
                continue;
            }
            SolveResult r = d.run(g, checked());
            EXPECT_EQ(r.weight, o.weight) << d.name << " " << gen << " " << i;
            EXPECT_EQ(r.report.verified, "passed");
            EXPECT_GT(r.report.audits.scale_certificates, 0);
            EXPECT_LE(r.report.audits.max_large_z_ratio, 1.0);
            EXPECT_LE(r.report.audits.max_free_ratio, 1.0);
            EXPECT_LE(r.report.audits.max_shell_ratio, 1.0);
        }
    }
}

TEST(Drivers, AgreeWithOracleRandom) { agree_with_oracle("random-gnm", 120); }
TEST(Drivers, AgreeWithOracleRegular) { agree_with_oracle("random-regular-ish", 60); }
TEST(Drivers, AgreeWithOracleNested) { agree_with_oracle("nested-blossom-adversarial", 60); }

TEST(Drivers, HybridDismantlesInheritedBlossoms) {
    std::int64_t gabow = 0;
    for (int i = 0; i < 40; ++i) {
        InstanceSpec sp;
        sp.generator = "nested-blossom-adversarial";
        sp.n = 28 + 2 * (i % 3);
        sp.m = 3 * sp.n;
        sp.max_weight = 200;
        sp.seed = 50 + i;
        sp.guarantee_perfect = true;
        Graph g = generate(sp);
        SolveResult h = run_hybrid(g, checked());
        SolveResult l = run_liquidationist(g, {});
        EXPECT_EQ(h.weight, l.weight) << i;
        for (const ScaleStats& st : h.report.per_scale) gabow += st.gabow_calls;
        EXPECT_EQ(h.report.verified, "passed");
    }
    EXPECT_GT(gabow, 0);
}

TEST(Drivers, ExplicitTau) {
    Graph g = generate(small_spec(3));
    OracleResult o = brute_force_mwpm(g);
    ASSERT_TRUE(o.feasible);
    for (int tau : {1, 2, 3, 100}) {
        DriverOptions opts = checked();
        opts.tau = tau;
        EXPECT_EQ(run_liquidationist(g, opts).weight, o.weight) << tau;
        EXPECT_EQ(run_hybrid(g, opts).weight, o.weight) << tau;
        EXPECT_EQ(run_hybrid(g, opts).report.tau, tau);
    }
}

}  // namespace
}  // namespace mwpm
