#include <gtest/gtest.h>

#include <set>
#include <sstream>

#include "mwpm/generators.hpp"
#include "mwpm/verification.hpp"

namespace mwpm {
namespace {

std::string dump(const Graph& g) {
    std::ostringstream os;
    write_dimacs(os, g);
    return os.str();
}

TEST(Generators, Deterministic) {
    for (const std::string& name : generator_names()) {
        InstanceSpec sp{name, 40, 120, 1000, 7, true};
        EXPECT_EQ(dump(generate(sp)), dump(generate(sp))) << name;
        InstanceSpec other = sp;
        other.seed = 8;
        EXPECT_NE(dump(generate(sp)), dump(generate(other))) << name;
    }
}

TEST(Generators, SimpleGraphWithinBounds) {
    for (const std::string& name : generator_names())
        for (int n : {2, 10, 31, 64}) {
            InstanceSpec sp{name, n, 3 * n, 50, 3, false};
            Graph g = generate(sp);
            EXPECT_EQ(g.vertex_count(), n);
            EXPECT_LE(g.edge_count(), std::max(sp.m, n));
            std::set<std::pair<int, int>> seen;
            for (int e = 0; e < g.edge_count(); ++e) {
                const Edge& ed = g.edge(e);
                EXPECT_NE(ed.u, ed.v);
                EXPECT_GE(ed.w, 0);
                EXPECT_LE(ed.w, 50);
                EXPECT_TRUE(seen.insert({std::min(ed.u, ed.v), std::max(ed.u, ed.v)}).second) << name;
            }
        }
}

TEST(Generators, RandomGnmHitsEdgeCount) {
    InstanceSpec sp{"random-gnm", 100, 400, 10, 1, false};
    EXPECT_EQ(generate(sp).edge_count(), 400);
    sp.m = 100000;
    EXPECT_EQ(generate(sp).edge_count(), 100 * 99 / 2);
}

TEST(Generators, PerfectGuarantee) {
    for (const std::string& name : generator_names())
        for (int seed = 1; seed <= 20; ++seed) {
            InstanceSpec sp{name, 12, 14, 30, static_cast<std::uint64_t>(seed), true};
            EXPECT_TRUE(brute_force_mwpm(generate(sp)).feasible) << name << " " << seed;
        }
}

TEST(Generators, RejectsBadSpecs) {
    EXPECT_THROW(generate({"no-such", 4, 4, 1, 1, false}), ContractViolation);
    EXPECT_THROW(generate({"random-gnm", 5, 4, 1, 1, true}), ContractViolation);
    EXPECT_THROW(generate({"random-gnm", -1, 4, 1, 1, false}), ContractViolation);
}

}  // namespace
}  // namespace mwpm
