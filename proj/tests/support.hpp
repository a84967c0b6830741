#pragma once

#include <initializer_list>
#include <tuple>
#include <vector>

#include "mwpm/duals.hpp"
#include "mwpm/generators.hpp"
#include "mwpm/graph.hpp"
#include "mwpm/state.hpp"

namespace mwpm::test {

inline Graph make_graph(int n, std::initializer_list<std::tuple<int, int, Weight>> edges) {
    Graph g(n);
    for (const auto& [u, v, w] : edges) g.add_edge(u, v, w);
    return g;
}

inline InstanceSpec small_spec(int i, const std::string& generator = "random-gnm") {
    InstanceSpec sp;
    sp.generator = generator;
    sp.n = 4 + 2 * (i % 5);
    const int cap = sp.n * (sp.n - 1) / 2;
    sp.m = 1 + static_cast<int>((static_cast<long long>(i) * 7919) % cap);
    sp.max_weight = 64;
    sp.seed = 1000 + static_cast<std::uint64_t>(i);
    sp.guarantee_perfect = true;
    return sp;
}

// Edge id of (u,v) in the state's graph.
inline int edge_between(const SolverState& s, int u, int v) {
    int e = s.graph().find_edge(u, v);
    return e;
}

// Current blossom over root nodes a0, a1, a2 where the a1-a2 edge is matched.
inline int shrink_triangle(SolverState& s, int a0, int a1, int a2, int v01, int v10, int v12, int v21, int v20,
                           int v02) {
    std::vector<CycleEdge> cyc{{edge_between(s, v01, v10), v01, v10},
                               {edge_between(s, v12, v21), v12, v21},
                               {edge_between(s, v20, v02), v20, v02}};
    return shrink_blossom(s, {a0, a1, a2}, cyc);
}

}  // namespace mwpm::test
