#pragma once

#include <vector>

#include "mwpm/blossom_forest.hpp"
#include "mwpm/graph.hpp"

namespace mwpm {

// Mutable solver state over a fixed input graph: current weights, matching,
// duals, blossom forest and dummy pendants. Vertex slot n+v and edge slot m+v
// are reserved for the dummy attached to host v.
class SolverState {
public:
    explicit SolverState(const Graph& g);

    const Graph& graph() const { return *g_; }
    int n() const { return n0_; }
    int m() const { return m0_; }
    int vertex_capacity() const { return 2 * n0_; }
    int edge_capacity() const { return m0_ + n0_; }

    bool alive(int v) const { return alive_[v] != 0; }
    bool edge_alive(int e) const { return e < m0_ || alive_[n0_ + (e - m0_)] != 0; }
    bool is_dummy(int v) const { return v >= n0_; }
    int endpoint_u(int e) const { return eu_[e]; }
    int endpoint_v(int e) const { return ev_[e]; }
    int other(int e, int v) const { return eu_[e] == v ? ev_[e] : eu_[e]; }
    const std::vector<int>& incident(int v) const { return adj_[v]; }

    int dummy_vertex(int host) const { return n0_ + host; }
    int dummy_edge(int host) const { return m0_ + host; }
    int dummy_host(int d) const { return d - n0_; }
    int dummy_scale(int d) const { return dummy_scale_[d - n0_]; }
    bool has_dummy(int host) const { return alive_[n0_ + host] != 0; }
    // Attaches a pendant to host with edge weight w; the pendant starts free.
    int add_dummy(int host, int scale, Weight w);
    void remove_dummy(int d);
    int dummy_count() const;
    std::vector<int> dummies() const;

    int mate_edge(int v) const { return mate_[v]; }
    int mate(int v) const { return mate_[v] == kNone ? kNone : other(mate_[v], v); }
    bool is_free(int v) const { return alive_[v] && mate_[v] == kNone; }
    bool is_matched_edge(int e) const { return mate_[eu_[e]] == e; }
    void set_mate(int e);
    void clear_mate(int v) { mate_[v] = kNone; }
    void clear_matching();
    std::vector<int> free_vertices() const;
    std::vector<int> matched_edges() const;
    bool perfect() const;
    Matching original_matching() const;

    std::vector<Weight> w;
    std::vector<Weight> y;
    BlossomForest forest;

private:
    const Graph* g_;
    int n0_;
    int m0_;
    std::vector<int> eu_, ev_;
    std::vector<char> alive_;
    std::vector<std::vector<int>> adj_;
    std::vector<int> mate_;
    std::vector<int> dummy_scale_;
};

}  // namespace mwpm
