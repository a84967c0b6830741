#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "mwpm/types.hpp"

namespace mwpm {

struct Edge {
    int u;
    int v;
    Weight w;
};

// Undirected graph with nonnegative integer weights. Immutable after load.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);

    // Adds edge (u,v). A parallel edge collapses into the existing one,
    // which keeps the larger weight. Returns the edge id.
    int add_edge(int u, int v, Weight w);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const Edge& edge(int e) const { return edges_[e]; }
    const std::vector<Edge>& edges() const { return edges_; }
    const std::vector<int>& incident(int v) const { return adj_[v]; }
    int other(int e, int v) const { return edges_[e].u == v ? edges_[e].v : edges_[e].u; }
    int find_edge(int u, int v) const;
    Weight max_weight() const;

    friend bool operator==(const Graph& a, const Graph& b);

private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> adj_;
};

struct LoadOptions {
    bool allow_odd = false;
};

Graph load_dimacs(std::istream& in, const LoadOptions& opts = {});
Graph load_dimacs_file(const std::string& path, const LoadOptions& opts = {});
Graph parse_dimacs(const std::string& text, const LoadOptions& opts = {});
void write_dimacs(std::ostream& out, const Graph& g, const std::string& comment = {});

// Matching stored as vertex -> matched edge id (kNone if free).
class Matching {
public:
    Matching() = default;
    explicit Matching(int n) : mate_(n, kNone) {}

    int size() const { return static_cast<int>(mate_.size()); }
    int edge_of(int v) const { return mate_[v]; }
    bool is_free(int v) const { return mate_[v] == kNone; }
    void match(const Graph& g, int e);
    void unmatch(const Graph& g, int e);
    std::vector<int> edges() const;
    int cardinality() const;
    bool is_perfect() const;
    // Vertex-disjointness and consistency with g.
    bool valid(const Graph& g) const;

private:
    std::vector<int> mate_;
};

Weight matching_weight(const Graph& g, const Matching& m);
Weight matching_weight(const Graph& g, const Matching& m, const std::vector<Weight>& w);

// Bit-scaling schedule over the extended weights (n/2+1)*w.
struct WeightScales {
    Weight multiplier = 1;
    int scale_count = 1;
    std::vector<Weight> wbar;

    // High-order prefix of wbar(e) visible at scale i (1-based); prefix(e,0)=0.
    Weight prefix(int e, int i) const;
    // prefix(e,i) - 2*prefix(e,i-1). Lies in {0,1} except possibly at i=1,
    // where the leading digit absorbs any overflow of scale_count bits.
    Weight digit(int e, int i) const;
};

WeightScales init_scales(const Graph& g);

}  // namespace mwpm
