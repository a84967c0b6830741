#pragma once

#include <vector>

#include "mwpm/types.hpp"

namespace mwpm {

// Union-find over the vertices of a growing rooted forest T. Sets may only be
// merged along edges of T, and find returns the most ancestral vertex of the
// set in T.
class ForestUnionFind {
public:
    void init(int k);
    int size() const { return static_cast<int>(dsu_.size()); }

    void add_root(int r);
    // Attaches child (not yet in T) below parent (already in T).
    void add_edge(int child, int parent);
    // Merges the sets of u and v; (u,v) must be an edge of T.
    void unite(int u, int v);
    int find(int u);

    bool in_tree(int u) const { return tparent_[u] != kAbsent; }
    int tree_parent(int u) const { return tparent_[u] == kAbsent ? kNone : tparent_[u]; }

private:
    static constexpr int kAbsent = -2;
    int root(int u);

    std::vector<int> dsu_;
    std::vector<int> rank_;
    std::vector<int> top_;
    std::vector<int> tparent_;
};

}  // namespace mwpm
