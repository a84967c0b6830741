#include "mwpm/union_find.hpp"

#include <utility>

namespace mwpm {

void ForestUnionFind::init(int k) {
    dsu_.resize(k);
    rank_.assign(k, 0);
    top_.resize(k);
    tparent_.assign(k, kAbsent);
    for (int i = 0; i < k; ++i) {
        dsu_[i] = i;
        top_[i] = i;
    }
}

void ForestUnionFind::add_root(int r) {
    MWPM_REQUIRE(!in_tree(r), "add_root: vertex already in T");
    tparent_[r] = kNone;
}

void ForestUnionFind::add_edge(int child, int parent) {
    MWPM_REQUIRE(in_tree(parent), "add_edge: parent not in T");
    MWPM_REQUIRE(!in_tree(child), "add_edge: child already in T");
    tparent_[child] = parent;
}

int ForestUnionFind::root(int u) {
    int r = u;
    while (dsu_[r] != r) r = dsu_[r];
    while (dsu_[u] != r) {
        int nx = dsu_[u];
        dsu_[u] = r;
        u = nx;
    }
    return r;
}

void ForestUnionFind::unite(int u, int v) {
    int child, parent;
    if (in_tree(u) && tparent_[u] == v) {
        child = u;
        parent = v;
    } else if (in_tree(v) && tparent_[v] == u) {
        child = v;
        parent = u;
    } else {
        throw ContractViolation("unite: (u,v) is not an edge of T");
    }
    int rc = root(child), rp = root(parent);
    if (rc == rp) return;
    int t = top_[rp];
    if (rank_[rc] < rank_[rp]) std::swap(rc, rp);
    dsu_[rp] = rc;
    if (rank_[rc] == rank_[rp]) ++rank_[rc];
    top_[rc] = t;
}

int ForestUnionFind::find(int u) { return top_[root(u)]; }

}  // namespace mwpm
