#include "mwpm/blossom_forest.hpp"

#include <algorithm>

namespace mwpm {

BlossomForest::BlossomForest(int vertex_capacity)
    : nv_(vertex_capacity), vparent_(vertex_capacity, kNone), vpos_(vertex_capacity, kNone) {}

BlossomForest::Node& BlossomForest::node(int b) {
    MWPM_REQUIRE(is_blossom(b), "not a live blossom node");
    return nodes_[b - nv_];
}

const BlossomForest::Node& BlossomForest::node(int b) const {
    MWPM_REQUIRE(is_blossom(b), "not a live blossom node");
    return nodes_[b - nv_];
}

void BlossomForest::set_z(int b, Weight z) {
    MWPM_REQUIRE(z >= 0, "z must be nonnegative");
    node(b).z = z;
}

void BlossomForest::set_parent(int id, int p, int pos) {
    if (id < nv_) {
        vparent_[id] = p;
        vpos_[id] = pos;
    } else {
        nodes_[id - nv_].parent = p;
        npos_[id - nv_] = pos;
    }
}

void BlossomForest::detach(int id) {
    int p = parent(id);
    if (p == kNone) return;
    Node& pn = node(p);
    MWPM_REQUIRE(pn.origin == Origin::Inherited, "cannot detach a child of a current blossom");
    int i = id < nv_ ? vpos_[id] : npos_[id - nv_];
    int last = pn.children.back();
    pn.children[i] = last;
    if (last < nv_)
        vpos_[last] = i;
    else
        npos_[last - nv_] = i;
    pn.children.pop_back();
    set_parent(id, kNone, kNone);
}

int BlossomForest::create(std::vector<int> children, std::vector<CycleEdge> cycle, Origin origin, Weight z) {
    MWPM_REQUIRE(children.size() >= 3 && children.size() % 2 == 1, "blossom needs an odd number >= 3 of children");
    MWPM_REQUIRE(cycle.size() == children.size(), "cycle edge count must equal child count");
    MWPM_REQUIRE(z >= 0, "z must be nonnegative");
    int p = parent(children[0]);
    for (int c : children) {
        MWPM_REQUIRE(c < nv_ || is_blossom(c), "child is not a live node");
        MWPM_REQUIRE(parent(c) == p, "children must be siblings");
    }
    for (int c : children) detach(c);

    int id;
    if (!free_.empty()) {
        id = free_.back();
        free_.pop_back();
    } else {
        id = capacity();
        nodes_.emplace_back();
        npos_.push_back(kNone);
    }
    Node& nd = nodes_[id - nv_];
    nd.alive = true;
    nd.serial += 1;
    nd.origin = origin;
    nd.z = z;
    nd.base = base(children[0]);
    nd.size = 0;
    for (int c : children) nd.size += size(c);
    nd.children = std::move(children);
    nd.cycle = std::move(cycle);
    nd.parent = kNone;
    for (std::size_t i = 0; i < nd.children.size(); ++i) set_parent(nd.children[i], id, static_cast<int>(i));
    if (p != kNone) {
        Node& pn = node(p);
        set_parent(id, p, static_cast<int>(pn.children.size()));
        pn.children.push_back(id);
    }
    return id;
}

void BlossomForest::dissolve(int b) {
    Node& nd = node(b);
    int p = nd.parent;
    detach(b);
    std::vector<int> kids = std::move(nd.children);
    nd.children.clear();
    nd.cycle.clear();
    nd.alive = false;
    nd.z = 0;
    for (int c : kids) {
        if (p == kNone) {
            set_parent(c, kNone, kNone);
        } else {
            Node& pn = node(p);
            pn.cycle.clear();
            set_parent(c, p, static_cast<int>(pn.children.size()));
            pn.children.push_back(c);
        }
    }
    free_.push_back(b);
}

void BlossomForest::rotate_children(int b, int j) {
    Node& nd = node(b);
    int l = static_cast<int>(nd.children.size());
    MWPM_REQUIRE(j >= 0 && j < l, "rotation index out of range");
    if (j == 0) return;
    std::rotate(nd.children.begin(), nd.children.begin() + j, nd.children.end());
    std::rotate(nd.cycle.begin(), nd.cycle.begin() + j, nd.cycle.end());
    for (int i = 0; i < l; ++i) set_parent(nd.children[i], b, i);
    nd.base = base(nd.children[0]);
}

void BlossomForest::mark_all_inherited() {
    for (Node& nd : nodes_)
        if (nd.alive) nd.origin = Origin::Inherited;
}

int BlossomForest::child_containing(int b, int v) const {
    int x = v;
    while (x != kNone) {
        int p = parent(x);
        if (p == b) return x;
        x = p;
    }
    return kNone;
}

bool BlossomForest::contains(int b, int v) const {
    if (b == v) return true;
    return child_containing(b, v) != kNone;
}

int BlossomForest::current_root(int v) const {
    int x = v;
    for (int p = parent(x); p != kNone && nodes_[p - nv_].origin == Origin::Current; p = parent(x)) x = p;
    return x;
}

int BlossomForest::top(int v) const {
    int x = v;
    for (int p = parent(x); p != kNone; p = parent(x)) x = p;
    return x;
}

void BlossomForest::leaves(int id, std::vector<int>& out) const {
    if (id < nv_) {
        out.push_back(id);
        return;
    }
    std::vector<int> stack{id};
    while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        if (x < nv_) {
            out.push_back(x);
            continue;
        }
        const auto& ch = nodes_[x - nv_].children;
        for (auto it = ch.rbegin(); it != ch.rend(); ++it) stack.push_back(*it);
    }
}

std::vector<int> BlossomForest::leaves(int id) const {
    std::vector<int> out;
    leaves(id, out);
    return out;
}

std::vector<int> BlossomForest::blossoms() const {
    std::vector<int> out;
    for (std::size_t i = 0; i < nodes_.size(); ++i)
        if (nodes_[i].alive) out.push_back(nv_ + static_cast<int>(i));
    return out;
}

std::vector<int> BlossomForest::root_blossoms() const {
    std::vector<int> out;
    for (std::size_t i = 0; i < nodes_.size(); ++i)
        if (nodes_[i].alive && nodes_[i].parent == kNone) out.push_back(nv_ + static_cast<int>(i));
    return out;
}

}  // namespace mwpm
