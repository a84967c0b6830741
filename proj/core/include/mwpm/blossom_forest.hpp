#pragma once

#include <cstdint>
#include <vector>

#include "mwpm/types.hpp"

namespace mwpm {

enum class Origin : std::uint8_t { Current, Inherited };

// Cycle edge e_i of a blossom: joins child i (endpoint lo) to child i+1 (endpoint hi).
struct CycleEdge {
    int edge;
    int lo;
    int hi;
};

// Laminar forest over vertex leaves [0, vertex_capacity) and blossom nodes
// with ids starting at vertex_capacity. Holds both current and inherited
// blossoms; inherited nodes never sit below current ones.
class BlossomForest {
public:
    explicit BlossomForest(int vertex_capacity = 0);

    int vertex_capacity() const { return nv_; }
    int capacity() const { return nv_ + static_cast<int>(nodes_.size()); }
    bool is_vertex(int id) const { return id < nv_; }
    bool is_blossom(int id) const { return id >= nv_ && id < capacity() && nodes_[id - nv_].alive; }

    int parent(int id) const { return id < nv_ ? vparent_[id] : nodes_[id - nv_].parent; }
    const std::vector<int>& children(int b) const { return node(b).children; }
    const std::vector<CycleEdge>& cycle(int b) const { return node(b).cycle; }
    int base(int id) const { return id < nv_ ? id : nodes_[id - nv_].base; }
    Weight z(int id) const { return id < nv_ ? 0 : nodes_[id - nv_].z; }
    int size(int id) const { return id < nv_ ? 1 : nodes_[id - nv_].size; }
    Origin origin(int b) const { return node(b).origin; }
    bool is_current(int id) const { return is_blossom(id) && nodes_[id - nv_].origin == Origin::Current; }
    bool is_inherited(int id) const { return is_blossom(id) && nodes_[id - nv_].origin == Origin::Inherited; }
    std::uint32_t serial(int b) const { return nodes_[b - nv_].serial; }

    void set_z(int b, Weight z);
    void set_base(int b, int v) { node(b).base = v; }

    // New blossom over sibling nodes whose common parent is absent or inherited.
    // Base is taken from children[0].
    int create(std::vector<int> children, std::vector<CycleEdge> cycle, Origin origin, Weight z = 0);
    // Removes b; its children take b's place under b's parent, which then
    // keeps no cycle.
    void dissolve(int b);
    // Rotates the child sequence so that position j becomes position 0.
    void rotate_children(int b, int j);
    // All current blossoms become inherited.
    void mark_all_inherited();

    int child_containing(int b, int v) const;
    bool contains(int b, int v) const;
    // Topmost current-origin ancestor of v, or v itself.
    int current_root(int v) const;
    // Topmost ancestor of v.
    int top(int v) const;
    void leaves(int id, std::vector<int>& out) const;
    std::vector<int> leaves(int id) const;
    std::vector<int> blossoms() const;
    std::vector<int> root_blossoms() const;

private:
    struct Node {
        std::vector<int> children;
        std::vector<CycleEdge> cycle;
        int parent = kNone;
        int base = kNone;
        int size = 0;
        Weight z = 0;
        Origin origin = Origin::Current;
        bool alive = false;
        std::uint32_t serial = 0;
    };

    Node& node(int b);
    const Node& node(int b) const;
    void set_parent(int id, int p, int pos);
    void detach(int id);

    int nv_;
    std::vector<int> vparent_;
    std::vector<int> vpos_;
    std::vector<int> npos_;
    std::vector<Node> nodes_;
    std::vector<int> free_;
};

}  // namespace mwpm
