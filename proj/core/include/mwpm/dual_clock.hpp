#pragma once

#include <cstdint>
#include <vector>

#include "mwpm/types.hpp"

namespace mwpm {

// Timestamp bookkeeping that recovers y and z at any time without touching
// every vertex per dual adjustment.
//
// A non-outer vertex in root node B has y = y0 + shift(B), where shift(B) is
// the total time B or its ancestors spent inner. An outer vertex freezes its
// shift when it turns outer and then loses one per tick. z of a root node
// moves by 2 per tick in the direction of its label.
class DualClock {
public:
    void resize_nodes(int count);
    void resize_vertices(int count);

    // Node becomes a root with value z0 and no inner history.
    void reset_node(int node, Weight z0, Weight now);
    // Child of a dissolved node becomes a root, inheriting its inner time.
    void inherit(int child, int parent, Weight z0, Weight now);
    void set_inner(int node, Weight now);
    void set_outer(int node, Weight now);
    // Node stops being a root of the search structure (absorbed into a new blossom).
    void freeze_z(int node, Weight now);

    Weight shift(int node, Weight now) const;
    Weight z(int node, Weight now) const;
    bool inner(int node) const { return inner_[node] != 0; }

    void reset_vertex(int v);
    void freeze_outer(int v, int node, Weight now);
    bool outer(int v) const { return outer_[v] != 0; }
    // node is ignored for outer vertices.
    Weight y(int v, Weight y0, int node, Weight now) const;

private:
    void set_zsign(int node, int sign, Weight now);

    std::vector<Weight> delta_, tin_, zbase_, zt_;
    std::vector<std::int8_t> zsign_;
    std::vector<std::uint8_t> inner_;
    std::vector<Weight> dout_, tout_;
    std::vector<std::uint8_t> outer_;
};

}  // namespace mwpm
