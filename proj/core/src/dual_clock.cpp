#include "mwpm/dual_clock.hpp"

namespace mwpm {

void DualClock::resize_nodes(int count) {
    if (static_cast<int>(delta_.size()) >= count) return;
    delta_.resize(count, 0);
    tin_.resize(count, 0);
    zbase_.resize(count, 0);
    zt_.resize(count, 0);
    zsign_.resize(count, 0);
    inner_.resize(count, 0);
}

void DualClock::resize_vertices(int count) {
    dout_.assign(count, 0);
    tout_.assign(count, 0);
    outer_.assign(count, 0);
}

void DualClock::reset_node(int node, Weight z0, Weight now) {
    delta_[node] = 0;
    tin_[node] = 0;
    inner_[node] = 0;
    zbase_[node] = z0;
    zt_[node] = now;
    zsign_[node] = 0;
}

void DualClock::inherit(int child, int parent, Weight z0, Weight now) {
    delta_[child] = shift(parent, now);
    tin_[child] = 0;
    inner_[child] = 0;
    zbase_[child] = z0;
    zt_[child] = now;
    zsign_[child] = 0;
}

void DualClock::set_zsign(int node, int sign, Weight now) {
    zbase_[node] = z(node, now);
    zt_[node] = now;
    zsign_[node] = static_cast<std::int8_t>(sign);
}

void DualClock::set_inner(int node, Weight now) {
    MWPM_REQUIRE(!inner_[node], "node already inner");
    inner_[node] = 1;
    tin_[node] = now;
    set_zsign(node, -1, now);
}

void DualClock::set_outer(int node, Weight now) {
    if (inner_[node]) {
        delta_[node] = shift(node, now);
        inner_[node] = 0;
    }
    set_zsign(node, +1, now);
}

void DualClock::freeze_z(int node, Weight now) {
    if (inner_[node]) {
        delta_[node] = shift(node, now);
        inner_[node] = 0;
    }
    set_zsign(node, 0, now);
}

Weight DualClock::shift(int node, Weight now) const {
    return delta_[node] + (inner_[node] ? now - tin_[node] : 0);
}

Weight DualClock::z(int node, Weight now) const { return zbase_[node] + 2 * zsign_[node] * (now - zt_[node]); }

void DualClock::reset_vertex(int v) {
    dout_[v] = 0;
    tout_[v] = 0;
    outer_[v] = 0;
}

void DualClock::freeze_outer(int v, int node, Weight now) {
    MWPM_REQUIRE(!outer_[v], "vertex already outer");
    dout_[v] = shift(node, now);
    tout_[v] = now;
    outer_[v] = 1;
}

Weight DualClock::y(int v, Weight y0, int node, Weight now) const {
    if (outer_[v]) return y0 + dout_[v] - (now - tout_[v]);
    return y0 + shift(node, now);
}

}  // namespace mwpm
