#include "mwpm/state.hpp"

namespace mwpm {

SolverState::SolverState(const Graph& g)
    : w(g.edge_count() + g.vertex_count(), 0),
      y(2 * g.vertex_count(), 0),
      forest(2 * g.vertex_count()),
      g_(&g),
      n0_(g.vertex_count()),
      m0_(g.edge_count()),
      eu_(m0_ + n0_),
      ev_(m0_ + n0_),
      alive_(2 * n0_, 0),
      adj_(2 * n0_),
      mate_(2 * n0_, kNone),
      dummy_scale_(n0_, 0) {
    for (int e = 0; e < m0_; ++e) {
        eu_[e] = g.edge(e).u;
        ev_[e] = g.edge(e).v;
    }
    for (int v = 0; v < n0_; ++v) {
        alive_[v] = 1;
        adj_[v] = g.incident(v);
        eu_[m0_ + v] = v;
        ev_[m0_ + v] = n0_ + v;
    }
}

int SolverState::add_dummy(int host, int scale, Weight weight) {
    MWPM_REQUIRE(host >= 0 && host < n0_, "dummy host must be an original vertex");
    MWPM_REQUIRE(!has_dummy(host), "host already has a dummy");
    int d = n0_ + host;
    int e = m0_ + host;
    alive_[d] = 1;
    dummy_scale_[host] = scale;
    mate_[d] = kNone;
    w[e] = weight;
    y[d] = 0;
    adj_[d].assign(1, e);
    adj_[host].push_back(e);
    return d;
}

void SolverState::remove_dummy(int d) {
    MWPM_REQUIRE(is_dummy(d) && alive(d), "not a live dummy");
    int host = dummy_host(d);
    int e = m0_ + host;
    if (mate_[d] == e) {
        mate_[d] = kNone;
        mate_[host] = kNone;
    }
    MWPM_REQUIRE(forest.parent(d) == kNone, "dummy inside a blossom");
    alive_[d] = 0;
    adj_[d].clear();
    auto& a = adj_[host];
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == e) {
            a[i] = a.back();
            a.pop_back();
            break;
        }
    }
    y[d] = 0;
}

int SolverState::dummy_count() const {
    int c = 0;
    for (int v = n0_; v < 2 * n0_; ++v) c += alive_[v];
    return c;
}

std::vector<int> SolverState::dummies() const {
    std::vector<int> out;
    for (int v = n0_; v < 2 * n0_; ++v)
        if (alive_[v]) out.push_back(v);
    return out;
}

void SolverState::set_mate(int e) {
    MWPM_REQUIRE(edge_alive(e), "matching a dead edge");
    mate_[eu_[e]] = e;
    mate_[ev_[e]] = e;
}

void SolverState::clear_matching() {
    for (int& e : mate_) e = kNone;
}

std::vector<int> SolverState::free_vertices() const {
    std::vector<int> out;
    for (int v = 0; v < 2 * n0_; ++v)
        if (alive_[v] && mate_[v] == kNone) out.push_back(v);
    return out;
}

std::vector<int> SolverState::matched_edges() const {
    std::vector<int> out;
    for (int v = 0; v < 2 * n0_; ++v) {
        int e = mate_[v];
        if (alive_[v] && e != kNone && eu_[e] == v) out.push_back(e);
    }
    return out;
}

bool SolverState::perfect() const {
    for (int v = 0; v < 2 * n0_; ++v)
        if (alive_[v] && mate_[v] == kNone) return false;
    return true;
}

Matching SolverState::original_matching() const {
    Matching m(n0_);
    for (int v = 0; v < n0_; ++v) {
        int e = mate_[v];
        if (e != kNone && e < m0_ && eu_[e] == v) m.match(*g_, e);
    }
    return m;
}

}  // namespace mwpm
