#include "mwpm/eligibility.hpp"

#include "mwpm/duals.hpp"

namespace mwpm {

const char* criterion_name(Criterion c) {
    switch (c) {
        case Criterion::Tight: return "tight";
        case Criterion::Relaxed: return "relaxed";
        case Criterion::Near: return "near";
    }
    return "?";
}

Weight slack_star(Weight s, Criterion c, bool matched) {
    switch (c) {
        case Criterion::Tight:
            MWPM_CHECK(s >= 0 && (!matched || s == 0),
                       "slack " + std::to_string(s) + " breaks domination/tightness under the tight criterion");
            return s;
        case Criterion::Relaxed:
            if (matched) {
                MWPM_CHECK(s <= 0, "matched edge with positive slack " + std::to_string(s));
                return -s;
            }
            MWPM_CHECK(s >= -2, "unmatched edge with slack " + std::to_string(s) + " below -2");
            return s + 2;
        case Criterion::Near:
            MWPM_CHECK(s >= -2, "edge with slack " + std::to_string(s) + " below -2");
            return s >= 0 ? s : s + 2;
    }
    return s;
}

bool eligible_by_slack(Weight s, Criterion c, bool matched) {
    switch (c) {
        case Criterion::Tight: return s == 0;
        case Criterion::Relaxed: return matched ? s == 0 : s == -2;
        case Criterion::Near: return s == 0 || s == -2;
    }
    return false;
}

namespace {

bool internal_cycle_edge(const SolverState& s, int e) {
    const BlossomForest& f = s.forest;
    int u = s.endpoint_u(e), v = s.endpoint_v(e);
    std::vector<int> au;
    for (int p = f.parent(u); p != kNone && f.is_current(p); p = f.parent(p)) au.push_back(p);
    for (int p = f.parent(v); p != kNone && f.is_current(p); p = f.parent(p)) {
        for (int a : au) {
            if (a == p) {
                for (const CycleEdge& ce : f.cycle(p))
                    if (ce.edge == e) return true;
                return false;
            }
        }
    }
    return false;
}

}  // namespace

bool is_eligible(const SolverState& s, int e, Criterion c) {
    if (c == Criterion::Relaxed && internal_cycle_edge(s, e)) return true;
    return eligible_by_slack(slack(s, e), c, s.is_matched_edge(e));
}

EligibleView build_eligible_view(const SolverState& s, Criterion c, const std::vector<int>* active) {
    EligibleView view;
    const int nv = s.vertex_capacity();
    view.node_of.assign(nv, kNone);
    view.index_of.assign(s.forest.capacity(), kNone);
    std::vector<char> act(nv, 0);
    if (active) {
        for (int v : *active) act[v] = 1;
    } else {
        for (int v = 0; v < nv; ++v) act[v] = s.alive(v) ? 1 : 0;
    }
    for (int v = 0; v < nv; ++v) {
        if (!act[v]) continue;
        int r = s.forest.current_root(v);
        view.node_of[v] = r;
        if (view.index_of[r] == kNone) {
            view.index_of[r] = static_cast<int>(view.nodes.size());
            view.nodes.push_back(r);
        }
    }
    view.adj.resize(view.nodes.size());
    for (int e = 0; e < s.edge_capacity(); ++e) {
        if (!s.edge_alive(e)) continue;
        int u = s.endpoint_u(e), v = s.endpoint_v(e);
        if (!act[u] || !act[v]) continue;
        int a = view.index_of[view.node_of[u]], b = view.index_of[view.node_of[v]];
        if (a == b) continue;
        if (!eligible_by_slack(slack(s, e), c, s.is_matched_edge(e))) continue;
        view.adj[a].emplace_back(e, b);
        view.adj[b].emplace_back(e, a);
    }
    return view;
}

}  // namespace mwpm
