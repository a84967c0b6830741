#include "mwpm/duals.hpp"

#include <algorithm>

namespace mwpm {

namespace {

void ancestors(const BlossomForest& f, int v, std::vector<int>& out) {
    out.clear();
    for (int p = f.parent(v); p != kNone; p = f.parent(p)) out.push_back(p);
}

int child_index(const BlossomForest& f, int b, int v) {
    int c = f.child_containing(b, v);
    MWPM_REQUIRE(c != kNone, "vertex is not inside the blossom");
    const auto& ch = f.children(b);
    for (std::size_t i = 0; i < ch.size(); ++i)
        if (ch[i] == c) return static_cast<int>(i);
    MWPM_REQUIRE(false, "corrupt child list");
    return kNone;
}

int endpoint_in(const SolverState& s, int node, int e) {
    int a = s.endpoint_u(e);
    if (s.forest.contains(node, a)) return a;
    int b = s.endpoint_v(e);
    MWPM_REQUIRE(s.forest.contains(node, b), "edge does not touch node");
    return b;
}

}  // namespace

Weight yz_edge(const SolverState& s, int e) {
    int u = s.endpoint_u(e), v = s.endpoint_v(e);
    Weight r = s.y[u] + s.y[v];
    thread_local std::vector<int> au, av;
    ancestors(s.forest, u, au);
    ancestors(s.forest, v, av);
    auto iu = au.rbegin();
    auto iv = av.rbegin();
    while (iu != au.rend() && iv != av.rend() && *iu == *iv) {
        r += s.forest.z(*iu);
        ++iu;
        ++iv;
    }
    return r;
}

Weight slack(const SolverState& s, int e) { return yz_edge(s, e) - s.w[e]; }

Weight dual_objective(const SolverState& s) {
    Weight r = 0;
    for (int v = 0; v < s.vertex_capacity(); ++v)
        if (s.alive(v)) r += s.y[v];
    for (int b : s.forest.blossoms()) r += s.forest.z(b) * (s.forest.size(b) / 2);
    return r;
}

Weight dual_objective(const SolverState& s, const std::vector<int>& scope) {
    std::vector<char> in(s.vertex_capacity(), 0);
    Weight r = 0;
    for (int v : scope) {
        in[v] = 1;
        r += s.y[v];
    }
    const Weight half = static_cast<Weight>(scope.size() / 2);
    std::vector<int> lv;
    for (int b : s.forest.blossoms()) {
        lv.clear();
        s.forest.leaves(b, lv);
        std::size_t cnt = 0;
        for (int v : lv) cnt += in[v];
        if (cnt == lv.size())
            r += s.forest.z(b) * static_cast<Weight>(lv.size() / 2);
        else if (cnt == scope.size() && lv.size() > scope.size())
            r += s.forest.z(b) * half;
    }
    return r;
}

void liquidate(SolverState& s, int b) {
    MWPM_REQUIRE(s.forest.is_blossom(b), "liquidate needs a blossom");
    int p = s.forest.parent(b);
    MWPM_REQUIRE(p == kNone || s.forest.is_inherited(p), "liquidate: blossom lies inside a current blossom");
    Weight z = s.forest.z(b);
    if (z != 0) {
        for (int v : s.forest.leaves(b)) s.y[v] += z / 2;
    }
    s.forest.set_z(b, 0);
    s.forest.dissolve(b);
}

void translate(SolverState& s, int b, Weight k) {
    MWPM_REQUIRE(s.forest.is_blossom(b), "translate needs a blossom");
    MWPM_REQUIRE(k >= 0 && s.forest.z(b) >= 2 * k, "translate: z too small");
    if (k == 0) return;
    s.forest.set_z(b, s.forest.z(b) - 2 * k);
    for (int v : s.forest.leaves(b)) s.y[v] += k;
}

int shrink_blossom(SolverState& s, std::vector<int> children, std::vector<CycleEdge> cycle) {
    const std::size_t l = children.size();
    MWPM_REQUIRE(l >= 3 && l % 2 == 1, "shrink: cycle must have odd length >= 3");
    MWPM_REQUIRE(cycle.size() == l, "shrink: edge count mismatch");
    for (int c : children) {
        int p = s.forest.parent(c);
        MWPM_REQUIRE(p == kNone || s.forest.is_inherited(p), "shrink: child is not a root of the current family");
    }
    for (std::size_t i = 0; i < l; ++i) {
        const CycleEdge& ce = cycle[i];
        int a = children[i], b = children[(i + 1) % l];
        int eu = s.endpoint_u(ce.edge), ev = s.endpoint_v(ce.edge);
        MWPM_REQUIRE((ce.lo == eu && ce.hi == ev) || (ce.lo == ev && ce.hi == eu), "shrink: cycle endpoints do not match edge");
        MWPM_REQUIRE(s.forest.contains(a, ce.lo) && s.forest.contains(b, ce.hi), "shrink: cycle edge joins wrong children");
        bool matched = s.is_matched_edge(ce.edge);
        MWPM_REQUIRE(matched == (i % 2 == 1), "shrink: cycle does not alternate");
    }
    return s.forest.create(std::move(children), std::move(cycle), Origin::Current, 0);
}

std::vector<int> dissolve_root(SolverState& s, int b, bool force) {
    MWPM_REQUIRE(s.forest.is_blossom(b), "dissolve needs a blossom");
    int p = s.forest.parent(b);
    MWPM_REQUIRE(p == kNone || s.forest.is_inherited(p), "dissolve: not a root of the current family");
    MWPM_REQUIRE(force || s.forest.z(b) == 0, "dissolve: z is nonzero");
    std::vector<int> kids = s.forest.children(b);
    s.forest.set_z(b, 0);
    s.forest.dissolve(b);
    return kids;
}

void base_path(const SolverState& s, int b, int v, std::vector<int>& out) {
    const BlossomForest& f = s.forest;
    if (f.is_vertex(b)) {
        MWPM_REQUIRE(b == v, "base_path: vertex not in node");
        out.push_back(v);
        return;
    }
    const auto& ch = f.children(b);
    const auto& cy = f.cycle(b);
    const int l = static_cast<int>(ch.size());
    int j = child_index(f, b, v);
    base_path(s, ch[j], v, out);
    if (j == 0) return;
    std::vector<int> tmp;
    auto enter_at_base_leave_at = [&](int child, int x) {
        tmp.clear();
        base_path(s, child, x, tmp);
        for (auto it = tmp.rbegin() + 1; it != tmp.rend(); ++it) out.push_back(*it);
    };
    if (j % 2 == 1) {
        // up: A_j -e_j(M)- A_{j+1} -e_{j+1}- ... - A_0
        int k = j;
        while (true) {
            const CycleEdge& m = cy[k];  // matched, lo = base(A_k)
            int nxt = k + 1;
            out.push_back(m.hi);  // base of A_{k+1}
            const CycleEdge& u = cy[nxt % l];  // unmatched leaving A_{k+1}
            enter_at_base_leave_at(ch[nxt], u.lo);
            int after = (nxt + 1) % l;
            base_path(s, ch[after], u.hi, out);
            if (after == 0) break;
            k = after;
        }
    } else {
        // down: A_j -e_{j-1}(M)- A_{j-1} -e_{j-2}- ... - A_0
        int k = j;
        while (true) {
            const CycleEdge& m = cy[k - 1];  // matched, hi = base(A_k), lo = base(A_{k-1})
            int prv = k - 1;
            out.push_back(m.lo);
            const CycleEdge& u = cy[prv - 1];  // unmatched, hi in A_{prv}, lo in A_{prv-1}
            enter_at_base_leave_at(ch[prv], u.hi);
            int after = prv - 1;
            base_path(s, ch[after], u.lo, out);
            if (after == 0) break;
            k = after;
        }
    }
}

std::vector<int> base_path(const SolverState& s, int b, int v) {
    std::vector<int> out;
    base_path(s, b, v, out);
    return out;
}

void rotate_base(SolverState& s, int b, int v) {
    BlossomForest& f = s.forest;
    if (f.is_vertex(b)) {
        MWPM_REQUIRE(b == v, "rotate_base: vertex not in node");
        return;
    }
    const int l = static_cast<int>(f.children(b).size());
    int j = child_index(f, b, v);
    rotate_base(s, f.children(b)[j], v);
    if (j == 0) {
        f.set_base(b, v);
        return;
    }
    // Walk the even path A_j ... A_0 that starts with the matched cycle edge.
    std::vector<int> seq{j};
    std::vector<CycleEdge> path_edges;
    std::vector<bool> forward;
    if (j % 2 == 1) {
        for (int k = j; k != 0;) {
            path_edges.push_back(f.cycle(b)[k]);
            forward.push_back(true);
            k = (k + 1) % l;
            seq.push_back(k);
        }
    } else {
        for (int k = j; k != 0;) {
            path_edges.push_back(f.cycle(b)[k - 1]);
            forward.push_back(false);
            k = k - 1;
            seq.push_back(k);
        }
    }
    // Edge t joins seq[t] and seq[t+1]; previously matched iff t even.
    const int steps = static_cast<int>(path_edges.size());
    for (int t = 1; t < steps; t += 2) {
        const CycleEdge& ce = path_edges[t];
        int a = forward[t] ? ce.lo : ce.hi;  // endpoint in seq[t]
        int c = forward[t] ? ce.hi : ce.lo;  // endpoint in seq[t+1]
        int child_a = f.children(b)[seq[t]];
        int child_c = f.children(b)[seq[t + 1]];
        rotate_base(s, child_a, a);
        rotate_base(s, child_c, c);
        s.set_mate(ce.edge);
    }
    f.rotate_children(b, j);
    f.set_base(b, v);
}

void augment_through(SolverState& s, const std::vector<int>& nodes, const std::vector<int>& edges) {
    const std::size_t k = edges.size();
    MWPM_REQUIRE(k % 2 == 1 && nodes.size() == k + 1, "augment: path must have odd edge count");
    MWPM_REQUIRE(s.is_free(s.forest.base(nodes.front())) && s.is_free(s.forest.base(nodes.back())),
                 "augment: end nodes must be free");
    for (std::size_t i = 0; i < k; ++i) {
        bool matched = s.is_matched_edge(edges[i]);
        MWPM_REQUIRE(matched == (i % 2 == 1), "augment: path does not alternate");
    }
    std::vector<std::pair<int, int>> attach;
    attach.reserve(nodes.size());
    for (std::size_t i = 0; i < k; i += 2) {
        attach.emplace_back(nodes[i], endpoint_in(s, nodes[i], edges[i]));
        attach.emplace_back(nodes[i + 1], endpoint_in(s, nodes[i + 1], edges[i]));
    }
    for (auto [node, a] : attach) rotate_base(s, node, a);
    for (std::size_t i = 0; i < k; i += 2) s.set_mate(edges[i]);
}

bool blossom_consistent(const SolverState& s, int b, std::string* why) {
    auto fail = [&](const std::string& msg) {
        if (why) *why = msg;
        return false;
    };
    const BlossomForest& f = s.forest;
    if (!f.is_blossom(b)) return fail("not a blossom");
    const auto& ch = f.children(b);
    const auto& cy = f.cycle(b);
    const std::size_t l = ch.size();
    if (l < 3 || l % 2 == 0 || cy.size() != l) return fail("bad cycle length");
    if (f.base(b) != f.base(ch[0])) return fail("base not in first child");
    for (std::size_t i = 0; i < l; ++i) {
        const CycleEdge& ce = cy[i];
        if (!f.contains(ch[i], ce.lo) || !f.contains(ch[(i + 1) % l], ce.hi))
            return fail("cycle edge " + std::to_string(ce.edge) + " joins wrong children");
        bool matched = s.is_matched_edge(ce.edge);
        if (f.origin(b) == Origin::Current && matched != (i % 2 == 1))
            return fail("cycle edge " + std::to_string(ce.edge) + " breaks alternation");
        if (f.origin(b) == Origin::Current && matched) {
            if (f.base(ch[i]) != ce.lo || f.base(ch[(i + 1) % l]) != ce.hi)
                return fail("matched cycle edge not at child bases");
        }
    }
    return true;
}

}  // namespace mwpm
