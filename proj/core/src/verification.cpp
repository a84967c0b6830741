#include "mwpm/verification.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "mwpm/duals.hpp"

namespace mwpm {

OracleResult brute_force_mwpm(const Graph& g, const std::vector<Weight>* w) {
    const int n = g.vertex_count();
    MWPM_REQUIRE(n <= kOracleMaxVertices, "oracle refuses graphs with more than 16 vertices");
    OracleResult r;
    r.matching = Matching(n);
    if (n % 2 == 1) return r;
    if (n == 0) {
        r.feasible = true;
        return r;
    }
    constexpr Weight kNo = std::numeric_limits<Weight>::min();
    std::vector<std::vector<int>> best_edge(n, std::vector<int>(n, kNone));
    auto weight = [&](int e) { return w ? (*w)[e] : g.edge(e).w; };
    for (int e = 0; e < g.edge_count(); ++e) {
        int u = g.edge(e).u, v = g.edge(e).v;
        int& slot = best_edge[u][v];
        if (slot == kNone || weight(e) > weight(slot)) {
            slot = e;
            best_edge[v][u] = e;
        }
    }
    const int full = (1 << n) - 1;
    // value[mask]: best weight of a perfect matching on the vertices outside mask.
    std::vector<Weight> value(static_cast<std::size_t>(1) << n, kNo);
    std::vector<char> done(static_cast<std::size_t>(1) << n, 0);
    std::vector<int> choice(static_cast<std::size_t>(1) << n, kNone);
    auto solve = [&](auto&& self, int mask) -> Weight {
        if (mask == full) return 0;
        if (done[mask]) return value[mask];
        int i = 0;
        while (mask >> i & 1) ++i;
        Weight best = kNo;
        int pick = kNone;
        for (int j = i + 1; j < n; ++j) {
            if ((mask >> j & 1) || best_edge[i][j] == kNone) continue;
            Weight rest = self(self, mask | (1 << i) | (1 << j));
            if (rest == kNo) continue;
            Weight cand = rest + weight(best_edge[i][j]);
            if (pick == kNone || cand > best) {
                best = cand;
                pick = best_edge[i][j];
            }
        }
        done[mask] = 1;
        value[mask] = best;
        choice[mask] = pick;
        return best;
    };
    Weight total = solve(solve, 0);
    if (total == kNo) return r;
    r.feasible = true;
    r.weight = total;
    int mask = 0;
    while (mask != full) {
        int e = choice[mask];
        r.matching.match(g, e);
        mask |= (1 << g.edge(e).u) | (1 << g.edge(e).v);
    }
    return r;
}

std::string InvariantReport::summary(std::size_t max_lines) const {
    std::ostringstream os;
    if (violations.empty()) {
        os << "no violations\n";
        return os.str();
    }
    os << violations.size() << " violation(s)\n";
    for (std::size_t i = 0; i < violations.size() && i < max_lines; ++i) {
        const Violation& v = violations[i];
        os << "  " << v.clause;
        if (v.edge != kNone) os << " edge=" << v.edge + 1;
        if (v.blossom != kNone) os << " blossom=" << v.blossom + 1;
        if (v.vertex != kNone) os << " vertex=" << v.vertex + 1;
        if (!v.detail.empty()) os << ": " << v.detail;
        os << '\n';
    }
    return os.str();
}

namespace {

struct Index {
    // contain[v]: blossoms containing v, innermost first.
    std::vector<std::vector<int>> contain;
    std::vector<int> owner;  // edge -> blossom whose cycle holds it
    bool sound = true;
};

Index build_index(const Certificate& c, std::vector<Violation>& out) {
    Index ix;
    const int n = c.vertex_count;
    const int nb = static_cast<int>(c.blossoms.size());
    ix.contain.assign(n, {});
    ix.owner.assign(c.edges.size(), kNone);
    for (int b = 0; b < nb; ++b) {
        const CertNode& B = c.blossoms[b];
        if (B.vertices.size() % 2 == 0) out.push_back({"laminarity", kNone, b, kNone, "blossom has even size"});
        for (int v : B.vertices) ix.contain[v].push_back(b);
        for (int e : B.cycle_edges) {
            if (ix.owner[e] != kNone) {
                out.push_back({"structure", e, b, kNone, "edge lies on two blossom cycles"});
                ix.sound = false;
            }
            ix.owner[e] = b;
        }
    }
    for (int v = 0; v < n; ++v) {
        auto& cv = ix.contain[v];
        std::sort(cv.begin(), cv.end(), [&](int a, int b) {
            return c.blossoms[a].vertices.size() < c.blossoms[b].vertices.size();
        });
        for (std::size_t i = 0; i < cv.size(); ++i) {
            int expect = i + 1 < cv.size() ? cv[i + 1] : kNone;
            if (c.blossoms[cv[i]].parent != expect) {
                out.push_back({"laminarity", kNone, cv[i], v, "blossoms containing the vertex do not form a chain"});
                ix.sound = false;
                break;
            }
        }
    }
    return ix;
}

bool in_blossom(const Index& ix, int b, int v) {
    const auto& cv = ix.contain[v];
    return std::find(cv.begin(), cv.end(), b) != cv.end();
}

Weight yz_of(const Certificate& c, const Index& ix, int e) {
    const Edge& ed = c.edges[e];
    Weight t = c.y[ed.u] + c.y[ed.v];
    const auto& cu = ix.contain[ed.u];
    const auto& cv = ix.contain[ed.v];
    for (int b : cu)
        if (std::find(cv.begin(), cv.end(), b) != cv.end()) t += c.blossoms[b].z;
    return t;
}

}  // namespace

InvariantReport check_invariants(const Certificate& c, const CheckOptions& opts) {
    InvariantReport rep;
    auto& out = rep.violations;
    const int n = c.vertex_count;
    const int m = static_cast<int>(c.edges.size());
    const int nb = static_cast<int>(c.blossoms.size());

    std::vector<int> mate(n, kNone);
    std::vector<char> matched(m, 0);
    for (int e : c.matching) {
        const Edge& ed = c.edges[e];
        if (mate[ed.u] != kNone || mate[ed.v] != kNone) {
            out.push_back({"matching", e, kNone, kNone, "edges share a vertex"});
            continue;
        }
        mate[ed.u] = mate[ed.v] = e;
        matched[e] = 1;
    }
    if (opts.require_perfect)
        for (int v = 0; v < n; ++v)
            if (mate[v] == kNone) out.push_back({"perfect", kNone, kNone, v, "vertex is free"});

    for (int e = 0; e < m; ++e)
        if (c.edges[e].w % 2 != 0) out.push_back({"even-weights", e, kNone, kNone, "odd weight"});
    for (int b = 0; b < nb; ++b) {
        Weight z = c.blossoms[b].z;
        if (z < 0 || z % 2 != 0) out.push_back({"granularity", kNone, b, kNone, "z=" + std::to_string(z)});
    }

    Index ix = build_index(c, out);
    if (!ix.sound) return rep;

    // Cycle structure of every blossom.
    std::vector<char> structural(nb, 1);
    for (int b = 0; b < nb; ++b) {
        const CertNode& B = c.blossoms[b];
        const std::size_t l = B.children.size();
        if (B.inherited && B.cycle_edges.empty()) {
            // Old blossom that lost a child: only a vertex set now.
            std::size_t covered = 0;
            for (int ch : B.children) covered += ch >= 0 ? 1 : c.blossoms[-ch - 1].vertices.size();
            structural[b] = 0;
            if (covered != B.vertices.size())
                out.push_back({"structure", kNone, b, kNone, "children do not cover the blossom"});
            continue;
        }
        if (l < 3 || l % 2 == 0 || B.cycle_edges.size() != l) {
            out.push_back({"structure", kNone, b, kNone, "cycle must have odd length at least 3"});
            structural[b] = 0;
            continue;
        }
        auto holds = [&](int child, int v) {
            return child >= 0 ? child == v : in_blossom(ix, -child - 1, v);
        };
        std::size_t covered = 0;
        for (int ch : B.children) {
            if (ch >= 0) {
                ++covered;
                if (!in_blossom(ix, b, ch) || (ix.contain[ch].empty() ? kNone : ix.contain[ch].front()) != b)
                    structural[b] = 0;
            } else {
                const CertNode& C = c.blossoms[-ch - 1];
                covered += C.vertices.size();
                if (C.parent != b) structural[b] = 0;
            }
        }
        if (covered != B.vertices.size()) structural[b] = 0;
        for (std::size_t i = 0; i < l && structural[b]; ++i) {
            const Edge& ed = c.edges[B.cycle_edges[i]];
            int a = B.children[i], d = B.children[(i + 1) % l];
            bool joins = (holds(a, ed.u) && holds(d, ed.v)) || (holds(a, ed.v) && holds(d, ed.u));
            if (!joins) structural[b] = 0;
            if (!B.inherited && (matched[B.cycle_edges[i]] != 0) != (i % 2 == 1)) {
                out.push_back({"structure", B.cycle_edges[i], b, kNone, "cycle edges do not alternate from the base child"});
                break;
            }
        }
        if (!structural[b]) out.push_back({"structure", kNone, b, kNone, "children and cycle edges are inconsistent"});
    }

    const bool mixed = c.mode == CertMode::Mixed;
    if (opts.active_blossoms) {
        for (int b = 0; b < nb; ++b) {
            const CertNode& B = c.blossoms[b];
            if (B.inherited) {
                if (!mixed) {
                    out.push_back({"active-blossoms", kNone, b, kNone, "inherited blossom still present"});
                    continue;
                }
                for (int p = B.parent; p != kNone; p = c.blossoms[p].parent)
                    if (!c.blossoms[p].inherited) {
                        out.push_back({"old-inside-new", kNone, b, kNone, "inherited blossom inside a current one"});
                        break;
                    }
                continue;
            }
            bool root = true;
            for (int p = B.parent; p != kNone; p = c.blossoms[p].parent)
                if (!c.blossoms[p].inherited) root = false;
            if (root && B.z <= 0) out.push_back({"active-blossoms", kNone, b, kNone, "root blossom with zero z"});
            if (mixed && B.z == 0) continue;
            // Vertices of B whose matched edge is not a blossom edge of B.
            std::vector<int> loose;
            for (int v : B.vertices) {
                int e = mate[v];
                bool inside = false;
                if (e != kNone && ix.owner[e] != kNone) {
                    const auto& cv = ix.contain[v];
                    auto po = std::find(cv.begin(), cv.end(), ix.owner[e]);
                    auto pb = std::find(cv.begin(), cv.end(), b);
                    inside = po != cv.end() && po <= pb;
                }
                if (!inside) loose.push_back(v);
            }
            if (loose.size() != 1)
                out.push_back({"active-blossoms", kNone, b, kNone,
                               std::to_string(loose.size()) + " vertices not matched inside the blossom"});
            else if (loose[0] != B.base)
                out.push_back({"active-blossoms", kNone, b, loose[0], "base disagrees with the matching"});
        }
        if (mixed) {
            for (int e : c.matching) {
                const Edge& ed = c.edges[e];
                for (int b : ix.contain[ed.u]) {
                    if (!c.blossoms[b].inherited) continue;
                    if (!in_blossom(ix, b, ed.v)) out.push_back({"matched-crossing", e, b, kNone, "matched edge leaves an inherited blossom"});
                }
                for (int b : ix.contain[ed.v]) {
                    if (!c.blossoms[b].inherited) continue;
                    if (!in_blossom(ix, b, ed.u)) out.push_back({"matched-crossing", e, b, kNone, "matched edge leaves an inherited blossom"});
                }
            }
        }
    }

    const bool near = c.mode == CertMode::RCS;
    for (int e = 0; e < m; ++e) {
        Weight sl = yz_of(c, ix, e) - c.edges[e].w;
        bool tight_set = matched[e] != 0 || (ix.owner[e] != kNone && !c.blossoms[ix.owner[e]].inherited);
        if (near) {
            if (sl < -2) out.push_back({"near-domination", e, kNone, kNone, "slack " + std::to_string(sl)});
            if (tight_set && sl > 0) out.push_back({"near-tightness", e, kNone, kNone, "slack " + std::to_string(sl)});
        } else {
            if (sl < 0) out.push_back({"domination", e, kNone, kNone, "slack " + std::to_string(sl)});
            if (tight_set && sl != 0) out.push_back({"tightness", e, kNone, kNone, "slack " + std::to_string(sl)});
        }
    }
    return rep;
}

InvariantReport check_state(const SolverState& s, CertMode mode, const CheckOptions& opts) {
    return check_invariants(certificate_from_state(s, mode), opts);
}

Weight certificate_dual_objective(const Certificate& c) {
    Weight t = std::accumulate(c.y.begin(), c.y.end(), Weight{0});
    for (const CertNode& b : c.blossoms) t += b.z * static_cast<Weight>(b.vertices.size() / 2);
    return t;
}

GapReport check_optimality_gap(const Certificate& c, const Graph* original) {
    GapReport r;
    std::ostringstream why;
    for (int e : c.matching) r.matching_weight += c.edges[e].w;
    r.dual = certificate_dual_objective(c);
    const Weight n = c.vertex_count;
    bool perfect = 2 * static_cast<Weight>(c.matching.size()) == n;
    if (!perfect) {
        r.ok = false;
        r.detail = "matching is not perfect";
        return r;
    }
    if (c.mode != CertMode::RCS) {
        if (r.matching_weight != r.dual) {
            r.ok = false;
            why << "w(M)=" << r.matching_weight << " differs from the dual objective " << r.dual << "; ";
        }
    } else if (n <= kOracleMaxVertices) {
        Graph g(c.vertex_count);
        std::vector<Weight> w;
        for (const Edge& e : c.edges) {
            int id = g.add_edge(e.u, e.v, e.w);
            if (id == static_cast<int>(w.size())) w.push_back(e.w);
            else w[id] = std::max(w[id], e.w);
        }
        OracleResult o = brute_force_mwpm(g, &w);
        r.oracle_used = true;
        r.optimum = o.weight;
        if (!o.feasible || r.matching_weight < o.weight - n) {
            r.ok = false;
            why << "w(M)=" << r.matching_weight << " is more than n below the optimum " << o.weight << "; ";
        }
    } else {
        Weight hi = r.dual + 2 * static_cast<Weight>(c.matching.size());
        if (r.matching_weight < r.dual || r.matching_weight > hi) {
            r.ok = false;
            why << "w(M)=" << r.matching_weight << " outside [" << r.dual << ", " << hi << "]; ";
        }
    }
    if (original != nullptr) {
        const Graph& g = *original;
        const Weight mult = g.vertex_count() / 2 + 1;
        Matching mm(g.vertex_count());
        bool mapped = c.vertex_count == g.vertex_count();
        for (int e : c.matching) {
            if (!mapped) break;
            int id = g.find_edge(c.edges[e].u, c.edges[e].v);
            if (id == kNone) {
                mapped = false;
                break;
            }
            if (c.view == "2wbar" && c.edges[e].w != 2 * mult * g.edge(id).w) mapped = false;
            mm.match(g, id);
        }
        if (!mapped) {
            r.ok = false;
            why << "matching does not map onto the original graph; ";
        } else {
            Weight hw = matching_weight(g, mm);
            if (g.vertex_count() <= kOracleMaxVertices) {
                OracleResult o = brute_force_mwpm(g);
                r.oracle_used = true;
                if (!o.feasible || o.weight != hw) {
                    r.ok = false;
                    why << "original weight " << hw << " differs from the optimum " << o.weight << "; ";
                }
            } else if (c.view == "2wbar") {
                InvariantReport inv = check_invariants(c, {true, true});
                if (!inv.ok()) {
                    r.ok = false;
                    why << "exactness not certified: " << inv.violations.size() << " violation(s); ";
                }
            }
        }
    }
    r.detail = why.str();
    return r;
}

std::vector<int> find_eligible_augmenting_path(const SolverState& s, Criterion c, const std::vector<int>* roots) {
    EligibleView view = build_eligible_view(s, c);
    const int k = static_cast<int>(view.nodes.size());
    std::vector<char> free_node(k, 0), start(k, 0);
    std::vector<int> mate_edge(k, kNone);
    for (int i = 0; i < k; ++i) {
        int b = s.forest.base(view.nodes[i]);
        free_node[i] = s.is_free(b);
        mate_edge[i] = s.mate_edge(b);
    }
    if (roots != nullptr) {
        for (int r : *roots)
            if (view.node_of[r] != kNone) start[view.index_of[view.node_of[r]]] = 1;
    } else {
        start = free_node;
    }
    std::vector<char> used(k, 0);
    std::vector<int> path;
    // From outer node x, try every unmatched eligible edge.
    auto extend = [&](auto&& self, int x, int origin) -> bool {
        for (auto [e, y] : view.adj[x]) {
            if (s.is_matched_edge(e) || used[y]) continue;
            if (free_node[y]) {
                if (y == origin) continue;
                path.push_back(e);
                return true;
            }
            int me = mate_edge[y];
            int z = kNone;
            for (auto [e2, t] : view.adj[y])
                if (e2 == me) z = t;
            if (z == kNone || used[z]) continue;
            used[y] = used[z] = 1;
            path.push_back(e);
            path.push_back(me);
            if (self(self, z, origin)) return true;
            path.pop_back();
            path.pop_back();
            used[y] = used[z] = 0;
        }
        return false;
    };
    for (int i = 0; i < k; ++i) {
        if (!start[i] || !free_node[i]) continue;
        used[i] = 1;
        if (extend(extend, i, i)) return path;
        used[i] = 0;
    }
    return {};
}

}  // namespace mwpm
