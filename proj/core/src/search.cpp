#include "mwpm/search.hpp"

#include <algorithm>
#include <sstream>

#include "mwpm/dual_clock.hpp"
#include "mwpm/duals.hpp"
#include "mwpm/event_queue.hpp"
#include "mwpm/split_findmin.hpp"
#include "mwpm/union_find.hpp"

namespace mwpm {

const char* search_status_name(SearchStatus s) {
    switch (s) {
        case SearchStatus::Augmented: return "augmented";
        case SearchStatus::BudgetExhausted: return "budget-exhausted";
        case SearchStatus::NoAugmentingPath: return "no-augmenting-path";
    }
    return "?";
}

int dissolve_zero_roots(SolverState& s, const std::vector<int>* scope) {
    BlossomForest& f = s.forest;
    std::vector<int> work;
    if (scope == nullptr) {
        for (int b : f.blossoms()) {
            int p = f.parent(b);
            if (f.is_current(b) && (p == kNone || f.is_inherited(p))) work.push_back(b);
        }
    } else {
        std::vector<char> seen(f.capacity(), 0);
        for (int v : *scope) {
            int r = f.current_root(v);
            if (r != v && !seen[r]) {
                seen[r] = 1;
                work.push_back(r);
            }
        }
    }
    int count = 0;
    while (!work.empty()) {
        int b = work.back();
        work.pop_back();
        if (!f.is_current(b) || f.z(b) != 0) continue;
        std::vector<int> kids = f.children(b);
        f.dissolve(b);
        ++count;
        for (int c : kids)
            if (f.is_blossom(c)) work.push_back(c);
    }
    return count;
}

namespace {

enum : std::uint8_t { kUnlabeled = 0, kInner = 1, kOuter = 2 };

constexpr Weight kBucketLimit = Weight{1} << 18;

}  // namespace

struct SearchEngine::Impl {
    SolverState* s = nullptr;
    const SearchParams* p = nullptr;
    Criterion crit = Criterion::Tight;

    std::uint32_t run = 0;
    std::uint32_t walk = 0;

    // vertices
    int k = 0;
    std::vector<int> verts;
    std::vector<int> loc;
    std::vector<std::uint32_t> vstamp;
    std::vector<Weight> y0;
    std::vector<std::uint32_t> mg_gen;
    std::vector<int> outer_node;

    // nodes
    std::vector<std::uint8_t> label;
    std::vector<int> entry, fpe, fpx, first, last;
    std::vector<std::uint32_t> gen_d, gen_g, mark, touched_stamp, memo_stamp;
    std::vector<int> memo_root;
    std::vector<int> tree;
    std::vector<std::uint32_t> tree_stamp;
    std::vector<char> tree_dead;
    std::vector<Weight> shadow_z;
    std::vector<int> touched;
    std::vector<int> scratch;

    std::vector<int> list_node;

    SplitFindmin sfm;
    ForestUnionFind uf;
    EventQueue q;
    DualClock clock;

    Weight now = 0;
    Weight budget = kInfinity;
    Weight inh = 0;
    bool halted = false;
    SearchResult res;

    std::vector<Weight> shadow_y;
    Weight shadow_t = 0;

    SearchResult run_search(SolverState& st, const SearchParams& prm);

    void ensure_nodes() {
        std::size_t cap = static_cast<std::size_t>(s->forest.capacity());
        if (label.size() >= cap) return;
        label.resize(cap, kUnlabeled);
        entry.resize(cap, kNone);
        fpe.resize(cap, kNone);
        fpx.resize(cap, kNone);
        first.resize(cap, kNone);
        last.resize(cap, kNone);
        gen_d.resize(cap, 0);
        gen_g.resize(cap, 0);
        mark.resize(cap, 0);
        touched_stamp.resize(cap, 0);
        memo_stamp.resize(cap, 0);
        memo_root.resize(cap, kNone);
        tree.resize(cap, kNone);
        tree_stamp.resize(cap, 0);
        shadow_z.resize(cap, 0);
        clock.resize_nodes(static_cast<int>(cap));
    }

    bool active(int g) const { return vstamp[g] == run; }

    bool is_root(int node) const {
        const BlossomForest& f = s->forest;
        if (!f.is_vertex(node) && !f.is_blossom(node)) return false;
        int par = f.parent(node);
        return par == kNone || f.is_inherited(par);
    }

    int tree_of(int node) const { return tree_stamp[node] == run ? tree[node] : kNone; }

    void set_tree(int node, int t) {
        tree[node] = t;
        tree_stamp[node] = t == kNone ? 0 : run;
    }

    // Node belongs to a tree retired by an earlier augmentation of this search.
    bool retired(int node) const {
        int t = tree_of(node);
        return t != kNone && tree_dead[t];
    }

    int list_of(int node) const { return sfm.list(first[node]); }

    int node_of(int l) {
        if (clock.outer(l)) return outer_node[uf.find(l)];
        return list_node[sfm.list(l)];
    }

    Weight y_now(int l) const {
        if (clock.outer(l)) return clock.y(l, y0[l], kNone, now);
        return clock.y(l, y0[l], list_node[sfm.list(l)], now);
    }

    Weight slack_now(int e) const {
        int u = loc[s->endpoint_u(e)], v = loc[s->endpoint_v(e)];
        return y_now(u) + y_now(v) + inh - s->w[e];
    }

    void touch(int node) {
        if (touched_stamp[node] == run) return;
        touched_stamp[node] = run;
        touched.push_back(node);
    }

    std::string edge_text(int e) const {
        std::ostringstream os;
        os << "edge=" << s->endpoint_u(e) << '-' << s->endpoint_v(e);
        return os.str();
    }

    void trace(const char* kind, const std::string& detail, TraceLevel at = TraceLevel::All) {
        if (p->trace != nullptr) p->trace->event(now, kind, detail, at);
    }

    void push(Weight t, EventKind kind, std::uint8_t sub, int a, int b, std::uint32_t gen) {
        Event ev;
        ev.time = t;
        ev.kind = kind;
        ev.sub = sub;
        ev.a = a;
        ev.b = b;
        ev.gen = gen;
        q.push(ev);
    }

    // Delay until a matched edge with one inner end becomes eligible.
    Weight matched_delay(Weight sl) const {
        switch (crit) {
            case Criterion::Tight:
                MWPM_CHECK(sl == 0, "matched edge is not tight");
                return 0;
            case Criterion::Relaxed:
                MWPM_CHECK(sl <= 0 && sl >= -2, "matched edge slack out of range");
                return -sl;
            case Criterion::Near:
                MWPM_CHECK(sl <= 0 && sl >= -2, "matched edge slack out of range");
                return sl == -1 ? 1 : 0;
        }
        return 0;
    }

    // Delay until a matched edge with both ends inner becomes eligible.
    Weight matched_pair_delay(Weight sl) const {
        MWPM_CHECK(sl <= 0 && sl >= -2, "matched edge slack out of range");
        MWPM_CHECK(sl % 2 == 0, "odd slack on a matched edge between inner nodes");
        if (crit == Criterion::Relaxed) return -sl / 2;
        MWPM_CHECK(crit != Criterion::Tight || sl == 0, "matched edge is not tight");
        return 0;
    }

    void schedule_grow(int node, Weight at) {
        MWPM_CHECK(at >= now, "grow scheduled in the past");
        ++gen_g[node];
        push(at, EventKind::Grow, 0, node, kNone, gen_g[node]);
    }

    void schedule_from_findmin(int node) {
        SplitFindmin::Min m = sfm.findmin(list_of(node));
        if (m.key >= kInfinity) return;
        schedule_grow(node, m.key + clock.shift(node, now));
    }

    void schedule_dissolve(int node) {
        Weight z = clock.z(node, now);
        MWPM_CHECK(z >= 0 && z % 2 == 0, "inner blossom with odd or negative z");
        ++gen_d[node];
        push(now + z / 2, EventKind::Dissolve, 0, node, kNone, gen_d[node]);
    }

    void scan(int l) {
        const int g = verts[l];
        for (int e : s->incident(g)) {
            if (s->is_matched_edge(e)) continue;
            int u = s->other(e, g);
            if (!active(u)) continue;
            int lu = loc[u];
            if (clock.outer(lu)) {
                if (uf.find(lu) == uf.find(l)) continue;
                Weight st = slack_star(slack_now(e), crit, false);
                MWPM_CHECK(st % 2 == 0, "odd slack between outer vertices: " + edge_text(e));
                push(now + st / 2, EventKind::Blossom, 0, e, kNone, 0);
            } else {
                int node = list_node[sfm.list(lu)];
                Weight st = slack_star(slack_now(e), crit, false);
                Weight key = st + now - clock.shift(node, now);
                if (label[node] == kUnlabeled) {
                    Weight old = sfm.findmin(list_of(node)).key;
                    if (sfm.decrease_key(lu, key, e) && key < old) schedule_grow(node, now + st);
                } else {
                    sfm.decrease_key(lu, key, e);
                }
            }
        }
    }

    void schedule_matched(int b) {
        const int gb = verts[b];
        int me = s->mate_edge(gb);
        MWPM_CHECK(me != kNone, "inner base is free");
        int gm = s->other(me, gb);
        MWPM_CHECK(active(gm), "matched edge leaves the search scope");
        int lm = loc[gm];
        MWPM_CHECK(!clock.outer(lm), "mate of an inner base is outer");
        int mnode = list_node[sfm.list(lm)];
        Weight sl = slack_now(me);
        if (label[mnode] == kUnlabeled) {
            ++mg_gen[b];
            push(now + matched_delay(sl), EventKind::Grow, 1, b, me, mg_gen[b]);
        } else {
            ++mg_gen[b];
            ++mg_gen[lm];
            push(now + matched_pair_delay(sl), EventKind::Blossom, 0, me, kNone, 0);
        }
    }

    void make_outer(int node, int pe, int px) {
        const BlossomForest& f = s->forest;
        label[node] = kOuter;
        int b = loc[f.base(node)];
        entry[node] = b;
        fpe[node] = pe;
        fpx[node] = px;
        ++gen_g[node];
        ++gen_d[node];
        if (px == kNone) {
            set_tree(node, static_cast<int>(tree_dead.size()));
            tree_dead.push_back(0);
        } else {
            set_tree(node, tree_of(node_of(px)));
        }
        if (px == kNone)
            uf.add_root(b);
        else
            uf.add_edge(b, px);
        for (int l = first[node]; l <= last[node]; ++l) {
            if (l == b) continue;
            uf.add_edge(l, b);
            uf.unite(l, b);
        }
        outer_node[uf.find(b)] = node;
        for (int l = first[node]; l <= last[node]; ++l) clock.freeze_outer(l, node, now);
        clock.set_outer(node, now);
        for (int l = first[node]; l <= last[node]; ++l) scan(l);
    }

    void make_inner(int node, int l, int e, int x) {
        label[node] = kInner;
        set_tree(node, tree_of(node_of(x)));
        entry[node] = l;
        fpe[node] = e;
        fpx[node] = x;
        ++gen_g[node];
        clock.set_inner(node, now);
        uf.add_edge(l, x);
        if (s->forest.is_blossom(node)) {
            std::vector<int> path = base_path(*s, node, verts[l]);
            for (std::size_t i = 1; i < path.size(); ++i) uf.add_edge(loc[path[i]], loc[path[i - 1]]);
            schedule_dissolve(node);
        }
        schedule_matched(loc[s->forest.base(node)]);
    }

    int parent_node(int node) {
        if (fpe[node] == kNone) return kNone;
        return node_of(fpx[node]);
    }

    void augment(std::vector<int> nodes, std::vector<int> edges) {
        MWPM_CHECK(p->allow_augment, "augmenting path found where none may exist");
        if (p->trace != nullptr && p->trace->enabled(TraceLevel::Augment)) {
            std::ostringstream os;
            os << "length=" << edges.size() << " ends=" << s->forest.base(nodes.front()) << ','
               << s->forest.base(nodes.back());
            trace("AUGMENT", os.str(), TraceLevel::Augment);
        }
        const int t = tree_of(nodes.front());
        augment_through(*s, nodes, edges);
        res.status = SearchStatus::Augmented;
        res.path_edges = static_cast<int>(edges.size());
        ++res.augmentations;
        if (!p->multi_augment) {
            halted = true;
            return;
        }
        tree_dead[t] = 1;
        if (tree_of(nodes.back()) == kNone)
            set_tree(nodes.back(), t);
        else
            tree_dead[tree_of(nodes.back())] = 1;
    }

    // Root-to-node sequence of contracted nodes and their tree edges.
    void side(int node, std::vector<int>& nodes, std::vector<int>& edges) {
        nodes.clear();
        edges.clear();
        for (int x = node; x != kNone; x = parent_node(x)) {
            nodes.push_back(x);
            if (fpe[x] != kNone) edges.push_back(fpe[x]);
        }
    }

    void on_grow_unmatched(const Event& ev) {
        int node = ev.a;
        if (ev.gen != gen_g[node] || !is_root(node) || label[node] != kUnlabeled) {
            ++res.stale;
            return;
        }
        SplitFindmin::Min m = sfm.findmin(list_of(node));
        MWPM_CHECK(m.key < kInfinity && m.key + clock.shift(node, now) == now, "grow event out of step with its key");
        int e = m.witness;
        int l = m.element;
        int x = loc[s->other(e, verts[l])];
        MWPM_CHECK(clock.outer(x), "grow edge does not come from an outer vertex");
        if (retired(node) || retired(node_of(x))) {
            ++res.stale;
            return;
        }
        MWPM_CHECK(slack_star(slack_now(e), crit, false) == 0, "grow edge is not eligible: " + edge_text(e));
        ++res.grows;
        if (p->trace != nullptr) trace("GROW", "node=" + std::to_string(node) + ' ' + edge_text(e));
        if (s->is_free(s->forest.base(node))) {
            std::vector<int> nodes, edges;
            side(node_of(x), nodes, edges);
            std::reverse(nodes.begin(), nodes.end());
            std::reverse(edges.begin(), edges.end());
            nodes.push_back(node);
            edges.push_back(e);
            augment(std::move(nodes), std::move(edges));
            return;
        }
        make_inner(node, l, e, x);
    }

    void on_grow_matched(const Event& ev) {
        int b = ev.a;
        if (ev.gen != mg_gen[b] || clock.outer(b)) {
            ++res.stale;
            return;
        }
        int bnode = list_node[sfm.list(b)];
        int me = ev.b;
        int lm = loc[s->other(me, verts[b])];
        if (label[bnode] != kInner || retired(bnode) || s->mate_edge(verts[b]) != me || clock.outer(lm)) {
            ++res.stale;
            return;
        }
        int mnode = list_node[sfm.list(lm)];
        if (label[mnode] != kUnlabeled) {
            ++res.stale;
            return;
        }
        MWPM_CHECK(eligible_by_slack(slack_now(me), crit, true), "matched grow edge is not eligible: " + edge_text(me));
        ++res.grows;
        if (p->trace != nullptr) trace("GROW", "node=" + std::to_string(mnode) + ' ' + edge_text(me) + " matched");
        make_outer(mnode, me, b);
    }

    void on_blossom(const Event& ev) {
        int e = ev.a;
        int u = loc[s->endpoint_u(e)], v = loc[s->endpoint_v(e)];
        bool ou = clock.outer(u), ov = clock.outer(v);
        int X, Y;
        if (ou && ov) {
            X = outer_node[uf.find(u)];
            Y = outer_node[uf.find(v)];
            if (X == Y) {
                ++res.stale;
                return;
            }
            MWPM_CHECK(slack_star(slack_now(e), crit, false) == 0, "blossom edge is not eligible: " + edge_text(e));
        } else if (!ou && !ov) {
            X = list_node[sfm.list(u)];
            Y = list_node[sfm.list(v)];
            if (X == Y || label[X] != kInner || label[Y] != kInner || !s->is_matched_edge(e)) {
                ++res.stale;
                return;
            }
            MWPM_CHECK(eligible_by_slack(slack_now(e), crit, true), "matched blossom edge is not eligible: " + edge_text(e));
        } else {
            ++res.stale;
            return;
        }
        if (retired(X) || retired(Y)) {
            ++res.stale;
            return;
        }

        ++walk;
        std::vector<int> xs, ys;
        int cx = X, cy = Y, Z = kNone;
        bool z_on_y = false;
        while (cx != kNone || cy != kNone) {
            if (cx != kNone) {
                if (mark[cx] == walk) {
                    Z = cx;
                    z_on_y = true;
                    break;
                }
                mark[cx] = walk;
                xs.push_back(cx);
                cx = parent_node(cx);
            }
            if (cy != kNone) {
                if (mark[cy] == walk) {
                    Z = cy;
                    z_on_y = false;
                    break;
                }
                mark[cy] = walk;
                ys.push_back(cy);
                cy = parent_node(cy);
            }
        }
        if (Z == kNone) {
            std::vector<int> nx, ex, ny, ey;
            side(X, nx, ex);
            side(Y, ny, ey);
            std::reverse(nx.begin(), nx.end());
            std::reverse(ex.begin(), ex.end());
            ex.push_back(e);
            nx.insert(nx.end(), ny.begin(), ny.end());
            ex.insert(ex.end(), ey.begin(), ey.end());
            ++res.blossoms;
            augment(std::move(nx), std::move(ex));
            return;
        }
        auto cut = [Z](std::vector<int>& vs) {
            auto it = std::find(vs.begin(), vs.end(), Z);
            MWPM_CHECK(it != vs.end(), "lowest common ancestor not on the walked path");
            vs.erase(it, vs.end());
        };
        if (z_on_y)
            cut(ys);
        else
            cut(xs);
        MWPM_CHECK(label[Z] == kOuter, "blossom apex is not outer");
        form_blossom(Z, xs, ys, e, u, v);
    }

    void form_blossom(int Z, const std::vector<int>& xs, const std::vector<int>& ys, int e, int u, int v) {
        std::vector<int> children;
        std::vector<CycleEdge> cycle;
        children.push_back(Z);
        for (auto it = xs.rbegin(); it != xs.rend(); ++it) {
            int n = *it;
            children.push_back(n);
            cycle.push_back({fpe[n], verts[fpx[n]], verts[entry[n]]});
        }
        cycle.push_back({e, verts[u], verts[v]});
        for (int n : ys) {
            children.push_back(n);
            cycle.push_back({fpe[n], verts[entry[n]], verts[fpx[n]]});
        }

        std::vector<int> fresh;
        for (int c : children) {
            if (c != Z && label[c] == kInner) {
                for (int l = first[c]; l <= last[c]; ++l) {
                    clock.freeze_outer(l, c, now);
                    fresh.push_back(l);
                    if (uf.in_tree(l)) {
                        if (l != entry[c]) uf.unite(l, uf.tree_parent(l));
                    } else {
                        uf.add_edge(l, entry[c]);
                        uf.unite(l, entry[c]);
                    }
                }
                ++mg_gen[loc[s->forest.base(c)]];
            }
            clock.freeze_z(c, now);
            ++gen_d[c];
            ++gen_g[c];
        }
        for (int c : children)
            if (c != Z) uf.unite(entry[c], fpx[c]);

        const int zentry = entry[Z], zpe = fpe[Z], zpx = fpx[Z];
        int B = shrink_blossom(*s, children, std::move(cycle));
        ensure_nodes();
        label[B] = kOuter;
        set_tree(B, tree_of(Z));
        entry[B] = zentry;
        fpe[B] = zpe;
        fpx[B] = zpx;
        ++gen_g[B];
        ++gen_d[B];
        clock.reset_node(B, 0, now);
        clock.set_outer(B, now);
        shadow_z[B] = 0;
        touch(B);
        outer_node[uf.find(zentry)] = B;
        ++res.blossoms;
        if (p->trace != nullptr && p->trace->enabled(TraceLevel::All)) {
            std::ostringstream os;
            os << "node=" << B << " size=" << s->forest.size(B) << " children=" << children.size() << ' ' << edge_text(e);
            trace("BLOSSOM", os.str());
        }
        for (int l : fresh) scan(l);
    }

    // Splits the SFM list of a dissolving node into one list per child.
    void split_children(const std::vector<int>& kids) {
        std::vector<int> order(kids);
        std::sort(order.begin(), order.end(), [&](int a, int b) { return first[a] < first[b]; });
        for (std::size_t i = 0; i + 1 < order.size(); ++i) sfm.split(last[order[i]]);
        if (list_node.size() < static_cast<std::size_t>(sfm.list_count())) list_node.resize(sfm.list_count(), kNone);
        for (int c : kids) list_node[list_of(c)] = c;
    }

    void expose_children(int node, const std::vector<int>& kids) {
        split_children(kids);
        for (int c : kids) {
            Weight z0 = s->forest.z(c);
            clock.inherit(c, node, z0, now);
            label[c] = kUnlabeled;
            set_tree(c, kNone);
            entry[c] = fpe[c] = fpx[c] = kNone;
            ++gen_g[c];
            ++gen_d[c];
            shadow_z[c] = z0;
            touch(c);
        }
    }

    void release_unlabeled(int c) {
        if (s->forest.is_blossom(c) && s->forest.z(c) == 0) {
            std::vector<int> kids = s->forest.children(c);
            s->forest.dissolve(c);
            ++res.dissolves;
            expose_children(c, kids);
            for (int k2 : kids) release_unlabeled(k2);
            return;
        }
        schedule_from_findmin(c);
    }

    void on_dissolve(const Event& ev) {
        int node = ev.a;
        if (ev.gen != gen_d[node] || !is_root(node) || label[node] != kInner || !s->forest.is_blossom(node) ||
            retired(node)) {
            ++res.stale;
            return;
        }
        MWPM_CHECK(clock.z(node, now) == 0, "dissolving a blossom with nonzero z");
        ++res.dissolves;
        if (p->trace != nullptr) trace("DISSOLVE", "node=" + std::to_string(node));

        BlossomForest& f = s->forest;
        std::vector<int> kids = f.children(node);
        std::vector<CycleEdge> cy = f.cycle(node);
        const int len = static_cast<int>(kids.size());
        const int l0 = entry[node];
        const int pe = fpe[node], px = fpx[node];
        const int t = tree_of(node);
        int j = 0;
        {
            int c = f.child_containing(node, verts[l0]);
            while (kids[j] != c) ++j;
        }
        f.set_z(node, 0);
        f.dissolve(node);
        expose_children(node, kids);

        std::vector<char> on_path(len, 0);
        std::vector<int> outer_kids;
        int pos = 0;
        int idx = j;
        while (true) {
            int c = kids[idx];
            on_path[idx] = 1;
            set_tree(c, t);
            if (pos == 0) {
                entry[c] = l0;
                fpe[c] = pe;
                fpx[c] = px;
            }
            if (pos % 2 == 0) {
                label[c] = kInner;
                clock.set_inner(c, now);
                if (f.is_blossom(c)) schedule_dissolve(c);
            } else {
                label[c] = kOuter;
                outer_kids.push_back(c);
            }
            if (idx == 0) break;
            int nxt;
            if (j % 2 == 1) {
                nxt = (idx + 1) % len;
                const CycleEdge& ce = cy[idx];
                fpe[kids[nxt]] = ce.edge;
                fpx[kids[nxt]] = loc[ce.lo];
                entry[kids[nxt]] = loc[ce.hi];
            } else {
                nxt = idx - 1;
                const CycleEdge& ce = cy[nxt];
                fpe[kids[nxt]] = ce.edge;
                fpx[kids[nxt]] = loc[ce.hi];
                entry[kids[nxt]] = loc[ce.lo];
            }
            idx = nxt;
            ++pos;
        }
        for (int i = 0; i < len; ++i)
            if (!on_path[i]) release_unlabeled(kids[i]);

        for (int c : outer_kids) {
            int b = loc[f.base(c)];
            MWPM_CHECK(entry[c] == b, "outer child entered away from its base");
            for (int l = first[c]; l <= last[c]; ++l) {
                if (l == b) continue;
                if (uf.in_tree(l)) {
                    uf.unite(l, uf.tree_parent(l));
                } else {
                    uf.add_edge(l, b);
                    uf.unite(l, b);
                }
            }
            outer_node[uf.find(b)] = c;
            for (int l = first[c]; l <= last[c]; ++l) clock.freeze_outer(l, c, now);
            clock.set_outer(c, now);
        }
        for (int c : outer_kids)
            for (int l = first[c]; l <= last[c]; ++l) scan(l);
    }

    void process(EventKind max_kind) {
        Event ev;
        while (!halted && q.pop(now, max_kind, ev)) {
            ++res.events;
            switch (ev.kind) {
                case EventKind::Dissolve: on_dissolve(ev); break;
                case EventKind::Grow:
                    if (ev.sub == 0)
                        on_grow_unmatched(ev);
                    else
                        on_grow_matched(ev);
                    break;
                case EventKind::Blossom: on_blossom(ev); break;
            }
        }
    }

    // Eager copy of the duals, advanced unit by unit from the labels.
    void shadow_advance(Weight t) {
        Weight dt = t - shadow_t;
        std::vector<int> roots;
        ++walk;
        for (int l = 0; l < k; ++l) {
            int node = node_of(l);
            if (clock.outer(l))
                shadow_y[l] -= dt;
            else if (label[node] == kInner)
                shadow_y[l] += dt;
            if (mark[node] != walk) {
                mark[node] = walk;
                roots.push_back(node);
            }
        }
        for (int node : roots) {
            if (!s->forest.is_blossom(node)) continue;
            if (label[node] == kOuter) shadow_z[node] += 2 * dt;
            if (label[node] == kInner) shadow_z[node] -= 2 * dt;
        }
        shadow_t = t;
        Weight saved = now;
        now = t;
        for (int l = 0; l < k; ++l)
            MWPM_CHECK(shadow_y[l] == y_now(l), "timestamp y disagrees with the eager copy at vertex " + std::to_string(verts[l]));
        for (int node : roots) {
            if (!s->forest.is_blossom(node)) continue;
            MWPM_CHECK(shadow_z[node] == clock.z(node, t), "timestamp z disagrees with the eager copy at node " + std::to_string(node));
        }
        now = saved;
        ++res.shadow_checks;
    }

    // Every non-outer element's key equals the least slack* to an outer neighbour, up to its list offset.
    void key_check(Weight t) {
        Weight saved = now;
        now = t;
        for (int l = 0; l < k; ++l) {
            if (clock.outer(l)) continue;
            int node = list_node[sfm.list(l)];
            Weight best = kInfinity;
            for (int e : s->incident(verts[l])) {
                if (s->is_matched_edge(e)) continue;
                int g = s->other(e, verts[l]);
                if (!active(g) || !clock.outer(loc[g])) continue;
                best = std::min(best, slack_star(slack_now(e), crit, false));
            }
            Weight key = sfm.key(l);
            if (best >= kInfinity) {
                MWPM_CHECK(key >= kInfinity, "key set without an outer neighbour at vertex " + std::to_string(verts[l]));
                continue;
            }
            Weight have = key - (t - clock.shift(node, t));
            MWPM_CHECK(have == best, "split-findmin key out of step at vertex " + std::to_string(verts[l]));
        }
        now = saved;
        ++res.key_checks;
    }

    void init(const std::vector<int>& act) {
        BlossomForest& f = s->forest;
        ensure_nodes();
        for (int v : act) {
            MWPM_REQUIRE(v >= 0 && v < s->vertex_capacity() && s->alive(v), "active vertex is not live");
            vstamp[v] = run;
        }
        std::vector<int> roots;
        std::vector<int>& chain = scratch;
        for (int v : act) {
            int x = v;
            chain.clear();
            while (true) {
                if (memo_stamp[x] == run) break;
                chain.push_back(x);
                int par = f.parent(x);
                if (par == kNone || !f.is_current(par)) break;
                x = par;
            }
            int r = memo_stamp[x] == run ? memo_root[x] : x;
            if (memo_stamp[x] != run) roots.push_back(r);
            for (int c : chain) {
                memo_stamp[c] = run;
                memo_root[c] = r;
            }
        }
        int par0 = f.parent(roots.empty() ? 0 : roots.front());
        for (int r : roots)
            MWPM_REQUIRE(f.parent(r) == par0, "active roots must share their enclosing inherited blossom");
        inh = 0;
        for (int a = par0; a != kNone; a = f.parent(a)) inh += f.z(a);

        k = 0;
        verts.clear();
        std::vector<std::pair<int, bool>> stack;
        for (int r : roots) {
            stack.emplace_back(r, false);
            while (!stack.empty()) {
                auto [x, done] = stack.back();
                stack.pop_back();
                if (f.is_vertex(x)) {
                    MWPM_REQUIRE(vstamp[x] == run, "a search root blossom is only partly active");
                    loc[x] = k;
                    first[x] = last[x] = k;
                    verts.push_back(x);
                    ++k;
                    continue;
                }
                if (done) {
                    last[x] = k - 1;
                    continue;
                }
                first[x] = k;
                stack.emplace_back(x, true);
                const auto& ch = f.children(x);
                for (auto it = ch.rbegin(); it != ch.rend(); ++it) stack.emplace_back(*it, false);
            }
        }
        MWPM_REQUIRE(k == static_cast<int>(act.size()), "duplicate active vertices");

        sfm.init(k);
        uf.init(k);
        clock.resize_vertices(k);
        y0.resize(k);
        mg_gen.assign(k, 0);
        outer_node.assign(k, kNone);
        list_node.assign(k + 1, kNone);
        for (std::size_t i = 0; i + 1 < roots.size(); ++i) sfm.split(last[roots[i]]);
        for (int r : roots) list_node[list_of(r)] = r;
        for (int l = 0; l < k; ++l) y0[l] = s->y[verts[l]];
        touched.clear();
        for (int r : roots) {
            clock.reset_node(r, f.z(r), 0);
            label[r] = kUnlabeled;
            set_tree(r, kNone);
            entry[r] = fpe[r] = fpx[r] = kNone;
            ++gen_g[r];
            ++gen_d[r];
            shadow_z[r] = f.z(r);
            touch(r);
        }
        if (p->check) {
            shadow_y = y0;
            shadow_t = 0;
        }
    }

    void materialize(const std::vector<int>& act) {
        for (int l = 0; l < k; ++l) s->y[verts[l]] = y_now(l);
        for (int node : touched) {
            if (!s->forest.is_blossom(node)) continue;
            Weight z = clock.z(node, now);
            MWPM_CHECK(z >= 0, "negative z at node " + std::to_string(node));
            s->forest.set_z(node, z);
        }
        if (p->collect_searched) {
            res.searched.clear();
            for (int l = 0; l < k; ++l) {
                bool hit = clock.outer(l) || uf.in_tree(l) || label[list_node[sfm.list(l)]] != kUnlabeled;
                if (hit) res.searched.push_back(verts[l]);
            }
        }
        dissolve_zero_roots(*s, &act);
    }
};

SearchResult SearchEngine::Impl::run_search(SolverState& st, const SearchParams& prm) {
    s = &st;
    p = &prm;
    crit = prm.criterion;
    res = SearchResult{};
    halted = false;
    now = 0;
    budget = prm.budget;
    MWPM_REQUIRE(budget >= 0, "negative adjustment budget");
    MWPM_REQUIRE(!prm.multi_augment || budget == 0, "multi_augment needs a zero budget");
    tree_dead.clear();
    ++run;
    if (run == 0) {
        std::fill(vstamp.begin(), vstamp.end(), 0);
        std::fill(touched_stamp.begin(), touched_stamp.end(), 0);
        std::fill(memo_stamp.begin(), memo_stamp.end(), 0);
        run = 1;
    }
    if (vstamp.size() < static_cast<std::size_t>(st.vertex_capacity())) {
        vstamp.resize(st.vertex_capacity(), 0);
        loc.resize(st.vertex_capacity(), kNone);
    }

    std::vector<int> act;
    if (prm.active != nullptr) {
        act = *prm.active;
    } else {
        for (int v = 0; v < st.vertex_capacity(); ++v)
            if (st.alive(v)) act.push_back(v);
    }
    dissolve_zero_roots(st, &act);
    if (act.empty()) {
        res.status = SearchStatus::NoAugmentingPath;
        return res;
    }
    init(act);

    QueueKind qk = QueueKind::Ordered;
    if (prm.queue == QueueChoice::Bucket) {
        MWPM_REQUIRE(budget < kInfinity, "bucket queue needs a finite budget");
        qk = QueueKind::Bucket;
    } else if (prm.queue == QueueChoice::Auto && budget <= kBucketLimit) {
        qk = QueueKind::Bucket;
    }
    q.reset(qk, budget);

    std::vector<int> roots;
    if (prm.roots != nullptr) {
        roots = *prm.roots;
    } else {
        for (int l = 0; l < k; ++l)
            if (st.is_free(verts[l])) roots.push_back(verts[l]);
    }
    for (std::size_t i = 0; i < roots.size(); ++i) {
        int r = roots[i];
        MWPM_REQUIRE(active(r) && st.is_free(r), "search roots must be free active vertices");
        MWPM_CHECK(((st.y[r] - st.y[roots[0]]) % 2) == 0, "search roots differ in y parity");
    }
    for (int r : roots) {
        int node = memo_root[r];
        MWPM_CHECK(st.forest.base(node) == r, "free vertex is not the base of its blossom");
        if (label[node] == kOuter) continue;
        if (prm.trace != nullptr) trace("GROW", "root=" + std::to_string(r));
        make_outer(node, kNone, kNone);
    }

    process(EventKind::Blossom);
    while (!halted) {
        if (now == budget) {
            res.status = SearchStatus::BudgetExhausted;
            break;
        }
        Weight nt = q.next_time();
        if (nt >= kInfinity) {
            if (budget >= kInfinity) {
                res.status = SearchStatus::NoAugmentingPath;
                break;
            }
            nt = budget;
        }
        Weight next = std::min(nt, budget);
        if (prm.check) {
            shadow_advance(next);
            key_check(next);
        }
        now = next;
        process(now == budget ? EventKind::Dissolve : EventKind::Blossom);
    }
    if (res.augmentations > 0) res.status = SearchStatus::Augmented;
    res.adjustments = now;
    materialize(act);
    return res;
}

SearchEngine::SearchEngine() : impl_(std::make_unique<Impl>()) {}
SearchEngine::~SearchEngine() = default;
SearchEngine::SearchEngine(SearchEngine&&) noexcept = default;
SearchEngine& SearchEngine::operator=(SearchEngine&&) noexcept = default;

SearchResult SearchEngine::run(SolverState& s, const SearchParams& p) { return impl_->run_search(s, p); }

SearchResult edmonds_search(SolverState& s, const SearchParams& p) {
    SearchEngine engine;
    return engine.run(s, p);
}

}  // namespace mwpm
