#include "mwpm/hybrid.hpp"

#include <algorithm>
#include <cmath>

#include "mwpm/duals.hpp"
#include "mwpm/verification.hpp"

namespace mwpm {

namespace {

int floor_log2(int x) {
    int r = 0;
    while (x > 1) {
        x >>= 1;
        ++r;
    }
    return r;
}

class Dismantler {
public:
    Dismantler(SolverState& s, SearchEngine& engine, const GabowOptions& o, GabowCounters& c)
        : s_(s), engine_(engine), o_(o), c_(c), st_iter_(s.vertex_capacity(), 0), st_call_(s.vertex_capacity(), 0) {}

    void run(int b) {
        MWPM_REQUIRE(s_.forest.is_inherited(b), "gabow_dissolve needs an old blossom");
        MWPM_REQUIRE(s_.forest.parent(b) == kNone, "gabow_dissolve needs a maximal old blossom");
        snapshot(b);
        const std::vector<int> verts = s_.forest.leaves(b);
        if (o_.check) {
            for (int v : verts) MWPM_CHECK(!s_.is_free(v) || (s_.y[v] & 1) != 0, "free vertex with even y");
            check_entry();
            y0_.assign(s_.vertex_capacity(), 0);
            for (int v : verts) y0_[v] = s_.y[v];
            dual_ = dual_objective(s_);
        }
        const Weight entry_dual = o_.check ? dual_ : 0;

        std::vector<int> pre;
        std::vector<int> stack{0};
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            pre.push_back(x);
            for (int k : nodes_[x].kids) stack.push_back(k);
        }
        check_ranks();
        for (auto it = pre.rbegin(); it != pre.rend(); ++it)
            if (is_path_root(*it)) dismantle_path(*it);

        for (const Node& nd : nodes_)
            MWPM_CHECK(!s_.forest.is_blossom(nd.id) || s_.forest.serial(nd.id) != nd.serial,
                       "an old blossom survived dismantling");
        if (o_.check) {
            for (int v : verts) {
                MWPM_CHECK(s_.y[v] >= y0_[v], "y fell below its entry value during dismantling");
                MWPM_CHECK(!s_.is_free(v) || (s_.y[v] & 1) != 0, "free vertex with even y after dismantling");
            }
            MWPM_CHECK(dual_objective(s_) <= entry_dual, "dual objective rose during dismantling");
            InvariantReport rep = check_state(s_, CertMode::Mixed);
            MWPM_CHECK(rep.ok(), "after dismantling: " + rep.summary(5));
        }
    }

private:
    struct Node {
        int id = kNone;
        std::uint32_t serial = 0;
        int size = 0;
        int parent = -1;
        int major = -1;
        std::vector<int> kids;
    };

    void snapshot(int b) {
        nodes_.clear();
        std::vector<int> stack;
        auto add = [&](int id, int parent) {
            Node nd;
            nd.id = id;
            nd.serial = s_.forest.serial(id);
            nd.size = s_.forest.size(id);
            nd.parent = parent;
            nodes_.push_back(nd);
            int idx = static_cast<int>(nodes_.size()) - 1;
            if (parent >= 0) nodes_[parent].kids.push_back(idx);
            stack.push_back(idx);
        };
        add(b, -1);
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            for (int ch : s_.forest.children(nodes_[x].id)) {
                if (s_.forest.is_vertex(ch)) continue;
                MWPM_CHECK(s_.forest.is_inherited(ch), "current blossom inside an old blossom");
                add(ch, x);
            }
        }
        for (Node& nd : nodes_)
            for (int k : nd.kids)
                if (2 * nodes_[k].size > nd.size) nd.major = k;
    }

    bool is_path_root(int x) const { return nodes_[x].parent < 0 || nodes_[nodes_[x].parent].major != x; }

    void check_ranks() const {
        for (int x = 0; x < static_cast<int>(nodes_.size()); ++x) {
            if (!is_path_root(x)) continue;
            const int rank = floor_log2(nodes_[x].size);
            for (int a = nodes_[x].parent; a >= 0; a = nodes_[a].parent)
                if (is_path_root(a))
                    MWPM_CHECK(floor_log2(nodes_[a].size) != rank, "nested major path roots share a rank");
        }
    }

    void check_entry() const {
        for (const Node& nd : nodes_)
            for (const CycleEdge& ce : s_.forest.cycle(nd.id))
                MWPM_CHECK(slack(s_, ce.edge) <= 6, "old blossom edge exceeds the entry slack bound");
        InvariantReport rep = check_state(s_, CertMode::Mixed);
        MWPM_CHECK(rep.ok(), "before dismantling: " + rep.summary(5));
    }

    bool alive_pos(int j) const { return alive_[j] != 0; }

    int outer_alive(int j) const {
        for (int i = j; i >= 0; --i)
            if (alive_[i]) return i;
        return -1;
    }

    int inner_alive(int j) const {
        for (int i = j; i < static_cast<int>(path_.size()); ++i)
            if (alive_[i]) return i;
        return -1;
    }

    std::vector<int> shell_vertices(int ci, int di) const {
        if (di < 0) return pverts_[ci];
        std::vector<int> out;
        std::set_difference(pverts_[ci].begin(), pverts_[ci].end(), pverts_[di].begin(), pverts_[di].end(),
                            std::back_inserter(out));
        return out;
    }

    std::vector<int> free_in(const std::vector<int>& vs) const {
        std::vector<int> out;
        for (int v : vs)
            if (s_.is_free(v)) out.push_back(v);
        return out;
    }

    int blossom_at(int j) const {
        const Node& nd = nodes_[path_[j]];
        MWPM_CHECK(s_.forest.is_blossom(nd.id) && s_.forest.serial(nd.id) == nd.serial,
                   "major path blossom vanished");
        return nd.id;
    }

    void kill(int j) {
        liquidate(s_, blossom_at(j));
        alive_[j] = 0;
    }

    // True when some vertex of vs was searched by another call of this iteration.
    bool absorbed(const std::vector<int>& vs) const {
        for (int v : vs)
            if (st_iter_[v] == iteration_ && st_call_[v] != call_) return true;
        return false;
    }

    void stamp(const std::vector<int>& vs) {
        for (int v : vs) {
            st_iter_[v] = iteration_;
            st_call_[v] = call_;
        }
    }

    SearchParams params() const {
        SearchParams p;
        p.criterion = Criterion::Tight;
        p.check = o_.engine_check;
        p.trace = o_.trace;
        return p;
    }

    SearchResult search(const SearchParams& p) {
        SearchResult r = engine_.run(s_, p);
        ++c_.search_calls;
        c_.dual_adjustments += r.adjustments;
        c_.shadow_checks += r.shadow_checks;
        c_.key_checks += r.key_checks;
        return r;
    }

    void audit_phase(const std::vector<int>& scope) {
        ++c_.phase_audits;
        InvariantReport rep = check_state(s_, CertMode::Mixed);
        MWPM_CHECK(rep.ok(), "shell phase: " + rep.summary(5));
        for (int v : scope) {
            MWPM_CHECK(s_.y[v] >= y0_[v], "y fell below its entry value in a shell");
            MWPM_CHECK(!s_.is_free(v) || (s_.y[v] & 1) != 0, "free vertex with even y in a shell");
        }
        Weight d = dual_objective(s_);
        MWPM_CHECK(d <= dual_, "dual objective rose during a shell phase");
        dual_ = d;
    }

    void shell_search(int ci, int di) {
        ++call_;
        int cs = outer_alive(ci);
        if (cs < 0) return;
        int ds = di < 0 ? -1 : inner_alive(di);
        std::vector<int> shell = shell_vertices(cs, ds);
        if (absorbed(shell)) {
            ++c_.absorbed_halts;
            return;
        }
        std::vector<int> roots = free_in(shell);
        if (roots.size() < 2) return;
        stamp(shell);
        ++c_.shells_searched;
        Weight total = 0;
        for (;;) {
            const int cb = blossom_at(cs);
            const int db = ds < 0 ? kNone : blossom_at(ds);
            Weight budget = s_.forest.z(cb) / 2;
            if (db != kNone) budget = std::min(budget, s_.forest.z(db) / 2);
            SearchParams p = params();
            p.roots = &roots;
            p.active = &shell;
            p.budget = budget;
            SearchResult r = search(p);
            ++c_.shell_phases;
            const Weight k = r.adjustments;
            translate(s_, cb, k);
            if (db != kNone) translate(s_, db, k);
            total += k;
            c_.shell_adjustments += k;

            ++c_.budget_checks;
            const double ratio = static_cast<double>(total) / (3.0 * static_cast<double>(pverts_[cs].size()));
            c_.max_shell_ratio = std::max(c_.max_shell_ratio, ratio);
            MWPM_CHECK(total <= 3 * static_cast<Weight>(pverts_[cs].size()), "shell search exceeded 3 n(C*) adjustments");
            if (o_.check) audit_phase(pverts_[0]);

            if (r.status == SearchStatus::Augmented) {
                c_.augmentations += 1 + find_maximal_augmenting_set(s_, engine_, Criterion::Tight, &shell,
                                                                    o_.engine_check, o_.trace);
                if (o_.check) audit_phase(pverts_[0]);
                return;
            }
            MWPM_CHECK(r.status == SearchStatus::BudgetExhausted, "shell search ran out of events");
            if (db != kNone && s_.forest.z(db) == 0) {
                kill(ds);
                ds = inner_alive(ds + 1);
            }
            if (s_.forest.z(cb) == 0) {
                kill(cs);
                int next = outer_alive(cs - 1);
                if (next < 0) {
                    ++c_.outermost_halts;
                    return;
                }
                cs = next;
            }
            shell = shell_vertices(cs, ds);
            if (absorbed(shell)) {
                ++c_.absorbed_halts;
                return;
            }
            stamp(shell);
            roots = free_in(shell);
        }
    }

    void check_path_only(int root) const {
        std::vector<char> on(s_.forest.capacity(), 0);
        for (int j : path_) on[nodes_[j].id] = 1;
        const int rid = nodes_[root].id;
        for (int v : pverts_[0]) {
            for (int a = s_.forest.parent(v); a != kNone && a != rid; a = s_.forest.parent(a))
                MWPM_CHECK(!s_.forest.is_inherited(a) || on[a], "old blossom off the major path is still undissolved");
        }
    }

    void dismantle_path(int root) {
        ++c_.paths_dismantled;
        path_.clear();
        for (int x = root; x >= 0; x = nodes_[x].major) path_.push_back(x);
        const int len = static_cast<int>(path_.size());
        alive_.assign(len, 1);
        pverts_.assign(len, {});
        for (int j = 0; j < len; ++j) {
            pverts_[j] = s_.forest.leaves(blossom_at(j));
            std::sort(pverts_[j].begin(), pverts_[j].end());
        }
        if (o_.check) check_path_only(root);

        const int cap = static_cast<int>(pverts_[0].size()) + len + 2;
        for (int it = 0;; ++it) {
            MWPM_CHECK(it <= cap, "dismantling made no progress");
            std::vector<int> und;
            for (int j = 0; j < len; ++j)
                if (alive_[j]) und.push_back(j);
            struct Shell {
                int c, d;
                std::size_t size, free;
            };
            std::vector<Shell> shells;
            for (std::size_t i = 0; i < und.size(); ++i) {
                int d = i + 1 < und.size() ? und[i + 1] : -1;
                std::vector<int> vs = shell_vertices(und[i], d);
                std::size_t f = free_in(vs).size();
                if (f >= 2) shells.push_back({und[i], d, vs.size(), f});
            }
            if (shells.empty()) break;
            std::stable_sort(shells.begin(), shells.end(), [](const Shell& a, const Shell& b) {
                if (a.free != b.free) return a.free > b.free;
                return a.size < b.size;
            });
            ++iteration_;
            ++c_.stage1_iterations;
            for (const Shell& sh : shells) shell_search(sh.c, sh.d);
        }

        std::vector<int> und;
        for (int j = 0; j < len; ++j)
            if (alive_[j]) und.push_back(j);
        if (und.empty()) return;
        std::vector<int> lone = free_in(pverts_[und.back()]);
        MWPM_CHECK(lone.size() == 1, "innermost undissolved blossom must hold exactly one free vertex");
        const int omega = lone.front();
        const Weight y_omega = s_.y[omega];
        Weight t = 0;
        for (int j : und) t += s_.forest.z(blossom_at(j)) / 2;
        const std::vector<int> active = pverts_[und.front()];
        for (auto it = und.rbegin(); it != und.rend(); ++it) kill(*it);
        ++c_.stage2_runs;
        if (t > 0) {
            SearchParams p = params();
            std::vector<int> roots{omega};
            p.roots = &roots;
            p.active = &active;
            p.budget = t;
            p.allow_augment = false;
            SearchResult r = search(p);
            MWPM_CHECK(r.status == SearchStatus::BudgetExhausted && r.adjustments == t,
                       "final single-vertex search stopped early");
        }
        MWPM_CHECK(s_.y[omega] == y_omega, "lone free vertex did not return to its y value");
        if (o_.check) audit_phase(pverts_[0]);
    }

    SolverState& s_;
    SearchEngine& engine_;
    GabowOptions o_;
    GabowCounters& c_;
    std::vector<Node> nodes_;
    std::vector<int> path_;
    std::vector<char> alive_;
    std::vector<std::vector<int>> pverts_;
    std::vector<std::int64_t> st_iter_;
    std::vector<std::int64_t> st_call_;
    std::int64_t iteration_ = 0;
    std::int64_t call_ = 0;
    std::vector<Weight> y0_;
    Weight dual_ = 0;
};

}  // namespace

void gabow_dissolve(SolverState& s, SearchEngine& engine, int b, const GabowOptions& opts, GabowCounters* counters) {
    GabowCounters local;
    Dismantler d(s, engine, opts, counters != nullptr ? *counters : local);
    d.run(b);
}

SolveResult run_hybrid(const Graph& g, const DriverOptions& opts) {
    const int n = g.vertex_count();
    const int tau = opts.tau > 0 ? opts.tau : default_tau_hybrid(n);
    ScaleContext ctx(g, tau, opts, "hybrid");
    SolverState& s = ctx.state();
    GabowOptions go;
    go.check = opts.check_invariants;
    go.engine_check = opts.engine_check;
    go.trace = opts.trace;
    int rounds = 1;
    while (static_cast<long long>(rounds) * rounds < n) ++rounds;

    for (int i = 1; i <= ctx.scale_count(); ++i) {
        ctx.begin_scale(i);
        ctx.liquidate_large();

        GabowCounters gc;
        for (int b : s.forest.root_blossoms()) {
            if (!s.forest.is_inherited(b)) continue;
            ++ctx.stats().gabow_calls;
            gabow_dissolve(s, ctx.engine(), b, go, &gc);
            if (opts.check_invariants) ++ctx.report().audits.gabow_audits;
        }
        for (int b : s.forest.blossoms())
            MWPM_CHECK(!s.forest.is_inherited(b), "old blossoms remain after small blossom dissolution");
        ScaleStats& st = ctx.stats();
        st.shells_searched = gc.shells_searched;
        st.shell_adjustments = gc.shell_adjustments;
        st.stage1_iterations = gc.stage1_iterations;
        st.search_calls += gc.search_calls;
        st.dual_adjustments += gc.dual_adjustments;
        RunReport& rep = ctx.report();
        rep.audits.gabow_phase_audits += gc.phase_audits;
        rep.audits.shell_budget_checks += gc.budget_checks;
        rep.audits.max_shell_ratio = std::max(rep.audits.max_shell_ratio, gc.max_shell_ratio);
        rep.audits.shadow_checks += gc.shadow_checks;
        rep.audits.key_checks += gc.key_checks;

        Weight delta = 0;
        for (int r = 0; r < rounds; ++r) delta += ctx.relaxed_round().adjustments;
        while (delta < tau && !s.perfect()) {
            SearchParams p = ctx.params(Criterion::Near);
            p.budget = tau - delta;
            SearchResult r = ctx.search(p);
            delta += r.adjustments;
            if (r.status != SearchStatus::Augmented) break;
        }
        ctx.audit_free_count();
        ctx.perfection([&](int u) { return -s.y[u]; });
        ctx.end_scale();
    }
    ctx.finalize();
    return ctx.result();
}

}  // namespace mwpm
