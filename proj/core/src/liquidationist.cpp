#include "mwpm/liquidationist.hpp"

#include <algorithm>

#include "mwpm/duals.hpp"
#include "mwpm/verification.hpp"

namespace mwpm {

namespace {

// Matches free vertices inside one former small blossom until every free
// vertex there has y = 0.
void drain_old_blossom(ScaleContext& ctx, const std::vector<int>& verts) {
    SolverState& s = ctx.state();
    for (;;) {
        Weight top = 0;
        for (int v : verts)
            if (s.is_free(v)) top = std::max(top, s.y[v]);
        if (top <= 0) return;
        std::vector<int> roots;
        Weight next = 0;
        for (int v : verts) {
            if (!s.is_free(v)) continue;
            if (s.y[v] == top)
                roots.push_back(v);
            else
                next = std::max(next, s.y[v]);
        }
        SearchParams p = ctx.params(Criterion::Tight);
        p.roots = &roots;
        p.active = &verts;
        p.budget = top - next;
        SearchResult r = ctx.search(p);
        if (r.status == SearchStatus::NoAugmentingPath)
            MWPM_CHECK(false, "search inside a former small blossom ran out of events");
        if (ctx.options().check_invariants) {
            InvariantReport rep = check_state(s, CertMode::CS);
            MWPM_CHECK(rep.ok(), "small blossom liquidation: " + rep.summary(5));
        }
    }
}

}  // namespace

SolveResult run_liquidationist(const Graph& g, const DriverOptions& opts) {
    const int tau = opts.tau > 0 ? opts.tau : default_tau_liquidationist(g.vertex_count());
    ScaleContext ctx(g, tau, opts, "liquidationist");
    SolverState& s = ctx.state();
    for (int i = 1; i <= ctx.scale_count(); ++i) {
        ctx.begin_scale(i);
        ctx.liquidate_large();
        ctx.reweight();

        std::vector<std::vector<int>> olds;
        for (int b : s.forest.root_blossoms()) olds.push_back(s.forest.leaves(b));
        for (int b : s.forest.blossoms()) liquidate(s, b);
        std::stable_sort(olds.begin(), olds.end(),
                         [](const std::vector<int>& a, const std::vector<int>& b) { return a.size() < b.size(); });
        for (std::vector<int>& verts : olds) {
            std::sort(verts.begin(), verts.end());
            drain_old_blossom(ctx, verts);
        }

        for (int r = 0; r < tau; ++r) ctx.relaxed_round();
        ctx.audit_free_count();
        ctx.perfection([&](int u) {
            MWPM_CHECK(s.y[u] == -static_cast<Weight>(tau), "free vertex y differs from -tau before perfection");
            return static_cast<Weight>(tau);
        });
        ctx.end_scale();
    }
    ctx.finalize();
    return ctx.result();
}

}  // namespace mwpm
