#include "mwpm/scaling.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>

#include "mwpm/duals.hpp"
#include "mwpm/verification.hpp"

namespace mwpm {

namespace {

double now_ms() {
    using namespace std::chrono;
    return duration<double, std::milli>(steady_clock::now().time_since_epoch()).count();
}

int ceil_sqrt(int n) {
    int r = static_cast<int>(std::sqrt(static_cast<double>(n)));
    while (r > 0 && static_cast<long long>(r) * r >= n) --r;
    while (static_cast<long long>(r) * r < n) ++r;
    return r;
}

}  // namespace

int default_tau_liquidationist(int n) { return std::max(1, ceil_sqrt(n)); }

int default_tau_hybrid(int n) {
    const int lo = std::max(1, ceil_sqrt(n));
    long long hi = 1;
    while (hi * hi * hi < static_cast<long long>(n) * n) ++hi;
    const double want = std::sqrt(static_cast<double>(n)) * std::log2(static_cast<double>(std::max(n, 2)));
    long long t = static_cast<long long>(std::ceil(want - 1e-9));
    t = std::min(t, std::max<long long>(hi, lo));
    t = std::max<long long>(t, lo);
    return static_cast<int>(t);
}

ScaleContext::ScaleContext(const Graph& g, int tau, const DriverOptions& opts, const char* algorithm)
    : g_(g), opts_(opts), tau_(tau), s_(g), scales_(init_scales(g)), phi_(2 * g.vertex_count(), 0) {
    MWPM_REQUIRE(tau_ >= 1, "tau must be positive");
    report_.algorithm = algorithm;
    report_.tau = tau_;
    report_.n = g.vertex_count();
    report_.m = g.edge_count();
    report_.max_weight = g.max_weight();
    report_.scales = scales_.scale_count;
    t0_ = now_ms();
}

void ScaleContext::begin_scale(int i) {
    scale_ = i;
    report_.per_scale.push_back(ScaleStats{});
    stats().scale = i;
    s_.clear_matching();
    s_.forest.mark_all_inherited();
    for (int e = 0; e < s_.edge_capacity(); ++e) {
        if (!s_.edge_alive(e)) continue;
        Weight d = e < s_.m() ? scales_.digit(e, i) : 0;
        s_.w[e] = 2 * (s_.w[e] + d);
    }
    for (int v = 0; v < s_.vertex_capacity(); ++v) {
        if (!s_.alive(v)) continue;
        s_.y[v] = 2 * s_.y[v] + 3;
        phi_[v] *= 2;
    }
    for (int b : s_.forest.blossoms()) s_.forest.set_z(b, 2 * s_.forest.z(b));
}

void ScaleContext::liquidate_large() {
    Weight total = 0;
    for (int b : s_.forest.blossoms()) {
        if (!s_.forest.is_inherited(b) || s_.forest.size(b) < tau_) continue;
        total += s_.forest.z(b);
        liquidate(s_, b);
    }
    stats().liquidated_large_z = total;
}

void ScaleContext::reweight() {
    for (int e = 0; e < s_.edge_capacity(); ++e) {
        if (!s_.edge_alive(e)) continue;
        s_.w[e] -= s_.y[s_.endpoint_u(e)] + s_.y[s_.endpoint_v(e)];
        MWPM_CHECK(s_.w[e] % 2 == 0, "odd weight after reweighting");
    }
    for (int v = 0; v < s_.vertex_capacity(); ++v) {
        if (!s_.alive(v)) continue;
        phi_[v] += s_.y[v];
        s_.y[v] = 0;
    }
    if (opts_.check_invariants) check_weights();
}

void ScaleContext::check_weights() const {
    for (int e = 0; e < s_.edge_capacity(); ++e) {
        if (!s_.edge_alive(e)) continue;
        Weight want = e < s_.m() ? 2 * scales_.prefix(e, scale_) : 0;
        Weight have = s_.w[e] + phi_[s_.endpoint_u(e)] + phi_[s_.endpoint_v(e)];
        MWPM_CHECK(have == want, "weight bookkeeping drifted on edge " + std::to_string(e));
    }
}

SearchParams ScaleContext::params(Criterion c) const {
    SearchParams p;
    p.criterion = c;
    p.check = opts_.engine_check;
    p.trace = opts_.trace;
    return p;
}

SearchResult ScaleContext::search(const SearchParams& p) {
    SearchResult r = engine_.run(s_, p);
    ++stats().search_calls;
    stats().dual_adjustments += r.adjustments;
    report_.audits.shadow_checks += r.shadow_checks;
    report_.audits.key_checks += r.key_checks;
    return r;
}

SearchOneResult ScaleContext::relaxed_round() {
    SearchOneParams p;
    p.check = opts_.engine_check;
    p.exhaustive = opts_.exhaustive_search_one;
    p.trace = opts_.trace;
    SearchOneResult r = search_one(s_, engine_, p);
    ++stats().search_calls;
    stats().dual_adjustments += r.adjustments;
    ++report_.audits.search_one_calls;
    if (r.exhaustive_checked) ++report_.audits.search_one_exhaustive;
    return r;
}

void ScaleContext::audit_free_count() {
    const long long f = static_cast<long long>(s_.free_vertices().size());
    stats().free_after_reduction = static_cast<int>(f);
    const long long bound = 10LL * n();
    ++report_.audits.free_count_checks;
    if (bound > 0)
        report_.audits.max_free_ratio =
            std::max(report_.audits.max_free_ratio, static_cast<double>(f * tau_) / static_cast<double>(bound));
    MWPM_CHECK(f * tau_ <= bound, "free vertex count " + std::to_string(f) + " exceeds 10n/tau");
}

void ScaleContext::attach_dummy(int u, Weight y) {
    int d = s_.add_dummy(u, scale_, 0);
    s_.y[d] = y;
    phi_[d] = -phi_[u];
    s_.set_mate(s_.dummy_edge(u));
    MWPM_CHECK(slack(s_, s_.dummy_edge(u)) == 0, "new pendant edge is not tight");
    ++stats().dummies_added;
}

Weight ScaleContext::large_z_sum() const {
    Weight t = 0;
    for (int b : s_.forest.blossoms())
        if (s_.forest.size(b) >= tau_) t += s_.forest.z(b);
    return t;
}

void ScaleContext::end_scale() {
    MWPM_CHECK(s_.perfect(), "matching is not perfect at the end of a scale");
    const Weight lz = large_z_sum();
    stats().large_z_end = lz;
    ++report_.audits.large_z_checks;
    if (n() > 0)
        report_.audits.max_large_z_ratio =
            std::max(report_.audits.max_large_z_ratio, static_cast<double>(lz) / (2.0 * n()));
    MWPM_CHECK(lz <= 2LL * n(), "large blossoms hold z=" + std::to_string(lz) + " above 2n");
    if (opts_.check_invariants) {
        InvariantReport rep = check_state(s_, CertMode::RCS, {true, true});
        MWPM_CHECK(rep.ok(), "scale " + std::to_string(scale_) + " certificate: " + rep.summary(5));
        stats().certified = true;
        ++report_.audits.scale_certificates;
        check_weights();
    }
}

void ScaleContext::finalize() {
    for (int d : s_.dummies()) s_.remove_dummy(d);
    std::vector<int> free = s_.free_vertices();
    report_.free_before_finalization = static_cast<int>(free.size());
    while (!free.empty()) {
        // One parity class per search keeps outer-outer slacks even.
        std::vector<int> roots;
        const Weight parity = s_.y[free.front()] & 1;
        for (int v : free)
            if ((s_.y[v] & 1) == parity) roots.push_back(v);
        SearchParams p = params(Criterion::Near);
        p.roots = &roots;
        SearchResult r = engine_.run(s_, p);
        ++report_.finalization_searches;
        report_.adjustments += r.adjustments;
        report_.audits.shadow_checks += r.shadow_checks;
        report_.audits.key_checks += r.key_checks;
        if (r.status != SearchStatus::Augmented) throw Infeasible("graph has no perfect matching");
        free = s_.free_vertices();
    }
    if (opts_.check_invariants) {
        InvariantReport rep = check_state(s_, CertMode::RCS, {true, true});
        MWPM_CHECK(rep.ok(), "final certificate: " + rep.summary(5));
        check_weights();
    }
}

SolveResult ScaleContext::result() {
    SolveResult r;
    r.matching = s_.original_matching();
    r.weight = matching_weight(g_, r.matching);
    r.certificate = certificate_from_state(s_, CertMode::RCS, "2wbar");
    Certificate& c = r.certificate;
    for (int v = 0; v < c.vertex_count; ++v) c.y[v] += phi_[v];
    for (int e = 0; e < static_cast<int>(c.edges.size()); ++e) {
        c.edges[e].w += phi_[c.edges[e].u] + phi_[c.edges[e].v];
        MWPM_CHECK(c.edges[e].w == 2 * scales_.wbar[e], "final weights differ from 2(n/2+1)w");
    }
    for (const ScaleStats& st : report_.per_scale) report_.adjustments += st.dual_adjustments;
    report_.weight = r.weight;
    if (opts_.check_invariants) {
        GapReport gap = check_optimality_gap(c, &g_);
        report_.verified = gap.ok ? "passed" : "failed";
        MWPM_CHECK(gap.ok, "optimality check failed: " + gap.detail);
    }
    report_.time_ms = now_ms() - t0_;
    r.report = report_;
    return r;
}

}  // namespace mwpm
