#pragma once

#include <vector>

#include "mwpm/certificate.hpp"
#include "mwpm/report.hpp"
#include "mwpm/search.hpp"
#include "mwpm/search_one.hpp"

namespace mwpm {

struct DriverOptions {
    // Size threshold between small and large blossoms; 0 selects the driver default.
    int tau = 0;
    // Verify certificates at every scale boundary and audit the driver steps.
    bool check_invariants = false;
    // Run every search with the eager dual copy and key rescans.
    bool engine_check = false;
    // Exhaustively confirm the augmentation step of every relaxed round.
    bool exhaustive_search_one = false;
    Trace* trace = nullptr;
};

struct SolveResult {
    Matching matching;
    Weight weight = 0;
    // Final duals over the original graph with weights 2(n/2+1)w.
    Certificate certificate;
    RunReport report;
};

int default_tau_liquidationist(int n);
int default_tau_hybrid(int n);

// State and steps shared by both scaling drivers.
class ScaleContext {
public:
    ScaleContext(const Graph& g, int tau, const DriverOptions& opts, const char* algorithm);

    const Graph& graph() const { return g_; }
    SolverState& state() { return s_; }
    SearchEngine& engine() { return engine_; }
    const DriverOptions& options() const { return opts_; }
    RunReport& report() { return report_; }
    ScaleStats& stats() { return report_.per_scale.back(); }
    int tau() const { return tau_; }
    int scale() const { return scale_; }
    int scale_count() const { return scales_.scale_count; }
    int n() const { return g_.vertex_count(); }

    // Matching cleared, old blossoms marked inherited, w, y and z rescaled.
    void begin_scale(int i);
    // Liquidates every inherited blossom with at least tau vertices.
    void liquidate_large();
    // w(u,v) -= y(u) + y(v); y = 0.
    void reweight();
    // Search parameters with the context's check and trace settings.
    SearchParams params(Criterion c) const;
    SearchResult search(const SearchParams& p);
    SearchOneResult relaxed_round();
    // Records the free count after free vertex reduction and checks f tau <= 10n.
    void audit_free_count();
    // Deletes free dummies and matches each free vertex to a new pendant whose
    // y is chosen by the driver.
    template <class DummyY>
    void perfection(DummyY dummy_y);
    // Certificate, perfection and large-z checks at the end of a scale.
    void end_scale();
    // Removes dummies and rematches the freed vertices.
    void finalize();
    SolveResult result();

    Weight large_z_sum() const;
    void check_weights() const;

private:
    void attach_dummy(int u, Weight y);

    const Graph& g_;
    DriverOptions opts_;
    int tau_;
    SolverState s_;
    WeightScales scales_;
    std::vector<Weight> phi_;
    SearchEngine engine_;
    RunReport report_;
    int scale_ = 0;
    double t0_ = 0;
};

template <class DummyY>
void ScaleContext::perfection(DummyY dummy_y) {
    for (int d : s_.dummies())
        if (s_.is_free(d)) s_.remove_dummy(d);
    for (int u = 0; u < s_.n(); ++u)
        if (s_.is_free(u)) attach_dummy(u, dummy_y(u));
}

}  // namespace mwpm
