#pragma once

#include <cstdint>

#include "mwpm/graph.hpp"
#include "mwpm/scaling.hpp"

namespace mwpm {

struct GabowOptions {
    // Audit certificates, dual monotonicity and parities after every shell phase.
    bool check = false;
    bool engine_check = false;
    Trace* trace = nullptr;
};

struct GabowCounters {
    std::int64_t paths_dismantled = 0;
    std::int64_t shells_searched = 0;
    std::int64_t shell_phases = 0;
    Weight shell_adjustments = 0;
    std::int64_t stage1_iterations = 0;
    std::int64_t stage2_runs = 0;
    std::int64_t search_calls = 0;
    Weight dual_adjustments = 0;
    std::int64_t augmentations = 0;
    std::int64_t absorbed_halts = 0;
    std::int64_t outermost_halts = 0;
    std::int64_t phase_audits = 0;
    std::int64_t budget_checks = 0;
    double max_shell_ratio = 0;
    std::int64_t shadow_checks = 0;
    std::int64_t key_checks = 0;
};

// Dissolves every inherited blossom inside the inherited root blossom b by
// dismantling its major paths in postorder. Free vertices keep their y
// parity, no y value in b drops and the dual objective does not rise.
void gabow_dissolve(SolverState& s, SearchEngine& engine, int b, const GabowOptions& opts = {},
                    GabowCounters* counters = nullptr);

// Scaling driver that keeps old small blossoms and dismantles them in place.
// Throws Infeasible when g has no perfect matching.
SolveResult run_hybrid(const Graph& g, const DriverOptions& opts = {});

}  // namespace mwpm
