#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mwpm/types.hpp"

namespace mwpm {

struct ScaleStats {
    int scale = 0;
    Weight liquidated_large_z = 0;
    std::int64_t search_calls = 0;
    Weight dual_adjustments = 0;
    int free_after_reduction = 0;
    int dummies_added = 0;
    Weight large_z_end = 0;
    // Hybrid only.
    std::int64_t gabow_calls = 0;
    std::int64_t shells_searched = 0;
    Weight shell_adjustments = 0;
    std::int64_t stage1_iterations = 0;
    // Set when certificates were checked at the scale boundary.
    bool certified = false;
};

// Counters for the runtime audits performed during a run.
struct AuditCounters {
    std::int64_t scale_certificates = 0;
    std::int64_t large_z_checks = 0;
    std::int64_t free_count_checks = 0;
    std::int64_t search_one_calls = 0;
    std::int64_t search_one_exhaustive = 0;
    std::int64_t gabow_audits = 0;
    std::int64_t gabow_phase_audits = 0;
    std::int64_t shell_budget_checks = 0;
    // Largest adjustments / (3 n(C*)) seen in a shell search.
    double max_shell_ratio = 0;
    // Largest f*tau / (10 n) seen after free vertex reduction.
    double max_free_ratio = 0;
    // Largest sum of large z / (2n) seen at a scale end.
    double max_large_z_ratio = 0;
    std::int64_t shadow_checks = 0;
    std::int64_t key_checks = 0;
};

struct RunReport {
    std::string algorithm;
    int tau = 0;
    int n = 0;
    int m = 0;
    Weight max_weight = 0;
    int scales = 0;
    Weight weight = 0;
    Weight adjustments = 0;
    std::int64_t finalization_searches = 0;
    int free_before_finalization = 0;
    double time_ms = 0;
    // "passed", "failed" or "skipped".
    std::string verified = "skipped";
    std::vector<ScaleStats> per_scale;
    AuditCounters audits;
};

std::string report_to_json(const RunReport& r, int indent = 2);

}  // namespace mwpm
