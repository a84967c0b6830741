#include "mwpm/report.hpp"

#include "json.hpp"

namespace mwpm {

std::string report_to_json(const RunReport& r, int indent) {
    nlohmann::json j;
    j["algorithm"] = r.algorithm;
    j["tau"] = r.tau;
    j["n"] = r.n;
    j["m"] = r.m;
    j["N"] = r.max_weight;
    j["scales"] = r.scales;
    j["weight"] = r.weight;
    j["adjustments"] = r.adjustments;
    j["finalization_searches"] = r.finalization_searches;
    j["free_before_finalization"] = r.free_before_finalization;
    j["time_ms"] = r.time_ms;
    j["verified"] = r.verified;
    nlohmann::json ps = nlohmann::json::array();
    for (const ScaleStats& s : r.per_scale) {
        nlohmann::json x;
        x["scale"] = s.scale;
        x["liquidated_large_z"] = s.liquidated_large_z;
        x["search_calls"] = s.search_calls;
        x["dual_adjustments"] = s.dual_adjustments;
        x["free_after_reduction"] = s.free_after_reduction;
        x["dummies_added"] = s.dummies_added;
        x["large_z_end"] = s.large_z_end;
        if (r.algorithm == "hybrid") {
            x["gabow_calls"] = s.gabow_calls;
            x["shells_searched"] = s.shells_searched;
            x["shell_adjustments"] = s.shell_adjustments;
            x["stage1_iterations"] = s.stage1_iterations;
        }
        x["certified"] = s.certified;
        ps.push_back(std::move(x));
    }
    j["per_scale"] = std::move(ps);
    const AuditCounters& a = r.audits;
    j["audits"] = {
        {"scale_certificates", a.scale_certificates},
        {"large_z_checks", a.large_z_checks},
        {"free_count_checks", a.free_count_checks},
        {"search_one_calls", a.search_one_calls},
        {"search_one_exhaustive", a.search_one_exhaustive},
        {"gabow_audits", a.gabow_audits},
        {"gabow_phase_audits", a.gabow_phase_audits},
        {"shell_budget_checks", a.shell_budget_checks},
        {"max_shell_ratio", a.max_shell_ratio},
        {"max_free_ratio", a.max_free_ratio},
        {"max_large_z_ratio", a.max_large_z_ratio},
        {"shadow_checks", a.shadow_checks},
        {"key_checks", a.key_checks},
    };
    return j.dump(indent);
}

}  // namespace mwpm
