#pragma once

#include <string>
#include <vector>

#include "mwpm/certificate.hpp"
#include "mwpm/eligibility.hpp"

namespace mwpm {

inline constexpr int kOracleMaxVertices = 16;

struct OracleResult {
    bool feasible = false;
    Weight weight = 0;
    Matching matching;
};

// Exhaustive maximum-weight perfect matching. Refuses graphs with more than
// kOracleMaxVertices vertices. w overrides the graph's weights when given.
OracleResult brute_force_mwpm(const Graph& g, const std::vector<Weight>* w = nullptr);

struct Violation {
    std::string clause;
    int edge = kNone;
    int blossom = kNone;
    int vertex = kNone;
    std::string detail;
};

struct InvariantReport {
    std::vector<Violation> violations;
    bool ok() const { return violations.empty(); }
    std::string summary(std::size_t max_lines = 20) const;
};

struct CheckOptions {
    // Check the active-blossom clauses (skipped right after rescaling).
    bool active_blossoms = true;
    // Require every vertex to be matched.
    bool require_perfect = false;
};

// Checks every clause of the property selected by c.mode and reports all
// violations found.
InvariantReport check_invariants(const Certificate& c, const CheckOptions& opts = {});
InvariantReport check_state(const SolverState& s, CertMode mode, const CheckOptions& opts = {});

// sum y + sum z(B) floor(|B|/2), computed from the snapshot alone.
Weight certificate_dual_objective(const Certificate& c);

struct GapReport {
    bool ok = true;
    bool oracle_used = false;
    Weight matching_weight = 0;
    Weight dual = 0;
    Weight optimum = 0;
    std::string detail;
};

// CS: w(M) equals the dual objective. RCS: w(M) >= w(M*) - n against the
// oracle when small enough, else yz(V) <= w(M) <= yz(V) + 2|M|. When the
// original graph is given, the certificate's matching must also be exactly
// optimal under the original weights.
GapReport check_optimality_gap(const Certificate& c, const Graph* original = nullptr);

// Exhaustive search over simple alternating paths of the contracted eligible
// graph. Returns the edges of one augmenting path between free nodes, one of
// them in roots (null: any free node), or an empty vector.
std::vector<int> find_eligible_augmenting_path(const SolverState& s, Criterion c,
                                               const std::vector<int>* roots = nullptr);

}  // namespace mwpm
