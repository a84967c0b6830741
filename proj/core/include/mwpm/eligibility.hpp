#pragma once

#include <vector>

#include "mwpm/state.hpp"

namespace mwpm {

enum class Criterion { Tight = 1, Relaxed = 2, Near = 3 };

const char* criterion_name(Criterion c);

// Distance from eligibility measured in the units the search uses to schedule
// events. Throws InvariantViolation when the slack is below what the
// criterion's governing invariant permits.
Weight slack_star(Weight slack, Criterion c, bool matched);

// Eligibility from the slack alone (edges not internal to a current blossom).
bool eligible_by_slack(Weight slack, Criterion c, bool matched);

// Full predicate including the blossom-internal clause of the relaxed criterion.
bool is_eligible(const SolverState& s, int e, Criterion c);

// Contracted eligible graph over current root blossoms.
struct EligibleView {
    std::vector<int> node_of;                       // vertex -> root node (kNone if dead)
    std::vector<int> nodes;                          // distinct root nodes
    std::vector<std::vector<std::pair<int, int>>> adj;  // per node index: (edge, other node index)
    std::vector<int> index_of;                       // root node id -> index in nodes
};

EligibleView build_eligible_view(const SolverState& s, Criterion c, const std::vector<int>* active = nullptr);

}  // namespace mwpm
