#pragma once

#include <string>
#include <vector>

#include "mwpm/state.hpp"

namespace mwpm {

// y(u) + y(v) + sum of z(B) over blossoms containing both endpoints.
Weight yz_edge(const SolverState& s, int e);
Weight slack(const SolverState& s, int e);

// Dual objective over all live vertices.
Weight dual_objective(const SolverState& s);
// General scoped form: sum_{u in S} y(u) + sum_{B subset S} z(B)|B|/2 + sum_{B superset S} z(B)|S|/2.
Weight dual_objective(const SolverState& s, const std::vector<int>& scope);

// y += z(b)/2 on members of b, then b is removed. b must not lie inside a current blossom.
void liquidate(SolverState& s, int b);
// k unit translations: z(b) -= 2k, y += k on members.
void translate(SolverState& s, int b, Weight k = 1);
inline void translate_unit(SolverState& s, int b) { translate(s, b, 1); }

// Forms a current blossom with z = 0 from sibling root nodes joined by an
// alternating odd cycle; children[0] holds the base.
int shrink_blossom(SolverState& s, std::vector<int> children, std::vector<CycleEdge> cycle);
// Removes a root blossom; z must be zero unless force is set.
std::vector<int> dissolve_root(SolverState& s, int b, bool force = false);

// Even-length alternating path in E_b from v to base(b), as a vertex sequence
// starting at v and ending at base(b).
std::vector<int> base_path(const SolverState& s, int b, int v);
void base_path(const SolverState& s, int b, int v, std::vector<int>& out);

// Makes v the base of b by flipping matched roles along the internal path.
// The mate entry of v itself is left for the caller.
void rotate_base(SolverState& s, int b, int v);

// Augments along a path in the contracted graph. nodes[0..k] are root nodes
// (k odd), edges[i] joins nodes[i] and nodes[i+1]; edges alternate unmatched,
// matched, ..., unmatched and both end nodes have free bases.
void augment_through(SolverState& s, const std::vector<int>& nodes, const std::vector<int>& edges);

// Structural check of one current blossom against the matching: cycle
// orientation, alternation, base and internal matched count.
bool blossom_consistent(const SolverState& s, int b, std::string* why = nullptr);

}  // namespace mwpm
