#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "mwpm/eligibility.hpp"
#include "mwpm/state.hpp"
#include "mwpm/trace.hpp"

namespace mwpm {

enum class SearchStatus { Augmented, BudgetExhausted, NoAugmentingPath };

const char* search_status_name(SearchStatus s);

enum class QueueChoice { Auto, Bucket, Ordered };

struct SearchParams {
    Criterion criterion = Criterion::Tight;
    // Search roots; every root must be free. Null means all free active vertices.
    const std::vector<int>* roots = nullptr;
    // Vertices the search may touch. Null means every live vertex. Each current
    // root blossom must lie entirely inside or entirely outside this set.
    const std::vector<int>* active = nullptr;
    // Maximum number of dual adjustments; kInfinity for none.
    Weight budget = kInfinity;
    QueueChoice queue = QueueChoice::Auto;
    // When false, finding an augmenting path is reported as an invariant violation.
    bool allow_augment = true;
    // Compare timestamp duals with an eagerly updated copy and rescan keys at every event time.
    bool check = false;
    // Report the vertices reached by the search in SearchResult::searched.
    bool collect_searched = false;
    // Zero budget only: after each augmentation retire the two trees it used
    // and keep searching the rest of the forest.
    bool multi_augment = false;
    Trace* trace = nullptr;
};

struct SearchResult {
    SearchStatus status = SearchStatus::NoAugmentingPath;
    Weight adjustments = 0;
    int path_edges = 0;
    int augmentations = 0;
    std::int64_t grows = 0;
    std::int64_t blossoms = 0;
    std::int64_t dissolves = 0;
    std::int64_t stale = 0;
    std::int64_t events = 0;
    std::int64_t shadow_checks = 0;
    std::int64_t key_checks = 0;
    std::vector<int> searched;
};

// Event-driven Edmonds search. Halts at the first augmenting path (after
// augmenting; see multi_augment), when the budget is spent, or when no event
// remains. Duals are
// written back on return and spurious zero-z root blossoms are dissolved.
// One engine may be reused across many searches.
class SearchEngine {
public:
    SearchEngine();
    ~SearchEngine();
    SearchEngine(SearchEngine&&) noexcept;
    SearchEngine& operator=(SearchEngine&&) noexcept;

    SearchResult run(SolverState& s, const SearchParams& p);

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

// Convenience wrapper around a temporary engine.
SearchResult edmonds_search(SolverState& s, const SearchParams& p);

// Dissolves current root blossoms with z = 0, repeatedly, among blossoms whose
// vertices are all in scope (null: everywhere).
int dissolve_zero_roots(SolverState& s, const std::vector<int>* scope = nullptr);

}  // namespace mwpm
