#include "mwpm/search_one.hpp"

#include "mwpm/verification.hpp"

namespace mwpm {

int find_maximal_augmenting_set(SolverState& s, SearchEngine& engine, Criterion c, const std::vector<int>* active,
                                bool check, Trace* trace) {
    SearchParams sp;
    sp.criterion = c;
    sp.active = active;
    sp.budget = 0;
    sp.check = check;
    sp.trace = trace;
    sp.multi_augment = true;
    int count = 0;
    while (true) {
        SearchResult r = engine.run(s, sp);
        if (r.status != SearchStatus::Augmented) break;
        count += r.augmentations;
    }
    return count;
}

SearchOneResult search_one(SolverState& s, SearchEngine& engine, const SearchOneParams& p) {
    SearchOneResult r;
    r.augmentations = find_maximal_augmenting_set(s, engine, Criterion::Relaxed, nullptr, p.check, p.trace);
    if (p.exhaustive) {
        std::vector<int> path = find_eligible_augmenting_path(s, Criterion::Relaxed);
        MWPM_CHECK(path.empty(), "eligible augmenting path survived the augmentation step");
        r.exhaustive_checked = true;
    }
    SearchParams sp;
    sp.criterion = Criterion::Relaxed;
    sp.budget = 1;
    sp.allow_augment = false;
    sp.check = p.check;
    sp.trace = p.trace;
    r.adjustments = engine.run(s, sp).adjustments;
    return r;
}

}  // namespace mwpm
