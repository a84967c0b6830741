#pragma once

#include <functional>

#include "mwpm/search.hpp"

namespace mwpm {

struct SearchOneParams {
    bool check = false;
    // Verify with an exhaustive path scan that the augmentation step left no
    // eligible augmenting path from a free vertex.
    bool exhaustive = false;
    Trace* trace = nullptr;
};

struct SearchOneResult {
    int augmentations = 0;
    Weight adjustments = 0;
    bool exhaustive_checked = false;
};

// Repeats zero-budget searches from all free vertices in scope, each
// augmenting along vertex-disjoint paths, until one finds no path. Returns
// the number of augmentations.
int find_maximal_augmenting_set(SolverState& s, SearchEngine& engine, Criterion c,
                                const std::vector<int>* active = nullptr, bool check = false,
                                Trace* trace = nullptr);

// One round under the relaxed criterion: augment until no eligible augmenting
// path remains, then shrink, adjust duals once and dissolve.
SearchOneResult search_one(SolverState& s, SearchEngine& engine, const SearchOneParams& p = {});

}  // namespace mwpm
