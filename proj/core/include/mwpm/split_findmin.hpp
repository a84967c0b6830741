#pragma once

#include <vector>

#include "mwpm/types.hpp"

namespace mwpm {

// Elements 0..k-1 kept in a fixed order and partitioned into contiguous
// lists. Splits cut a list after a named element; the larger half keeps the
// list id. Each element carries a key and the witness edge that set it.
class SplitFindmin {
public:
    struct Min {
        Weight key = kInfinity;
        int element = kNone;
        int witness = kNone;
    };

    void init(int k);
    int size() const { return k_; }
    int list(int u) const { return lid_[u]; }
    int list_begin(int list) const { return begin_[list]; }
    int list_end(int list) const { return end_[list]; }
    int list_count() const { return static_cast<int>(begin_.size()); }
    // Returns the id of the list that now holds the elements after u.
    int split(int u);
    // key(u) <- min(key(u), x); witness replaced when the key drops.
    bool decrease_key(int u, Weight x, int witness);
    Weight key(int u) const { return key_[u]; }
    int witness(int u) const { return wit_[u]; }
    Min findmin(int list) const;

private:
    void update(int u);

    int k_ = 0;
    int leaves_ = 1;
    std::vector<Weight> key_;
    std::vector<int> wit_;
    std::vector<int> lid_;
    std::vector<int> begin_, end_;
    std::vector<int> tree_;  // element index with minimum key in the subtree
};

}  // namespace mwpm
