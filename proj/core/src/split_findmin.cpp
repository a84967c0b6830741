#include "mwpm/split_findmin.hpp"

namespace mwpm {

void SplitFindmin::init(int k) {
    MWPM_REQUIRE(k >= 0, "negative size");
    k_ = k;
    leaves_ = 1;
    while (leaves_ < k) leaves_ <<= 1;
    key_.assign(k, kInfinity);
    wit_.assign(k, kNone);
    lid_.assign(k, 0);
    begin_.assign(1, 0);
    end_.assign(1, k - 1);
    tree_.assign(2 * leaves_, kNone);
    for (int i = 0; i < k; ++i) tree_[leaves_ + i] = i;
    for (int i = leaves_ - 1; i >= 1; --i) {
        int a = tree_[2 * i], b = tree_[2 * i + 1];
        tree_[i] = a != kNone ? a : b;
    }
}

int SplitFindmin::split(int u) {
    MWPM_REQUIRE(u >= 0 && u < k_, "split: element out of range");
    int l = lid_[u];
    int b = begin_[l], e = end_[l];
    MWPM_REQUIRE(u < e, "split: cannot cut after the last element of a list");
    int left = u - b + 1, right = e - u;
    int id = static_cast<int>(begin_.size());
    if (left < right) {
        begin_.push_back(b);
        end_.push_back(u);
        begin_[l] = u + 1;
        for (int i = b; i <= u; ++i) lid_[i] = id;
        return l;
    }
    begin_.push_back(u + 1);
    end_.push_back(e);
    end_[l] = u;
    for (int i = u + 1; i <= e; ++i) lid_[i] = id;
    return id;
}

void SplitFindmin::update(int u) {
    int i = (leaves_ + u) >> 1;
    while (i >= 1) {
        int a = tree_[2 * i], b = tree_[2 * i + 1];
        int best;
        if (a == kNone)
            best = b;
        else if (b == kNone)
            best = a;
        else
            best = key_[b] < key_[a] ? b : a;
        if (tree_[i] == best && best != u) break;
        tree_[i] = best;
        i >>= 1;
    }
}

bool SplitFindmin::decrease_key(int u, Weight x, int witness) {
    MWPM_REQUIRE(u >= 0 && u < k_, "decrease_key: element out of range");
    if (x >= key_[u]) return false;
    key_[u] = x;
    wit_[u] = witness;
    update(u);
    return true;
}

SplitFindmin::Min SplitFindmin::findmin(int list) const {
    Min out;
    int lo = begin_[list] + leaves_, hi = end_[list] + leaves_ + 1;
    int best = kNone;
    auto take = [&](int node) {
        int c = tree_[node];
        if (c == kNone) return;
        if (best == kNone || key_[c] < key_[best] || (key_[c] == key_[best] && c < best)) best = c;
    };
    while (lo < hi) {
        if (lo & 1) take(lo++);
        if (hi & 1) take(--hi);
        lo >>= 1;
        hi >>= 1;
    }
    if (best != kNone && key_[best] < kInfinity) {
        out.key = key_[best];
        out.element = best;
        out.witness = wit_[best];
    }
    return out;
}

}  // namespace mwpm
