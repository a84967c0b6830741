#include "mwpm/event_queue.hpp"

namespace mwpm {

void EventQueue::reset(QueueKind kind, Weight horizon) {
    kind_ = kind;
    horizon_ = horizon;
    cursor_ = 0;
    pending_ = 0;
    dropped_ = 0;
    seq_ = 0;
    heap_ = {};
    if (kind == QueueKind::Bucket) {
        MWPM_REQUIRE(horizon >= 0 && horizon < (Weight{1} << 26), "bucket queue needs a modest finite horizon");
        std::size_t need = static_cast<std::size_t>(horizon + 1) * 3;
        for (std::size_t i : used_) buckets_[i].clear();
        used_.clear();
        if (buckets_.size() < need) buckets_.resize(need);
    }
}

void EventQueue::push(const Event& ev) {
    MWPM_REQUIRE(ev.time >= cursor_, "event scheduled in the past");
    if (ev.time > horizon_) {
        ++dropped_;
        return;
    }
    ++pending_;
    if (kind_ == QueueKind::Bucket) {
        std::size_t i = static_cast<std::size_t>(ev.time) * 3 + static_cast<std::size_t>(ev.kind);
        if (buckets_[i].empty()) used_.push_back(i);
        buckets_[i].push_back(ev);
    } else {
        heap_.emplace(ev, seq_++);
    }
}

Weight EventQueue::next_time() {
    if (pending_ == 0) return kInfinity;
    if (kind_ == QueueKind::Ordered) return heap_.top().first.time;
    while (cursor_ <= horizon_) {
        std::size_t i = static_cast<std::size_t>(cursor_) * 3;
        if (!buckets_[i].empty() || !buckets_[i + 1].empty() || !buckets_[i + 2].empty()) return cursor_;
        ++cursor_;
    }
    return kInfinity;
}

bool EventQueue::pop(Weight t, EventKind max_kind, Event& out) {
    if (pending_ == 0) return false;
    if (kind_ == QueueKind::Ordered) {
        const Event& top = heap_.top().first;
        if (top.time != t || top.kind > max_kind) return false;
        out = top;
        heap_.pop();
        --pending_;
        return true;
    }
    if (t > horizon_) return false;
    if (t > cursor_) cursor_ = t;
    std::size_t i = static_cast<std::size_t>(t) * 3;
    for (int k = 0; k <= static_cast<int>(max_kind); ++k) {
        auto& b = buckets_[i + k];
        if (!b.empty()) {
            out = b.back();
            b.pop_back();
            --pending_;
            return true;
        }
    }
    return false;
}

}  // namespace mwpm
