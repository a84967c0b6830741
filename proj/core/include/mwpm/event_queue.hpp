#pragma once

#include <cstdint>
#include <queue>
#include <vector>

#include "mwpm/types.hpp"

namespace mwpm {

enum class EventKind : std::uint8_t { Dissolve = 0, Grow = 1, Blossom = 2 };

struct Event {
    Weight time = 0;
    EventKind kind = EventKind::Grow;
    std::uint8_t sub = 0;
    int a = kNone;
    int b = kNone;
    std::uint32_t gen = 0;
};

enum class QueueKind { Bucket, Ordered };

// Monotone event queue. Events at equal times drain in kind order
// Dissolve, Grow, Blossom.
class EventQueue {
public:
    // horizon: largest time that will ever be popped; events past it are dropped.
    void reset(QueueKind kind, Weight horizon);
    QueueKind kind() const { return kind_; }
    void push(const Event& ev);
    bool empty() const { return pending_ == 0; }
    std::size_t size() const { return pending_; }
    // Smallest pending time, or kInfinity.
    Weight next_time();
    // Pops the first event due at time t whose kind is at most max_kind.
    bool pop(Weight t, EventKind max_kind, Event& out);
    std::size_t dropped() const { return dropped_; }

private:
    struct Later {
        bool operator()(const std::pair<Event, std::uint64_t>& x, const std::pair<Event, std::uint64_t>& y) const {
            if (x.first.time != y.first.time) return x.first.time > y.first.time;
            if (x.first.kind != y.first.kind) return x.first.kind > y.first.kind;
            return x.second > y.second;
        }
    };

    QueueKind kind_ = QueueKind::Ordered;
    Weight horizon_ = kInfinity;
    Weight cursor_ = 0;
    std::size_t pending_ = 0;
    std::size_t dropped_ = 0;
    std::uint64_t seq_ = 0;
    std::vector<std::vector<Event>> buckets_;  // index time*3 + kind
    std::vector<std::size_t> used_;
    std::priority_queue<std::pair<Event, std::uint64_t>, std::vector<std::pair<Event, std::uint64_t>>, Later> heap_;
};

}  // namespace mwpm
