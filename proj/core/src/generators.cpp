#include "mwpm/generators.hpp"

#include <algorithm>
#include <random>
#include <set>

namespace mwpm {

namespace {

// Draws are built from raw engine output so instances do not depend on the
// standard library's distribution implementations.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : g_(seed) {}
    std::uint64_t below(std::uint64_t k) { return k == 0 ? 0 : g_() % k; }
    Weight weight(Weight hi) { return static_cast<Weight>(below(static_cast<std::uint64_t>(hi) + 1)); }
    template <class T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[below(i)]);
    }

private:
    std::mt19937_64 g_;
};

class Builder {
public:
    Builder(int n, Rng& rng) : g_(n), n_(n), rng_(rng) {}

    bool add(int u, int v, Weight w) {
        if (u == v) return false;
        if (u > v) std::swap(u, v);
        if (!seen_.insert({u, v}).second) return false;
        g_.add_edge(u, v, w);
        return true;
    }

    long long count() const { return static_cast<long long>(seen_.size()); }
    long long capacity() const { return static_cast<long long>(n_) * (n_ - 1) / 2; }

    void random_matching(Weight hi) {
        std::vector<int> p(n_);
        for (int i = 0; i < n_; ++i) p[i] = i;
        rng_.shuffle(p);
        for (int i = 0; i + 1 < n_; i += 2) add(p[i], p[i + 1], rng_.weight(hi));
    }

    void fill(long long m, Weight hi) {
        m = std::min(m, capacity());
        long long misses = 0;
        while (count() < m && misses < 64 * (m + 16)) {
            int u = static_cast<int>(rng_.below(n_));
            int v = static_cast<int>(rng_.below(n_));
            if (!add(u, v, rng_.weight(hi))) ++misses;
        }
        if (count() < m) {
            for (int u = 0; u < n_ && count() < m; ++u)
                for (int v = u + 1; v < n_ && count() < m; ++v) add(u, v, rng_.weight(hi));
        }
    }

    Graph take() { return std::move(g_); }

private:
    Graph g_;
    int n_;
    Rng& rng_;
    std::set<std::pair<int, int>> seen_;
};

// Odd cycle of three towers one level down; edges get heavier toward the leaves.
std::vector<int> tower(Builder& b, Rng& rng, int& next, int level, int depth, Weight hi) {
    if (level == 0) return {next++};
    std::vector<std::vector<int>> parts;
    for (int i = 0; i < 3; ++i) parts.push_back(tower(b, rng, next, level - 1, depth, hi));
    const Weight base = hi * (depth - level + 1) / (depth + 1);
    const Weight spread = std::max<Weight>(hi / (2 * (depth + 1)), 0);
    for (int i = 0; i < 3; ++i) {
        const auto& a = parts[i];
        const auto& c = parts[(i + 1) % 3];
        int u = a[rng.below(a.size())];
        int v = c[rng.below(c.size())];
        b.add(u, v, std::min(hi, base + rng.weight(spread)));
    }
    std::vector<int> out;
    for (auto& p : parts) out.insert(out.end(), p.begin(), p.end());
    return out;
}

void adversarial(Builder& b, Rng& rng, int n, Weight hi) {
    int next = 0;
    while (n - next >= 4) {
        int depth = 0;
        long long size = 1;
        while (size * 3 + 1 <= n - next) {
            size *= 3;
            ++depth;
        }
        std::vector<int> t = tower(b, rng, next, depth, depth, hi);
        const int pendant = next++;
        b.add(pendant, t[rng.below(t.size())], rng.weight(std::max<Weight>(hi / 4, 0)));
    }
    for (; next + 1 < n; next += 2) b.add(next, next + 1, rng.weight(hi));
}

}  // namespace

const std::vector<std::string>& generator_names() {
    static const std::vector<std::string> names{"random-gnm", "random-regular-ish", "nested-blossom-adversarial"};
    return names;
}

Graph generate(const InstanceSpec& spec) {
    MWPM_REQUIRE(spec.n >= 0, "vertex count must be nonnegative");
    MWPM_REQUIRE(spec.m >= 0, "edge count must be nonnegative");
    MWPM_REQUIRE(spec.max_weight >= 0, "weight bound must be nonnegative");
    MWPM_REQUIRE(!spec.guarantee_perfect || spec.n % 2 == 0, "a perfect matching needs an even vertex count");
    Rng rng(spec.seed);
    Builder b(spec.n, rng);
    if (spec.guarantee_perfect) b.random_matching(spec.max_weight);
    if (spec.generator == "random-gnm") {
        b.fill(spec.m, spec.max_weight);
    } else if (spec.generator == "random-regular-ish") {
        const int d = spec.n > 0 ? std::max(1, static_cast<int>(2LL * spec.m / spec.n)) : 0;
        for (int r = 0; r < d && b.count() < b.capacity(); ++r) b.random_matching(spec.max_weight);
        if (spec.n % 2 == 1 && spec.n > 1)
            for (int r = 0; r < d; ++r) b.add(spec.n - 1, static_cast<int>(rng.below(spec.n - 1)), rng.weight(spec.max_weight));
    } else if (spec.generator == "nested-blossom-adversarial") {
        adversarial(b, rng, spec.n, spec.max_weight);
        b.fill(spec.m, std::max<Weight>(spec.max_weight / 8, 0));
    } else {
        MWPM_REQUIRE(false, "unknown generator: " + spec.generator);
    }
    return b.take();
}

}  // namespace mwpm
