#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mwpm/graph.hpp"

namespace mwpm {

struct InstanceSpec {
    // random-gnm, random-regular-ish or nested-blossom-adversarial.
    std::string generator = "random-gnm";
    int n = 0;
    // Target edge count; the generator may fall short when the graph is dense.
    int m = 0;
    Weight max_weight = 0;
    std::uint64_t seed = 1;
    // Adds the edges of a random perfect matching (n must be even).
    bool guarantee_perfect = false;
};

const std::vector<std::string>& generator_names();

// Deterministic for a fixed spec. Weights lie in [0, max_weight].
Graph generate(const InstanceSpec& spec);

}  // namespace mwpm
