#pragma once

#include "mwpm/graph.hpp"
#include "mwpm/scaling.hpp"

namespace mwpm {

// Scaling driver that liquidates every old blossom at the start of a scale.
// Throws Infeasible when g has no perfect matching.
SolveResult run_liquidationist(const Graph& g, const DriverOptions& opts = {});

}  // namespace mwpm
