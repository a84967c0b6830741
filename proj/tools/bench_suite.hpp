#pragma once

#include <string>
#include <vector>

#include "mwpm/generators.hpp"
#include "mwpm/scaling.hpp"

namespace mwpm::bench {

struct Item {
    std::string name;
    InstanceSpec spec;
};

// Comma-separated entries: a preset name (scaling, small, nested) or
// generator:n:m:N:seed.
std::vector<Item> parse_suite(const std::string& list);

struct Row {
    std::string instance;
    std::string algo;
    int tau = 0;
    int n = 0;
    int m = 0;
    Weight max_weight = 0;
    Weight weight = 0;
    double time_ms = 0;
    Weight adjustments = 0;
    int scales = 0;
};

const std::string& csv_header();
std::string csv_row(const Row& r);
// Writes the header when the file is new or empty; otherwise the existing
// header must match.
void append_csv(const std::string& path, const std::vector<Row>& rows);

using Solver = SolveResult (*)(const Graph&, const DriverOptions&);
Solver solver_for(const std::string& algo);

// Median solve time over repeat runs; generation is not timed.
Row run_item(const Item& item, const std::string& algo, int tau, int repeat);

struct Growth {
    std::string algo;
    int n_from = 0;
    int n_to = 0;
    double ratio = 0;
};

// Time ratios between rows of one algorithm whose n doubles.
std::vector<Growth> doubling_growth(const std::vector<Row>& rows);

}  // namespace mwpm::bench
