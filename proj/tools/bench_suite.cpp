#include "bench_suite.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <map>
#include <sstream>

#include "mwpm/hybrid.hpp"
#include "mwpm/liquidationist.hpp"

namespace mwpm::bench {

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream in(s);
    while (std::getline(in, cur, sep))
        if (!cur.empty()) out.push_back(cur);
    return out;
}

long long to_int(const std::string& s, const std::string& what) {
    try {
        std::size_t pos = 0;
        long long v = std::stoll(s, &pos);
        if (pos != s.size()) throw ParseError("bad " + what + ": " + s);
        return v;
    } catch (const std::logic_error&) {
        throw ParseError("bad " + what + ": " + s);
    }
}

Item make(const std::string& gen, int n, int m, Weight hi, std::uint64_t seed) {
    Item it;
    it.spec.generator = gen;
    it.spec.n = n;
    it.spec.m = m;
    it.spec.max_weight = hi;
    it.spec.seed = seed;
    it.spec.guarantee_perfect = n % 2 == 0;
    it.name = gen + ":" + std::to_string(n) + ":" + std::to_string(m) + ":" + std::to_string(hi) + ":" +
              std::to_string(seed);
    return it;
}

}  // namespace

std::vector<Item> parse_suite(const std::string& list) {
    std::vector<Item> out;
    for (const std::string& entry : split(list, ',')) {
        if (entry == "scaling") {
            for (int n : {1024, 2048, 4096}) out.push_back(make("random-gnm", n, 4 * n, 1024, 1));
        } else if (entry == "small") {
            for (int n : {64, 128, 256}) out.push_back(make("random-gnm", n, 4 * n, 1024, 1));
        } else if (entry == "nested") {
            for (int n : {82, 244, 730}) out.push_back(make("nested-blossom-adversarial", n, 2 * n, 1024, 1));
        } else {
            std::vector<std::string> f = split(entry, ':');
            if (f.size() != 5) throw ParseError("suite entry needs generator:n:m:N:seed: " + entry);
            if (std::find(generator_names().begin(), generator_names().end(), f[0]) == generator_names().end())
                throw ParseError("unknown generator: " + f[0]);
            out.push_back(make(f[0], static_cast<int>(to_int(f[1], "n")), static_cast<int>(to_int(f[2], "m")),
                               to_int(f[3], "N"), static_cast<std::uint64_t>(to_int(f[4], "seed"))));
        }
    }
    if (out.empty()) throw ParseError("empty suite");
    return out;
}

const std::string& csv_header() {
    static const std::string h = "instance,algo,tau,n,m,N,weight,time_ms,adjustments,scales";
    return h;
}

std::string csv_row(const Row& r) {
    std::ostringstream os;
    os.setf(std::ios::fixed);
    os.precision(3);
    os << r.instance << ',' << r.algo << ',' << r.tau << ',' << r.n << ',' << r.m << ',' << r.max_weight << ','
       << r.weight << ',' << r.time_ms << ',' << r.adjustments << ',' << r.scales;
    return os.str();
}

void append_csv(const std::string& path, const std::vector<Row>& rows) {
    bool fresh = true;
    {
        std::ifstream in(path);
        std::string first;
        if (in && std::getline(in, first)) {
            fresh = false;
            if (first != csv_header()) throw ParseError("existing CSV has a different header: " + path);
        }
    }
    std::ofstream out(path, std::ios::app);
    if (!out) throw ParseError("cannot write " + path);
    if (fresh) out << csv_header() << '\n';
    for (const Row& r : rows) out << csv_row(r) << '\n';
}

Solver solver_for(const std::string& algo) {
    if (algo == "liquidationist") return &run_liquidationist;
    if (algo == "hybrid") return &run_hybrid;
    throw ParseError("unknown algorithm: " + algo);
}

Row run_item(const Item& item, const std::string& algo, int tau, int repeat) {
    Solver solve = solver_for(algo);
    Graph g = generate(item.spec);
    DriverOptions opts;
    opts.tau = tau;
    std::vector<double> times;
    SolveResult last;
    for (int r = 0; r < std::max(1, repeat); ++r) {
        auto t0 = std::chrono::steady_clock::now();
        last = solve(g, opts);
        auto t1 = std::chrono::steady_clock::now();
        times.push_back(std::chrono::duration<double, std::milli>(t1 - t0).count());
    }
    std::sort(times.begin(), times.end());
    Row row;
    row.instance = item.name;
    row.algo = algo;
    row.tau = last.report.tau;
    row.n = g.vertex_count();
    row.m = g.edge_count();
    row.max_weight = g.max_weight();
    row.weight = last.weight;
    row.time_ms = times[times.size() / 2];
    row.adjustments = last.report.adjustments;
    row.scales = last.report.scales;
    return row;
}

std::vector<Growth> doubling_growth(const std::vector<Row>& rows) {
    std::map<std::string, std::vector<const Row*>> by;
    for (const Row& r : rows) by[r.algo].push_back(&r);
    std::vector<Growth> out;
    for (auto& [algo, rs] : by) {
        std::sort(rs.begin(), rs.end(), [](const Row* a, const Row* b) { return a->n < b->n; });
        for (std::size_t i = 0; i < rs.size(); ++i)
            for (std::size_t j = i + 1; j < rs.size(); ++j)
                if (rs[j]->n == 2 * rs[i]->n && rs[i]->time_ms > 0)
                    out.push_back({algo, rs[i]->n, rs[j]->n, rs[j]->time_ms / rs[i]->time_ms});
    }
    return out;
}

}  // namespace mwpm::bench
