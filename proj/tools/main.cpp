#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "bench_suite.hpp"
#include "mwpm/certificate.hpp"
#include "mwpm/generators.hpp"
#include "mwpm/verification.hpp"

namespace {

using namespace mwpm;

constexpr int kExitParse = 1;
constexpr int kExitInvariant = 2;
constexpr int kExitInfeasible = 3;

void print_matching(const Graph& g, const Matching& m) {
    for (int e : m.edges()) std::cout << "m " << g.edge(e).u + 1 << ' ' << g.edge(e).v + 1 << '\n';
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot write " + path);
    out << text;
}

struct SolveArgs {
    std::string algo = "hybrid";
    std::string input;
    int tau = 0;
    bool check = false;
    bool engine_check = false;
    bool trace = false;
    bool allow_odd = false;
    std::string json;
    std::string cert;
};

int cmd_solve(const SolveArgs& a) {
    LoadOptions lo;
    lo.allow_odd = a.allow_odd;
    Graph g = load_dimacs_file(a.input, lo);
    bench::Solver solve = bench::solver_for(a.algo);
    TraceLevel level = trace_level_from_env();
    if (a.trace && level == TraceLevel::None) level = TraceLevel::All;
    Trace trace(&std::cerr, level);
    DriverOptions opts;
    opts.tau = a.tau;
    opts.check_invariants = a.check;
    opts.engine_check = a.engine_check;
    opts.trace = level == TraceLevel::None ? nullptr : &trace;
    SolveResult r = solve(g, opts);
    print_matching(g, r.matching);
    std::cout << "s " << r.weight << '\n';
    std::cout << "c algorithm " << r.report.algorithm << " tau " << r.report.tau << " scales " << r.report.scales
              << " adjustments " << r.report.adjustments << " verified " << r.report.verified << '\n';
    if (!a.json.empty()) write_file(a.json, report_to_json(r.report) + "\n");
    if (!a.cert.empty()) write_file(a.cert, certificate_to_json(r.certificate) + "\n");
    return 0;
}

int cmd_gen(const InstanceSpec& spec, const std::string& output) {
    Graph g = generate(spec);
    std::ostringstream comment;
    comment << spec.generator << " n=" << spec.n << " m=" << spec.m << " N=" << spec.max_weight
            << " seed=" << spec.seed << (spec.guarantee_perfect ? " perfect" : "");
    if (output.empty() || output == "-") {
        write_dimacs(std::cout, g, comment.str());
    } else {
        std::ofstream out(output);
        if (!out) throw ParseError("cannot write " + output);
        write_dimacs(out, g, comment.str());
    }
    return 0;
}

int cmd_oracle(const std::string& input, bool allow_odd) {
    LoadOptions lo;
    lo.allow_odd = allow_odd;
    Graph g = load_dimacs_file(input, lo);
    if (g.vertex_count() > 16) throw ParseError("the oracle accepts at most 16 vertices");
    OracleResult r = brute_force_mwpm(g);
    if (!r.feasible) throw Infeasible("graph has no perfect matching");
    print_matching(g, r.matching);
    std::cout << "s " << r.weight << '\n';
    return 0;
}

int cmd_verify(const std::string& cert_path, const std::string& graph_path) {
    Certificate c = read_certificate_file(cert_path);
    CheckOptions co;
    co.require_perfect = c.view == "2wbar";
    InvariantReport rep = check_invariants(c, co);
    bool ok = rep.ok();
    if (!graph_path.empty()) {
        LoadOptions lo;
        lo.allow_odd = true;
        Graph g = load_dimacs_file(graph_path, lo);
        if (g.vertex_count() != c.vertex_count || g.edge_count() != static_cast<int>(c.edges.size())) {
            std::cout << "graph: certificate does not describe this graph\n";
            ok = false;
        } else if (rep.ok()) {
            GapReport gap = check_optimality_gap(c, c.view == "2wbar" ? &g : nullptr);
            std::cout << "gap: " << (gap.ok ? "ok" : "failed") << " weight " << gap.matching_weight << " dual "
                      << gap.dual << (gap.detail.empty() ? "" : " (" + gap.detail + ")") << '\n';
            ok = ok && gap.ok;
        }
    }
    if (!rep.ok()) std::cout << rep.summary(50);
    std::cout << (ok ? "certificate ok" : "certificate rejected") << " (" << cert_mode_name(c.mode) << ", "
              << rep.violations.size() << " violations)\n";
    return ok ? 0 : kExitInvariant;
}

int cmd_bench(const std::string& suite, const std::vector<std::string>& algos, int tau, int repeat,
              const std::string& out) {
    std::vector<bench::Item> items = bench::parse_suite(suite);
    std::vector<bench::Row> rows;
    std::cout << bench::csv_header() << '\n';
    for (const bench::Item& it : items)
        for (const std::string& algo : algos) {
            rows.push_back(bench::run_item(it, algo, tau, repeat));
            std::cout << bench::csv_row(rows.back()) << '\n' << std::flush;
        }
    if (!out.empty()) bench::append_csv(out, rows);
    for (const bench::Growth& gr : bench::doubling_growth(rows))
        std::cout << "c growth " << gr.algo << " n " << gr.n_from << " -> " << gr.n_to << " time x" << gr.ratio
                  << (gr.ratio <= 4.0 ? " within" : " above") << " 4x envelope\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Maximum-weight perfect matching on integer-weighted general graphs"};
    app.require_subcommand(1);

    SolveArgs sa;
    auto* solve = app.add_subcommand("solve", "Solve an instance");
    solve->add_option("--algo", sa.algo, "liquidationist or hybrid")
        ->check(CLI::IsMember({"liquidationist", "hybrid"}));
    solve->add_option("--input", sa.input, "DIMACS edge file")->required();
    solve->add_option("--tau", sa.tau, "Small/large blossom threshold (0: default)")->check(CLI::NonNegativeNumber);
    solve->add_flag("--check-invariants", sa.check, "Verify certificates at every scale boundary");
    solve->add_flag("--engine-check", sa.engine_check, "Cross-check search duals against an eager copy");
    solve->add_flag("--trace", sa.trace, "Log search events to stderr");
    solve->add_flag("--allow-infeasible", sa.allow_odd, "Accept odd vertex counts");
    solve->add_option("--json", sa.json, "Write the run report as JSON");
    solve->add_option("--cert", sa.cert, "Write the final certificate as JSON");

    InstanceSpec spec;
    std::string gen_out;
    auto* gen = app.add_subcommand("gen", "Generate an instance");
    gen->add_option("--generator", spec.generator, "Instance family")->check(CLI::IsMember(generator_names()));
    gen->add_option("--n", spec.n, "Vertex count")->required()->check(CLI::NonNegativeNumber);
    gen->add_option("--m", spec.m, "Edge count")->check(CLI::NonNegativeNumber);
    gen->add_option("--max-weight", spec.max_weight, "Weight bound N")->check(CLI::NonNegativeNumber);
    gen->add_option("--seed", spec.seed, "Random seed");
    gen->add_flag("--perfect", spec.guarantee_perfect, "Include a random perfect matching");
    gen->add_option("--output", gen_out, "Output file (default stdout)");

    std::string oracle_in;
    bool oracle_odd = false;
    auto* oracle = app.add_subcommand("oracle", "Exhaustive optimum for small instances");
    oracle->add_option("--input", oracle_in, "DIMACS edge file")->required();
    oracle->add_flag("--allow-infeasible", oracle_odd, "Accept odd vertex counts");

    std::string cert_in, graph_in;
    auto* verify = app.add_subcommand("verify", "Check a certificate");
    verify->add_option("--cert", cert_in, "Certificate JSON")->required();
    verify->add_option("--graph", graph_in, "DIMACS edge file the certificate claims to solve");

    std::string suite = "small", bench_out;
    std::vector<std::string> algos{"liquidationist", "hybrid"};
    int bench_tau = 0, repeat = 3;
    auto* benchc = app.add_subcommand("bench", "Time solvers over an instance suite");
    benchc->add_option("--suite", suite, "Presets (scaling, small, nested) or generator:n:m:N:seed, comma separated");
    benchc->add_option("--algo", algos, "Algorithms to run")->check(CLI::IsMember({"liquidationist", "hybrid"}));
    benchc->add_option("--tau", bench_tau, "Threshold (0: default)")->check(CLI::NonNegativeNumber);
    benchc->add_option("--repeat", repeat, "Runs per instance; the median is reported")->check(CLI::PositiveNumber);
    benchc->add_option("--out", bench_out, "Append rows to this CSV file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitParse;
    }

    try {
        if (*solve) return cmd_solve(sa);
        if (*gen) return cmd_gen(spec, gen_out);
        if (*oracle) return cmd_oracle(oracle_in, oracle_odd);
        if (*verify) return cmd_verify(cert_in, graph_in);
        if (*benchc) return cmd_bench(suite, algos, bench_tau, repeat, bench_out);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitParse;
    } catch (const ContractViolation& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitParse;
    } catch (const InvariantViolation& e) {
        std::cerr << "invariant violation: " << e.what() << '\n';
        return kExitInvariant;
    } catch (const Infeasible& e) {
        std::cerr << "infeasible: " << e.what() << '\n';
        return kExitInfeasible;
    }
    return 0;
}
