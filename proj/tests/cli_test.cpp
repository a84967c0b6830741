#include <gtest/gtest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "bench_suite.hpp"
#include "mwpm/certificate.hpp"

namespace mwpm {
namespace {

namespace fs = std::filesystem;

struct CliRun {
    int code = -1;
    std::string out;
};

CliRun run(const std::string& args) {
    std::string cmd = std::string(MWPM_CLI_PATH) + " " + args + " 2>/dev/null";
    CliRun r;
    FILE* p = popen(cmd.c_str(), "r");
    if (!p) return r;
    char buf[4096];
    std::size_t k;
    while ((k = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, k);
    int status = pclose(p);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

class Cli : public ::testing::Test {
protected:
    void SetUp() override {
        dir_ = fs::temp_directory_path() /
               ("mwpm_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()) + "_" +
                std::to_string(::getpid()));
        fs::create_directories(dir_);
    }
    void TearDown() override { fs::remove_all(dir_); }

    std::string write(const std::string& name, const std::string& text) {
        fs::path p = dir_ / name;
        std::ofstream(p) << text;
        return p.string();
    }
    std::string path(const std::string& name) const { return (dir_ / name).string(); }

    fs::path dir_;
};

const char* kC4 = "c four-cycle\np edge 4 4\ne 1 2 1\ne 2 3 3\ne 3 4 1\ne 4 1 1\n";

TEST_F(Cli, SolveSingleEdge) {
    std::string in = write("one.txt", "p edge 2 1\ne 1 2 5\n");
    for (const char* algo : {"liquidationist", "hybrid"}) {
        CliRun r = run(std::string("solve --algo ") + algo + " --input " + in);
        EXPECT_EQ(r.code, 0) << algo;
        EXPECT_NE(r.out.find("m 1 2\n"), std::string::npos) << r.out;
        EXPECT_NE(r.out.find("s 5\n"), std::string::npos) << r.out;
    }
}

TEST_F(Cli, SolveWithChecksAndCertificate) {
    std::string in = write("c4.txt", kC4);
    std::string cert = path("c4.json");
    std::string json = path("report.json");
    CliRun r = run("solve --algo hybrid --check-invariants --engine-check --input " + in + " --cert " + cert +
                " --json " + json);
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("s 4\n"), std::string::npos) << r.out;
    EXPECT_TRUE(fs::exists(json));

    CliRun v = run("verify --cert " + cert + " --graph " + in);
    EXPECT_EQ(v.code, 0) << v.out;
    EXPECT_NE(v.out.find("certificate ok"), std::string::npos);

    Certificate c = read_certificate_file(cert);
    c.y[0] += 1;
    std::ofstream(path("bad.json")) << certificate_to_json(c);
    CliRun bad = run("verify --cert " + path("bad.json") + " --graph " + in);
    EXPECT_EQ(bad.code, 2) << bad.out;
    EXPECT_NE(bad.out.find("certificate rejected"), std::string::npos);
}

TEST_F(Cli, ExitCodes) {
    std::string odd = write("odd.txt", "p edge 3 2\ne 1 2 1\ne 2 3 1\n");
    EXPECT_EQ(run("solve --input " + odd).code, 1);
    EXPECT_EQ(run("solve --allow-infeasible --input " + odd).code, 3);
    std::string star = write("star.txt", "p edge 4 3\ne 1 2 1\ne 1 3 1\ne 1 4 1\n");
    EXPECT_EQ(run("solve --input " + star).code, 3);
    EXPECT_EQ(run("solve --input " + write("range.txt", "p edge 4 1\ne 1 5 1\n")).code, 1);
    EXPECT_EQ(run("solve --input " + path("missing.txt")).code, 1);
    EXPECT_EQ(run("solve --algo nope --input " + star).code, 1);
    EXPECT_EQ(run("frobnicate").code, 1);
}

TEST_F(Cli, GenIsDeterministic) {
    std::string a = path("a.txt"), b = path("b.txt");
    std::string args = "gen --generator nested-blossom-adversarial --n 30 --m 60 --max-weight 99 --seed 4 --perfect";
    ASSERT_EQ(run(args + " --output " + a).code, 0);
    ASSERT_EQ(run(args + " --output " + b).code, 0);
    std::stringstream sa, sb;
    sa << std::ifstream(a).rdbuf();
    sb << std::ifstream(b).rdbuf();
    EXPECT_EQ(sa.str(), sb.str());
    EXPECT_EQ(run(args).out.find("p edge 30"), sa.str().find("p edge 30"));
    CliRun solved = run("solve --input " + a);
    EXPECT_EQ(solved.code, 0);
}

TEST_F(Cli, Oracle) {
    CliRun r = run("oracle --input " + write("c4.txt", kC4));
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("s 4\n"), std::string::npos) << r.out;
    std::string big = path("big.txt");
    ASSERT_EQ(run("gen --n 20 --m 40 --max-weight 5 --perfect --output " + big).code, 0);
    EXPECT_EQ(run("oracle --input " + big).code, 1);
}

TEST_F(Cli, BenchCsvHeaderAndAppend) {
    EXPECT_EQ(bench::csv_header(), "instance,algo,tau,n,m,N,weight,time_ms,adjustments,scales");
    std::string csv = path("bench.csv");
    CliRun r = run("bench --suite random-gnm:16:40:30:1 --algo liquidationist --algo hybrid --out " + csv);
    ASSERT_EQ(r.code, 0) << r.out;
    EXPECT_EQ(r.out.rfind(bench::csv_header(), 0), 0u);
    ASSERT_EQ(run("bench --suite random-gnm:16:40:30:2 --algo hybrid --out " + csv).code, 0);
    std::ifstream in(csv);
    std::string line;
    int lines = 0, headers = 0;
    while (std::getline(in, line)) {
        ++lines;
        if (line == bench::csv_header()) ++headers;
    }
    EXPECT_EQ(lines, 4);
    EXPECT_EQ(headers, 1);

    std::string other = write("other.csv", "a,b,c\n1,2,3\n");
    EXPECT_EQ(run("bench --suite random-gnm:16:40:30:1 --out " + other).code, 1);
    std::stringstream kept;
    kept << std::ifstream(other).rdbuf();
    EXPECT_EQ(kept.str(), "a,b,c\n1,2,3\n");
}

TEST(BenchSuite, ParsesPresetsAndEntries) {
    auto items = bench::parse_suite("small,random-gnm:10:20:5:3");
    ASSERT_EQ(items.size(), 4u);
    EXPECT_EQ(items[3].spec.n, 10);
    EXPECT_EQ(items[3].spec.m, 20);
    EXPECT_EQ(items[3].spec.max_weight, 5);
    EXPECT_EQ(items[3].spec.seed, 3u);
    EXPECT_THROW(bench::parse_suite("random-gnm:10"), ParseError);
    EXPECT_THROW(bench::parse_suite("unknown"), ParseError);
}

TEST(BenchSuite, DoublingGrowth) {
    std::vector<bench::Row> rows(3);
    rows[0].algo = rows[1].algo = rows[2].algo = "hybrid";
    rows[0].n = 100, rows[0].time_ms = 1;
    rows[1].n = 200, rows[1].time_ms = 3;
    rows[2].n = 400, rows[2].time_ms = 6;
    auto g = bench::doubling_growth(rows);
    ASSERT_EQ(g.size(), 2u);
    EXPECT_DOUBLE_EQ(g[0].ratio, 3.0);
    EXPECT_DOUBLE_EQ(g[1].ratio, 2.0);
}

}  // namespace
}  // namespace mwpm
