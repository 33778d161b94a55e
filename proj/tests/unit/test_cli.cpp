#include <gtest/gtest.h>

#include <sstream>

#include "json.hpp"
#include "pairlin/report.hpp"
#include "pairlin_cli/cli.hpp"
#include "pairlin_cli/examples.hpp"

using namespace pairlin;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    args.insert(args.begin(), "pairlin");
    std::ostringstream out, err;
    int code = cli::run_command(args, out, err);
    return {code, out.str(), err.str()};
}

std::string data(const char* name) { return std::string(PAIRLIN_TEST_DATA) + "/" + name; }

}  // namespace

TEST(Cli, PairsList) {
    auto r = run({"pairs", "list"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("sign:"), std::string::npos);
    EXPECT_NE(r.out.find("krasner:5:4:"), std::string::npos);
}

TEST(Cli, DetOnSignFixturePrintsSingularMinors) {
    auto r = run({"det", data("sign_a2.mat")});
    EXPECT_EQ(r.code, 0) << r.err;
    std::size_t count = 0;
    for (std::size_t pos = 0; (pos = r.out.find("singular=true", pos)) != std::string::npos; ++pos) ++count;
    EXPECT_EQ(count, 4u) << r.out;
}

TEST(Cli, DetSquare) {
    auto r = run({"det", data("trop2.mat")});
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_NE(r.out.find("det_plus: 5"), std::string::npos) << r.out;
    EXPECT_NE(r.out.find("singular: false"), std::string::npos) << r.out;
}

TEST(Cli, CheckA2Fails) {
    auto r = run({"check", "a2", data("sign_a2.mat")});
    EXPECT_EQ(r.code, 1);
    EXPECT_NE(r.out.find("a2: FAILS"), std::string::npos) << r.out;
}

TEST(Cli, CheckHeuristicIsUndecided) {
    auto r = run({"check", "a2", data("trop2.mat"), "--domain", "heuristic:1"});
    EXPECT_TRUE(r.code == 0 || r.code == 3) << r.out << r.err;
}

TEST(Cli, Rank) {
    auto r = run({"rank", data("sign_a2.mat")});
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_NE(r.out.find("row_rank: 3"), std::string::npos) << r.out;
    EXPECT_NE(r.out.find("submatrix_rank: 2"), std::string::npos) << r.out;
}

TEST(Cli, AuditSign) {
    auto r = run({"audit", "sign"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("strict-second-kind: true"), std::string::npos);
}

TEST(Cli, Solve) {
    auto r = run({"solve", "cramer", data("trop2.mat"), "--rhs", "4,4"});
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_NE(r.out.find("x: 2,1"), std::string::npos) << r.out;
    auto j = run({"solve", "jacobi", data("trop2.mat"), "--rhs", "4,4"});
    EXPECT_EQ(j.code, 0) << j.err;
    EXPECT_NE(j.out.find("stabilized_at: 1"), std::string::npos) << j.out;
}

TEST(Cli, InputErrors) {
    EXPECT_EQ(run({"det", data("bad_literal.mat")}).code, 2);
    EXPECT_EQ(run({"det", data("missing.mat")}).code, 2);
    EXPECT_EQ(run({"audit", "nope"}).code, 2);
    EXPECT_EQ(run({"frobnicate"}).code, 2);
    EXPECT_EQ(run({"example", "no-such-example"}).code, 2);
    EXPECT_EQ(run({"solve", "cramer", data("trop2.mat"), "--rhs", "1"}).code, 2);
}

TEST(Cli, ExactDomainOverInfinitePairExitsThree) {
    auto r = run({"check", "a1", data("trop2.mat"), "--domain", "exact"});
    EXPECT_EQ(r.code, 3) << r.out << r.err;
}

TEST(Cli, ExamplesPass) {
    for (const auto& ex : cli::named_examples()) {
        auto r = run({"example", ex.name});
        EXPECT_EQ(r.code, 0) << ex.name << "\n" << r.out;
        EXPECT_NE(r.out.find("PASS"), std::string::npos) << ex.name;
    }
}

TEST(Cli, JsonLines) {
    auto r = run({"--format", "json-lines", "audit", "sign"});
    ASSERT_EQ(r.code, 0) << r.err;
    std::istringstream lines(r.out);
    std::string line;
    std::size_t n = 0;
    while (std::getline(lines, line)) {
        auto j = nlohmann::json::parse(line);
        EXPECT_TRUE(j.contains("key"));
        EXPECT_TRUE(j.contains("value"));
        ++n;
    }
    EXPECT_GT(n, 10u);
}

TEST(Report, RenderFormats) {
    Report r;
    r.add("a", "x").add("flag", true).add("n", std::size_t{3});
    EXPECT_EQ(r.render(ReportFormat::KeyValue), "a: x\nflag: true\nn: 3\n");
    EXPECT_EQ(r.get("n"), "3");
    EXPECT_EQ(r.get("missing"), "");
    EXPECT_EQ(parse_report_format("kv"), ReportFormat::KeyValue);
    EXPECT_EQ(parse_report_format("json-lines"), ReportFormat::JsonLines);
}
