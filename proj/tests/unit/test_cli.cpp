#include "kissing/cli.hpp"

#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

using namespace kissing;

namespace {

struct Run {
    int status;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    args.insert(args.begin(), "kissing");
    std::vector<const char*> argv;
    for (const auto& a : args) {
        argv.push_back(a.c_str());
    }
    std::ostringstream out;
    std::ostringstream err;
    const int status = cli::main(static_cast<int>(argv.size()), argv.data(), out, err);
    return {status, out.str(), err.str()};
}

bool has(const std::string& text, const std::string& needle) { return text.find(needle) != std::string::npos; }

std::string data(const char* name) { return std::string(KISSING_TEST_DATA) + "/" + name; }

} // namespace

TEST(CliEps, SpatialKTwo) {
    const auto r = run({"eps", "--d", "3", "--k", "2"});
    EXPECT_EQ(r.status, cli::exit_pass);
    EXPECT_TRUE(has(r.out, "eps(3,2)^2 = 1/50"));
    EXPECT_TRUE(has(r.out, "eps(3,2) = 1/sqrt(50)"));
    EXPECT_TRUE(has(r.out, "(0,0,0)-(1,2,2)  /  (0,1,2)-(2,2,1)"));
}

TEST(CliEps, PlanarKThree) {
    const auto r = run({"eps", "--d", "2", "--k", "3"});
    EXPECT_EQ(r.status, cli::exit_pass);
    EXPECT_TRUE(has(r.out, "eps(2,3)^2 = 1/13"));
}

TEST(CliEps, UsageErrors) {
    EXPECT_EQ(run({"eps", "--d", "3", "--k", "0"}).status, cli::exit_usage);
    EXPECT_EQ(run({"eps", "--d", "4", "--k", "1"}).status, cli::exit_usage);
    EXPECT_EQ(run({"eps", "--d", "3"}).status, cli::exit_usage);
    EXPECT_EQ(run({"eps", "--d", "3", "--k", "1", "--classes", "point-segment"}).status, cli::exit_usage);
    EXPECT_EQ(run({"eps", "--d", "3", "--k", "1", "--budget", "0"}).status, cli::exit_usage);
    EXPECT_EQ(run({"eps", "--d", "3", "--k", "1", "--format", "xml"}).status, cli::exit_usage);
    EXPECT_EQ(run({}).status, cli::exit_usage);
}

TEST(CliEps, BudgetExceededIsFlaggedIncomplete) {
    const auto text = run({"eps", "--d", "3", "--k", "2", "--budget", "100"});
    EXPECT_EQ(text.status, cli::exit_fail);
    EXPECT_TRUE(has(text.out, "INCOMPLETE"));
    const auto structured = run({"eps", "--d", "3", "--k", "2", "--budget", "100", "--format", "structured"});
    EXPECT_EQ(structured.status, cli::exit_fail);
    const auto rep = StructuredReport::parse(structured.out);
    EXPECT_EQ(rep.records().at(0).at("complete"), false);
    EXPECT_EQ(rep.records().at(0).at("pairs_examined"), 100);
}

TEST(CliEps, StructuredOutputToFileRoundTrips) {
    const std::string path = ::testing::TempDir() + "kissing_eps.jsonl";
    const auto r = run({"eps", "--d", "3", "--k", "1", "--format", "structured", "--out", path});
    EXPECT_EQ(r.status, cli::exit_pass);
    std::ifstream in(path, std::ios::binary);
    const std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    const auto rep = StructuredReport::parse(text);
    EXPECT_EQ(rep.serialize(), text);
    EXPECT_EQ(rep.records().at(0).at("eps_squared"), "1/6");
    std::remove(path.c_str());
}

TEST(CliCertify, SelectedChecks) {
    auto r = run({"certify", "--prop1"});
    EXPECT_EQ(r.status, cli::exit_pass);
    EXPECT_TRUE(has(r.out, "PASS"));
    EXPECT_TRUE(has(r.out, "max isolating upper end"));
    r = run({"certify", "--prop31", "--format", "structured"});
    EXPECT_EQ(r.status, cli::exit_pass);
    const auto rep = StructuredReport::parse(r.out);
    EXPECT_EQ(rep.records().at(0).at("verdict"), "pass");
    EXPECT_EQ(rep.records().at(0).at("root_intervals").size(), 0u);
}

TEST(CliCertify, AllListsEightTabulatedPoints) {
    const auto r = run({"certify", "--all", "--format", "structured"});
    EXPECT_EQ(r.status, cli::exit_pass);
    const auto rep = StructuredReport::parse(r.out);
    int points = 0;
    int certificates = 0;
    for (const auto& rec : rep.records()) {
        points += rec.at("type") == "extremal-point" ? 1 : 0;
        if (rec.at("type") == "certificate") {
            ++certificates;
            EXPECT_EQ(rec.at("verdict"), "pass") << rec.dump();
        }
    }
    EXPECT_EQ(points, 8);
    EXPECT_EQ(certificates, 5);
}

TEST(CliDistance, StarPairFromFlags) {
    const auto r = run({"distance", "--k", "4", "--p", "4,2,1;0,3,4", "--q", "0,0,0;3,4,4"});
    EXPECT_EQ(r.status, cli::exit_pass);
    EXPECT_TRUE(has(r.out, "squared distance: 1/1050"));
    EXPECT_TRUE(has(r.out, "f = -1, g = 1050"));
    EXPECT_TRUE(has(r.out, "in Y(k): yes"));
}

TEST(CliDistance, FilesAndNotes) {
    auto r = run({"distance", "--input", data("point_triangle_k1.txt")});
    EXPECT_EQ(r.status, cli::exit_pass);
    EXPECT_TRUE(has(r.out, "squared distance: 4/3"));
    r = run({"distance", "--input", data("crossing_k2.txt")});
    EXPECT_EQ(r.status, cli::exit_pass);
    EXPECT_TRUE(has(r.out, "not disjoint"));
    r = run({"distance", "--d", "2", "--k", "3", "--p", "1,1", "--q", "0,0;3,1"});
    EXPECT_EQ(r.status, cli::exit_pass);
    EXPECT_TRUE(has(r.out, "not applicable"));
}

TEST(CliDistance, Errors) {
    EXPECT_EQ(run({"distance", "--input", data("missing.txt")}).status, cli::exit_usage);
    EXPECT_EQ(run({"distance", "--k", "4", "--p", "4,2,1"}).status, cli::exit_usage);
    EXPECT_EQ(run({"distance", "--k", "4", "--p", "4,2,9", "--q", "0,0,0"}).status, cli::exit_usage);
    EXPECT_EQ(run({"distance", "--k", "2", "--p", "0,0,0;1,1,1", "--q", "1,0,0;0,1,0;0,0,1"}).status,
              cli::exit_usage);
}

TEST(CliEpsTable, Structured) {
    const auto r = run({"table1", "--format", "structured"});
    EXPECT_EQ(r.status, cli::exit_pass);
    const auto rep = StructuredReport::parse(r.out);
    int rows = 0;
    for (const auto& rec : rep.records()) {
        if (rec.at("type") == "eps-table-row") {
            ++rows;
            EXPECT_EQ(rec.at("eps_squared"), rec.at("expected"));
        }
    }
    EXPECT_EQ(rows, 7);
}
