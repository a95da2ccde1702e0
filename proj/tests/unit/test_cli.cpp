#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include "chipfire/cli.hpp"

namespace fs = std::filesystem;
using chipfire::cli::run;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result invoke(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
    std::vector<std::string> v;
    std::istringstream in(text);
    for (std::string l; std::getline(in, l);) v.push_back(l);
    return v;
}

fs::path scratch(const std::string& name) {
    const fs::path p = fs::temp_directory_path() / ("chipfire-cli-" + std::to_string(::getpid())) / name;
    fs::remove_all(p);
    fs::create_directories(p);
    return p;
}

}  // namespace

TEST(Cli, TableCsv) {
    const Result r = invoke({"table", "--n", "4"});
    EXPECT_EQ(r.code, 0);
    const auto l = lines(r.out);
    ASSERT_EQ(l.size(), 10u);
    EXPECT_EQ(l.front(), "0,0,16");
    EXPECT_EQ(l.back(), "9,4,1,1");
    EXPECT_EQ(invoke({"table", "--n", "0"}).out, "0,0,1\n");
    EXPECT_EQ(lines(invoke({"table", "--n", "4", "--header"}).out).front(), "index,y_min,values");
}

TEST(Cli, TableJsonAndRowLimit) {
    const Result r = invoke({"table", "--n", "9", "--format", "json"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("\"row_count\": 92"), std::string::npos);

    const Result limited = invoke({"table", "--n", "9", "--max-rows", "3"});
    EXPECT_EQ(lines(limited.out).size(), 3u);
    EXPECT_NE(limited.err.find("truncated"), std::string::npos);
}

TEST(Cli, TableThroughCache) {
    const fs::path dir = scratch("cache");
    const std::string plain = invoke({"table", "--n", "7"}).out;
    EXPECT_EQ(invoke({"table", "--n", "7", "--cache-dir", dir.string()}).out, plain);
    ASSERT_TRUE(fs::exists(dir / "rows-n7.cfr"));
    EXPECT_EQ(invoke({"table", "--n", "7", "--cache-dir", dir.string()}).out, plain);

    { std::ofstream(dir / "rows-n7.cfr", std::ios::trunc) << "garbage"; }
    const Result recovered = invoke({"table", "--n", "7", "--cache-dir", dir.string()});
    EXPECT_EQ(recovered.code, 0);
    EXPECT_EQ(recovered.out, plain);
    EXPECT_NE(recovered.err.find("recomputed"), std::string::npos);
}

TEST(Cli, DerivedQuantities) {
    EXPECT_EQ(invoke({"firings", "--n", "4"}).out, "4,52\n");
    EXPECT_EQ(lines(invoke({"distance", "--n", "4"}).out).size(), 9u);
    EXPECT_EQ(lines(invoke({"stable", "--n", "4"}).out)[5], "5,1,0110");
    EXPECT_EQ(lines(invoke({"diff", "--n", "4"}).out)[0], "1,0,16,-16");
    EXPECT_EQ(lines(invoke({"diff", "--n", "4", "--signs"}).out)[0], "1,0,-");
    EXPECT_EQ(lines(invoke({"segment", "--n", "9"}).out)[2], "rectangle,23,80,57");
}

TEST(Cli, Sequences) {
    const Result r = invoke({"sequences", "total-firings", "--upto", "10"});
    EXPECT_EQ(r.code, 0);
    const auto l = lines(r.out);
    ASSERT_EQ(l.size(), 11u);
    EXPECT_EQ(l[10], "10,38570");
    EXPECT_EQ(invoke({"sequences", "golden-ratio"}).code, 2);
}

TEST(Cli, Verify) {
    const Result parity = invoke({"verify", "--n", "4", "--properties", "parity"});
    EXPECT_EQ(parity.code, 0);
    EXPECT_NE(parity.out.find("16 stable chips"), std::string::npos);

    const Result zero = invoke({"verify", "--n", "0"});
    EXPECT_EQ(zero.code, 0);
    EXPECT_NE(zero.out.find("SKIP"), std::string::npos);

    const Result conj = invoke({"verify", "--n", "2..12", "--properties", "conjecture"});
    EXPECT_EQ(conj.code, 0);
    for (unsigned n = 2; n <= 12; ++n) {
        EXPECT_NE(conj.out.find("n=" + std::to_string(n) + " conjecture INFO: holds"), std::string::npos) << n;
    }
}

TEST(Cli, Render) {
    const fs::path dir = scratch("render");
    const fs::path out = dir / "stable.svg";
    EXPECT_EQ(invoke({"render", "--kind", "stable-dots", "--n", "5", "--out", out.string()}).code, 0);
    EXPECT_TRUE(fs::exists(out));
    EXPECT_EQ(invoke({"render", "--kind", "stable-dots", "--n", "5", "--out", (dir / "no" / "x.svg").string()}).code, 3);
    EXPECT_EQ(invoke({"render", "--kind", "pie-chart", "--n", "5", "--out", out.string()}).code, 2);
    EXPECT_EQ(invoke({"render", "--kind", "stable-dots", "--n", "5", "--out", out.string(), "--width", "-3"}).code, 2);
}

TEST(Cli, OutputFile) {
    const fs::path dir = scratch("out");
    const fs::path out = dir / "t.csv";
    const Result r = invoke({"table", "--n", "3", "--out", out.string()});
    EXPECT_EQ(r.code, 0);
    EXPECT_TRUE(r.out.empty());
    std::ifstream in(out);
    std::string first;
    std::getline(in, first);
    EXPECT_EQ(first, "0,0,8");
    EXPECT_EQ(invoke({"table", "--n", "3", "--out", (dir / "missing" / "t.csv").string()}).code, 3);
}

TEST(Cli, UsageErrors) {
    EXPECT_EQ(invoke({}).code, 2);
    EXPECT_EQ(invoke({"frobnicate"}).code, 2);
    EXPECT_EQ(invoke({"table", "--n", "200"}).code, 2);
    EXPECT_EQ(invoke({"table", "--n", "4", "--format", "xml"}).code, 2);
    EXPECT_EQ(invoke({"verify", "--n", "5..3"}).code, 2);
    EXPECT_EQ(invoke({"verify", "--n", "1..x"}).code, 2);
    EXPECT_EQ(invoke({"verify", "--n", "3", "--properties", "bogus"}).code, 2);
    EXPECT_EQ(invoke({"--help"}).code, 0);
}
