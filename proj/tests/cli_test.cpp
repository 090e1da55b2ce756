/*
   Copyright 2026 The gasgauge Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "gasgauge/cli/driver.hpp"
#include "support.hpp"

namespace gasgauge {
namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

std::string corpus_path(const std::string& name) { return std::string(GASGAUGE_CORPUS_DIR) + "/" + name; }

Run gasgauge(std::vector<std::string> args) {
    std::vector<const char*> argv{"gasgauge"};
    for (const auto& a : args) {
        argv.push_back(a.c_str());
    }
    std::ostringstream out;
    std::ostringstream err;
    int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::filesystem::path temp_file(const std::string& name, const std::string& content = "") {
    auto p = std::filesystem::temp_directory_path() / ("gasgauge_cli_" + name);
    if (!content.empty()) {
        std::ofstream(p) << content;
    }
    return p;
}

std::string slurp(const std::filesystem::path& p) {
    std::ifstream f(p);
    return {std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>()};
}

TEST(Cli, DetectLoopFreeExitsZero) {
    auto r = gasgauge({"detect", corpus_path("loopfree.msol")});
    EXPECT_EQ(r.code, 0) << r.err;
    auto j = report::Json::parse(r.out);
    EXPECT_EQ(j["command"], "detect");
    EXPECT_TRUE(j["detection"]["functions"].empty());
    EXPECT_TRUE(j["identification"].is_null());
    EXPECT_TRUE(j["correction"].is_null());
}

TEST(Cli, IdentifyTestContractFindsWitness) {
    auto r = gasgauge({"identify", corpus_path("testcontract.msol"), "--seed", "7"});
    EXPECT_EQ(r.code, 1) << r.err;
    auto j = report::Json::parse(r.out);
    const auto& t = j["identification"]["targets"].at(0);
    EXPECT_EQ(t["signature"], "addNumbers(uint256[])");
    EXPECT_EQ(t["status"], "OogFound");
    EXPECT_EQ(t["witness"].at(0)["name"], "newNumbers");
    EXPECT_TRUE(j["correction"].is_null());
}

TEST(Cli, CorrectCardsGivesTwoThresholds) {
    auto r = gasgauge({"correct", corpus_path("cards.msol"), "--gas-limit", "6721975"});
    EXPECT_EQ(r.code, 1) << r.err;
    auto j = report::Json::parse(r.out);
    EXPECT_EQ(j["gasLimit"], 6721975);
    ASSERT_EQ(j["correction"]["loops"].size(), 2u);
    EXPECT_EQ(j["correction"]["loops"][0]["loopType"], "Nested");
    EXPECT_TRUE(j["identification"].is_null());
}

TEST(Cli, TextFormat) {
    auto r = gasgauge({"all", corpus_path("smallbank.msol"), "--format", "text"});
    EXPECT_EQ(r.code, 1);
    EXPECT_NE(r.out.find("Function: addInterest(uint256)"), std::string::npos);
    EXPECT_NE(r.out.find("Threshold formula: (gasleft() - "), std::string::npos);
    EXPECT_NE(r.out.find("require(users.length < "), std::string::npos);
}

TEST(Cli, ParseErrorExitsTwoWithLocation) {
    auto p = temp_file("broken.msol", "contract C {\n  function f() public {\n    uint x = ;\n  }\n}\n");
    auto r = gasgauge({"detect", p.string()});
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.err.find(p.string() + ":3:"), std::string::npos) << r.err;
    EXPECT_TRUE(r.out.empty());
}

TEST(Cli, UnsupportedConstructExitsTwo) {
    auto p = temp_file("struct.msol", "contract C { struct S { uint a; } }\n");
    EXPECT_EQ(gasgauge({"detect", p.string()}).code, 2);
}

TEST(Cli, BadInvocationsExitTwo) {
    EXPECT_EQ(gasgauge({}).code, 2);
    EXPECT_EQ(gasgauge({"scan", corpus_path("empty.msol")}).code, 2);
    EXPECT_EQ(gasgauge({"detect", "/nonexistent/x.msol"}).code, 2);
    EXPECT_EQ(gasgauge({"detect", corpus_path("empty.msol"), "--format", "xml"}).code, 2);
    EXPECT_EQ(gasgauge({"correct", corpus_path("uniform_sum.msol"), "--arg", "nobody=3"}).code, 2);
    EXPECT_EQ(gasgauge({"correct", corpus_path("uniform_sum.msol"), "--arg", "n"}).code, 2);
    EXPECT_EQ(gasgauge({"correct", corpus_path("uniform_sum.msol"), "--gas-limit", "100"}).code, 2);
    EXPECT_EQ(gasgauge({"detect", corpus_path("empty.msol"), "--patch-out", "/tmp/x"}).code, 2);
}

TEST(Cli, OutAndPatchOutWriteFiles) {
    auto out = temp_file("report.json");
    auto patch = temp_file("patched.msol");
    std::filesystem::remove(out);
    std::filesystem::remove(patch);
    auto r = gasgauge({"correct", corpus_path("testcontract.msol"), "--out", out.string(), "--patch-out",
                       patch.string()});
    EXPECT_EQ(r.code, 1) << r.err;
    EXPECT_TRUE(r.out.empty());
    auto j = report::Json::parse(slurp(out));
    EXPECT_EQ(j["contract"], "TestContract");
    std::string patched = slurp(patch);
    EXPECT_NE(patched.find("require(newNumbers.length < (gasleft() - "), std::string::npos);
    EXPECT_NE(patched.find("require(numbers.length < (gasleft() - "), std::string::npos);
    auto again = gasgauge({"detect", patch.string()});
    EXPECT_EQ(report::Json::parse(again.out)["detection"]["functions"][0]["loops"].size(), 2u);
}

TEST(Cli, SeedFallsBackToEnvironment) {
    auto explicitSeed = gasgauge({"identify", corpus_path("mod250.msol"), "--seed", "41"});
    ::setenv("GASGAUGE_SEED", "41", 1);
    auto fromEnv = gasgauge({"identify", corpus_path("mod250.msol")});
    ::setenv("GASGAUGE_SEED", "junk", 1);
    auto junk = gasgauge({"identify", corpus_path("mod250.msol")});
    ::unsetenv("GASGAUGE_SEED");
    EXPECT_EQ(explicitSeed.out, fromEnv.out);
    EXPECT_EQ(report::Json::parse(fromEnv.out)["identification"]["seed"], 41);
    EXPECT_EQ(junk.code, 2);
}

TEST(Cli, PhasesAreIndependent) {
    for (const char* name : {"cards.msol", "testcontract.msol", "multi_funcs.msol"}) {
        auto all = report::Json::parse(gasgauge({"all", corpus_path(name), "--seed", "5"}).out);
        auto identify = report::Json::parse(gasgauge({"identify", corpus_path(name), "--seed", "5"}).out);
        auto correct = report::Json::parse(gasgauge({"correct", corpus_path(name), "--seed", "5"}).out);
        EXPECT_EQ(all["detection"], identify["detection"]) << name;
        EXPECT_EQ(all["identification"], identify["identification"]) << name;
        EXPECT_EQ(all["correction"], correct["correction"]) << name;
    }
}

TEST(Cli, RepeatedRunsAreByteIdentical) {
    auto a = gasgauge({"all", corpus_path("heavy_ledger.msol"), "--seed", "9"});
    auto b = gasgauge({"all", corpus_path("heavy_ledger.msol"), "--seed", "9", "--parallel", "--triple"});
    auto c = gasgauge({"all", corpus_path("heavy_ledger.msol"), "--seed", "9"});
    EXPECT_EQ(a.out, c.out);
    auto ja = report::Json::parse(a.out);
    auto jb = report::Json::parse(b.out);
    for (std::size_t i = 0; i < ja["correction"]["loops"].size(); ++i) {
        EXPECT_EQ(ja["correction"]["loops"][i]["threshold"], jb["correction"]["loops"][i]["threshold"]);
    }
}

TEST(Cli, CostModelFileAndLoopFilter) {
    auto model = temp_file("model.cfg", "storageRead=800\n");
    auto r = gasgauge({"correct", corpus_path("testcontract.msol"), "--cost-model", model.string(), "--loops", "1"});
    EXPECT_EQ(r.code, 1) << r.err;
    auto j = report::Json::parse(r.out);
    ASSERT_EQ(j["correction"]["loops"].size(), 1u);
    EXPECT_EQ(j["correction"]["loops"][0]["loopId"], 1);
    auto plain = report::Json::parse(gasgauge({"correct", corpus_path("testcontract.msol"), "--loops", "1"}).out);
    EXPECT_LT(j["correction"]["loops"][0]["threshold"].get<int>(), plain["correction"]["loops"][0]["threshold"].get<int>());
}

TEST(Cli, ArgSetsHarnessValues) {
    auto small = report::Json::parse(
        gasgauge({"correct", corpus_path("matrix.msol"), "--arg", "cols=2", "--loops", "0"}).out);
    auto big = report::Json::parse(
        gasgauge({"correct", corpus_path("matrix.msol"), "--arg", "cols=20", "--loops", "0"}).out);
    EXPECT_LT(small["correction"]["loops"][0]["internal"].get<std::uint64_t>(),
              big["correction"]["loops"][0]["internal"].get<std::uint64_t>());
}

TEST(Cli, TraceCommand) {
    auto r = gasgauge({"trace", corpus_path("uniform_sum.msol"), "--function", "total", "--arg", "n=2"});
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_NE(r.out.find("txBase"), std::string::npos);
    EXPECT_NE(r.out.find("Completed{gasUsed="), std::string::npos);
    auto oog = gasgauge({"trace", corpus_path("uniform_sum.msol"), "--function", "total(uint256)", "--arg",
                         "n=1000000", "--gas-limit", "50000"});
    EXPECT_EQ(oog.code, 1);
    EXPECT_EQ(gasgauge({"trace", corpus_path("uniform_sum.msol"), "--function", "nope"}).code, 2);
}

TEST(Cli, ParseArg) {
    EXPECT_EQ(cli::parse_arg("n=12"), (std::pair<std::string, U256>{"n", 12}));
    EXPECT_EQ(cli::parse_arg("n=0x10").second, U256(16));
    EXPECT_THROW(cli::parse_arg("=3"), Error);
    EXPECT_THROW(cli::parse_arg("n=abc"), Error);
}

TEST(Cli, ExitCodesOnCorpus) {
    for (const auto& f : testing::load_corpus()) {
        auto r = gasgauge({"detect", corpus_path(f.name)});
        int loops = 0;
        for (const auto& [sig, n] : f.loops) {
            loops += n;
        }
        EXPECT_EQ(r.code, loops == 0 ? 0 : 1) << f.name << r.err;
    }
}

}  // namespace
}  // namespace gasgauge
