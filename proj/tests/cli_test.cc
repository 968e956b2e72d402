// Copyright 2026 The qcss Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qcss/cli.h"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>
#include <string>
#include <vector>

using namespace qcss;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    args.insert(args.begin(), "qcss");
    std::vector<const char *> argv;
    for (const auto &a : args) {
        argv.push_back(a.c_str());
    }
    std::ostringstream out;
    std::ostringstream err;
    int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

bool contains(const std::string &hay, const std::string &needle) {
    return hay.find(needle) != std::string::npos;
}

std::filesystem::path temp_path(const std::string &name) {
    return std::filesystem::temp_directory_path() / ("qcss_cli_test_" + name);
}

std::string slurp(const std::filesystem::path &p) {
    std::ifstream in(p);
    std::stringstream s;
    s << in.rdbuf();
    return s.str();
}

}  // namespace

TEST(Cli, code_check_reports_classification) {
    Result r = run({"code", "check", "steane"});
    ASSERT_EQ(r.code, kExitOk) << r.err;
    EXPECT_TRUE(contains(r.out, "perfect=true"));
    EXPECT_TRUE(contains(r.out, "weakly-self-dual=true"));
    EXPECT_TRUE(contains(r.out, "d=3"));
    EXPECT_TRUE(contains(r.out, "t=1"));
    Result s = run({"code", "check", "simplex-q2-m3"});
    EXPECT_TRUE(contains(s.out, "perfect=false"));
    EXPECT_TRUE(contains(s.out, "d=4"));
}

TEST(Cli, code_info_and_css_build) {
    Result r = run({"code", "info", "golay11t"});
    ASSERT_EQ(r.code, kExitOk);
    EXPECT_TRUE(contains(r.out, "params: [11,6,5]_3"));
    Result c = run({"css", "build", "hamming-q3-m3"});
    ASSERT_EQ(c.code, kExitOk);
    EXPECT_TRUE(contains(c.out, "[[13,7,3]]_3"));
    EXPECT_TRUE(contains(c.out, "logical-z:"));
}

TEST(Cli, cost_table_reports_lemma) {
    Result r = run({"cost", "--code", "golay23"});
    ASSERT_EQ(r.code, kExitOk);
    EXPECT_TRUE(contains(r.out, "[[23,1,7]]_2"));
    std::istringstream lines(r.out);
    std::string header;
    std::string row;
    std::getline(lines, header);
    std::getline(lines, row);
    std::istringstream fields(row);
    std::string name;
    std::string params;
    std::size_t gx = 0;
    std::size_t gz = 0;
    fields >> name >> params >> gx >> gz;
    EXPECT_EQ(gx, 69u);
    EXPECT_GE(gz, 69u);
    Result all = run({"cost"});
    EXPECT_EQ(all.code, kExitOk);
    EXPECT_TRUE(contains(all.out, "steane"));
    EXPECT_FALSE(contains(all.out, "false"));
}

TEST(Cli, faults_enumerate_finds_no_violations) {
    Result r = run({"faults", "enumerate", "--code", "steane"});
    ASSERT_EQ(r.code, kExitOk) << r.out;
    EXPECT_TRUE(contains(r.out, "violations=0"));
    Result t = run({"faults", "enumerate", "--code", "steane", "--teleport"});
    ASSERT_EQ(t.code, kExitOk) << t.out;
    Result raw = run({"faults", "enumerate", "--code", "steane", "--order", "raw"});
    EXPECT_EQ(raw.code, kExitCheckFailed);
}

TEST(Cli, oracle_verify_passes_on_steane) {
    Result r = run({"oracle", "verify", "--code", "steane"});
    ASSERT_EQ(r.code, kExitOk) << r.out << r.err;
    EXPECT_TRUE(contains(r.out, "PASS eq2"));
    EXPECT_TRUE(contains(r.out, "PASS teleport"));
    EXPECT_FALSE(contains(r.out, "FAIL"));
}

TEST(Cli, ftprep_output_is_independent_of_workers) {
    std::vector<std::string> base{"ftprep", "run", "--code", "steane", "--eps", "0.01,0.02", "--trials", "9000",
                                  "--seed", "4"};
    auto one = base;
    one.insert(one.end(), {"--workers", "1"});
    auto four = base;
    four.insert(four.end(), {"--workers", "4"});
    Result a = run(one);
    Result b = run(four);
    ASSERT_EQ(a.code, kExitOk) << a.err;
    ASSERT_EQ(b.code, kExitOk) << b.err;
    EXPECT_EQ(a.out, b.out);
    EXPECT_TRUE(contains(a.out, "epsilon,trials,accepted,failures,p_fail"));
    EXPECT_TRUE(contains(a.out, "# fit:"));
}

TEST(Cli, ftprep_json_and_gnuplot_outputs) {
    auto data = temp_path("mc.json");
    auto plot = temp_path("mc.gp");
    Result r = run({"ftprep", "run", "--code", "steane", "--order", "raw", "--eps", "0.01,0.03", "--trials", "5000",
                    "--format", "json", "--out", data.string(), "--gnuplot", plot.string()});
    ASSERT_EQ(r.code, kExitOk) << r.err;
    auto doc = nlohmann::json::parse(slurp(data));
    ASSERT_EQ(doc["points"].size(), 2u);
    EXPECT_EQ(doc["points"][0]["trials"], 5000);
    EXPECT_TRUE(contains(slurp(plot), "plot"));
    std::filesystem::remove(data);
    std::filesystem::remove(plot);
}

TEST(Cli, circuit_emit_and_run_round_trip) {
    auto path = temp_path("prep.circ");
    Result e = run({"circuit", "emit", "--code", "steane", "--kind", "prep", "--order", "fig1", "--out", path.string()});
    ASSERT_EQ(e.code, kExitOk) << e.err;
    Result r = run({"run", path.string(), "--code", "steane", "--eps", "0", "--trials", "2"});
    ASSERT_EQ(r.code, kExitOk) << r.err;
    EXPECT_TRUE(contains(r.out, "trial 1 faults=0"));
    std::filesystem::remove(path);
}

TEST(Cli, invalid_input_exits_with_one) {
    EXPECT_EQ(run({}).code, kExitInvalid);
    EXPECT_EQ(run({"code", "check", "nonexistent-code"}).code, kExitInvalid);
    EXPECT_EQ(run({"ftprep", "run", "--code", "steane", "--eps", "2"}).code, kExitInvalid);
    EXPECT_EQ(run({"ftprep", "run", "--code", "simplex-q2-m3"}).code, kExitInvalid);
    EXPECT_EQ(run({"frobnicate"}).code, kExitInvalid);
    Result v = run({"--version"});
    EXPECT_EQ(v.code, kExitOk);
    EXPECT_TRUE(contains(v.out, std::string(kVersion)));
}
