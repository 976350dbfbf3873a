// Copyright 2026 The qadv Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// End-to-end tests of the qadv executable.

#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include <json.hpp>

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

struct Run {
    int rc;
    std::string out;
};

Run qadv(const std::string& args) {
    const std::string cmd = std::string(QADV_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* p = popen(cmd.c_str(), "r");
    if (!p) return {-1, {}};
    std::string out;
    char buf[4096];
    for (std::size_t n; (n = std::fread(buf, 1, sizeof buf, p)) > 0;) out.append(buf, n);
    const int status = pclose(p);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

json qadv_json(const std::string& args) {
    const auto r = qadv(args);
    EXPECT_EQ(r.rc, 0) << args;
    return json::parse(r.out);
}

fs::path scratch(const std::string& name) {
    const auto dir = fs::temp_directory_path() / ("qadv_cli_test_" + std::to_string(::getpid()));
    fs::create_directories(dir);
    return dir / name;
}

std::string slurp(const fs::path& p) {
    std::ifstream is(p);
    return {std::istreambuf_iterator<char>(is), {}};
}

TEST(CliReport, BellState) {
    const auto j = qadv_json("report --R 1 --kh 1 --kv 0 --format json");
    EXPECT_NEAR(j["I"].get<double>(), 2.0, 1e-9);
    EXPECT_NEAR(j["J"].get<double>(), 1.0, 1e-9);
    EXPECT_NEAR(j["D"].get<double>(), 1.0, 1e-9);
    EXPECT_NEAR(j["C"].get<double>(), 1.0, 1e-12);
    EXPECT_NEAR(j["E"].get<double>(), 1.0, 1e-9);
}

TEST(CliReport, UnentangledDiscord) {
    const auto j = qadv_json("report --R 0.333333333333 --kh 1 --kv 0 --format json");
    EXPECT_EQ(j["C"].get<double>(), 0.0);
    EXPECT_NEAR(j["D"].get<double>(), 1.0 / 3, 1e-9);
}

TEST(CliReport, CanonicalParameters) {
    const auto j = qadv_json("report --a 0.25 --w 0 --z 0 --format json");
    EXPECT_NEAR(j["I"].get<double>(), 0.0, 1e-12);
    EXPECT_NEAR(j["D"].get<double>(), 0.0, 1e-12);
}

TEST(CliReport, TextFormat) {
    const auto r = qadv("report --R 1 --kh 1 --kv 0");
    EXPECT_EQ(r.rc, 0);
    EXPECT_NE(r.out.find("D = 1\n"), std::string::npos);
}

TEST(CliReport, InvalidParameters) {
    EXPECT_EQ(qadv("report --R 1.5 --kh 1 --kv 0").rc, 2);
    EXPECT_EQ(qadv("report --a 0.25 --w 0.3 --z 0").rc, 2);
    EXPECT_EQ(qadv("report --R 0.5 --kh 1 --kv 0 --a 0.25").rc, 2);
    EXPECT_EQ(qadv("report --R 0.5 --kh 1 --kv 0 --format yaml").rc, 2);
    EXPECT_EQ(qadv("no-such-command").rc, 2);
}

TEST(CliMc, SuperdenseLimit) {
    const auto j = qadv_json("mc --R 1 --uniform --shots 10000 --seed 7 --strategy joint");
    EXPECT_EQ(j["success_rate"].get<double>(), 1.0);
    EXPECT_EQ(j["per_bit_accuracy"]["b1"].get<double>(), 1.0);
    EXPECT_EQ(j["per_bit_accuracy"]["b2"].get<double>(), 1.0);
}

TEST(CliMc, LocalCannotSeeB2) {
    const auto j = qadv_json("mc --R 1 --uniform --shots 100000 --seed 7 --strategy local");
    EXPECT_NEAR(j["per_bit_accuracy"]["b2"].get<double>(), 0.5, 3 * std::sqrt(0.25 / 1e5));
    EXPECT_EQ(j["per_bit_accuracy"]["b1"].get<double>(), 1.0);
}

TEST(CliMc, InformationBelowHolevo) {
    const auto j = qadv_json("mc --R 0.3333 --uniform --shots 100000 --seed 3 --strategy joint");
    EXPECT_LE(j["empirical_mutual_info"].get<double>(), j["theory"]["I_q"].get<double>() + 0.02);
}

TEST(CliMc, Deterministic) {
    const std::string args = "mc --R 0.6 --p1 0.1 --p2 0.2 --p3 0.3 --p4 0.4 --shots 20000 --seed 11";
    const auto a = qadv(args);
    EXPECT_EQ(a.rc, 0);
    EXPECT_EQ(a.out, qadv(args).out);
    EXPECT_EQ(a.out, qadv(args + " --threads 4").out);
}

TEST(CliMc, InvalidConfig) {
    EXPECT_EQ(qadv("mc --R 0.5 --uniform --shots 0").rc, 2);
    EXPECT_EQ(qadv("mc --R 0.5 --p1 0.5 --p2 0.5").rc, 2);
    EXPECT_EQ(qadv("mc --R 0.5 --uniform --strategy telepathy").rc, 2);
}

TEST(CliSweepPrep, WritesArtifacts) {
    const auto out = scratch("prep.csv");
    const auto r = qadv("sweep-prep --grid 11x11 --out " + out.string());
    ASSERT_EQ(r.rc, 0);
    const auto extrema = json::parse(r.out);
    EXPECT_NEAR(extrema["max_D"]["value"].get<double>(), 1.0, 1e-9);
    const std::string csv = slurp(out);
    EXPECT_EQ(csv.substr(0, csv.find('\n')), "R,kappa_h,C,E,D,I,J,branch");
    EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 122);
    EXPECT_TRUE(fs::exists(out.parent_path() / "prep_c0_boundary.csv"));
    EXPECT_TRUE(fs::exists(out.parent_path() / "prep_werner.csv"));
    fs::remove_all(out.parent_path());
}

TEST(CliSweepPrep, StdoutWithoutOut) {
    const auto r = qadv("sweep-prep --grid 3x3");
    ASSERT_EQ(r.rc, 0);
    EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "R,kappa_h,C,E,D,I,J,branch");
}

TEST(CliSweepPrep, BadGrid) {
    EXPECT_EQ(qadv("sweep-prep --grid 1x5").rc, 2);
    EXPECT_EQ(qadv("sweep-prep --grid ten").rc, 2);
    EXPECT_EQ(qadv("sweep-prep --kv 2").rc, 2);
}

TEST(CliSweepAdvantage, SmallGrid) {
    const auto r = qadv("sweep-advantage --grid 5x3");
    ASSERT_EQ(r.rc, 0);
    EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "R,p1,Iq,Ic,dI,dD,J_after,branch,lower_slack,upper_slack");
    EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 16);
}

TEST(CliCut, QuarterEncoding) {
    const auto j = qadv_json("cut --p1 0.25 --points 11 --format json");
    ASSERT_EQ(j["rows"].size(), 11u);
    for (const auto& row : j["rows"]) EXPECT_NEAR(row["dI"].get<double>(), row["D"].get<double>(), 1e-8);
    EXPECT_EQ(qadv("cut --points 11").rc, 2);
}

TEST(CliVerify, ByteIdenticalAndPassing) {
    const auto a = qadv("verify");
    EXPECT_EQ(a.rc, 0) << a.out;
    EXPECT_EQ(a.out.find("FAIL"), std::string::npos);
    EXPECT_EQ(a.out, qadv("verify").out);
}

} // namespace
