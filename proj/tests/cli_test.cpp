// Copyright 2026 The qconc Authors
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

#include "cli.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "qconc/io.hpp"

namespace qconc {
namespace {

namespace fs = std::filesystem;

struct Outcome {
  int code;
  std::string out;
  std::string err;
  io::Json json() const { return io::Json::parse(out); }
};

Outcome run(std::vector<std::string> args) {
  args.insert(args.begin(), "qconc");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("qconc_cli_test_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  fs::path dir_;
};

TEST_F(CliTest, WernerWitnessBound) {
  ASSERT_EQ(run({"gen", "--family", "werner", "--p", "0.9", "--out", path("w.json")}).code, 0);
  ASSERT_EQ(run({"gen", "--family", "bell", "--kind", "psi-", "--out", path("s.json")}).code, 0);
  const Outcome r = run({"bound", "witness", "--state", path("w.json"), "--sigma", path("s.json")});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NEAR(r.json().at("bound").get<double>(), 0.85, 1e-10);
  EXPECT_FALSE(r.json().at("vacuous").get<bool>());

  const Outcome c = run({"concurrence", "--state", path("w.json")});
  ASSERT_EQ(c.code, 0) << c.err;
  EXPECT_EQ(c.json().at("method").get<std::string>(), "wootters");
  EXPECT_NEAR(c.json().at("value").get<double>(), 0.85, 1e-10);

  const Outcome t = run({"bound", "two-copy", "--state", path("w.json")});
  ASSERT_EQ(t.code, 0) << t.err;
  EXPECT_NEAR(t.json().at("c_squared_bound").get<double>(), 0.715, 1e-10);
}

TEST_F(CliTest, BellReportIsTight) {
  ASSERT_EQ(run({"gen", "--family", "bell", "--kind", "phi+", "--out", path("b.json")}).code, 0);
  const Outcome r = run({"report", "--state", path("b.json"), "--seeds", path("b.json")});
  ASSERT_EQ(r.code, 0) << r.err;
  const io::Json j = r.json();
  EXPECT_NEAR(j.at("best_lower_bound").get<double>(), 1.0, 1e-12);
  EXPECT_TRUE(j.at("flags").at("tight").get<bool>());
  EXPECT_NEAR(j.at("oracles").at("exact").at("value").get<double>(), 1.0, 1e-12);

  const Outcome bare = run({"report", "--state", path("b.json")});
  ASSERT_EQ(bare.code, 0) << bare.err;
  EXPECT_NEAR(bare.json().at("best_lower_bound").get<double>(), 1.0, 1e-12);
  EXPECT_TRUE(bare.json().at("witness_bounds").empty());
}

TEST_F(CliTest, WitnessBuildOptimizeAndEstimate) {
  ASSERT_EQ(run({"gen", "--family", "werner", "--p", "0.9", "--out", path("w.json")}).code, 0);
  const Outcome o = run({"witness", "optimize", "--state", path("w.json"), "--restarts", "4",
                         "--out", path("opt.json")});
  ASSERT_EQ(o.code, 0) << o.err;
  EXPECT_NEAR(o.json().at("bound").get<double>(), 0.85, 1e-6);
  EXPECT_TRUE(fs::exists(path("opt.json")));

  const Outcome e = run({"estimate", "--state", path("w.json"), "--witness", path("opt.json"),
                         "--shots", "20000", "--seed", "3"});
  ASSERT_EQ(e.code, 0) << e.err;
  const io::Json j = e.json();
  EXPECT_LE(std::abs(j.at("bound_estimate").get<double>() - 0.85),
            5.0 * j.at("std_error").get<double>());

  const Outcome t = run({"estimate", "--state", path("w.json"), "--two-copy", "--shots", "20000"});
  ASSERT_EQ(t.code, 0) << t.err;
  EXPECT_EQ(t.json().at("bound_kind").get<std::string>(), "c_squared");
}

TEST_F(CliTest, OutputIsDeterministic) {
  const auto gen = [&](const std::string& name) {
    return run({"gen", "--family", "random", "--dims", "3", "3", "--rank", "2", "--seed", "5",
                "--out", path(name)});
  };
  ASSERT_EQ(gen("a.json").code, 0);
  ASSERT_EQ(gen("b.json").code, 0);
  std::ifstream a(path("a.json")), b(path("b.json"));
  const std::string sa((std::istreambuf_iterator<char>(a)), {});
  const std::string sb((std::istreambuf_iterator<char>(b)), {});
  EXPECT_EQ(sa, sb);

  const std::vector<std::string> cmd{"concurrence", "--state", path("a.json"), "--restarts", "2",
                                     "--seed", "1"};
  const Outcome c1 = run(cmd);
  const Outcome c2 = run(cmd);
  ASSERT_EQ(c1.code, 0);
  EXPECT_EQ(c1.out, c2.out);
  EXPECT_NE(c1.err.find("warning"), std::string::npos);
}

TEST_F(CliTest, MixedSeedNeedsUpperBound) {
  ASSERT_EQ(run({"gen", "--family", "werner", "--p", "0.9", "--out", path("w.json")}).code, 0);
  const Outcome r = run({"bound", "witness", "--state", path("w.json"), "--sigma", path("w.json")});
  EXPECT_EQ(r.code, cli::kExitBadInput);
  const Outcome ok = run({"bound", "witness", "--state", path("w.json"), "--sigma", path("w.json"),
                          "--c-upper", "0.85"});
  EXPECT_EQ(ok.code, 0) << ok.err;
}

TEST_F(CliTest, ErrorExitCodes) {
  std::ofstream(path("bad.json")) << "{ nope";
  EXPECT_EQ(run({"concurrence", "--state", path("bad.json")}).code, cli::kExitBadInput);

  io::Json j = io::state_to_json(maximally_mixed({2, 2}));
  j["data"][0][0] = io::Json::array({0.75, 0.0});
  j["data"][1][1] = io::Json::array({-0.25, 0.0});
  std::ofstream(path("neg.json")) << j.dump();
  EXPECT_EQ(run({"concurrence", "--state", path("neg.json")}).code, cli::kExitNumerical);

  EXPECT_EQ(run({"bogus"}).code, cli::kExitBadInput);
  EXPECT_EQ(run({"gen", "--family", "werner", "--p", "2", "--out", path("x.json")}).code,
            cli::kExitBadInput);
  ASSERT_EQ(run({"gen", "--family", "werner", "--p", "0.5", "--out", path("w.json")}).code, 0);
  EXPECT_EQ(run({"estimate", "--state", path("w.json"), "--two-copy", "--shots", "0"}).code,
            cli::kExitBadInput);
  EXPECT_EQ(run({"estimate", "--state", path("w.json"), "--shots", "10"}).code, cli::kExitBadInput);
  EXPECT_EQ(run({"--help"}).code, 0);
}

}  // namespace
}  // namespace qconc
