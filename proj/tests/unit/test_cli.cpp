// Copyright 2026 The oscillatk Authors
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

#include "cli.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "oscillatk/json_io.hpp"

namespace oscillatk {
namespace {

namespace fs = std::filesystem;

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("oscillatk_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string write(const std::string& name, const std::string& text) {
    const fs::path p = dir_ / name;
    std::ofstream(p) << text;
    return p.string();
  }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  int run(const std::vector<std::string>& args) {
    out_.str("");
    err_.str("");
    return cli::run(args, out_, err_);
  }

  fs::path dir_;
  std::ostringstream out_;
  std::ostringstream err_;
};

TEST_F(Cli, ComputeIndicator) {
  const std::string in = write("f.json", R"({"atoms": [[1, 1]]})");
  ASSERT_EQ(run({"compute", "--input", in, "--ops", "linf-inf,interp,gagliardo1,gagliardo2"}),
            cli::kOk)
      << err_.str();
  const Json j = parse_json(out_.str());
  EXPECT_EQ(j.at("linf_inf").get<double>(), 1.0);
  EXPECT_NEAR(j.at("interp").get<double>(), std::sqrt(2.0), 1e-9);
  EXPECT_NEAR(j.at("gagliardo1").get<double>(), 1.0, 1e-13);
  EXPECT_NEAR(j.at("gagliardo2").get<double>(), 1.0, 1e-13);
}

TEST_F(Cli, ComputeConstantGridBmo) {
  const std::string in =
      write("g.json", R"({"dim": 1, "n_side": 4, "h": 0.25, "values": [2, 2, 2, 2]})");
  ASSERT_EQ(run({"compute", "--input", in, "--ops", "bmo,sharp,gradient"}), cli::kOk);
  const Json j = parse_json(out_.str());
  EXPECT_EQ(j.at("bmo").get<double>(), 0.0);
  EXPECT_EQ(j.at("sharp").at("values").size(), 4u);
}

TEST_F(Cli, ComputeCurvesAndRequests) {
  const std::string in = write("f.json", R"({"atoms": [[2, 0.5], [-1, 0.5]],
    "requests": [{"space": "lorentz", "p": 2, "q": 2}, {"space": "linf-inf"}]})");
  const std::string out = path("o.json");
  ASSERT_EQ(run({"compute", "--input", in, "--ops", "rearrange,double-star,oscillation,k-curve",
                 "--out", out}),
            cli::kOk);
  EXPECT_TRUE(out_.str().empty());
  std::ifstream f(out);
  const Json j = Json::parse(f);
  EXPECT_EQ(j.at("double_star").at("t").size(), 512u);
  EXPECT_EQ(j.at("rearrange").at("values")[0].get<double>(), 2.0);
  ASSERT_EQ(j.at("requests").size(), 2u);
  EXPECT_NEAR(j.at("requests")[0].at("value").get<double>(), std::sqrt(2.5), 1e-14);
}

TEST_F(Cli, ComputeErrors) {
  const std::string bad = write("bad.json", R"({"atoms": [[1, 1]])");
  EXPECT_EQ(run({"compute", "--input", bad, "--ops", "linf-inf"}), cli::kParseError);
  EXPECT_NE(err_.str().find("malformed JSON"), std::string::npos);
  const std::string ok = write("f.json", R"({"atoms": [[1, 1]]})");
  EXPECT_EQ(run({"compute", "--input", ok, "--ops", "frobnicate"}), cli::kParseError);
  EXPECT_EQ(run({"compute", "--input", path("missing.json"), "--ops", "bmo"}), cli::kParseError);
  EXPECT_EQ(run({"compute", "--input", ok}), cli::kParseError);
  // theta = 0 makes the interpolation norm of an indicator diverge.
  EXPECT_EQ(run({"compute", "--input", ok, "--ops", "interp", "--theta", "0"}), cli::kInvalid);
  EXPECT_NE(err_.str().find("interp"), std::string::npos);
  EXPECT_EQ(run({"compute", "--input", ok, "--ops", "bmo"}), cli::kInvalid);
  const std::string zero_mass = write("z.json", R"({"atoms": [[1, 0]]})");
  EXPECT_EQ(run({"compute", "--input", zero_mass, "--ops", "linf-inf"}), cli::kParseError);
}

TEST_F(Cli, VerifyPassAndFail) {
  const std::string out = path("s.json");
  ASSERT_EQ(run({"verify", "reverse-hardy", "--trials", "20", "--seed", "1", "--out", out}),
            cli::kOk);
  EXPECT_NE(err_.str().find("PASS reverse-hardy"), std::string::npos);
  std::ifstream f(out);
  const SuiteSummary s = summary_from_json(Json::parse(f));
  ASSERT_EQ(s.reports.size(), 1u);
  EXPECT_TRUE(s.all_pass);

  // Asking for a constant 1% below the sharp one fails on the indicator.
  EXPECT_EQ(run({"verify", "reverse-hardy", "--family", "indicator", "--trials", "1",
                 "--tolerance", "-0.01"}),
            cli::kCheckFailed);
  EXPECT_FALSE(summary_from_json(parse_json(out_.str())).all_pass);
}

TEST_F(Cli, VerifySuiteFlagAndErrors) {
  ASSERT_EQ(run({"verify", "--suite", "j-identity,combinaos", "--trials", "3"}), cli::kOk);
  EXPECT_EQ(summary_from_json(parse_json(out_.str())).reports.size(), 2u);
  EXPECT_EQ(run({"verify", "no-such-check"}), cli::kParseError);
  EXPECT_EQ(run({"verify", "bds", "--family", "gaussian"}), cli::kParseError);
  EXPECT_EQ(run({"verify", "bds", "--trials", "0"}), cli::kParseError);
  EXPECT_EQ(run({"verify", "bds", "--family", "random-step", "--trials", "2"}), cli::kInvalid);
}

TEST_F(Cli, VerifyDeterministic) {
  ASSERT_EQ(run({"verify", "good-lambda", "--trials", "4", "--seed", "5"}), cli::kOk);
  const SuiteSummary a = summary_from_json(parse_json(out_.str()));
  ASSERT_EQ(run({"verify", "good-lambda", "--trials", "4", "--seed", "5"}), cli::kOk);
  const SuiteSummary b = summary_from_json(parse_json(out_.str()));
  EXPECT_TRUE(a.reports[0].same_result(b.reports[0]));
}

TEST_F(Cli, Probe) {
  ASSERT_EQ(run({"probe", "lemma-K", "--budget", "100"}), cli::kOk);
  const CheckReport r = report_from_json(parse_json(out_.str()));
  EXPECT_EQ(r.name, "lemma-K");
  EXPECT_TRUE(r.witness.function.has_value());
  EXPECT_EQ(run({"probe", "unknown"}), cli::kParseError);
  EXPECT_EQ(run({"probe"}), cli::kParseError);
  EXPECT_EQ(run({"probe", "lemma-K", "--budget", "0"}), cli::kParseError);
}

TEST_F(Cli, ReportCsv) {
  const std::string in = write("f.json", R"({"atoms": [[1, 2]]})");
  ASSERT_EQ(run({"report", "--input", in}), cli::kOk);
  std::istringstream csv(out_.str());
  std::string line;
  std::getline(csv, line);
  EXPECT_EQ(line, "t,f_star,f_double_star,oscillation");
  std::size_t rows = 0;
  while (std::getline(csv, line)) ++rows;
  EXPECT_EQ(rows, 512u);

  const std::string summary = path("s.json");
  ASSERT_EQ(run({"verify", "j-identity", "--trials", "2", "--out", summary}), cli::kOk);
  ASSERT_EQ(run({"report", "--input", summary}), cli::kOk);
  EXPECT_NE(out_.str().find("j-identity,exact-constant,true"), std::string::npos);
}

TEST_F(Cli, UsageErrors) {
  EXPECT_EQ(run({}), cli::kParseError);
  EXPECT_EQ(run({"launch"}), cli::kParseError);
  EXPECT_EQ(run({"verify", "bds", "--trials", "many"}), cli::kParseError);
  EXPECT_EQ(run({"--help"}), cli::kOk);
  EXPECT_NE(out_.str().find("compute"), std::string::npos);
}

}  // namespace
}  // namespace oscillatk
