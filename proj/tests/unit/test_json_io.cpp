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

#include "oscillatk/json_io.hpp"

#include <cmath>
#include <limits>

#include <gtest/gtest.h>

#include "oscillatk/families.hpp"
#include "oscillatk/inequality_lab.hpp"

namespace oscillatk {
namespace {

Json reparse(const Json& j) { return parse_json(dump(j)); }

TEST(Json, NonFiniteDoubles) {
  const double inf = std::numeric_limits<double>::infinity();
  EXPECT_EQ(encode_double(inf), Json("inf"));
  EXPECT_EQ(encode_double(-inf), Json("-inf"));
  EXPECT_EQ(encode_double(NAN), Json("nan"));
  EXPECT_EQ(decode_double(Json("inf")), inf);
  EXPECT_TRUE(std::isnan(decode_double(Json("nan"))));
  EXPECT_EQ(decode_double(Json(0.1)), 0.1);
  EXPECT_THROW(decode_double(Json("Infinity")), ParseError);
  EXPECT_THROW(decode_double(Json::array()), ParseError);
}

TEST(Json, MalformedText) {
  EXPECT_THROW(parse_json("{\"atoms\": [[1, 2]"), ParseError);
  EXPECT_THROW(parse_json(""), ParseError);
  EXPECT_THROW(step_from_json(parse_json("{\"atoms\": [[1, 2, 3]]}")), ParseError);
  EXPECT_THROW(step_from_json(parse_json("{\"atoms\": [[\"a\", 2]]}")), ParseError);
  EXPECT_THROW(step_from_json(parse_json("{\"values\": []}")), ParseError);
  EXPECT_THROW(function_from_json(parse_json("[1, 2]")), ParseError);
  EXPECT_THROW(function_from_json(parse_json("{\"x\": 1}")), ParseError);
  EXPECT_THROW(step_from_json(parse_json("{\"atoms\": [[1, 0]]}")), DomainError);
}

TEST(Json, FunctionRoundTrip) {
  const StepFunction f = generate_step("random-step", 5, 12);
  EXPECT_EQ(step_from_json(reparse(to_json(f))), f);
  const GridFunction g = generate_grid("random-bmo-grid", 5, 16, 2);
  EXPECT_EQ(grid_from_json(reparse(to_json(g))), g);
  const Generated any = g;
  EXPECT_EQ(function_from_json(reparse(to_json(any))), any);
}

TEST(Json, CurvesAndRequests) {
  const DecreasingStep g({0.0, 1.0, 3.0}, {2.0, 0.5});
  const Json j = to_json(g);
  EXPECT_EQ(j.at("breakpoints").size(), 3u);
  EXPECT_EQ(j.at("values")[1].get<double>(), 0.5);
  const NormRequest r = norm_request_from_json(parse_json(R"({"space": "lorentz", "q": "inf"})"));
  EXPECT_EQ(r.space, "lorentz");
  EXPECT_EQ(r.p, 2.0);
  EXPECT_TRUE(std::isinf(r.q));
  EXPECT_THROW(norm_request_from_json(parse_json("{}")), ParseError);
}

TEST(Json, ParamGridRoundTrip) {
  ParamGrid p;
  p.theta = {0.1, 0.9};
  p.q = {2.0, std::numeric_limits<double>::infinity()};
  p.dims = {1, 2};
  EXPECT_EQ(param_grid_from_json(reparse(to_json(p))), p);
}

TEST(Json, ReportRoundTrip) {
  CheckSpec spec;
  spec.name = "bds";
  spec.trials = 3;
  spec.seed = 4;
  const CheckReport r = run_check(spec);
  const CheckReport back = report_from_json(reparse(to_json(r)));
  EXPECT_TRUE(back.same_result(r));
  EXPECT_EQ(back.runtime_ms, r.runtime_ms);

  ParamGrid params;
  params.q = {2.0};
  const CheckReport probe = probe_sharpness("reverse-hardy", params, 200, 1);
  ASSERT_TRUE(probe.witness.function.has_value());
  EXPECT_TRUE(report_from_json(reparse(to_json(probe))).same_result(probe));
}

TEST(Json, SummaryRoundTrip) {
  const SuiteSummary s = run_suite({"j-identity", "combinaos"}, 3, 9);
  const Json j = to_json(s);
  EXPECT_EQ(j.at("count").get<int>(), 2);
  EXPECT_EQ(j.at("passed").get<int>(), 2);
  const SuiteSummary back = summary_from_json(reparse(j));
  ASSERT_EQ(back.reports.size(), 2u);
  EXPECT_TRUE(back.reports[1].same_result(s.reports[1]));
  EXPECT_EQ(back.all_pass, s.all_pass);
  EXPECT_EQ(back.seed, 9u);
}

}  // namespace
}  // namespace oscillatk
