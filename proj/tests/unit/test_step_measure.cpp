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

#include "oscillatk/step_measure.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include <gtest/gtest.h>

#include "oscillatk/families.hpp"

namespace oscillatk {
namespace {

StepFunction sample() { return StepFunction({{2.0, 0.3}, {-1.0, 0.5}, {0.5, 0.2}}); }

// Integral of f* over [0, t] by greedy filling with the largest |values| first.
double greedy_integral(const StepFunction& f, double t) {
  std::vector<Atom> atoms(f.atoms().begin(), f.atoms().end());
  std::sort(atoms.begin(), atoms.end(),
            [](const Atom& a, const Atom& b) { return std::abs(a.value) > std::abs(b.value); });
  double left = t;
  double s = 0.0;
  for (const Atom& a : atoms) {
    const double take = std::min(left, a.mass);
    s += take * std::abs(a.value);
    left -= take;
    if (left <= 0.0) break;
  }
  return s;
}

// Integral of the distribution function over [level, inf).
double tail_of_distribution(const StepFunction& f, double level) {
  double s = 0.0;
  for (const Atom& a : f.atoms()) s += a.mass * std::max(std::abs(a.value) - level, 0.0);
  return s;
}

TEST(StepFunction, RejectsBadAtoms) {
  EXPECT_THROW(StepFunction({{1.0, 0.0}}), DomainError);
  EXPECT_THROW(StepFunction({{1.0, -1.0}}), DomainError);
  EXPECT_THROW(StepFunction({{NAN, 1.0}}), DomainError);
  EXPECT_THROW(StepFunction({{1.0, INFINITY}}), DomainError);
}

TEST(StepFunction, Summaries) {
  const StepFunction f({{2.0, 0.3}, {0.0, 0.4}, {-1.0, 0.5}});
  EXPECT_DOUBLE_EQ(f.total_mass(), 1.2);
  EXPECT_DOUBLE_EQ(f.support_measure(), 0.8);
  EXPECT_DOUBLE_EQ(f.l1(), 1.1);
  EXPECT_DOUBLE_EQ(f.sup_abs(), 2.0);
}

TEST(Rearrange, SortsAbsoluteValues) {
  const DecreasingStep g = rearrange(sample());
  ASSERT_EQ(g.pieces(), 3u);
  EXPECT_DOUBLE_EQ(g.values()[0], 2.0);
  EXPECT_DOUBLE_EQ(g.values()[1], 1.0);
  EXPECT_DOUBLE_EQ(g.values()[2], 0.5);
  EXPECT_DOUBLE_EQ(g.breakpoints()[1], 0.3);
  EXPECT_DOUBLE_EQ(g.breakpoints()[2], 0.8);
  EXPECT_DOUBLE_EQ(g.support(), 1.0);
  EXPECT_DOUBLE_EQ(g.l1(), 1.2);
}

TEST(Rearrange, MergesTiesAndDropsZeros) {
  const DecreasingStep g = rearrange(StepFunction({{1.0, 0.25}, {0.0, 3.0}, {-1.0, 0.5}}));
  ASSERT_EQ(g.pieces(), 1u);
  EXPECT_DOUBLE_EQ(g.support(), 0.75);
  EXPECT_TRUE(rearrange(StepFunction({{0.0, 1.0}})).is_zero());
  EXPECT_TRUE(rearrange(StepFunction()).is_zero());
}

TEST(Rearrange, RightContinuous) {
  const DecreasingStep g = rearrange(sample());
  EXPECT_DOUBLE_EQ(g(0.0), 2.0);
  EXPECT_DOUBLE_EQ(g(0.3), 1.0);
  EXPECT_DOUBLE_EQ(g(0.29999), 2.0);
  EXPECT_DOUBLE_EQ(g(1.0), 0.0);
  EXPECT_DOUBLE_EQ(g(5.0), 0.0);
  EXPECT_EQ(g.piece_at(0.3), 1u);
  EXPECT_EQ(g.piece_at(1.0), 3u);
}

TEST(Rearrange, EquimeasurableWithDistribution) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const StepFunction f = generate_step("random-step", seed, 12);
    const DecreasingStep g = rearrange(f);
    for (const Atom& a : f.atoms()) {
      const double s = std::abs(a.value);
      double measure = 0.0;
      for (std::size_t i = 0; i < g.pieces(); ++i) {
        if (g.values()[i] > s) measure = g.breakpoints()[i + 1];
      }
      EXPECT_NEAR(measure, distribution(f, s), 1e-12 * f.total_mass());
    }
  }
}

TEST(DecreasingStep, ValidatesInput) {
  EXPECT_THROW(DecreasingStep({0.0, 1.0}, {1.0, 0.5}), DomainError);
  EXPECT_THROW(DecreasingStep({0.5, 1.0}, {1.0}), DomainError);
  EXPECT_THROW(DecreasingStep({0.0, 1.0, 0.5}, {1.0, 0.5}), DomainError);
  EXPECT_THROW(DecreasingStep({0.0, 1.0, 2.0}, {1.0, 2.0}), DomainError);
  EXPECT_THROW(DecreasingStep({0.0, 1.0}, {-1.0}), DomainError);
  const DecreasingStep g({0.0, 1.0, 2.0, 3.0}, {2.0, 2.0, 0.0});
  EXPECT_EQ(g.pieces(), 1u);
  EXPECT_DOUBLE_EQ(g.support(), 2.0);
}

TEST(DecreasingStep, AsStepRoundTrips) {
  const DecreasingStep g = rearrange(sample());
  EXPECT_EQ(rearrange(g.as_step()), g);
}

TEST(DoubleStar, MatchesGreedyIntegral) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const StepFunction f = generate_step("random-step", seed, 10);
    const DecreasingStep g = rearrange(f);
    for (double t : {1e-4, 0.01, 0.3, 1.0, 2.5, 10.0, 100.0}) {
      const double expect = greedy_integral(f, t);
      EXPECT_NEAR(integrate_star(g, t), expect, 1e-12 * std::max(1.0, expect));
      EXPECT_NEAR(double_star(g, t), expect / t, 1e-12 * std::max(1.0, expect / t));
    }
  }
}

TEST(DoubleStar, DomainChecks) {
  const DecreasingStep g = rearrange(sample());
  EXPECT_THROW(integrate_star(g, -1.0), DomainError);
  EXPECT_THROW(double_star(g, 0.0), DomainError);
  EXPECT_DOUBLE_EQ(integrate_star(g, 0.0), 0.0);
}

TEST(Oscillation, LayerCakeIdentity) {
  for (std::uint64_t seed = 100; seed < 200; ++seed) {
    const StepFunction f = generate_step("random-step", seed, 16);
    const DecreasingStep g = rearrange(f);
    for (double t : {1e-3, 0.05, 0.5, 1.0, 3.0, 40.0}) {
      const double lhs = t * oscillation(g, t);
      const double rhs = tail_of_distribution(f, g(t));
      EXPECT_NEAR(lhs, rhs, 1e-10 * std::max(rhs, 1e-300)) << "seed " << seed << " t " << t;
    }
  }
}

TEST(Oscillation, NonNegativeAndDecaysLikeInverseT) {
  const DecreasingStep g = rearrange(sample());
  EXPECT_DOUBLE_EQ(oscillation(g, 0.1), 0.0);
  EXPECT_NEAR(oscillation(g, 4.0), g.l1() / 4.0, 1e-15);
  for (double t = 0.01; t < 3.0; t *= 1.3) EXPECT_GE(oscillation(g, t), 0.0);
}

TEST(Truncate, RemovesLevelAndKeepsSign) {
  const StepFunction f = truncate(sample(), 0.75);
  ASSERT_EQ(f.size(), 3u);
  EXPECT_DOUBLE_EQ(f.atoms()[0].value, 1.25);
  EXPECT_DOUBLE_EQ(f.atoms()[1].value, -0.25);
  EXPECT_DOUBLE_EQ(f.atoms()[2].value, 0.0);
  EXPECT_DOUBLE_EQ(f.l1(), tail_of_distribution(sample(), 0.75));
  EXPECT_THROW(truncate(sample(), -1.0), DomainError);
}

TEST(PowerIntegral, MonomialWeights) {
  const DecreasingStep g = rearrange(sample());
  // alpha = 0 gives the q-th moment.
  EXPECT_NEAR(power_integral(g, 2.0, 0.0, 0.0).value(), 4.0 * 0.3 + 0.5 + 0.25 * 0.2, 1e-15);
  // alpha = 1 on [0.1, 0.9]: sum of v^q (b^2 - a^2) / 2.
  const double expect = 8.0 * (0.09 - 0.01) / 2 + 1.0 * (0.64 - 0.09) / 2 +
                        0.125 * (0.81 - 0.64) / 2;
  EXPECT_NEAR(power_integral(g, 3.0, 1.0, 0.1, 0.9).value(), expect, 1e-15);
  // alpha = -1: logarithms.
  const double logs = std::log(0.8 / 0.3) + 0.5 * std::log(1.0 / 0.8);
  EXPECT_NEAR(power_integral(g, 1.0, -1.0, 0.3).value(), logs, 1e-14);
}

TEST(PowerIntegral, DivergesAtZero) {
  const DecreasingStep g = rearrange(sample());
  EXPECT_TRUE(power_integral(g, 2.0, -1.0, 0.0).is_divergent());
  EXPECT_TRUE(power_integral(g, 2.0, -1.5, 0.0).is_divergent());
  EXPECT_TRUE(power_integral(g, 2.0, -0.5, 0.0).is_ok());
  EXPECT_THROW(power_integral(g, 0.0, 0.0, 0.0), DomainError);
  EXPECT_THROW(power_integral(g, 1.0, 0.0, 0.5, 0.2), DomainError);
}

}  // namespace
}  // namespace oscillatk
