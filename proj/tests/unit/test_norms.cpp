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

#include "oscillatk/norms.hpp"

#include <cmath>
#include <vector>

#include <gtest/gtest.h>

#include "oscillatk/families.hpp"

namespace oscillatk {
namespace {

DecreasingStep indicator(double m) { return DecreasingStep({0.0, m}, {1.0}); }

// Integral of (f**)^q for integer q, expanding (v + d/t)^q binomially on
// each piece.
double double_star_power_binomial(const DecreasingStep& g, int q) {
  const auto br = g.breakpoints();
  const auto vs = g.values();
  const std::size_t m = g.pieces();
  double total = std::pow(vs[0], q) * br[1];
  for (std::size_t i = 1; i < m; ++i) {
    const double a = br[i];
    const double b = br[i + 1];
    const double d = g.intercept(i);
    double binom = 1.0;
    for (int k = 0; k <= q; ++k) {
      // C(q,k) v^{q-k} d^k t^{-k}
      const double piece = k == 1 ? std::log(b / a)
                                  : (std::pow(a, 1.0 - k) - std::pow(b, 1.0 - k)) / (k - 1.0);
      total += binom * std::pow(vs[i], q - k) * std::pow(d, k) * piece;
      binom = binom * (q - k) / (k + 1);
    }
  }
  total += std::pow(g.l1(), q) * std::pow(br[m], 1.0 - q) / (q - 1.0);
  return total;
}

TEST(Lorentz, IndicatorClosedForm) {
  for (double m : {0.25, 1.0, 7.0}) {
    for (double p : {1.0, 1.5, 2.0, 4.0}) {
      for (double q : {1.0, 2.0, 3.5}) {
        const double expect = std::pow(p / q, 1.0 / q) * std::pow(m, 1.0 / p);
        EXPECT_NEAR(lorentz_norm(indicator(m), {p, q}).value(), expect, 1e-13 * expect);
      }
      EXPECT_NEAR(lorentz_norm(indicator(m), {p, kInf}).value(), std::pow(m, 1.0 / p), 1e-14);
    }
  }
}

TEST(Lorentz, DiagonalIsLebesgue) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const DecreasingStep g = rearrange(generate_step("random-step", seed, 8));
    for (double p : {1.0, 2.0, 3.0, 7.5}) {
      double moment = 0.0;
      for (std::size_t i = 0; i < g.pieces(); ++i) {
        moment += std::pow(g.values()[i], p) * (g.breakpoints()[i + 1] - g.breakpoints()[i]);
      }
      const double expect = std::pow(moment, 1.0 / p);
      EXPECT_NEAR(lebesgue_norm(g, p), expect, 1e-13 * expect);
      EXPECT_NEAR(lorentz_norm(g, {p, p}).value(), expect, 1e-13 * expect);
    }
    EXPECT_DOUBLE_EQ(lebesgue_norm(g, kInf), g.sup());
  }
}

TEST(Lorentz, LargeExponentsStayFinite) {
  const DecreasingStep g = rearrange(StepFunction({{2.0, 0.3}, {-1.0, 0.5}, {0.5, 0.2}}));
  for (double q : {256.0, 1024.0, 1e5}) {
    const double n = lorentz_norm(g, {q, q}).value();
    EXPECT_TRUE(std::isfinite(n));
    EXPECT_NEAR(n, 2.0 * std::pow(0.3, 1.0 / q), 1e-12);
    EXPECT_TRUE(std::isfinite(double_star_lq(g, q).value()));
    EXPECT_TRUE(std::isfinite(oscillation_lq(g, q).value()));
    EXPECT_TRUE(std::isfinite(lorentz_inf_q(g, q).value()));
  }
}

TEST(Lorentz, Homogeneous) {
  const DecreasingStep g = rearrange(generate_step("random-step", 4, 9));
  std::vector<double> scaled(g.values().begin(), g.values().end());
  for (double& v : scaled) v *= 3.5;
  const DecreasingStep h(std::vector<double>(g.breakpoints().begin(), g.breakpoints().end()),
                         scaled);
  for (double q : {1.5, 2.0, 6.0}) {
    EXPECT_NEAR(lorentz_norm(h, {2.0, q}).value(), 3.5 * lorentz_norm(g, {2.0, q}).value(),
                1e-12 * lorentz_norm(h, {2.0, q}).value());
    EXPECT_NEAR(double_star_lq(h, q).value(), 3.5 * double_star_lq(g, q).value(),
                1e-12 * double_star_lq(h, q).value());
  }
}

TEST(Lorentz, DomainErrors) {
  EXPECT_THROW(lorentz_norm(indicator(1.0), {0.5, 2.0}), DomainError);
  EXPECT_THROW(lorentz_norm(indicator(1.0), {2.0, 0.0}), DomainError);
  EXPECT_THROW(lebesgue_norm(indicator(1.0), 0.0), DomainError);
  EXPECT_DOUBLE_EQ(lorentz_norm(DecreasingStep(), {2.0, 2.0}).value(), 0.0);
}

TEST(LorentzInfQ, Indicator) {
  // f** - f* = m/t beyond m, so the norm is q^{-1/q} for every m.
  for (double m : {0.1, 1.0, 10.0}) {
    for (double q : {1.0, 2.0, 5.0}) {
      EXPECT_NEAR(lorentz_inf_q(indicator(m), q).value(), std::pow(1.0 / q, 1.0 / q), 1e-14);
    }
    EXPECT_DOUBLE_EQ(lorentz_inf_q(indicator(m), kInf).value(), 1.0);
    EXPECT_DOUBLE_EQ(linf_inf(indicator(m)), 1.0);
  }
}

TEST(LinfInf, DominatesOscillation) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const DecreasingStep g = rearrange(generate_step("random-step", seed, 10));
    const double s = linf_inf(g);
    for (double t = 1e-3; t < 1e3; t *= 1.7) EXPECT_LE(oscillation(g, t), s * (1 + 1e-14));
  }
}

TEST(DoubleStarLq, BinomialOracle) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const DecreasingStep g = rearrange(generate_step("random-step", seed, 7));
    for (int q : {2, 3, 4}) {
      const double expect = std::pow(double_star_power_binomial(g, q), 1.0 / q);
      EXPECT_NEAR(double_star_lq(g, q).value(), expect, 1e-12 * expect) << "seed " << seed;
    }
  }
}

TEST(DoubleStarLq, HardyBound) {
  // ||f**||_q <= q/(q-1) ||f||_q.
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const DecreasingStep g = rearrange(generate_step("random-step", seed, 12));
    for (double q : {1.2, 2.0, 5.0}) {
      EXPECT_LE(double_star_lq(g, q).value(), q / (q - 1.0) * lebesgue_norm(g, q) * (1 + 1e-12));
    }
  }
  EXPECT_TRUE(double_star_lq(indicator(1.0), 1.0).is_divergent());
  EXPECT_TRUE(oscillation_lq(indicator(1.0), 0.5).is_divergent());
}

TEST(OscillationLq, IndicatorAndClosedForm) {
  // (q-1)^{-1/q} from the integral of (m/t)^q over (m, inf).
  for (double q : {1.5, 2.0, 10.0}) {
    EXPECT_NEAR(oscillation_lq(indicator(2.0), q).value(),
                std::pow(2.0, 1.0 / q) * std::pow(1.0 / (q - 1.0), 1.0 / q), 1e-13);
  }
}

TEST(Luxemburg, IndicatorClosedForm) {
  // (e^{1/lambda} - 1) m = mu.
  for (double m : {0.1, 0.5, 1.0}) {
    const StepFunction f({{1.0, m}, {0.0, 1.0 - m + 1e-9}});
    const double expect = 1.0 / std::log1p(1.0 / m);
    EXPECT_NEAR(luxemburg_exp_l(f, 1.0), expect, 1e-11 * expect);
  }
  EXPECT_DOUBLE_EQ(luxemburg_exp_l(StepFunction(), 1.0), 0.0);
  EXPECT_THROW(luxemburg_exp_l(StepFunction(), 0.0), DomainError);
}

TEST(Luxemburg, IsTheNormLevel) {
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    const StepFunction f = generate_step("random-step", seed, 10);
    const double mu = f.total_mass();
    const double lambda = luxemburg_exp_l(f, mu);
    double s = 0.0;
    for (const Atom& a : f.atoms()) s += a.mass * std::expm1(std::abs(a.value) / lambda);
    EXPECT_NEAR(s, mu, 1e-9 * mu);
  }
}

TEST(Delta, GridAndIndicator) {
  const auto grid = default_delta_grid();
  EXPECT_EQ(grid.size(), 30u);
  EXPECT_DOUBLE_EQ(grid.front(), 1.0 + std::ldexp(1.0, -20));
  EXPECT_DOUBLE_EQ(grid.back(), 1024.0);
  // ||chi_[0,1]||_q / q = 1/q peaks at the smallest grid point.
  EXPECT_NEAR(delta_extrapolation(indicator(1.0), grid).value(), 1.0 / grid.front(), 1e-15);
  const std::vector<double> bad{1.0};
  EXPECT_THROW(delta_extrapolation(indicator(1.0), bad), DomainError);
}

TEST(EvaluateNorm, Dispatch) {
  const StepFunction f({{1.0, 1.0}});
  const DecreasingStep g = rearrange(f);
  EXPECT_NEAR(evaluate_norm({"lorentz", 2.0, 2.0}, f, g, 1.0).value(), 1.0, 1e-15);
  EXPECT_NEAR(evaluate_norm({"lorentz-inf", 2.0, 2.0}, f, g, 1.0).value(), std::sqrt(0.5),
              1e-15);
  EXPECT_DOUBLE_EQ(evaluate_norm({"linf-inf", 2.0, 2.0}, f, g, 1.0).value(), 1.0);
  EXPECT_THROW(evaluate_norm({"sobolev", 2.0, 2.0}, f, g, 1.0), DomainError);
}

}  // namespace
}  // namespace oscillatk
