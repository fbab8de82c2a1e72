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

#include "oscillatk/kcalc.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "oscillatk/families.hpp"
#include "oscillatk/norms.hpp"

namespace oscillatk {
namespace {

ConcaveCurve indicator_curve(double m) { return k_curve_l1_linf(DecreasingStep({0.0, m}, {1.0})); }

// [t^-theta K(t)]^q dt/t integrated per piece for integer q, with
// K = d + s t expanded binomially.
double interp_power_binomial(const DecreasingStep& g, double theta, int q) {
  const auto br = g.breakpoints();
  const auto vs = g.values();
  const double e = theta * q;
  double total = 0.0;
  for (std::size_t i = 0; i < g.pieces(); ++i) {
    const double d = g.intercept(i);
    const double s = vs[i];
    const double a = br[i];
    const double b = br[i + 1];
    double binom = 1.0;
    for (int k = 0; k <= q; ++k) {
      // C(q,k) d^{q-k} s^k t^{k - e - 1}
      const double ex = k - e;
      double piece;
      if (ex == 0.0) {
        piece = std::log(b / a);
      } else if (a == 0.0) {
        piece = ex > 0.0 ? std::pow(b, ex) / ex : INFINITY;
      } else {
        piece = (std::pow(b, ex) - std::pow(a, ex)) / ex;
      }
      const double coef = binom * std::pow(d, q - k) * std::pow(s, k);
      if (coef != 0.0) total += coef * piece;
      binom = binom * (q - k) / (k + 1);
    }
  }
  total += std::pow(g.l1(), q) * std::pow(br.back(), -e) / e;
  return total;
}

TEST(ConcaveCurve, Validation) {
  EXPECT_THROW(ConcaveCurve({}, {}), DomainError);
  EXPECT_THROW(ConcaveCurve({0.0, 1.0}, {1.0, 2.0}), DomainError);
  EXPECT_THROW(ConcaveCurve({0.0, 1.0, 2.0}, {0.0, 1.0, 3.0}), DomainError);
  EXPECT_THROW(ConcaveCurve({0.0, 1.0}, {0.0, 1.0}, -1.0), DomainError);
  EXPECT_THROW(ConcaveCurve({0.0, 1.0}, {0.0, 1.0}, 2.0), DomainError);
  const ConcaveCurve k({0.0, 1.0, 3.0}, {0.0, 2.0, 3.0}, 0.25);
  EXPECT_DOUBLE_EQ(k(0.5), 1.0);
  EXPECT_DOUBLE_EQ(k(2.0), 2.5);
  EXPECT_DOUBLE_EQ(k(7.0), 4.0);
  EXPECT_DOUBLE_EQ(k.slope(0), 2.0);
  EXPECT_DOUBLE_EQ(k.slope(2), 0.25);
  EXPECT_DOUBLE_EQ(k.right_derivative(1.0), 0.5);
  EXPECT_DOUBLE_EQ(k.intercept(1), 1.5);
  EXPECT_TRUE(std::isinf(k.limit()));
}

TEST(KCurve, IntegralOfRearrangement) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const DecreasingStep g = rearrange(generate_step("random-step", seed, 10));
    const ConcaveCurve k = k_curve_l1_linf(g);
    EXPECT_DOUBLE_EQ(k.limit(), g.l1());
    for (double t = 1e-3; t < 1e3; t *= 1.9) {
      EXPECT_NEAR(k(t), g.integral(t), 1e-13 * std::max(1.0, g.l1()));
      EXPECT_DOUBLE_EQ(k_derivative(k, t), g(t));
    }
  }
}

TEST(JInfTheta, ClosedFormAndEdges) {
  EXPECT_DOUBLE_EQ(j_inf_theta(4.0, 9.0, 0.5), 6.0);
  EXPECT_DOUBLE_EQ(j_inf_theta(4.0, 9.0, 0.0), 4.0);
  EXPECT_DOUBLE_EQ(j_inf_theta(4.0, 9.0, 1.0), 9.0);
  EXPECT_DOUBLE_EQ(j_inf_theta(0.0, 9.0, 0.0), 0.0);
  EXPECT_DOUBLE_EQ(j_inf_theta(0.0, INFINITY, 0.0), 0.0);
  EXPECT_DOUBLE_EQ(j_inf_theta(0.0, 5.0, 1.0), 5.0);
  EXPECT_TRUE(std::isinf(j_inf_theta(0.0, INFINITY, 0.5)));
  EXPECT_THROW(j_inf_theta(-1.0, 1.0, 0.5), DomainError);
  EXPECT_THROW(j_inf_theta(1.0, 1.0, 1.5), DomainError);
  EXPECT_THROW(j_inf_theta_numeric(0.0, 1.0, 0.5), DomainError);
}

TEST(JInfTheta, NumericAgrees) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> log_norm(-8.0, 8.0);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int i = 0; i < 300; ++i) {
    const double n1 = std::exp(log_norm(rng));
    const double n2 = std::exp(log_norm(rng));
    const double theta = unit(rng);
    const double exact = j_inf_theta(n1, n2, theta);
    EXPECT_NEAR(j_inf_theta_numeric(n1, n2, theta), exact, 1e-8 * exact);
  }
}

TEST(InterpNorm, IndicatorClosedForm) {
  for (double m : {0.5, 1.0, 3.0}) {
    for (double theta : {0.2, 0.5, 0.8}) {
      for (double q : {1.0, 2.0, 5.0}) {
        const double expect = std::pow(m, 1.0 - theta) *
                              std::pow(1.0 / ((1.0 - theta) * q) + 1.0 / (theta * q), 1.0 / q);
        EXPECT_NEAR(interp_norm(indicator_curve(m), {theta, q}).value(), expect, 1e-9 * expect);
      }
      EXPECT_NEAR(interp_norm(indicator_curve(m), {theta, INFINITY}).value(),
                  std::pow(m, 1.0 - theta), 1e-12);
    }
  }
}

TEST(InterpNorm, BinomialOracle) {
  QuadratureOptions opts;
  opts.rel_tol = 1e-11;
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    const DecreasingStep g = rearrange(generate_step("random-step", seed, 6));
    const ConcaveCurve k = k_curve_l1_linf(g);
    for (double theta : {0.25, 0.5, 0.75}) {
      for (int q : {1, 2, 3}) {
        const double expect = std::pow(interp_power_binomial(g, theta, q), 1.0 / q);
        EXPECT_NEAR(interp_norm(k, {theta, static_cast<double>(q)}, opts).value(), expect,
                    1e-9 * expect)
            << "seed " << seed << " theta " << theta << " q " << q;
      }
    }
  }
}

TEST(InterpNorm, DivergentEndpoints) {
  const ConcaveCurve k = indicator_curve(1.0);
  EXPECT_TRUE(interp_norm(k, {0.0, 2.0}).is_divergent());
  EXPECT_TRUE(interp_norm(k, {1.0, 2.0}).is_divergent());
  EXPECT_TRUE(interp_norm(ConcaveCurve({0.0, 1.0}, {0.0, 1.0}, 0.5), {0.5, 2.0}).is_divergent());
  EXPECT_DOUBLE_EQ(interp_norm(ConcaveCurve(), {0.5, 2.0}).value(), 0.0);
  EXPECT_THROW(interp_norm(k, {-0.1, 2.0}), DomainError);
  EXPECT_THROW(interp_norm(k, {0.5, 0.0}), DomainError);
}

TEST(Gagliardo, IndicatorClosedForm) {
  for (double theta : {0.3, 0.5, 0.7}) {
    for (double q : {1.0, 2.0, 4.0}) {
      const ConcaveCurve k = indicator_curve(2.0);
      const double scale = std::pow(2.0, 1.0 - theta);
      EXPECT_NEAR(gagliardo1_norm(k, {theta, q}).value(),
                  scale * std::pow(1.0 / (theta * q), 1.0 / q), 1e-13);
      EXPECT_NEAR(gagliardo2_norm(k, {theta, q}).value(),
                  scale * std::pow(1.0 / ((1.0 - theta) * q), 1.0 / q), 1e-13);
    }
  }
}

TEST(Gagliardo, SandwichInterpNorm) {
  // K = (K - tK') + tK' with both terms non-negative.
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const ConcaveCurve k = k_curve_l1_linf(rearrange(generate_step("random-step", seed, 8)));
    const ThetaQ tq{0.5, 2.0};
    const double n = interp_norm(k, tq).value();
    const double g1 = gagliardo1_norm(k, tq).value();
    const double g2 = gagliardo2_norm(k, tq).value();
    EXPECT_LE(n, (g1 + g2) * (1 + 1e-9));
    EXPECT_LE(g1, n * (1 + 1e-9));
  }
}

TEST(Decomposition, SplitsAtLevel) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const StepFunction f = generate_step("random-step", seed, 9);
    const DecreasingStep g = rearrange(f);
    const ConcaveCurve k = k_curve_l1_linf(g);
    for (double t : {0.01, 0.3, 1.0, 4.0}) {
      const Decomposition d = optimal_decomposition_l1_linf(f, t);
      ASSERT_EQ(d.l1_part.size(), f.size());
      for (std::size_t i = 0; i < f.size(); ++i) {
        EXPECT_NEAR(d.l1_part.atoms()[i].value + d.linf_part.atoms()[i].value,
                    f.atoms()[i].value, 1e-14 * std::abs(f.atoms()[i].value));
      }
      EXPECT_LE(d.linf_part.sup_abs(), d.level);
      EXPECT_NEAR(d.l1_part.l1() + t * d.level, k(t), 1e-12 * std::max(1.0, k(t)));
    }
  }
}

TEST(BmoProxies, Definitions) {
  const DecreasingStep s({0.0, 0.5, 2.0}, {3.0, 1.0});
  EXPECT_DOUBLE_EQ(k_l1_bmo_proxy(s, 0.25), 0.75);
  EXPECT_DOUBLE_EQ(k_l1_bmo_proxy(s, 1.0), 1.0);
  // t^p = 1: sqrt(9 * 0.5 + 1 * 0.5)
  EXPECT_NEAR(k_lp_bmo_proxy(s, 2.0, 1.0), std::sqrt(5.0), 1e-14);
  EXPECT_THROW(k_lp_bmo_proxy(s, 0.5, 1.0), DomainError);
  EXPECT_THROW(k_l1_bmo_proxy(s, 0.0), DomainError);
}

}  // namespace
}  // namespace oscillatk
