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

#include "lab_internal.hpp"
#include "oscillatk/kcalc.hpp"
#include "oscillatk/norms.hpp"

namespace oscillatk::lab {

namespace {

QuadratureOptions tight_quadrature() {
  QuadratureOptions opts;
  opts.rel_tol = 1e-10;
  return opts;
}

Evaluation lemma_k(const Generated& f, const ParamGrid& grid, const TrialContext&) {
  const DecreasingStep g = rearrange(as_step(f));
  const ConcaveCurve k = k_curve_l1_linf(g);
  const double n1 = g.l1();
  const double n2 = g.sup();
  return max_over_points(grid, [&](const Point& pt) {
    const double theta = pt.theta;
    const double q = pt.q;
    const Outcome norm = interp_norm(k, {theta, q}, tight_quadrature());
    if (!norm.is_ok()) return norm;
    const double lhs = std::pow((1.0 - theta) * theta * q, 1.0 / q) * norm.value();
    return Outcome::ok(safe_ratio(lhs, j_inf_theta(n1, n2, theta)));
  });
}

Evaluation j_identity(const Generated& f, const ParamGrid& grid, const TrialContext&) {
  const DecreasingStep g = rearrange(as_step(f));
  const double n1 = g.l1();
  const double n2 = g.sup();
  return max_over_points(grid, [&](const Point& pt) {
    if (g.is_zero()) return Outcome::ok(1.0);
    const double closed = j_inf_theta(n1, n2, pt.theta);
    const double numeric = j_inf_theta_numeric(n1, n2, pt.theta);
    return Outcome::ok(std::max(closed / numeric, numeric / closed));
  });
}

double teomarkao_factor(double theta, double q) {
  const double r = (1.0 - theta) * q;
  return q * std::pow(1.0 + std::pow(r, 1.0 / q), 1.0 - theta) * std::pow(r, -theta);
}

Evaluation teomarkao(const Generated& f, const ParamGrid& grid, const TrialContext&) {
  const DecreasingStep g = rearrange(as_step(f));
  const ConcaveCurve k = k_curve_l1_linf(g);
  const double n1 = g.l1();
  const double osc = linf_inf(g);
  return max_over_points(grid, [&](const Point& pt) {
    const double q = pt.q;
    const double theta = std::isnan(pt.theta) ? 1.0 - 1.0 / q : pt.theta;
    const Outcome lhs = gagliardo2_norm(k, {theta, q});
    if (!lhs.is_ok()) return lhs;
    const double rhs = teomarkao_factor(theta, q) * j_inf_theta(n1, osc, theta);
    return Outcome::ok(safe_ratio(lhs.value(), rhs));
  });
}

// c(q) = max over trials at each grid point; no growth beyond 10% of the
// first point's constant.
AggregateVerdict teomarkao_trend(const std::vector<Evaluation>& evals, const ParamGrid& grid) {
  const std::size_t n = points(grid).size();
  std::vector<double> c(n, 0.0);
  for (const Evaluation& e : evals) {
    for (std::size_t i = 0; i < e.profile.size(); ++i) {
      c[i % n] = std::max(c[i % n], e.profile[i]);
    }
  }
  AggregateVerdict v;
  for (std::size_t i = 1; i < n; ++i) {
    if (!(c[i] <= 1.1 * c[0])) {
      v.ok = false;
      v.note = "constant grows along the q grid";
    }
  }
  return v;
}

Evaluation product(const Generated& f, const ParamGrid& grid, const TrialContext& ctx) {
  const GridFunction& a = as_grid(f, "product");
  const GridFunction b =
      std::get<GridFunction>(trial_function(ctx.family, trial_seed(ctx.seed, 1), ctx.size, ctx.dim));
  std::vector<double> prod(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) prod[i] = a[i] * b[i];
  const DecreasingStep ga = rearrange(to_step(a));
  const DecreasingStep gb = rearrange(to_step(b));
  const DecreasingStep gab = rearrange(to_step(a.with_values(std::move(prod))));
  const double oa = linf_inf(ga);
  const double ob = linf_inf(gb);
  return max_over_points(grid, [&](const Point& pt) {
    const double p = pt.p;
    const double rhs = lebesgue_norm(ga, p) * ob + lebesgue_norm(gb, p) * oa;
    return Outcome::ok(safe_ratio(lebesgue_norm(gab, p), rhs));
  });
}

Evaluation berkovich(const Generated& f, const ParamGrid& grid, const TrialContext&) {
  const DecreasingStep g = rearrange(as_step(f));
  const ConcaveCurve k = k_curve_l1_linf(g);
  const double osc = linf_inf(g);
  return max_over_points(grid, [&](const Point& pt) {
    const double p = pt.p;
    const double theta = 1.0 / p;
    const Outcome lhs = interp_norm(k, {1.0 - theta / 2.0, 2.0 * p}, tight_quadrature());
    const Outcome base = interp_norm(k, {1.0 - theta, p}, tight_quadrature());
    if (!lhs.is_ok()) return lhs;
    if (!base.is_ok()) return base;
    return Outcome::ok(safe_ratio(lhs.value(), std::sqrt(base.value() * osc)));
  });
}

Evaluation equiva(const Generated& f, const ParamGrid& grid, const TrialContext&) {
  const DecreasingStep g = rearrange(as_step(f));
  const ConcaveCurve k = k_curve_l1_linf(g);
  return max_over_points(grid, [&](const Point& pt) {
    if (g.is_zero()) return Outcome::ok(1.0);
    const ThetaQ tq{std::isnan(pt.theta) ? 1.0 / pt.q : pt.theta, pt.q};
    const Outcome lp = interp_norm(k, tq, tight_quadrature());
    const Outcome g1 = gagliardo1_norm(k, tq);
    const Outcome g2 = gagliardo2_norm(k, tq);
    for (const Outcome* o : {&lp, &g1, &g2}) {
      if (!o->is_ok()) return *o;
    }
    const double v[3] = {lp.value(), g1.value(), g2.value()};
    double w = 1.0;
    for (int i = 0; i < 3; ++i) {
      for (int j = i + 1; j < 3; ++j) {
        const double r = v[i] / v[j];
        w = std::max({w, r, 1.0 / r});
      }
    }
    return Outcome::ok(w);
  });
}

}  // namespace

void register_interpolation_checks(std::vector<CheckDef>& out) {
  out.push_back({{"lemma-K", CheckMode::exact_constant,
                  "[(1-theta) theta q]^{1/q} ||f||_{theta,q} <= ||f||_1^{1-theta} "
                  "||f||_inf^theta for (L^1, L^inf)",
                  "random-step", 12, 1e-7,
                  {{0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9}, {1.0, 2.0, 5.0, 20.0}, {}, {}}},
                 lemma_k, {}, {}, false});
  out.push_back({{"j-identity", CheckMode::exact_constant,
                  "||f||_1^{1-theta} ||f||_inf^theta = inf_t t^-theta max(||f||_1, t ||f||_inf)",
                  "random-step", 12, 1e-8,
                  {{0.0, 0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 1.0}, {}, {}, {}}},
                 j_identity, {}, {}, false});
  out.push_back({{"teomarkao", CheckMode::observed_constant,
                  "||f||_{(2);theta,q} <= c q (1 + [(1-theta)q]^{1/q})^{1-theta} "
                  "[(1-theta)q]^{-theta} ||f||_1^{1-theta} ||f||_{L(inf,inf)}^theta, "
                  "with (1-theta) q = 1",
                  "random-bmo-grid", 256, 0.0, {{}, {2.0, 4.0, 8.0, 16.0}, {}, {}}},
                 teomarkao, teomarkao_trend, {}, false});
  out.push_back({{"product", CheckMode::observed_constant,
                  "||fg||_p <~ ||f||_p ||g||_{L(inf,inf)} + ||g||_p ||f||_{L(inf,inf)}",
                  "random-bmo-grid", 256, 0.0, {{}, {}, {2.0, 4.0}, {}}},
                 product, {}, {}, true});
  out.push_back({{"berkovich", CheckMode::observed_constant,
                  "||f||_{1-theta/2,2p} <~ ||f||_{1-theta,p}^{1/2} ||f||_{L(inf,inf)}^{1/2}, "
                  "theta = 1/p",
                  "random-bmo-grid", 256, 0.0, {{}, {}, {2.0, 4.0}, {}}},
                 berkovich, {}, {}, false});
  CheckDef eq{{"equiva", CheckMode::observed_constant,
               "K-method and both Gagliardo coordinate functionals agree up to a window [1/W, W]",
               "random-step", 12, 0.0, {{}, {2.0, 3.0}, {}, {}}},
              equiva, {}, {}, false};
  eq.info.drift_threshold = 0.05;
  out.push_back(std::move(eq));
}

}  // namespace oscillatk::lab
