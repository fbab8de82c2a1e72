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

#include <set>

#include "lab_internal.hpp"
#include "oscillatk/cube_grid.hpp"
#include "oscillatk/norms.hpp"

namespace oscillatk::lab {

namespace {

std::vector<double> q_grid_2_64() { return geometric_grid(2.0, 64.0, 11); }

DecreasingStep rearranged(const GridFunction& f) { return rearrange(to_step(f)); }

GridFunction minus_mean(const GridFunction& f) {
  const Cube whole{0, 0, f.n_side()};
  const double mean = cube_mean(f, whole);
  std::vector<double> v(f.values().begin(), f.values().end());
  for (double& x : v) x -= mean;
  return f.with_values(std::move(v));
}

// Sub-grid of the cells inside q, with the same cell width.
GridFunction restrict_to(const GridFunction& f, const Cube& q) {
  std::vector<double> v;
  if (f.dim() == 1) {
    v.assign(f.values().begin() + static_cast<std::ptrdiff_t>(q.col),
             f.values().begin() + static_cast<std::ptrdiff_t>(q.col + q.side));
  } else {
    v.reserve(q.side * q.side);
    for (std::size_t r = q.row; r < q.row + q.side; ++r) {
      for (std::size_t c = q.col; c < q.col + q.side; ++c) v.push_back(f.at(r, c));
    }
  }
  return GridFunction(f.dim(), q.side, f.h(), std::move(v));
}

Evaluation chen_zhu(const Generated& f, const ParamGrid& grid, const TrialContext&) {
  const GridFunction& grid_f = as_grid(f, "chen-zhu");
  const double bmo = bmo_seminorm(grid_f, 1.0);
  const DecreasingStep g = rearranged(grid_f);
  const double n1 = g.l1();
  Evaluation e = max_over_points(grid, [&](const Point& pt) {
    const double q = pt.q;
    const double rhs = std::pow(n1, 1.0 / q) * std::pow(bmo, 1.0 - 1.0 / q);
    return Outcome::ok(safe_ratio(lebesgue_norm(g, q), rhs) / q);
  });
  if (e.profile.size() >= 2 && !(e.profile.back() <= 1.5 * e.profile.front())) {
    e.condition_ok = false;
    e.note = "ratio/q trends upward in q";
  }
  return e;
}

Evaluation john_nirenberg(const Generated& f, const ParamGrid& grid, const TrialContext&) {
  const GridFunction& grid_f = as_grid(f, "john-nirenberg");
  const double bmo = bmo_seminorm(grid_f, 1.0);
  // Q0 and its dyadic children.
  std::vector<Cube> cubes{{0, 0, grid_f.n_side()}};
  const std::size_t half = grid_f.n_side() / 2;
  if (half >= 1) {
    const std::size_t rows = grid_f.dim() == 1 ? 1 : 2;
    for (std::size_t r = 0; r < rows; ++r) {
      for (std::size_t c = 0; c < 2; ++c) cubes.push_back({c * half, r * half, half});
    }
  }
  return max_over_points(grid, [&](const Point&) {
    double worst = 0.0;
    for (const Cube& q : cubes) {
      const GridFunction local = restrict_to(grid_f, q);
      const double measure = local.cube_measure();
      const DecreasingStep g = rearranged(minus_mean(local));
      const auto br = g.breakpoints();
      const auto vs = g.values();
      // On each flat the ratio increases in t, so it peaks at the right end.
      for (std::size_t i = 0; i < vs.size(); ++i) {
        const double denom = bmo * std::max(std::log(6.0 * measure / br[i + 1]), 0.0);
        worst = std::max(worst, safe_ratio(vs[i], denom));
      }
    }
    return Outcome::ok(worst);
  });
}

std::vector<double> union_breakpoints(const DecreasingStep& a, const DecreasingStep& b,
                                      double below) {
  std::set<double> ts;
  for (double t : a.breakpoints()) {
    if (t > 0.0 && t < below) ts.insert(t);
  }
  for (double t : b.breakpoints()) {
    if (t > 0.0 && t < below) ts.insert(t);
  }
  return {ts.begin(), ts.end()};
}

Evaluation bds(const Generated& f, const ParamGrid& grid, const TrialContext&) {
  const GridFunction& grid_f = as_grid(f, "bds");
  const DecreasingStep g = rearranged(grid_f);
  const DecreasingStep sharp = rearranged(sharp_function(grid_f, 1.0));
  const double limit = grid_f.cube_measure() / 3.0;
  return max_over_points(grid, [&](const Point&) {
    // Between breakpoints the left side is intercept / t and the right side is
    // constant, so the sup over t < |Q0|/3 sits at a breakpoint.
    double worst = 0.0;
    for (double t : union_breakpoints(g, sharp, limit)) {
      worst = std::max(worst, safe_ratio(oscillation(g, t), sharp(t)));
    }
    return Outcome::ok(worst);
  });
}

Evaluation good_lambda(const Generated& f, const ParamGrid&, const TrialContext&) {
  constexpr double kEpsilon = 0.25;
  const GridFunction& tf = as_grid(f, "good-lambda");
  const GridFunction hf = sharp_function(tf, 1.0);
  const DecreasingStep tstar = rearranged(tf);
  const DecreasingStep hstar = rearranged(hf);
  const double cell = tf.cell_measure();
  const double whole = tf.cube_measure();
  Evaluation e;
  if (tstar.is_zero()) return e;

  // Endpoints sit off the cell lattice so t, t/2 and 2t avoid breakpoints.
  const std::vector<double> ts = geometric_grid(1.0472 * cell, 0.9773 * whole, 64);
  double top = tstar.sup();
  double bottom = top;
  for (double v : tf.values()) bottom = std::min(bottom, std::abs(v));
  bottom = bottom > 0.0 ? bottom / 2.0 : top * 1e-6;
  std::vector<double> lambdas = geometric_grid(bottom, top, 64);
  for (double t : ts) lambdas.push_back(tstar(2.0 * t));

  double b_min = 0.0;
  std::vector<double> r;
  for (double lambda : lambdas) {
    r.clear();
    for (std::size_t i = 0; i < tf.size(); ++i) {
      const double a = std::abs(tf[i]);
      if (a > lambda) r.push_back(hf[i] > 0.0 ? (a - lambda) / hf[i] : kInfinity);
    }
    if (r.empty()) continue;
    const auto k = static_cast<std::size_t>(std::floor(kEpsilon * static_cast<double>(r.size())));
    // With B = the (k+1)-th largest ratio at most k cells exceed B.
    std::nth_element(r.begin(), r.begin() + static_cast<std::ptrdiff_t>(k), r.end(),
                     std::greater<double>());
    b_min = std::max(b_min, r[k]);
  }
  e.profile = {b_min};
  if (!std::isfinite(b_min)) {
    e.condition_ok = false;
    e.note = "no finite B satisfies the good-lambda bound";
    e.ratio = kInfinity;
    return e;
  }
  for (double t : ts) {
    const double lhs = tstar(t) - tstar(2.0 * t);
    e.ratio = std::max(e.ratio, safe_ratio(lhs, b_min * hstar(t / 2.0)));
  }
  return e;
}

Evaluation kurtz_lp(const Generated& f, const ParamGrid& grid, const TrialContext&) {
  const GridFunction& grid_f = as_grid(f, "kurtz-lp");
  const DecreasingStep u = rearranged(sharp_function(grid_f, 1.0));
  const DecreasingStep g = rearranged(minus_mean(grid_f));
  return max_over_points(grid, [&](const Point& pt) {
    return Outcome::ok(safe_ratio(lebesgue_norm(g, pt.p), pt.p * lebesgue_norm(u, pt.p)));
  });
}

Evaluation jn_exp(const Generated& f, const ParamGrid& grid, const TrialContext&) {
  const GridFunction& grid_f = as_grid(f, "jn-exp");
  const DecreasingStep g = rearranged(grid_f);
  const double full = bmo_seminorm(grid_f, 1.0) + g.l1();
  return max_over_points(grid, [&](const Point& pt) {
    return Outcome::ok(safe_ratio(lebesgue_norm(g, pt.q), pt.q * full));
  });
}

}  // namespace

void register_bmo_checks(std::vector<CheckDef>& out) {
  CheckDef cz{{"chen-zhu", CheckMode::observed_constant,
               "||f||_q <= C q ||f||_1^{1/q} |f|_BMO^{1-1/q}: ratio/q bounded, no upward trend",
               "random-bmo-grid", 256, 0.0, {{}, q_grid_2_64(), {}, {}}},
              chen_zhu, {}, {}, true};
  cz.family_for = [](std::size_t trial, const std::string& requested) {
    return trial == 0 && requested == "random-bmo-grid" ? std::string("log-singularity")
                                                        : requested;
  };
  out.push_back(std::move(cz));
  out.push_back({{"john-nirenberg", CheckMode::observed_constant,
                  "[(f - f_Q) chi_Q]*(t) <= c |f|_BMO log+(6|Q|/t)", "random-bmo-grid", 256, 0.0,
                  {{}, {}, {}, {1, 2}}},
                 john_nirenberg, {}, {}, true});
  out.push_back({{"bds", CheckMode::observed_constant,
                  "f**(t) - f*(t) <= c f^#*(t) for 0 < t < |Q0|/3", "random-bmo-grid", 256, 0.0,
                  {{}, {}, {}, {1, 2}}},
                 bds, {}, {}, true});
  out.push_back({{"good-lambda", CheckMode::exact_constant,
                  "minimal B with mu{|g| > B m + lambda} <= mu{|g| > lambda}/4 gives "
                  "g*(t) - g*(2t) <= B m*(t/2), m = g^#",
                  "random-bmo-grid", 128, 1e-12, {{}, {}, {}, {1}}},
                 good_lambda, {}, {}, true});
  out.push_back({{"kurtz-lp", CheckMode::observed_constant,
                  "||g - g_Q0||_p <= c p ||g^#||_p", "random-bmo-grid", 256, 0.0,
                  {{}, {}, {2.0, 4.0, 8.0, 16.0, 32.0}, {}}},
                 kurtz_lp, {}, {}, true});
  out.push_back({{"jn-exp", CheckMode::observed_constant,
                  "||f||_q <= C q ||f||_BMO, ||f||_BMO = |f|_BMO + ||f||_1", "random-bmo-grid",
                  256, 0.0, {{}, q_grid_2_64(), {}, {}}},
                 jn_exp, {}, {}, true});
}

}  // namespace oscillatk::lab
