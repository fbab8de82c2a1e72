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
#include "oscillatk/norms.hpp"

namespace oscillatk::lab {

namespace {

const std::vector<double> kHardyQ = {1.5, 2.0, 3.0, 5.0, 10.0};

// 48 log-spaced points around the support plus the two sides of 2|supp|.
std::vector<double> doubling_t_grid(double support) {
  std::vector<double> ts = geometric_grid(support * 0x1.0p-8, 4.0 * support, 48);
  ts.push_back(2.0 * support * (1.0 - 1e-9));
  ts.push_back(2.0 * support);
  return ts;
}

Evaluation reverse_hardy(const Generated& f, const ParamGrid& grid, const TrialContext&) {
  const DecreasingStep g = rearrange(as_step(f));
  return max_over_points(grid, [&](const Point& pt) {
    const double q = pt.q;
    const Outcome rhs = double_star_lq(g, q);
    if (!rhs.is_ok()) return rhs;
    const double c = std::pow((q - 1.0) / q, 1.0 / q);
    return Outcome::ok(safe_ratio(lebesgue_norm(g, q), c * rhs.value()));
  });
}

Evaluation hardy_osc(const Generated& f, const ParamGrid& grid, const TrialContext&) {
  const DecreasingStep g = rearrange(as_step(f));
  return max_over_points(grid, [&](const Point& pt) {
    const double q = pt.q;
    const Outcome lhs = double_star_lq(g, q);
    const Outcome rhs = oscillation_lq(g, q);
    if (!lhs.is_ok()) return lhs;
    if (!rhs.is_ok()) return rhs;
    return Outcome::ok(safe_ratio(lhs.value(), q * rhs.value()));
  });
}

Evaluation l1_cube_bound(const Generated& f, const ParamGrid& grid, const TrialContext&) {
  const StepFunction s = as_step(f);
  const double cube = std::holds_alternative<GridFunction>(f)
                          ? std::get<GridFunction>(f).cube_measure()
                          : s.total_mass();
  const DecreasingStep g = rearrange(s);
  return max_over_points(grid, [&](const Point&) {
    return Outcome::ok(safe_ratio(g.l1(), cube * linf_inf(g)));
  });
}

Evaluation osc_doubling(const Generated& f, const ParamGrid& grid, const TrialContext&) {
  const DecreasingStep g = rearrange(as_step(f));
  return max_over_points(grid, [&](const Point&) {
    if (g.is_zero()) return Outcome::ok(0.0);
    double worst = 0.0;
    for (double t : doubling_t_grid(g.support())) {
      const double lhs = g(t / 2.0) - g(t);
      worst = std::max(worst, safe_ratio(lhs, 2.0 * oscillation(g, t)));
    }
    return Outcome::ok(worst);
  });
}

Evaluation combinaos(const Generated& f, const ParamGrid& grid, const TrialContext&) {
  const DecreasingStep g = rearrange(as_step(f));
  return max_over_points(grid, [&](const Point&) {
    if (g.is_zero()) return Outcome::ok(0.0);
    double worst = 0.0;
    for (double t : doubling_t_grid(g.support())) {
      const double averaged = (2.0 * g.integral(t / 2.0) - g.integral(t)) / t;
      const double rhs = averaged + g(t / 2.0) - g(t);
      worst = std::max(worst, safe_ratio(oscillation(g, t), rhs));
    }
    return Outcome::ok(worst);
  });
}

// Two-sided comparison of the e^L gauge on a probability space with the
// extrapolation functional sup_q ||f||_q / q.
Evaluation expl_delta(const Generated& f, const ParamGrid& grid, const TrialContext&) {
  const StepFunction raw = as_step(f);
  const double total = raw.total_mass();
  std::vector<Atom> atoms;
  atoms.reserve(raw.size());
  for (const Atom& a : raw.atoms()) atoms.push_back({a.value, a.mass / total});
  const StepFunction s(std::move(atoms));
  const DecreasingStep g = rearrange(s);
  const std::vector<double> qs = grid.q.empty() ? default_delta_grid() : grid.q;
  Evaluation e;
  if (g.is_zero()) return e;
  const Outcome delta = delta_extrapolation(g, qs);
  if (!delta.is_ok()) {
    e.divergent = true;
    e.note = delta.what();
    e.ratio = kInfinity;
    return e;
  }
  const double r = delta.value() / luxemburg_exp_l(s, 1.0);
  e.ratio = std::max(r, 1.0 / r);
  e.profile = {r};
  return e;
}

}  // namespace

void register_rearrangement_checks(std::vector<CheckDef>& out) {
  out.push_back({{"reverse-hardy", CheckMode::exact_constant,
                  "||f||_q <= ((q-1)/q)^{1/q} ||f**||_q for q > 1", "random-step", 12, 1e-10,
                  {{}, kHardyQ, {}, {}}},
                 reverse_hardy, {}, {}, false});
  out.push_back({{"hardy-osc", CheckMode::exact_constant,
                  "||f**||_q <= q ||f** - f*||_q for f in L^1, q > 1", "random-step", 12, 1e-10,
                  {{}, kHardyQ, {}, {}}},
                 hardy_osc, {}, {}, false});
  out.push_back({{"l1-cube-bound", CheckMode::exact_constant,
                  "||f||_1 <= |Q| ||f||_{L(inf,inf)} on a cube Q", "random-bmo-grid", 256, 1e-10,
                  {{}, {}, {}, {1, 2}}},
                 l1_cube_bound, {}, {}, false});
  out.push_back({{"osc-doubling", CheckMode::exact_constant,
                  "g*(t/2) - g*(t) <= 2 (g**(t) - g*(t))", "random-step", 12, 1e-12, {}},
                 osc_doubling, {}, {}, false});
  out.push_back({{"combinaos", CheckMode::exact_constant,
                  "g**(t) - g*(t) <= (1/t) int_0^t (g*(s/2) - g*(s)) ds + g*(t/2) - g*(t)",
                  "random-step", 12, 1e-12, {}},
                 combinaos, {}, {}, false});
  out.push_back({{"expL-delta", CheckMode::observed_constant,
                  "||f||_{e^L} ~ sup_{q>1} ||f||_q / q on a probability space", "random-step", 12,
                  0.0, {}},
                 expl_delta, {}, {}, false});
}

}  // namespace oscillatk::lab
