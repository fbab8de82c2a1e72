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

#ifndef OSCILLATK_NORMS_HPP
#define OSCILLATK_NORMS_HPP

#include <limits>
#include <span>
#include <string>
#include <vector>

#include "oscillatk/outcome.hpp"
#include "oscillatk/step_measure.hpp"

namespace oscillatk {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

/// Lorentz indices: p in [1, inf], q in (0, inf]. p = inf selects the
/// oscillation spaces L(inf, q) built from f** - f*.
struct LorentzParams {
  double p;
  double q;
};

/// ||f||_{L(p,q)} = { int_0^inf (f*(t) t^{1/p})^q dt/t }^{1/q}, with the sup
/// form for q = inf. p = inf routes to lorentz_inf_q / linf_inf.
Outcome lorentz_norm(const DecreasingStep& g, LorentzParams params);

/// ||f||_{L^p}; p = inf gives the essential sup.
double lebesgue_norm(const DecreasingStep& g, double p);

/// { int_0^inf (f**(t) - f*(t))^q dt/t }^{1/q}, exact: on a flat of f* the
/// oscillation is intercept / t.
Outcome lorentz_inf_q(const DecreasingStep& g, double q);

/// sup_t (f**(t) - f*(t)); attained as a right limit at a breakpoint.
double linf_inf(const DecreasingStep& g);

/// Luxemburg gauge of the Young function e^s - 1, normalized so that
/// int (e^{|f|/lambda} - 1) dmu <= total_space_measure. Bisection in
/// log(lambda) to relative tolerance 1e-10.
double luxemburg_exp_l(const StepFunction& f, double total_space_measure);

/// Geometric default grid {1 + 2^-k : k = 1..20} U {2^j : j = 1..10}.
std::vector<double> default_delta_grid();

/// max over the grid of ||f||_q / q. A lower bound for the sup over all q > 1.
Outcome delta_extrapolation(const DecreasingStep& g, std::span<const double> q_grid);

/// { int_0^inf f**(t)^q dt }^{1/q} for q > 1. The first piece and the tail
/// are closed form; interior pieces use composite 20-point Gauss-Legendre in
/// log t.
Outcome double_star_lq(const DecreasingStep& g, double q);

/// { int_0^inf (f**(t) - f*(t))^q dt }^{1/q} for q > 1, exact.
Outcome oscillation_lq(const DecreasingStep& g, double q);

/// Parsed form of a norm request {"space": ..., "p": ..., "q": ...}.
struct NormRequest {
  std::string space;  // lorentz | lorentz-inf | linf-inf | expL | delta
  double p = 2.0;
  double q = 2.0;
};

/// Evaluates a norm request. `f` is needed only by expL, which uses
/// `total_space_measure` as its normalization.
Outcome evaluate_norm(const NormRequest& req, const StepFunction& f, const DecreasingStep& g,
                      double total_space_measure);

}  // namespace oscillatk

#endif  // OSCILLATK_NORMS_HPP
