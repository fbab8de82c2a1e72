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

#ifndef OSCILLATK_NUMERICS_HPP
#define OSCILLATK_NUMERICS_HPP

#include <cstddef>
#include <functional>

namespace oscillatk {

struct QuadratureOptions {
  double rel_tol = 1e-9;
  std::size_t max_evals = 1'000'000;
};

struct QuadratureResult {
  double value = 0.0;
  std::size_t evals = 0;
  bool converged = true;
};

/// Integral of fn(t) dt/t over [a, b], 0 < a < b < inf, by adaptive
/// interval-halving Simpson in u = log t. `budget` (if given) is shared across
/// calls and decremented by the evaluations spent; the result is flagged
/// unconverged once it is exhausted.
QuadratureResult integrate_dt_over_t(const std::function<double(double)>& fn, double a, double b,
                                     const QuadratureOptions& opts = {},
                                     std::size_t* budget = nullptr);

struct Minimum {
  double argmin;
  double value;
};

/// Golden-section search for a unimodal fn on [lo, hi].
Minimum golden_section_minimize(const std::function<double(double)>& fn, double lo, double hi,
                                double x_tol = 1e-12, int max_iter = 400);

}  // namespace oscillatk

#endif  // OSCILLATK_NUMERICS_HPP
