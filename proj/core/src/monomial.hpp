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

#ifndef OSCILLATK_SRC_MONOMIAL_HPP
#define OSCILLATK_SRC_MONOMIAL_HPP

#include <cmath>
#include <limits>

namespace oscillatk::detail {

/// Integral of t^alpha over [a, b] for 0 <= a < b <= inf. Returns +inf where
/// the integral diverges (alpha <= -1 at a = 0, alpha >= -1 at b = inf).
inline double monomial_integral(double alpha, double a, double b) {
  constexpr double inf = std::numeric_limits<double>::infinity();
  const double beta = alpha + 1.0;
  if (a == 0.0) {
    if (beta <= 0.0 || std::isinf(b)) return inf;
    return std::pow(b, beta) / beta;
  }
  if (std::isinf(b)) {
    if (beta >= 0.0) return inf;
    return std::pow(a, beta) / -beta;
  }
  const double log_ratio = std::log(b / a);
  if (beta == 0.0) return log_ratio;
  if (beta > 0.0) return std::pow(b, beta) * -std::expm1(-beta * log_ratio) / beta;
  return std::pow(a, beta) * std::expm1(beta * log_ratio) / beta;
}

}  // namespace oscillatk::detail

#endif  // OSCILLATK_SRC_MONOMIAL_HPP
