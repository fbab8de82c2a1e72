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

#ifndef OSCILLATK_KCALC_HPP
#define OSCILLATK_KCALC_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "oscillatk/numerics.hpp"
#include "oscillatk/outcome.hpp"
#include "oscillatk/step_measure.hpp"

namespace oscillatk {

/// Piecewise-linear concave K(t) with K(0) = 0: linear between breakpoints,
/// K(t) = values().back() + terminal_slope() * (t - breakpoints().back())
/// beyond the last breakpoint.
class ConcaveCurve {
 public:
  ConcaveCurve() : breaks_{0.0}, values_{0.0} {}
  ConcaveCurve(std::vector<double> breakpoints, std::vector<double> values,
               double terminal_slope = 0.0);

  std::span<const double> breakpoints() const noexcept { return breaks_; }
  std::span<const double> values() const noexcept { return values_; }
  double terminal_slope() const noexcept { return terminal_; }
  /// Number of linear pieces, not counting the terminal ray.
  std::size_t pieces() const noexcept { return breaks_.size() - 1; }

  double operator()(double t) const noexcept;
  /// Right derivative K'(t+).
  double right_derivative(double t) const noexcept;
  /// Slope of piece i; i == pieces() is the terminal ray.
  double slope(std::size_t i) const noexcept;
  /// K(t) = intercept(i) + slope(i) * t on piece i, clamped at 0.
  double intercept(std::size_t i) const noexcept;
  /// lim_{t->inf} K(t) (infinite when the terminal slope is positive).
  double limit() const noexcept;

  bool is_zero() const noexcept;

  friend bool operator==(const ConcaveCurve&, const ConcaveCurve&) = default;

 private:
  struct Trusted {};
  ConcaveCurve(Trusted, std::vector<double> breakpoints, std::vector<double> values,
               std::vector<double> slopes);
  friend ConcaveCurve k_curve_l1_linf(const DecreasingStep& g);

  std::size_t piece_at(double t) const noexcept;

  std::vector<double> breaks_;
  std::vector<double> values_;
  std::vector<double> slopes_;
  double terminal_ = 0.0;
};

/// theta in [0,1], q in (0, inf].
struct ThetaQ {
  double theta;
  double q;
};

/// K(t, f; L^1, L^inf) = int_0^t f*: breakpoints of g, slopes the values of g.
ConcaveCurve k_curve_l1_linf(const DecreasingStep& g);

/// Right derivative of K at t > 0.
double k_derivative(const ConcaveCurve& k, double t);

/// inf_{t>0} t^-theta max(n1, t n2) = n1^{1-theta} n2^theta, with
/// inf^0 = 1 and 0^0 = 1.
double j_inf_theta(double n1, double n2, double theta);

/// The same infimum by golden-section search over log t. Used to cross-check
/// j_inf_theta; accurate for finite positive n1, n2.
double j_inf_theta_numeric(double n1, double n2, double theta);

/// { int_0^inf [t^-theta K(t)]^q dt/t }^{1/q}. Pieces with zero intercept or
/// zero slope and the flat tail are integrated in closed form; the rest use
/// adaptive Simpson in log t (QuadratureOptions). q = inf is an exact sup.
Outcome interp_norm(const ConcaveCurve& k, ThetaQ tq, const QuadratureOptions& opts = {});

/// { int_0^inf (t^{1-theta} [K(t)/t - K'(t)])^q dt/t }^{1/q}. On each piece
/// K - tK' is the intercept, so the integral is closed form.
Outcome gagliardo1_norm(const ConcaveCurve& k, ThetaQ tq);

/// { int_0^inf (t^{1-theta} K'(t))^q dt/t }^{1/q}, closed form.
Outcome gagliardo2_norm(const ConcaveCurve& k, ThetaQ tq);

struct Decomposition {
  StepFunction l1_part;    // f_{f*(t)}: the excess over level f*(t)
  StepFunction linf_part;  // f - l1_part, bounded by f*(t)
  double level;
};

/// Optimal (L^1, L^inf) decomposition at t: truncation at level f*(t).
/// ||l1_part||_1 = K(t) - tK'(t) and ||linf_part||_inf = f*(t).
Decomposition optimal_decomposition_l1_linf(const StepFunction& f, double t);

/// t * f^{#*}(t), the equivalent K-functional for (L^1, BMO).
double k_l1_bmo_proxy(const DecreasingStep& sharp_rearranged, double t);

/// { int_0^{t^p} f^{#*}(s)^p ds }^{1/p}, the equivalent K-functional for
/// (L^p, BMO).
double k_lp_bmo_proxy(const DecreasingStep& sharp_rearranged, double p, double t);

}  // namespace oscillatk

#endif  // OSCILLATK_KCALC_HPP
