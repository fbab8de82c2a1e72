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

#ifndef OSCILLATK_STEP_MEASURE_HPP
#define OSCILLATK_STEP_MEASURE_HPP

#include <cstddef>
#include <limits>
#include <span>
#include <vector>

#include "oscillatk/outcome.hpp"

namespace oscillatk {

struct Atom {
  double value;
  double mass;

  friend bool operator==(const Atom&, const Atom&) = default;
};

/// A function taking finitely many values on sets of finite positive measure.
/// The list is a bag: order carries no meaning, equal values may repeat, and
/// the empty list is the zero function.
class StepFunction {
 public:
  StepFunction() = default;
  explicit StepFunction(std::vector<Atom> atoms);

  std::span<const Atom> atoms() const noexcept { return atoms_; }
  std::size_t size() const noexcept { return atoms_.size(); }
  bool empty() const noexcept { return atoms_.empty(); }

  /// Sum of all masses (including atoms with value 0).
  double total_mass() const noexcept;
  /// Measure of {f != 0}.
  double support_measure() const noexcept;
  /// Integral of |f|.
  double l1() const noexcept;
  double sup_abs() const noexcept;

  friend bool operator==(const StepFunction&, const StepFunction&) = default;

 private:
  std::vector<Atom> atoms_;
};

/// Canonical non-increasing rearrangement: value values()[i-1] on
/// [breakpoints()[i-1], breakpoints()[i]), zero on [support(), inf).
/// Values are strictly decreasing and strictly positive, so zero-valued and
/// repeated pieces never appear.
class DecreasingStep {
 public:
  DecreasingStep() : breaks_{0.0}, cumulative_{0.0} {}
  /// `breakpoints` starts at 0 and has one more entry than `values`.
  /// Values must be non-increasing and non-negative; equal neighbours are
  /// merged and trailing zeros dropped.
  DecreasingStep(std::vector<double> breakpoints, std::vector<double> values);

  std::span<const double> breakpoints() const noexcept { return breaks_; }
  std::span<const double> values() const noexcept { return values_; }
  std::size_t pieces() const noexcept { return values_.size(); }
  bool is_zero() const noexcept { return values_.empty(); }

  double support() const noexcept { return breaks_.back(); }
  double l1() const noexcept { return cumulative_.back(); }
  double sup() const noexcept { return values_.empty() ? 0.0 : values_.front(); }

  /// f*(t), right-continuous.
  double operator()(double t) const noexcept;
  /// Integral of f* over [0, t]; t <= 0 gives 0.
  double integral(double t) const noexcept;
  /// Integral of f* over [0, breakpoints()[i]].
  double cumulative(std::size_t i) const noexcept { return cumulative_[i]; }
  /// On piece i (0-based), integral(t) = intercept(i) + values()[i] * t, so
  /// f**(t) - f*(t) = intercept(i) / t there.
  double intercept(std::size_t i) const noexcept;
  /// Index of the piece containing t, or pieces() when t >= support().
  std::size_t piece_at(double t) const noexcept;

  /// The rearrangement read back as a step function (one atom per piece).
  StepFunction as_step() const;

  friend bool operator==(const DecreasingStep& a, const DecreasingStep& b) {
    return a.breaks_ == b.breaks_ && a.values_ == b.values_;
  }

 private:
  friend DecreasingStep rearrange(const StepFunction& f);
  struct Trusted {};
  DecreasingStep(Trusted, std::vector<double> breakpoints, std::vector<double> values);
  void build_cumulative();

  std::vector<double> breaks_;
  std::vector<double> values_;
  std::vector<double> cumulative_;
};

/// Non-increasing rearrangement of |f|.
DecreasingStep rearrange(const StepFunction& f);

/// mu{|f| > s}. Throws DomainError for s < 0.
double distribution(const StepFunction& f, double s);

/// Integral of g over [0, t]. Throws DomainError for t < 0.
double integrate_star(const DecreasingStep& g, double t);

/// f**(t) = integrate_star(g, t) / t. Throws DomainError for t <= 0.
double double_star(const DecreasingStep& g, double t);

/// f**(t) - f*(t). Throws DomainError for t <= 0.
double oscillation(const DecreasingStep& g, double t);

/// Atomwise sign(v) * max(|v| - level, 0). For non-negative f this is the
/// truncation above `level`; signed inputs are truncated through |f| with the
/// sign reattached. Throws DomainError for level < 0.
StepFunction truncate(const StepFunction& f, double level);

/// Integral of g(t)^q t^alpha over (lo, hi), exactly, piece by piece.
/// `hi` may be +infinity (g vanishes beyond its support). Divergence at the
/// origin is reported as Status::divergent.
Outcome power_integral(const DecreasingStep& g, double q, double alpha, double lo,
                       double hi = std::numeric_limits<double>::infinity());

}  // namespace oscillatk

#endif  // OSCILLATK_STEP_MEASURE_HPP
