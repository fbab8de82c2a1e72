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

#include "oscillatk/step_measure.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "monomial.hpp"

namespace oscillatk {

const char* to_string(Status s) noexcept {
  switch (s) {
    case Status::ok:
      return "ok";
    case Status::divergent:
      return "divergent";
    case Status::tolerance_not_met:
      return "tolerance not met";
  }
  return "unknown";
}

StepFunction::StepFunction(std::vector<Atom> atoms) : atoms_(std::move(atoms)) {
  for (const Atom& a : atoms_) {
    if (!std::isfinite(a.value)) {
      throw DomainError("StepFunction: atom value must be finite");
    }
    if (!(a.mass > 0.0) || !std::isfinite(a.mass)) {
      throw DomainError("StepFunction: atom mass must be positive and finite");
    }
  }
}

double StepFunction::total_mass() const noexcept {
  double m = 0.0;
  for (const Atom& a : atoms_) m += a.mass;
  return m;
}

double StepFunction::support_measure() const noexcept {
  double m = 0.0;
  for (const Atom& a : atoms_) {
    if (a.value != 0.0) m += a.mass;
  }
  return m;
}

double StepFunction::l1() const noexcept {
  double s = 0.0;
  for (const Atom& a : atoms_) s += std::abs(a.value) * a.mass;
  return s;
}

double StepFunction::sup_abs() const noexcept {
  double s = 0.0;
  for (const Atom& a : atoms_) s = std::max(s, std::abs(a.value));
  return s;
}

DecreasingStep::DecreasingStep(std::vector<double> breakpoints, std::vector<double> values) {
  if (breakpoints.size() != values.size() + 1) {
    throw DomainError("DecreasingStep: need exactly one more breakpoint than values");
  }
  if (breakpoints.front() != 0.0) {
    throw DomainError("DecreasingStep: first breakpoint must be 0");
  }
  for (std::size_t i = 1; i < breakpoints.size(); ++i) {
    if (!(breakpoints[i] > breakpoints[i - 1]) || !std::isfinite(breakpoints[i])) {
      throw DomainError("DecreasingStep: breakpoints must be finite and strictly increasing");
    }
  }
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (!(values[i] >= 0.0) || !std::isfinite(values[i])) {
      throw DomainError("DecreasingStep: values must be finite and non-negative");
    }
    if (i > 0 && values[i] > values[i - 1]) {
      throw DomainError("DecreasingStep: values must be non-increasing");
    }
  }
  breaks_.push_back(0.0);
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (values[i] == 0.0) break;
    if (!values_.empty() && values_.back() == values[i]) {
      breaks_.back() = breakpoints[i + 1];
    } else {
      values_.push_back(values[i]);
      breaks_.push_back(breakpoints[i + 1]);
    }
  }
  build_cumulative();
}

DecreasingStep::DecreasingStep(Trusted, std::vector<double> breakpoints, std::vector<double> values)
    : breaks_(std::move(breakpoints)), values_(std::move(values)) {
  build_cumulative();
}

void DecreasingStep::build_cumulative() {
  cumulative_.assign(breaks_.size(), 0.0);
  for (std::size_t i = 0; i < values_.size(); ++i) {
    cumulative_[i + 1] = cumulative_[i] + values_[i] * (breaks_[i + 1] - breaks_[i]);
  }
}

std::size_t DecreasingStep::piece_at(double t) const noexcept {
  auto it = std::upper_bound(breaks_.begin() + 1, breaks_.end(), t);
  return static_cast<std::size_t>(it - (breaks_.begin() + 1));
}

double DecreasingStep::operator()(double t) const noexcept {
  const std::size_t i = piece_at(t);
  return i < values_.size() ? values_[i] : 0.0;
}

double DecreasingStep::integral(double t) const noexcept {
  if (t <= 0.0) return 0.0;
  const std::size_t i = piece_at(t);
  if (i >= values_.size()) return cumulative_.back();
  return cumulative_[i] + values_[i] * (t - breaks_[i]);
}

double DecreasingStep::intercept(std::size_t i) const noexcept {
  if (i >= values_.size()) return cumulative_.back();
  return std::max(0.0, cumulative_[i] - values_[i] * breaks_[i]);
}

StepFunction DecreasingStep::as_step() const {
  std::vector<Atom> atoms;
  atoms.reserve(values_.size());
  for (std::size_t i = 0; i < values_.size(); ++i) {
    atoms.push_back({values_[i], breaks_[i + 1] - breaks_[i]});
  }
  return StepFunction(std::move(atoms));
}

DecreasingStep rearrange(const StepFunction& f) {
  std::vector<Atom> nz;
  nz.reserve(f.size());
  for (const Atom& a : f.atoms()) {
    if (a.value != 0.0) nz.push_back({std::abs(a.value), a.mass});
  }
  std::sort(nz.begin(), nz.end(), [](const Atom& x, const Atom& y) { return x.value > y.value; });

  std::vector<double> breaks{0.0};
  std::vector<double> values;
  // Long double keeps breakpoints strictly increasing for large atom counts
  // with tiny masses.
  long double acc = 0.0L;
  for (std::size_t i = 0; i < nz.size();) {
    const double v = nz[i].value;
    long double m = 0.0L;
    for (; i < nz.size() && nz[i].value == v; ++i) m += nz[i].mass;
    acc += m;
    const double b = static_cast<double>(acc);
    if (b > breaks.back()) {
      values.push_back(v);
      breaks.push_back(b);
    }
  }
  return DecreasingStep(DecreasingStep::Trusted{}, std::move(breaks), std::move(values));
}

double distribution(const StepFunction& f, double s) {
  if (!(s >= 0.0)) throw DomainError("distribution: level must be >= 0");
  double m = 0.0;
  for (const Atom& a : f.atoms()) {
    if (std::abs(a.value) > s) m += a.mass;
  }
  return m;
}

double integrate_star(const DecreasingStep& g, double t) {
  if (!(t >= 0.0)) throw DomainError("integrate_star: t must be >= 0");
  return g.integral(t);
}

double double_star(const DecreasingStep& g, double t) {
  if (!(t > 0.0)) throw DomainError("double_star: t must be > 0");
  return g.integral(t) / t;
}

double oscillation(const DecreasingStep& g, double t) {
  if (!(t > 0.0)) throw DomainError("oscillation: t must be > 0");
  return g.intercept(g.piece_at(t)) / t;
}

StepFunction truncate(const StepFunction& f, double level) {
  if (!(level >= 0.0)) throw DomainError("truncate: level must be >= 0");
  std::vector<Atom> out;
  out.reserve(f.size());
  for (const Atom& a : f.atoms()) {
    const double excess = std::max(std::abs(a.value) - level, 0.0);
    out.push_back({std::copysign(excess, a.value) + 0.0, a.mass});
  }
  return StepFunction(std::move(out));
}

Outcome power_integral(const DecreasingStep& g, double q, double alpha, double lo, double hi) {
  if (!(q > 0.0)) throw DomainError("power_integral: q must be > 0");
  if (!(lo >= 0.0)) throw DomainError("power_integral: lo must be >= 0");
  if (!(hi >= lo)) throw DomainError("power_integral: need lo <= hi");
  if (std::isnan(alpha)) throw DomainError("power_integral: alpha is NaN");
  const auto br = g.breakpoints();
  const auto vs = g.values();
  double total = 0.0;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    const double a = std::max(br[i], lo);
    const double b = std::min(br[i + 1], hi);
    if (!(a < b)) continue;
    if (a == 0.0 && alpha <= -1.0) {
      return Outcome::divergent("power_integral: t^alpha not integrable at 0");
    }
    total += std::pow(vs[i], q) * detail::monomial_integral(alpha, a, b);
  }
  return Outcome::ok(total);
}

}  // namespace oscillatk
