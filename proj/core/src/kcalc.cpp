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
#include <limits>
#include <string>

#include "monomial.hpp"

namespace oscillatk {

namespace {

constexpr double kInfinity = std::numeric_limits<double>::infinity();

void check_theta_q(ThetaQ tq, const char* who) {
  if (!(tq.theta >= 0.0 && tq.theta <= 1.0)) {
    throw DomainError(std::string(who) + ": theta must lie in [0, 1]");
  }
  if (!(tq.q > 0.0)) throw DomainError(std::string(who) + ": q must be > 0");
}

Outcome finish(double total, double q) {
  if (std::isinf(total)) return Outcome::divergent("integral diverges");
  return Outcome::ok(std::pow(total, 1.0 / q));
}

}  // namespace

ConcaveCurve::ConcaveCurve(std::vector<double> breakpoints, std::vector<double> values,
                           double terminal_slope)
    : breaks_(std::move(breakpoints)), values_(std::move(values)), terminal_(terminal_slope) {
  if (breaks_.empty() || breaks_.size() != values_.size()) {
    throw DomainError("ConcaveCurve: breakpoints and values must be non-empty and equal length");
  }
  if (breaks_[0] != 0.0 || values_[0] != 0.0) {
    throw DomainError("ConcaveCurve: curve must start at (0, 0)");
  }
  if (!std::isfinite(terminal_) || terminal_ < 0.0) {
    throw DomainError("ConcaveCurve: terminal slope must be finite and >= 0");
  }
  slopes_.reserve(breaks_.size());
  for (std::size_t i = 0; i + 1 < breaks_.size(); ++i) {
    if (!(breaks_[i + 1] > breaks_[i]) || !std::isfinite(breaks_[i + 1])) {
      throw DomainError("ConcaveCurve: breakpoints must be finite and strictly increasing");
    }
    if (!(values_[i + 1] >= values_[i]) || !std::isfinite(values_[i + 1])) {
      throw DomainError("ConcaveCurve: values must be finite and non-decreasing");
    }
    slopes_.push_back((values_[i + 1] - values_[i]) / (breaks_[i + 1] - breaks_[i]));
  }
  slopes_.push_back(terminal_);
  for (std::size_t i = 1; i < slopes_.size(); ++i) {
    if (slopes_[i] > slopes_[i - 1] * (1.0 + 1e-12) + 1e-300) {
      throw DomainError("ConcaveCurve: slopes must be non-increasing (K concave)");
    }
  }
}

ConcaveCurve::ConcaveCurve(Trusted, std::vector<double> breakpoints, std::vector<double> values,
                           std::vector<double> slopes)
    : breaks_(std::move(breakpoints)),
      values_(std::move(values)),
      slopes_(std::move(slopes)),
      terminal_(slopes_.back()) {}

std::size_t ConcaveCurve::piece_at(double t) const noexcept {
  const auto it = std::upper_bound(breaks_.begin() + 1, breaks_.end(), t);
  return static_cast<std::size_t>(it - (breaks_.begin() + 1));
}

double ConcaveCurve::operator()(double t) const noexcept {
  if (!(t > 0.0)) return 0.0;
  const std::size_t i = piece_at(t);
  return values_[i] + slopes_[i] * (t - breaks_[i]);
}

double ConcaveCurve::right_derivative(double t) const noexcept {
  return slopes_[piece_at(std::max(t, 0.0))];
}

double ConcaveCurve::slope(std::size_t i) const noexcept {
  return slopes_[std::min(i, pieces())];
}

double ConcaveCurve::intercept(std::size_t i) const noexcept {
  i = std::min(i, pieces());
  if (i == 0) return 0.0;
  return std::max(values_[i] - slopes_[i] * breaks_[i], 0.0);
}

double ConcaveCurve::limit() const noexcept {
  return terminal_ > 0.0 ? kInfinity : values_.back();
}

bool ConcaveCurve::is_zero() const noexcept {
  return values_.back() == 0.0 && terminal_ == 0.0;
}

ConcaveCurve k_curve_l1_linf(const DecreasingStep& g) {
  const auto br = g.breakpoints();
  std::vector<double> breaks(br.begin(), br.end());
  std::vector<double> values(breaks.size());
  for (std::size_t i = 0; i < values.size(); ++i) values[i] = g.cumulative(i);
  const auto vs = g.values();
  std::vector<double> slopes(vs.begin(), vs.end());
  slopes.push_back(0.0);
  return ConcaveCurve(ConcaveCurve::Trusted{}, std::move(breaks), std::move(values),
                      std::move(slopes));
}

double k_derivative(const ConcaveCurve& k, double t) {
  if (!(t > 0.0)) throw DomainError("k_derivative: t must be > 0");
  return k.right_derivative(t);
}

double j_inf_theta(double n1, double n2, double theta) {
  if (!(n1 >= 0.0) || !(n2 >= 0.0)) throw DomainError("j_inf_theta: norms must be >= 0");
  if (!(theta >= 0.0 && theta <= 1.0)) throw DomainError("j_inf_theta: theta must lie in [0, 1]");
  const double a = std::pow(n1, 1.0 - theta);
  const double b = std::pow(n2, theta);
  if ((a == 0.0 && std::isinf(b)) || (std::isinf(a) && b == 0.0)) return kInfinity;
  return a * b;
}

double j_inf_theta_numeric(double n1, double n2, double theta) {
  if (!(n1 > 0.0) || !(n2 > 0.0) || !std::isfinite(n1) || !std::isfinite(n2)) {
    throw DomainError("j_inf_theta_numeric: norms must be finite and > 0");
  }
  if (!(theta >= 0.0 && theta <= 1.0)) {
    throw DomainError("j_inf_theta_numeric: theta must lie in [0, 1]");
  }
  // Work with the log of t^-theta max(n1, t n2); it is convex in u = log t.
  const double l1 = std::log(n1);
  const double l2 = std::log(n2);
  auto log_j = [&](double u) { return -theta * u + std::max(l1, u + l2); };
  const double width = 2.0 * (std::abs(l1) + std::abs(l2)) + 20.0;
  const Minimum m = golden_section_minimize(log_j, -width, width, 1e-13);
  return std::exp(m.value);
}

Outcome interp_norm(const ConcaveCurve& k, ThetaQ tq, const QuadratureOptions& opts) {
  check_theta_q(tq, "interp_norm");
  const double theta = tq.theta;
  const double q = tq.q;
  if (k.is_zero()) return Outcome::ok(0.0);
  const auto br = k.breakpoints();
  const std::size_t n = k.pieces();
  const double sigma = k.terminal_slope();

  if (std::isinf(q)) {
    if (sigma > 0.0 && theta < 1.0) return Outcome::divergent("sup is infinite");
    auto weighted = [&](double t) { return std::pow(t, -theta) * k(t); };
    double best = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const double a = k.intercept(i);
      const double b = k.slope(i);
      if (br[i] > 0.0) {
        best = std::max(best, weighted(br[i]));
      } else if (theta == 1.0) {
        best = std::max(best, b);
      }
      best = std::max(best, weighted(br[i + 1]));
      if (a > 0.0 && b > 0.0 && theta > 0.0 && theta < 1.0) {
        const double ts = theta * a / ((1.0 - theta) * b);
        if (ts > br[i] && ts < br[i + 1]) best = std::max(best, weighted(ts));
      }
    }
    if (n == 0) {
      // K(t) = sigma t: sup of sigma t^{1-theta} is finite only for theta = 1.
      best = sigma;
    } else if (theta == 1.0 && sigma > 0.0) {
      best = std::max(best, sigma);
    }
    return Outcome::ok(best);
  }

  double total = 0.0;
  std::size_t budget = opts.max_evals;
  bool converged = true;
  for (std::size_t i = 0; i < n; ++i) {
    const double lo = br[i];
    const double hi = br[i + 1];
    const double a = k.intercept(i);
    const double b = k.slope(i);
    if (a == 0.0) {
      if (b == 0.0) continue;
      if (lo == 0.0 && theta == 1.0) return Outcome::divergent("K(t)/t does not vanish at 0");
      total += std::pow(b, q) * detail::monomial_integral((1.0 - theta) * q - 1.0, lo, hi);
    } else if (b == 0.0) {
      total += std::pow(a, q) * detail::monomial_integral(-theta * q - 1.0, lo, hi);
    } else {
      auto integrand = [&](double t) { return std::pow((a + b * t) * std::pow(t, -theta), q); };
      const QuadratureResult r = integrate_dt_over_t(integrand, lo, hi, opts, &budget);
      total += r.value;
      converged = converged && r.converged;
    }
  }
  if (sigma > 0.0) return Outcome::divergent("K grows linearly at infinity");
  const double a_tail = k.intercept(n);
  if (a_tail > 0.0) {
    if (theta == 0.0) return Outcome::divergent("K does not vanish at infinity with theta = 0");
    total += std::pow(a_tail, q) * std::pow(br[n], -theta * q) / (theta * q);
  }
  if (!converged) {
    return Outcome::tolerance_not_met(std::pow(total, 1.0 / q), "quadrature budget exhausted");
  }
  return finish(total, q);
}

Outcome gagliardo1_norm(const ConcaveCurve& k, ThetaQ tq) {
  check_theta_q(tq, "gagliardo1_norm");
  const double theta = tq.theta;
  const double q = tq.q;
  const auto br = k.breakpoints();
  const std::size_t n = k.pieces();
  if (std::isinf(q)) {
    double best = 0.0;
    for (std::size_t i = 1; i <= n; ++i) {
      best = std::max(best, k.intercept(i) * std::pow(br[i], -theta));
    }
    return Outcome::ok(best);
  }
  double total = 0.0;
  for (std::size_t i = 1; i < n; ++i) {
    const double a = k.intercept(i);
    if (a == 0.0) continue;
    total += std::pow(a, q) * detail::monomial_integral(-theta * q - 1.0, br[i], br[i + 1]);
  }
  if (n > 0) {
    const double a_tail = k.intercept(n);
    if (a_tail > 0.0) {
      if (theta == 0.0) return Outcome::divergent("K - tK' does not vanish at infinity");
      total += std::pow(a_tail, q) * std::pow(br[n], -theta * q) / (theta * q);
    }
  }
  return finish(total, q);
}

Outcome gagliardo2_norm(const ConcaveCurve& k, ThetaQ tq) {
  check_theta_q(tq, "gagliardo2_norm");
  const double theta = tq.theta;
  const double q = tq.q;
  const auto br = k.breakpoints();
  const std::size_t n = k.pieces();
  const double sigma = k.terminal_slope();
  if (k.is_zero()) return Outcome::ok(0.0);
  if (std::isinf(q)) {
    if (theta == 1.0) return Outcome::ok(k.slope(0));
    if (sigma > 0.0) return Outcome::divergent("t^{1-theta} K' is unbounded");
    double best = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      best = std::max(best, k.slope(i) * std::pow(br[i + 1], 1.0 - theta));
    }
    return Outcome::ok(best);
  }
  if (sigma > 0.0) return Outcome::divergent("K' does not vanish at infinity");
  double total = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double b = k.slope(i);
    if (b == 0.0) continue;
    if (br[i] == 0.0 && theta == 1.0) return Outcome::divergent("K' does not vanish at 0");
    total += std::pow(b, q) * detail::monomial_integral((1.0 - theta) * q - 1.0, br[i], br[i + 1]);
  }
  return finish(total, q);
}

Decomposition optimal_decomposition_l1_linf(const StepFunction& f, double t) {
  if (!(t > 0.0)) throw DomainError("optimal_decomposition_l1_linf: t must be > 0");
  const double level = rearrange(f)(t);
  StepFunction big = truncate(f, level);
  std::vector<Atom> small;
  small.reserve(f.size());
  for (const Atom& a : f.atoms()) {
    small.push_back({std::copysign(std::min(std::abs(a.value), level), a.value) + 0.0, a.mass});
  }
  return {std::move(big), StepFunction(std::move(small)), level};
}

double k_l1_bmo_proxy(const DecreasingStep& sharp_rearranged, double t) {
  if (!(t > 0.0)) throw DomainError("k_l1_bmo_proxy: t must be > 0");
  return t * sharp_rearranged(t);
}

double k_lp_bmo_proxy(const DecreasingStep& sharp_rearranged, double p, double t) {
  if (!(p >= 1.0) || std::isinf(p)) throw DomainError("k_lp_bmo_proxy: p must lie in [1, inf)");
  if (!(t > 0.0)) throw DomainError("k_lp_bmo_proxy: t must be > 0");
  const double upper = std::pow(t, p);
  return std::pow(power_integral(sharp_rearranged, p, 0.0, 0.0, upper).value(), 1.0 / p);
}

}  // namespace oscillatk
