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

#include "oscillatk/norms.hpp"

#include <algorithm>
#include <cmath>

#include <boost/math/quadrature/gauss.hpp>

namespace oscillatk {

namespace {

void check_q(double q, const char* who) {
  if (!(q > 0.0)) throw DomainError(std::string(who) + ": q must be > 0");
}

// (D / a)^q * a^k * (1 - (a/b)^e) / e, i.e. the integral of D^q t^{-q} t^{k-1}
// over [a, b] with e = q - k > 0 and b possibly infinite.
double inverse_power_piece(double d, double a, double b, double q, double k) {
  const double e = q - k;
  const double head = std::pow(d / a, q) * std::pow(a, k) / e;
  if (std::isinf(b)) return head;
  return head * -std::expm1(e * std::log(a / b));
}

// g / sup(g), so that powers of the values stay below 1 for large exponents.
DecreasingStep unit_scaled(const DecreasingStep& g) {
  const double top = g.sup();
  const auto br = g.breakpoints();
  std::vector<double> vs(g.values().begin(), g.values().end());
  for (double& v : vs) v /= top;
  return DecreasingStep(std::vector<double>(br.begin(), br.end()), std::move(vs));
}

// Applies a degree-one homogeneous norm to g / sup(g) and undoes the scaling.
template <class F>
Outcome homogeneous(const DecreasingStep& g, F&& norm) {
  const double top = g.sup();
  return norm(unit_scaled(g)).map([top](double v) { return v * top; });
}

}  // namespace

double lebesgue_norm(const DecreasingStep& g, double p) {
  if (!(p > 0.0)) throw DomainError("lebesgue_norm: p must be > 0");
  if (std::isinf(p)) return g.sup();
  if (g.is_zero()) return 0.0;
  return homogeneous(g, [p](const DecreasingStep& u) {
           return Outcome::ok(std::pow(power_integral(u, p, 0.0, 0.0).value(), 1.0 / p));
         }).value();
}

Outcome lorentz_norm(const DecreasingStep& g, LorentzParams params) {
  if (!(params.p >= 1.0)) throw DomainError("lorentz_norm: p must be >= 1");
  check_q(params.q, "lorentz_norm");
  if (std::isinf(params.p)) {
    if (std::isinf(params.q)) return Outcome::ok(linf_inf(g));
    return lorentz_inf_q(g, params.q);
  }
  if (g.is_zero()) return Outcome::ok(0.0);
  const auto br = g.breakpoints();
  const auto vs = g.values();
  if (std::isinf(params.q)) {
    double s = 0.0;
    for (std::size_t i = 0; i < vs.size(); ++i) {
      s = std::max(s, vs[i] * std::pow(br[i + 1], 1.0 / params.p));
    }
    return Outcome::ok(s);
  }
  return homogeneous(g, [&](const DecreasingStep& u) {
    return power_integral(u, params.q, params.q / params.p - 1.0, 0.0).map([&](double v) {
      return std::pow(v, 1.0 / params.q);
    });
  });
}

Outcome lorentz_inf_q(const DecreasingStep& g, double q) {
  check_q(q, "lorentz_inf_q");
  if (std::isinf(q)) return Outcome::ok(linf_inf(g));
  if (g.is_zero()) return Outcome::ok(0.0);
  if (g.sup() != 1.0) return homogeneous(g, [q](const DecreasingStep& u) { return lorentz_inf_q(u, q); });
  const auto br = g.breakpoints();
  const std::size_t m = g.pieces();
  double total = 0.0;
  // Piece 0 has zero intercept.
  for (std::size_t i = 1; i < m; ++i) {
    total += inverse_power_piece(g.intercept(i), br[i], br[i + 1], q, 0.0);
  }
  total += inverse_power_piece(g.l1(), br[m], kInf, q, 0.0);
  return Outcome::ok(std::pow(total, 1.0 / q));
}

double linf_inf(const DecreasingStep& g) {
  if (g.is_zero()) return 0.0;
  const auto br = g.breakpoints();
  double s = 0.0;
  for (std::size_t i = 1; i <= g.pieces(); ++i) s = std::max(s, g.intercept(i) / br[i]);
  return s;
}

double luxemburg_exp_l(const StepFunction& f, double total_space_measure) {
  if (!(total_space_measure > 0.0)) {
    throw DomainError("luxemburg_exp_l: total_space_measure must be > 0");
  }
  const double top = f.sup_abs();
  if (top == 0.0) return 0.0;
  double top_mass = 0.0;
  for (const Atom& a : f.atoms()) {
    if (std::abs(a.value) == top) top_mass += a.mass;
  }
  const double support = f.support_measure();
  auto excess = [&](double lambda) {
    double s = 0.0;
    for (const Atom& a : f.atoms()) s += a.mass * std::expm1(std::abs(a.value) / lambda);
    return s;
  };
  // excess(lo) >= mu from the top level alone; excess(hi) <= mu since every
  // level is at most `top`.
  double lo = top / std::log1p(total_space_measure / top_mass);
  double hi = top / std::log1p(total_space_measure / support);
  if (!(hi > lo)) return hi;
  while (hi / lo - 1.0 > 1e-12) {
    const double mid = std::sqrt(lo * hi);
    if (excess(mid) > total_space_measure) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return std::sqrt(lo * hi);
}

std::vector<double> default_delta_grid() {
  std::vector<double> grid;
  for (int k = 20; k >= 1; --k) grid.push_back(1.0 + std::ldexp(1.0, -k));
  for (int j = 1; j <= 10; ++j) grid.push_back(std::ldexp(1.0, j));
  return grid;
}

Outcome delta_extrapolation(const DecreasingStep& g, std::span<const double> q_grid) {
  if (q_grid.empty()) throw DomainError("delta_extrapolation: q_grid must be non-empty");
  double best = 0.0;
  for (double q : q_grid) {
    if (!(q > 1.0)) throw DomainError("delta_extrapolation: grid values must be > 1");
    if (std::isinf(q)) continue;
    const Outcome n = lorentz_norm(g, {q, q});
    if (!n.is_ok()) return n;
    best = std::max(best, n.value() / q);
  }
  return Outcome::ok(best);
}

Outcome double_star_lq(const DecreasingStep& g, double q) {
  if (g.is_zero()) return Outcome::ok(0.0);
  if (!(q > 1.0)) return Outcome::divergent("double_star_lq: f** is not in L^q for q <= 1");
  if (g.sup() != 1.0) return homogeneous(g, [q](const DecreasingStep& u) { return double_star_lq(u, q); });
  using boost::math::quadrature::gauss;
  constexpr double kPanel = 0.25;
  const auto br = g.breakpoints();
  const auto vs = g.values();
  const std::size_t m = g.pieces();
  double total = std::pow(vs[0], q) * br[1];
  for (std::size_t i = 1; i < m; ++i) {
    const double v = vs[i];
    const double d = g.intercept(i);
    auto integrand = [=](double u) {
      const double t = std::exp(u);
      return std::pow(v + d / t, q) * t;
    };
    // The integrand is analytic in u = log t; fixed panels of width <= 1/4
    // put the 20-point rule at rounding level for the q used in practice.
    const double lo = std::log(br[i]);
    const double hi = std::log(br[i + 1]);
    const auto panels = static_cast<std::size_t>(std::ceil((hi - lo) / kPanel));
    const double w = (hi - lo) / static_cast<double>(std::max<std::size_t>(panels, 1));
    for (std::size_t k = 0; k < std::max<std::size_t>(panels, 1); ++k) {
      const double a = lo + w * static_cast<double>(k);
      total += gauss<double, 20>::integrate(integrand, a, k + 1 == panels ? hi : a + w);
    }
  }
  total += inverse_power_piece(g.l1(), br[m], kInf, q, 1.0);
  return Outcome::ok(std::pow(total, 1.0 / q));
}

Outcome oscillation_lq(const DecreasingStep& g, double q) {
  if (g.is_zero()) return Outcome::ok(0.0);
  if (!(q > 1.0)) return Outcome::divergent("oscillation_lq: f**-f* is not in L^q for q <= 1");
  if (g.sup() != 1.0) return homogeneous(g, [q](const DecreasingStep& u) { return oscillation_lq(u, q); });
  const auto br = g.breakpoints();
  const std::size_t m = g.pieces();
  double total = 0.0;
  for (std::size_t i = 1; i < m; ++i) {
    total += inverse_power_piece(g.intercept(i), br[i], br[i + 1], q, 1.0);
  }
  total += inverse_power_piece(g.l1(), br[m], kInf, q, 1.0);
  return Outcome::ok(std::pow(total, 1.0 / q));
}

Outcome evaluate_norm(const NormRequest& req, const StepFunction& f, const DecreasingStep& g,
                      double total_space_measure) {
  if (req.space == "lorentz") return lorentz_norm(g, {req.p, req.q});
  if (req.space == "lorentz-inf") return lorentz_inf_q(g, req.q);
  if (req.space == "linf-inf") return Outcome::ok(linf_inf(g));
  if (req.space == "lebesgue") return Outcome::ok(lebesgue_norm(g, req.p));
  if (req.space == "expL") return Outcome::ok(luxemburg_exp_l(f, total_space_measure));
  if (req.space == "delta") {
    const auto grid = default_delta_grid();
    return delta_extrapolation(g, grid);
  }
  throw DomainError("unknown norm space '" + req.space + "'");
}

}  // namespace oscillatk
