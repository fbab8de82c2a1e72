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

namespace oscillatk::lab {

namespace {

std::vector<double> merged_breakpoints(const DecreasingStep& a, const DecreasingStep& b) {
  std::set<double> ts(a.breakpoints().begin(), a.breakpoints().end());
  ts.insert(b.breakpoints().begin(), b.breakpoints().end());
  return {ts.begin(), ts.end()};
}

std::string lipschitz_family(std::size_t trial, const std::string& requested) {
  return trial == 0 && requested == "random-lipschitz" ? std::string("tent") : requested;
}

Evaluation sobolev_osc(const Generated& f, const ParamGrid& grid, const TrialContext&) {
  const GridFunction& grid_f = as_grid(f, "sobolev-osc");
  const double inv_n = 1.0 / static_cast<double>(grid_f.dim());
  const DecreasingStep g = rearrange(to_step(grid_f));
  const DecreasingStep grad = rearrange(to_step(gradient_magnitude(grid_f)));
  return max_over_points(grid, [&](const Point&) {
    // Between merged breakpoints the ratio is D / (t^{1/n} (E + v t)) with
    // D, E, v >= 0, so it decreases and the sup sits at breakpoints.
    double worst = 0.0;
    for (double t : merged_breakpoints(g, grad)) {
      if (t <= 0.0) continue;
      const double rhs = std::pow(t, inv_n) * grad.integral(t) / t;
      worst = std::max(worst, safe_ratio(oscillation(g, t), rhs));
    }
    return Outcome::ok(worst);
  });
}

// L(t) = int_0^t s^{1-1/n} (f** - f*)(s) ds/s in closed form.
class OscillationIntegral {
 public:
  OscillationIntegral(const DecreasingStep& g, double n) : g_(g), n_(n) {
    const auto br = g.breakpoints();
    cum_.assign(br.size(), 0.0);
    for (std::size_t i = 1; i < g.pieces(); ++i) {
      cum_[i + 1] = cum_[i] + piece(i, br[i], br[i + 1]);
    }
  }

  double operator()(double t) const {
    if (!(t > 0.0)) return 0.0;
    const auto br = g_.breakpoints();
    const std::size_t i = g_.piece_at(t);
    const std::size_t start = std::min(i, g_.pieces());
    return cum_[start] + piece(i, br[start], t);
  }

  /// d/dt L(t) for t inside a piece.
  double derivative(double t) const {
    return g_.intercept(g_.piece_at(t)) * std::pow(t, -1.0 / n_ - 1.0);
  }

  double limit() const {
    const auto br = g_.breakpoints();
    const std::size_t m = g_.pieces();
    if (m == 0) return 0.0;
    return cum_[m] + g_.intercept(m) * n_ * std::pow(br[m], -1.0 / n_);
  }

 private:
  double piece(std::size_t i, double a, double b) const {
    const double d = g_.intercept(i);
    if (d == 0.0 || !(b > a)) return 0.0;
    return d * n_ * (std::pow(a, -1.0 / n_) - std::pow(b, -1.0 / n_));
  }

  const DecreasingStep& g_;
  double n_;
  std::vector<double> cum_;
};

Evaluation sobolev_int(const Generated& f, const ParamGrid& grid, const TrialContext&) {
  const GridFunction& grid_f = as_grid(f, "sobolev-int");
  const double n = static_cast<double>(grid_f.dim());
  const DecreasingStep g = rearrange(to_step(grid_f));
  const DecreasingStep grad = rearrange(to_step(gradient_magnitude(grid_f)));
  const OscillationIntegral lhs(g, n);
  auto ratio = [&](double t) { return safe_ratio(lhs(t), grad.integral(t)); };
  // Sign of (L/R)' inside an interval of smoothness.
  auto slope_sign = [&](double t) {
    return lhs.derivative(t) * grad.integral(t) - lhs(t) * grad(t);
  };
  return max_over_points(grid, [&](const Point&) {
    const std::vector<double> ts = merged_breakpoints(g, grad);
    double worst = 0.0;
    for (std::size_t j = 1; j < ts.size(); ++j) {
      const double a = ts[j - 1];
      const double b = ts[j];
      worst = std::max(worst, ratio(b));
      if (a == 0.0) continue;
      const double lo_probe = a + (b - a) * 1e-9;
      const double hi_probe = b - (b - a) * 1e-9;
      if (slope_sign(lo_probe) > 0.0 && slope_sign(hi_probe) < 0.0) {
        double lo = lo_probe;
        double hi = hi_probe;
        for (int it = 0; it < 200 && hi - lo > 1e-15 * hi; ++it) {
          const double mid = 0.5 * (lo + hi);
          (slope_sign(mid) > 0.0 ? lo : hi) = mid;
        }
        worst = std::max(worst, ratio(0.5 * (lo + hi)));
      }
    }
    // Beyond every breakpoint R is constant and L increases to its limit.
    worst = std::max(worst, safe_ratio(lhs.limit(), grad.l1()));
    return Outcome::ok(worst);
  });
}

}  // namespace

void register_sobolev_checks(std::vector<CheckDef>& out) {
  CheckDef osc{{"sobolev-osc", CheckMode::observed_constant,
                "f**(t) - f*(t) <= c_n t^{1/n} |grad f|**(t) for compactly supported Lipschitz f",
                "random-lipschitz", 256, 0.0, {{}, {}, {}, {1, 2}}},
               sobolev_osc, {}, lipschitz_family, true};
  out.push_back(std::move(osc));
  CheckDef integral{{"sobolev-int", CheckMode::observed_constant,
                     "int_0^t s^{1-1/n} (f** - f*)(s) ds/s <= c_n int_0^t |grad f|*(s) ds",
                     "random-lipschitz", 256, 0.0, {{}, {}, {}, {1, 2}}},
                    sobolev_int, {}, lipschitz_family, true};
  out.push_back(std::move(integral));
}

}  // namespace oscillatk::lab
