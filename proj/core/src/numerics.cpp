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

#include "oscillatk/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

namespace oscillatk {

namespace {

class LogSimpson {
 public:
  LogSimpson(const std::function<double(double)>& fn, std::size_t budget)
      : fn_(fn), budget_(budget) {}

  double eval(double u) {
    ++evals_;
    return fn_(std::exp(u));
  }

  double simpson(double a, double b, double fa, double fm, double fb) const {
    return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  }

  double adapt(double a, double b, double fa, double fm, double fb, double whole, double tol,
               int depth) {
    const double m = 0.5 * (a + b);
    const double flm = eval(0.5 * (a + m));
    const double frm = eval(0.5 * (m + b));
    const double left = simpson(a, m, fa, flm, fm);
    const double right = simpson(m, b, fm, frm, fb);
    const double delta = left + right - whole;
    if (std::abs(delta) <= 15.0 * tol) return left + right + delta / 15.0;
    if (depth >= kMaxDepth || evals_ >= budget_) {
      converged_ = false;
      return left + right + delta / 15.0;
    }
    return adapt(a, m, fa, flm, fm, left, 0.5 * tol, depth + 1) +
           adapt(m, b, fm, frm, fb, right, 0.5 * tol, depth + 1);
  }

  std::size_t evals() const noexcept { return evals_; }
  bool converged() const noexcept { return converged_; }

 private:
  static constexpr int kMaxDepth = 60;
  const std::function<double(double)>& fn_;
  std::size_t budget_;
  std::size_t evals_ = 0;
  bool converged_ = true;
};

}  // namespace

QuadratureResult integrate_dt_over_t(const std::function<double(double)>& fn, double a, double b,
                                     const QuadratureOptions& opts, std::size_t* budget) {
  QuadratureResult out;
  if (!(a < b)) return out;
  const std::size_t allowance = budget ? std::min(*budget, opts.max_evals) : opts.max_evals;
  LogSimpson q(fn, allowance);

  const double ua = std::log(a);
  const double ub = std::log(b);
  // Coarse panels of width <= 1/4 in log t give a reliable scale estimate.
  const std::size_t panels =
      std::clamp<std::size_t>(static_cast<std::size_t>(std::ceil((ub - ua) / 0.25)), 2, 4096);
  const double w = (ub - ua) / static_cast<double>(panels);

  std::vector<double> nodes(2 * panels + 1);
  for (std::size_t k = 0; k < nodes.size(); ++k) {
    const double u = (k + 1 == nodes.size()) ? ub : ua + 0.5 * w * static_cast<double>(k);
    nodes[k] = q.eval(u);
  }
  std::vector<double> coarse(panels);
  double scale = 0.0;
  for (std::size_t p = 0; p < panels; ++p) {
    const double pa = ua + w * static_cast<double>(p);
    const double pb = (p + 1 == panels) ? ub : pa + w;
    coarse[p] = q.simpson(pa, pb, nodes[2 * p], nodes[2 * p + 1], nodes[2 * p + 2]);
    scale += std::abs(coarse[p]);
  }
  const double panel_tol = opts.rel_tol * scale / static_cast<double>(panels);
  double total = 0.0;
  for (std::size_t p = 0; p < panels; ++p) {
    const double pa = ua + w * static_cast<double>(p);
    const double pb = (p + 1 == panels) ? ub : pa + w;
    total += q.adapt(pa, pb, nodes[2 * p], nodes[2 * p + 1], nodes[2 * p + 2], coarse[p],
                     panel_tol, 0);
  }
  out.value = total;
  out.evals = q.evals();
  out.converged = q.converged() && std::isfinite(total);
  if (budget) *budget -= std::min(*budget, q.evals());
  return out;
}

Minimum golden_section_minimize(const std::function<double(double)>& fn, double lo, double hi,
                                double x_tol, int max_iter) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo;
  double b = hi;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = fn(c);
  double fd = fn(d);
  for (int it = 0; it < max_iter && (b - a) > x_tol * (1.0 + std::abs(a) + std::abs(b)); ++it) {
    if (fc <= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = fn(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = fn(d);
    }
  }
  return fc <= fd ? Minimum{c, fc} : Minimum{d, fd};
}

}  // namespace oscillatk
