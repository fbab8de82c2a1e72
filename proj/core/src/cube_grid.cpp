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

#include "oscillatk/cube_grid.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <unordered_map>

#include "oscillatk/outcome.hpp"

namespace oscillatk {

namespace {

// Below this side length a 1-D window is summed directly.
constexpr std::size_t kDirectWindow = 32;

class Fenwick {
 public:
  explicit Fenwick(std::size_t n) : count_(n + 1, 0), sum_(n + 1, 0.0L) {}

  void add(std::size_t i, long double v, int c) {
    for (++i; i < count_.size(); i += i & (~i + 1)) {
      count_[i] += c;
      sum_[i] += v;
    }
  }

  // Count and sum over ranks [0, r).
  std::pair<long long, long double> prefix(std::size_t r) const {
    long long c = 0;
    long double s = 0.0L;
    for (; r > 0; r -= r & (~r + 1)) {
      c += count_[r];
      s += sum_[r];
    }
    return {c, s};
  }

 private:
  std::vector<long long> count_;
  std::vector<long double> sum_;
};

// out[x] = max of w[s] over s in [x - len + 1, x], clipped to w's range.
std::vector<double> sliding_max(std::span<const double> w, std::size_t n_out, std::size_t len) {
  std::vector<double> out(n_out, 0.0);
  std::deque<std::size_t> dq;
  for (std::size_t x = 0; x < n_out; ++x) {
    if (x < w.size()) {
      while (!dq.empty() && w[dq.back()] <= w[x]) dq.pop_back();
      dq.push_back(x);
    }
    while (!dq.empty() && dq.front() + len <= x) dq.pop_front();
    out[x] = dq.empty() ? 0.0 : w[dq.front()];
  }
  return out;
}

double finish_oscillation(long double acc, std::size_t count, double p) {
  const long double mean = acc / static_cast<long double>(count);
  if (!(mean > 0.0L)) return 0.0;
  if (p == 1.0) return static_cast<double>(mean);
  if (p == 2.0) return static_cast<double>(std::sqrt(mean));
  return std::pow(static_cast<double>(mean), 1.0 / p);
}

long double power_abs(long double d, double p) {
  d = std::fabs(d);
  if (p == 1.0) return d;
  if (p == 2.0) return d * d;
  return std::pow(d, static_cast<long double>(p));
}

double window_direct_1d(std::span<const double> v, std::size_t start, std::size_t len, double p) {
  long double s = 0.0L;
  for (std::size_t i = start; i < start + len; ++i) s += v[i];
  const long double m = s / static_cast<long double>(len);
  long double acc = 0.0L;
  for (std::size_t i = start; i < start + len; ++i) acc += power_abs(v[i] - m, p);
  return finish_oscillation(acc, len, p);
}

// Mean oscillation of every window of length len; result[s] is [s, s + len).
std::vector<double> omega_1d(std::span<const double> v, std::size_t len, double p) {
  const std::size_t n = v.size();
  const std::size_t m = n - len + 1;
  std::vector<double> w(m, 0.0);
  if (len == 1) return w;
  if (len <= kDirectWindow || (p != 1.0 && p != 2.0)) {
    for (std::size_t s = 0; s < m; ++s) w[s] = window_direct_1d(v, s, len, p);
    return w;
  }
  // Constant windows are exactly zero; detect them with sliding min and max.
  std::vector<unsigned char> flat(m, 0);
  {
    std::deque<std::size_t> lo, hi;
    for (std::size_t i = 0; i < n; ++i) {
      while (!lo.empty() && v[lo.back()] >= v[i]) lo.pop_back();
      while (!hi.empty() && v[hi.back()] <= v[i]) hi.pop_back();
      lo.push_back(i);
      hi.push_back(i);
      if (i + 1 >= len) {
        const std::size_t s = i + 1 - len;
        while (lo.front() < s) lo.pop_front();
        while (hi.front() < s) hi.pop_front();
        flat[s] = v[lo.front()] == v[hi.front()];
      }
    }
  }
  std::vector<long double> prefix(n + 1, 0.0L);
  for (std::size_t i = 0; i < n; ++i) prefix[i + 1] = prefix[i] + v[i];
  const long double count = static_cast<long double>(len);

  if (p == 2.0) {
    long double shift = prefix[n] / static_cast<long double>(n);
    std::vector<long double> p1(n + 1, 0.0L), p2(n + 1, 0.0L);
    for (std::size_t i = 0; i < n; ++i) {
      const long double d = v[i] - shift;
      p1[i + 1] = p1[i] + d;
      p2[i + 1] = p2[i] + d * d;
    }
    for (std::size_t s = 0; s < m; ++s) {
      if (flat[s]) continue;
      const long double mu = (p1[s + len] - p1[s]) / count;
      const long double var = (p2[s + len] - p2[s]) / count - mu * mu;
      w[s] = var > 0.0L ? static_cast<double>(std::sqrt(var)) : 0.0;
    }
    return w;
  }

  std::vector<double> sorted(v.begin(), v.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::vector<std::size_t> rank(n);
  for (std::size_t i = 0; i < n; ++i) {
    rank[i] = static_cast<std::size_t>(std::lower_bound(sorted.begin(), sorted.end(), v[i]) -
                                       sorted.begin());
  }
  Fenwick tree(sorted.size());
  for (std::size_t i = 0; i < len; ++i) tree.add(rank[i], v[i], 1);
  for (std::size_t s = 0;; ++s) {
    if (!flat[s]) {
      const long double total = prefix[s + len] - prefix[s];
      const long double mu = total / count;
      const auto r = static_cast<std::size_t>(
          std::lower_bound(sorted.begin(), sorted.end(), mu,
                           [](double a, long double b) { return a < b; }) -
          sorted.begin());
      const auto [c_lo, s_lo] = tree.prefix(r);
      const long double c_hi = count - static_cast<long double>(c_lo);
      const long double below = mu * static_cast<long double>(c_lo) - s_lo;
      const long double above = (total - s_lo) - mu * c_hi;
      w[s] = finish_oscillation(std::max(below, 0.0L) + std::max(above, 0.0L), len, 1.0);
    }
    if (s + 1 == m) break;
    tree.add(rank[s], -static_cast<long double>(v[s]), -1);
    tree.add(rank[s + len], v[s + len], 1);
  }
  return w;
}

double square_direct(const GridFunction& f, std::size_t row, std::size_t col, std::size_t side,
                     double p) {
  long double s = 0.0L;
  for (std::size_t r = row; r < row + side; ++r) {
    for (std::size_t c = col; c < col + side; ++c) s += f.at(r, c);
  }
  const std::size_t count = side * side;
  const long double mean = s / static_cast<long double>(count);
  long double acc = 0.0L;
  for (std::size_t r = row; r < row + side; ++r) {
    for (std::size_t c = col; c < col + side; ++c) acc += power_abs(f.at(r, c) - mean, p);
  }
  return finish_oscillation(acc, count, p);
}

// Mean oscillation of every square of the given side; result[r * m + c].
std::vector<double> omega_2d(const GridFunction& f, std::size_t side, double p) {
  const std::size_t m = f.n_side() - side + 1;
  std::vector<double> w(m * m, 0.0);
  if (side == 1) return w;
  for (std::size_t r = 0; r < m; ++r) {
    for (std::size_t c = 0; c < m; ++c) w[r * m + c] = square_direct(f, r, c, side, p);
  }
  return w;
}

std::vector<double> omega(const GridFunction& f, std::size_t side, double p) {
  return f.dim() == 1 ? omega_1d(f.values(), side, p) : omega_2d(f, side, p);
}

void check_p(double p, const char* who) {
  if (!(p >= 1.0) || std::isinf(p)) throw DomainError(std::string(who) + ": p must lie in [1, inf)");
}

void check_family(const GridFunction& f, const CubeFamily& family) {
  if (family.dim() != f.dim() || family.n_side() != f.n_side()) {
    throw DomainError("cube family does not match the grid");
  }
}

void check_cube(const GridFunction& f, const Cube& q) {
  const std::size_t n = f.n_side();
  const bool inside = q.side >= 1 && q.col + q.side <= n &&
                      (f.dim() == 1 ? q.row == 0 : q.row + q.side <= n);
  if (!inside) throw DomainError("cube lies outside Q0");
}

std::vector<std::size_t> dyadic_sides(std::size_t n) {
  std::vector<std::size_t> sides;
  for (std::size_t s = 1; s < n; s *= 2) sides.push_back(s);
  sides.push_back(n);
  return sides;
}

}  // namespace

GridFunction::GridFunction(int dim, std::size_t n_side, double h, std::vector<double> values)
    : dim_(dim), n_(n_side), h_(h), values_(std::move(values)) {
  if (dim_ != 1 && dim_ != 2) throw DomainError("GridFunction: dim must be 1 or 2");
  if (n_ < 1) throw DomainError("GridFunction: n_side must be >= 1");
  if (!(h_ > 0.0) || !std::isfinite(h_)) throw DomainError("GridFunction: h must be > 0");
  const std::size_t expected = dim_ == 1 ? n_ : n_ * n_;
  if (values_.size() != expected) {
    throw DomainError("GridFunction: expected n_side^dim values");
  }
  for (double v : values_) {
    if (!std::isfinite(v)) throw DomainError("GridFunction: values must be finite");
  }
}

double GridFunction::cell_measure() const noexcept { return dim_ == 1 ? h_ : h_ * h_; }

double GridFunction::cube_measure() const noexcept {
  const double side = static_cast<double>(n_) * h_;
  return dim_ == 1 ? side : side * side;
}

GridFunction GridFunction::with_values(std::vector<double> values) const {
  return GridFunction(dim_, n_, h_, std::move(values));
}

CubeFamily::CubeFamily(int dim, std::size_t n_side, std::vector<std::size_t> sides)
    : dim_(dim), n_(n_side), sides_(std::move(sides)) {
  if (dim_ != 1 && dim_ != 2) throw DomainError("CubeFamily: dim must be 1 or 2");
  if (n_ < 1) throw DomainError("CubeFamily: n_side must be >= 1");
}

CubeFamily CubeFamily::standard(int dim, std::size_t n_side) {
  if (dim == 1 && n_side <= kExhaustiveCap) return every_side(dim, n_side);
  return dyadic(dim, n_side);
}

CubeFamily CubeFamily::dyadic(int dim, std::size_t n_side) {
  return CubeFamily(dim, n_side, dyadic_sides(std::max<std::size_t>(n_side, 1)));
}

CubeFamily CubeFamily::every_side(int dim, std::size_t n_side) {
  std::vector<std::size_t> sides(n_side);
  for (std::size_t s = 0; s < n_side; ++s) sides[s] = s + 1;
  return CubeFamily(dim, n_side, std::move(sides));
}

std::size_t CubeFamily::count() const noexcept {
  std::size_t total = 0;
  for (std::size_t s : sides_) {
    const std::size_t m = n_ - s + 1;
    total += dim_ == 1 ? m : m * m;
  }
  return total;
}

bool CubeFamily::contains(const Cube& q) const noexcept {
  if (!std::binary_search(sides_.begin(), sides_.end(), q.side)) return false;
  if (q.col + q.side > n_) return false;
  return dim_ == 1 ? q.row == 0 : q.row + q.side <= n_;
}

void CubeFamily::for_each(const std::function<void(const Cube&)>& fn) const {
  for (std::size_t s : sides_) {
    const std::size_t m = n_ - s + 1;
    const std::size_t rows = dim_ == 1 ? 1 : m;
    for (std::size_t r = 0; r < rows; ++r) {
      for (std::size_t c = 0; c < m; ++c) fn(Cube{c, r, s});
    }
  }
}

double cube_mean(const GridFunction& f, const Cube& q) {
  check_cube(f, q);
  long double s = 0.0L;
  const std::size_t rows = f.dim() == 1 ? 1 : q.side;
  for (std::size_t r = q.row; r < q.row + rows; ++r) {
    for (std::size_t c = q.col; c < q.col + q.side; ++c) {
      s += f.dim() == 1 ? f[c] : f.at(r, c);
    }
  }
  return static_cast<double>(s / static_cast<long double>(rows * q.side));
}

double mean_oscillation_p(const GridFunction& f, const Cube& q, double p) {
  check_p(p, "mean_oscillation_p");
  check_cube(f, q);
  if (f.dim() == 1) return window_direct_1d(f.values(), q.col, q.side, p);
  return square_direct(f, q.row, q.col, q.side, p);
}

GridFunction sharp_function(const GridFunction& f, double p) {
  return sharp_function(f, p, CubeFamily::standard(f.dim(), f.n_side()));
}

GridFunction sharp_function(const GridFunction& f, double p, const CubeFamily& family) {
  check_p(p, "sharp_function");
  check_family(f, family);
  const std::size_t n = f.n_side();
  std::vector<double> out(f.size(), 0.0);
  for (std::size_t side : family.side_lengths()) {
    if (side == 1) continue;
    const std::vector<double> w = omega(f, side, p);
    const std::size_t m = n - side + 1;
    if (f.dim() == 1) {
      const std::vector<double> cover = sliding_max(w, n, side);
      for (std::size_t x = 0; x < n; ++x) out[x] = std::max(out[x], cover[x]);
      continue;
    }
    // Separable: max over columns within each row of w, then over rows.
    std::vector<double> rows(m * n);
    for (std::size_t r = 0; r < m; ++r) {
      const std::vector<double> cover =
          sliding_max(std::span<const double>(w).subspan(r * m, m), n, side);
      std::copy(cover.begin(), cover.end(), rows.begin() + static_cast<std::ptrdiff_t>(r * n));
    }
    std::vector<double> column(m);
    for (std::size_t c = 0; c < n; ++c) {
      for (std::size_t r = 0; r < m; ++r) column[r] = rows[r * n + c];
      const std::vector<double> cover = sliding_max(column, n, side);
      for (std::size_t r = 0; r < n; ++r) out[r * n + c] = std::max(out[r * n + c], cover[r]);
    }
  }
  return f.with_values(std::move(out));
}

double bmo_seminorm(const GridFunction& f, double p) {
  return bmo_seminorm(f, p, CubeFamily::standard(f.dim(), f.n_side()));
}

double bmo_seminorm(const GridFunction& f, double p, const CubeFamily& family) {
  check_p(p, "bmo_seminorm");
  check_family(f, family);
  double best = 0.0;
  for (std::size_t side : family.side_lengths()) {
    if (side == 1) continue;
    for (double w : omega(f, side, p)) best = std::max(best, w);
  }
  return best;
}

GridFunction gradient_magnitude(const GridFunction& f) {
  const std::size_t n = f.n_side();
  const double h = f.h();
  std::vector<double> out(f.size(), 0.0);
  if (n == 1) return f.with_values(std::move(out));
  auto diff = [&](double lo, double hi) { return (hi - lo) / h; };
  if (f.dim() == 1) {
    for (std::size_t i = 0; i < n; ++i) {
      const std::size_t a = i + 1 < n ? i : i - 1;
      out[i] = std::abs(diff(f[a], f[a + 1]));
    }
    return f.with_values(std::move(out));
  }
  for (std::size_t r = 0; r < n; ++r) {
    const std::size_t ra = r + 1 < n ? r : r - 1;
    for (std::size_t c = 0; c < n; ++c) {
      const std::size_t ca = c + 1 < n ? c : c - 1;
      const double dx = diff(f.at(r, ca), f.at(r, ca + 1));
      const double dy = diff(f.at(ra, c), f.at(ra + 1, c));
      out[r * n + c] = std::hypot(dx, dy);
    }
  }
  return f.with_values(std::move(out));
}

StepFunction to_step(const GridFunction& f) {
  std::unordered_map<double, std::size_t> index;
  std::vector<double> values;
  std::vector<std::size_t> counts;
  for (double v : f.values()) {
    const double key = v + 0.0;
    auto [it, inserted] = index.try_emplace(key, values.size());
    if (inserted) {
      values.push_back(key);
      counts.push_back(0);
    }
    ++counts[it->second];
  }
  std::vector<Atom> atoms;
  atoms.reserve(values.size());
  const double cell = f.cell_measure();
  for (std::size_t i = 0; i < values.size(); ++i) {
    atoms.push_back({values[i], static_cast<double>(counts[i]) * cell});
  }
  return StepFunction(std::move(atoms));
}

}  // namespace oscillatk
