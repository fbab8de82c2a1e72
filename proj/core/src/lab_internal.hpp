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

#ifndef OSCILLATK_SRC_LAB_INTERNAL_HPP
#define OSCILLATK_SRC_LAB_INTERNAL_HPP

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstddef>
#include <exception>
#include <functional>
#include <limits>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "oscillatk/inequality_lab.hpp"
#include "oscillatk/outcome.hpp"

namespace oscillatk::lab {

inline constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

struct Point {
  double theta = kNaN;
  double q = kNaN;
  double p = kNaN;
};

struct TrialContext {
  std::size_t trial = 0;
  std::uint64_t seed = 0;
  std::string family;
  std::size_t size = 0;
  int dim = 1;
  double tolerance = 0.0;
};

struct Evaluation {
  double ratio = 0.0;
  Point worst;
  bool condition_ok = true;
  bool divergent = false;
  std::string note;
  /// Per-point ratios in grid order, for conditions across trials.
  std::vector<double> profile;
};

using Evaluator =
    std::function<Evaluation(const Generated&, const ParamGrid&, const TrialContext&)>;
struct AggregateVerdict {
  bool ok = true;
  std::string note;
};
using Aggregator =
    std::function<AggregateVerdict(const std::vector<Evaluation>&, const ParamGrid&)>;

struct CheckDef {
  CheckInfo info;
  Evaluator evaluate;
  Aggregator aggregate;
  /// Family used for a trial; empty keeps the requested family.
  std::function<std::string(std::size_t trial, const std::string& requested)> family_for;
  bool needs_grid = false;
};

void register_rearrangement_checks(std::vector<CheckDef>& out);
void register_interpolation_checks(std::vector<CheckDef>& out);
void register_bmo_checks(std::vector<CheckDef>& out);
void register_sobolev_checks(std::vector<CheckDef>& out);

const std::vector<CheckDef>& definitions();
/// Throws DomainError for an unknown name.
const CheckDef& definition(std::string_view name);

/// Registry defaults filled into empty axes.
ParamGrid resolve_params(const ParamGrid& given, const ParamGrid& defaults);
/// Cartesian product of theta x q x p; an empty axis contributes NaN.
std::vector<Point> points(const ParamGrid& grid);

/// lhs / rhs, with 0/0 -> 0 and positive/0 -> inf. Values of lhs at or below
/// abs_tol count as zero.
inline double safe_ratio(double lhs, double rhs, double abs_tol = 0.0) {
  if (rhs > 0.0) return lhs / rhs;
  return lhs <= abs_tol ? 0.0 : kInfinity;
}

/// Per-point ratio callback for max_over_points; a thrown NotANumberError or
/// a non-ok Outcome is reported as divergence.
using PointRatio = std::function<Outcome(const Point&)>;
Evaluation max_over_points(const ParamGrid& grid, const PointRatio& fn);

StepFunction as_step(const Generated& g);
const GridFunction& as_grid(const Generated& g, const std::string& who);

/// Generates the function of one trial at the given side size and dim.
Generated trial_function(const std::string& family, std::uint64_t seed, std::size_t size, int dim);

/// Side count used for a dim: `size` in 1-D, size / 8 (at least 8) in 2-D.
std::size_t side_for_dim(std::size_t size, int dim);

/// Evaluates fn(i) for i in [0, n) on up to lab_threads() workers; results
/// are stored by index so the output does not depend on scheduling.
template <class T>
std::vector<T> parallel_map(std::size_t n, const std::function<T(std::size_t)>& fn) {
  std::vector<T> out(n);
  const std::size_t workers = std::min(lab_threads(), n);
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) out[i] = fn(i);
    return out;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::atomic<bool> failed{false};
  auto work = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= n || failed.load()) return;
      try {
        out[i] = fn(i);
      } catch (...) {
        if (!failed.exchange(true)) error = std::current_exception();
        return;
      }
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work);
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
  return out;
}

/// Geometric grid of n points on [lo, hi].
std::vector<double> geometric_grid(double lo, double hi, std::size_t n);

}  // namespace oscillatk::lab

#endif  // OSCILLATK_SRC_LAB_INTERNAL_HPP
