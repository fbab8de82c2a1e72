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

#ifndef OSCILLATK_CUBE_GRID_HPP
#define OSCILLATK_CUBE_GRID_HPP

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "oscillatk/step_measure.hpp"

namespace oscillatk {

/// Piecewise-constant function on Q0 = [0, N h]^dim, dim in {1, 2}. Values are
/// row-major in 2-D: index = row * N + col, with x the column and y the row.
class GridFunction {
 public:
  GridFunction(int dim, std::size_t n_side, double h, std::vector<double> values);

  int dim() const noexcept { return dim_; }
  std::size_t n_side() const noexcept { return n_; }
  double h() const noexcept { return h_; }
  std::span<const double> values() const noexcept { return values_; }
  std::size_t size() const noexcept { return values_.size(); }
  double operator[](std::size_t i) const noexcept { return values_[i]; }
  double at(std::size_t row, std::size_t col) const noexcept { return values_[row * n_ + col]; }

  /// h^dim, the mass carried by each cell.
  double cell_measure() const noexcept;
  /// |Q0| = (N h)^dim.
  double cube_measure() const noexcept;

  GridFunction with_values(std::vector<double> values) const;

  friend bool operator==(const GridFunction&, const GridFunction&) = default;

 private:
  int dim_;
  std::size_t n_;
  double h_;
  std::vector<double> values_;
};

/// Grid-aligned cube in cell units: columns [col, col + side), rows
/// [row, row + side). In 1-D row must be 0.
struct Cube {
  std::size_t col = 0;
  std::size_t row = 0;
  std::size_t side = 1;

  friend bool operator==(const Cube&, const Cube&) = default;
};

/// Subcubes of Q0 enumerated by side length at every grid translation. The
/// standard family takes every side length in 1-D when N <= kExhaustiveCap,
/// and dyadic sides 1, 2, 4, ... plus N otherwise (and always in 2-D). Any
/// non-exhaustive family gives a lower bound for the all-cubes supremum.
class CubeFamily {
 public:
  static constexpr std::size_t kExhaustiveCap = 4096;

  static CubeFamily standard(int dim, std::size_t n_side);
  static CubeFamily dyadic(int dim, std::size_t n_side);
  static CubeFamily every_side(int dim, std::size_t n_side);

  int dim() const noexcept { return dim_; }
  std::size_t n_side() const noexcept { return n_; }
  std::span<const std::size_t> side_lengths() const noexcept { return sides_; }
  bool exhaustive() const noexcept { return sides_.size() == n_; }
  /// Total number of cubes.
  std::size_t count() const noexcept;
  bool contains(const Cube& q) const noexcept;
  void for_each(const std::function<void(const Cube&)>& fn) const;

 private:
  CubeFamily(int dim, std::size_t n_side, std::vector<std::size_t> sides);

  int dim_;
  std::size_t n_;
  std::vector<std::size_t> sides_;
};

/// f_Q, the cell-weighted average over Q.
double cube_mean(const GridFunction& f, const Cube& q);

/// { (1/|Q|) int_Q |f - f_Q|^p }^{1/p}, p >= 1.
double mean_oscillation_p(const GridFunction& f, const Cube& q, double p);

/// At each cell, the max of mean_oscillation_p over family cubes containing it.
GridFunction sharp_function(const GridFunction& f, double p = 1.0);
GridFunction sharp_function(const GridFunction& f, double p, const CubeFamily& family);

/// max over the family of mean_oscillation_p, i.e. the sup of sharp_function.
double bmo_seminorm(const GridFunction& f, double p = 1.0);
double bmo_seminorm(const GridFunction& f, double p, const CubeFamily& family);

/// |grad f| by forward differences (backward in the last cell of each axis).
GridFunction gradient_magnitude(const GridFunction& f);

/// One atom per distinct value (in first-occurrence order) with mass
/// count * h^dim.
StepFunction to_step(const GridFunction& f);

}  // namespace oscillatk

#endif  // OSCILLATK_CUBE_GRID_HPP
