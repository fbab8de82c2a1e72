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

#ifndef OSCILLATK_FAMILIES_HPP
#define OSCILLATK_FAMILIES_HPP

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "oscillatk/cube_grid.hpp"
#include "oscillatk/step_measure.hpp"

namespace oscillatk {

/// Seeded generator with a platform-independent uniform draw.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform on [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  /// Uniform integer in [0, n).
  std::size_t index(std::size_t n) {
    return static_cast<std::size_t>(uniform() * static_cast<double>(n)) % n;
  }
  bool bernoulli(double p) { return uniform() < p; }

 private:
  std::mt19937_64 engine_;
};

/// Independent stream seed for trial `trial` of a run seeded with `seed`.
std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t trial) noexcept;

using Generated = std::variant<StepFunction, GridFunction>;

/// Known family names, in registry order.
const std::vector<std::string>& family_names();
bool is_family(std::string_view name);
/// True when the family produces a GridFunction.
bool is_grid_family(std::string_view name);

/// Size is the atom count for random-step and the per-axis cell count N for
/// grid families (h = 1/N, so Q0 is the unit cube). Grid families are
/// resolution independent: the same seed at N and 2N samples the same
/// function at cell midpoints. `dim` applies to tent, random-lipschitz,
/// random-bmo-grid and log-singularity; plane-2d is always 2-D.
Generated generate(std::string_view family, std::uint64_t seed, std::size_t size, int dim = 1);

StepFunction generate_step(std::string_view family, std::uint64_t seed, std::size_t size);
GridFunction generate_grid(std::string_view family, std::uint64_t seed, std::size_t size,
                           int dim = 1);

}  // namespace oscillatk

#endif  // OSCILLATK_FAMILIES_HPP
