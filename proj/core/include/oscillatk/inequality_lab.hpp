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

#ifndef OSCILLATK_INEQUALITY_LAB_HPP
#define OSCILLATK_INEQUALITY_LAB_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "oscillatk/families.hpp"

namespace oscillatk {

enum class CheckMode { exact_constant, observed_constant };

const char* to_string(CheckMode mode) noexcept;

/// Parameter axes. An empty axis takes the registry default; checks that
/// tie one index to another (theta = 1 - 1/q, theta = 1/p, ...) ignore the
/// dependent axis.
struct ParamGrid {
  std::vector<double> theta;
  std::vector<double> q;
  std::vector<double> p;
  std::vector<int> dims;

  friend bool operator==(const ParamGrid&, const ParamGrid&) = default;
};

struct CheckSpec {
  std::string name;
  ParamGrid params;
  std::string family;  // empty: registry default
  std::uint64_t seed = 0;
  std::size_t trials = 50;
  std::size_t size = 0;  // 0: registry default
  std::optional<double> tolerance;
};

/// Registry entry.
struct CheckInfo {
  std::string name;
  CheckMode mode;
  std::string statement;
  std::string default_family;
  std::size_t default_size;
  double default_tolerance;
  ParamGrid defaults;
  /// Observed mode: largest accepted relative change under refinement.
  double drift_threshold = 0.10;
};

/// Enough to regenerate the worst case: generate(family, seed, size, dim).
struct Witness {
  std::uint64_t seed = 0;
  std::string family;
  std::size_t size = 0;
  int dim = 1;
  std::size_t trial = 0;
  double theta = 0.0;
  double q = 0.0;
  double p = 0.0;
  /// Set by probe_sharpness, whose witness is not a generated function.
  std::optional<Generated> function;

  friend bool operator==(const Witness&, const Witness&) = default;
};

/// Observed mode reruns at 2N (grid families) or with twice the trials
/// (step families) and compares the observed constants.
struct Refinement {
  std::size_t base = 0;
  std::size_t refined = 0;
  double base_constant = 0.0;
  double refined_constant = 0.0;
  double drift = 0.0;
  double threshold = 0.0;
  bool stable = false;

  friend bool operator==(const Refinement&, const Refinement&) = default;
};

struct CheckReport {
  std::string name;
  CheckMode mode = CheckMode::exact_constant;
  ParamGrid params;
  std::size_t trials = 0;
  double tolerance = 0.0;
  /// Worst LHS / (constant * RHS) over trials and parameter points.
  double max_ratio = 0.0;
  double observed_constant = 0.0;
  Witness witness;
  bool pass = false;
  double runtime_ms = 0.0;
  std::optional<Refinement> refinement;
  std::string note;

  /// Equality ignoring runtime_ms.
  bool same_result(const CheckReport& other) const;
};

struct SuiteSummary {
  std::uint64_t seed = 0;
  std::size_t trials = 0;
  std::vector<CheckReport> reports;
  bool all_pass = false;
  double runtime_ms = 0.0;
};

const std::vector<CheckInfo>& check_registry();
/// nullptr when unknown.
const CheckInfo* find_check(std::string_view name);

/// Deterministic for a given CheckSpec. Throws DomainError for an unknown name or
/// family, or a family the check cannot use.
CheckReport run_check(const CheckSpec& spec);

/// Runs every named check (all of them when `names` is empty).
SuiteSummary run_suite(const std::vector<std::string>& names, std::size_t trials,
                       std::uint64_t seed);

/// Randomized restart plus per-coordinate multiplicative hill-climb over the
/// atoms (or grid values) maximizing the check's ratio. `budget` counts ratio
/// evaluations.
CheckReport probe_sharpness(std::string_view name, const ParamGrid& params, std::size_t budget,
                            std::uint64_t seed);

/// Worker count for trial-parallel loops: OSCILLATK_THREADS if set, else the
/// hardware concurrency.
std::size_t lab_threads();

}  // namespace oscillatk

#endif  // OSCILLATK_INEQUALITY_LAB_HPP
