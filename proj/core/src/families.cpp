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

#include "oscillatk/families.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>

#include "oscillatk/outcome.hpp"

namespace oscillatk {

namespace {

using Sampler = std::function<double(double, double)>;

GridFunction sample(int dim, std::size_t n, const Sampler& fn) {
  const double h = 1.0 / static_cast<double>(n);
  std::vector<double> values;
  values.reserve(dim == 1 ? n : n * n);
  if (dim == 1) {
    for (std::size_t i = 0; i < n; ++i) values.push_back(fn((static_cast<double>(i) + 0.5) * h, 0.0));
  } else {
    for (std::size_t r = 0; r < n; ++r) {
      const double y = (static_cast<double>(r) + 0.5) * h;
      for (std::size_t c = 0; c < n; ++c) {
        values.push_back(fn((static_cast<double>(c) + 0.5) * h, y));
      }
    }
  }
  return GridFunction(dim, n, h, std::move(values));
}

double distance(int dim, double x, double y, double cx, double cy) {
  return dim == 1 ? std::abs(x - cx) : std::hypot(x - cx, y - cy);
}

struct Tent {
  double cx, cy, radius, height_slope;
};

StepFunction random_step(std::uint64_t seed, std::size_t size) {
  if (size < 1) throw DomainError("random-step: size must be >= 1");
  Rng rng(seed);
  std::vector<Atom> atoms;
  atoms.reserve(size);
  for (std::size_t i = 0; i < size; ++i) {
    double value;
    if (i > 0 && rng.bernoulli(0.3)) {
      value = std::abs(atoms[rng.index(i)].value);
    } else {
      value = std::exp(rng.uniform(-2.0, 2.0));
    }
    if (rng.bernoulli(0.5)) value = -value;
    const double mass = std::exp(rng.uniform(-3.0, 1.0));
    atoms.push_back({value, mass});
  }
  return StepFunction(std::move(atoms));
}

GridFunction random_lipschitz(std::uint64_t seed, std::size_t n, int dim) {
  Rng rng(seed);
  const std::size_t count = 1 + rng.index(4);
  std::vector<Tent> tents;
  std::vector<double> weights;
  double total = 0.0;
  for (std::size_t k = 0; k < count; ++k) {
    const double cx = rng.uniform(0.25, 0.75);
    const double cy = dim == 2 ? rng.uniform(0.25, 0.75) : 0.0;
    const double radius = rng.uniform(0.05, 0.2);
    const double w = rng.uniform(0.1, 1.0);
    tents.push_back({cx, cy, radius, 0.0});
    weights.push_back(w);
    total += w;
  }
  // Slopes sum to at most 1, so the sum is 1-Lipschitz.
  const double budget = rng.uniform(0.5, 1.0);
  for (std::size_t k = 0; k < count; ++k) tents[k].height_slope = budget * weights[k] / total;
  return sample(dim, n, [&](double x, double y) {
    double s = 0.0;
    for (const Tent& t : tents) {
      s += t.height_slope * std::max(t.radius - distance(dim, x, y, t.cx, t.cy), 0.0);
    }
    return s;
  });
}

GridFunction random_bmo_grid(std::uint64_t seed, std::size_t n, int dim) {
  Rng rng(seed);
  const double alpha = rng.uniform(0.25, 1.0);
  const double cx = static_cast<double>(1 + rng.index(15)) / 16.0;
  const double cy = dim == 2 ? static_cast<double>(1 + rng.index(15)) / 16.0 : 0.0;
  struct Step {
    double lo, hi, height;
  };
  std::vector<Step> steps;
  const std::size_t n_steps = 1 + rng.index(3);
  for (std::size_t k = 0; k < n_steps; ++k) {
    const double a = rng.uniform(0.0, 1.0);
    const double b = rng.uniform(0.0, 1.0);
    steps.push_back({std::min(a, b), std::max(a, b), rng.uniform(-1.0, 1.0)});
  }
  const double amp = rng.uniform(0.0, 0.5);
  const double freq = static_cast<double>(1 + rng.index(4));
  const double phase = rng.uniform(0.0, 2.0 * std::numbers::pi);
  const double floor = 0.25 / static_cast<double>(n);
  return sample(dim, n, [&](double x, double y) {
    const double d = std::max(distance(dim, x, y, cx, cy), floor);
    double s = -alpha * std::log(d);
    for (const Step& st : steps) {
      if (x >= st.lo && x < st.hi) s += st.height;
    }
    s += amp * std::sin(2.0 * std::numbers::pi * freq * (x + y) + phase);
    return s;
  });
}

GridFunction plane_2d(std::uint64_t seed, std::size_t n) {
  Rng rng(seed);
  const double a = rng.uniform(-2.0, 2.0);
  const double b = rng.uniform(-2.0, 2.0);
  return sample(2, n, [&](double x, double y) { return a * x + b * y; });
}

void check_grid_args(std::string_view family, std::size_t size, int dim) {
  if (size < 1) throw DomainError(std::string(family) + ": size must be >= 1");
  if (dim != 1 && dim != 2) throw DomainError(std::string(family) + ": dim must be 1 or 2");
}

}  // namespace

std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t trial) noexcept {
  // splitmix64 finalizer over a combination of both indices.
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (trial + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

const std::vector<std::string>& family_names() {
  static const std::vector<std::string> names = {
      "random-step", "indicator",       "log-singularity", "tent",
      "random-lipschitz", "random-bmo-grid", "plane-2d"};
  return names;
}

bool is_family(std::string_view name) {
  const auto& names = family_names();
  return std::find(names.begin(), names.end(), name) != names.end();
}

bool is_grid_family(std::string_view name) {
  return is_family(name) && name != "random-step" && name != "indicator";
}

StepFunction generate_step(std::string_view family, std::uint64_t seed, std::size_t size) {
  if (family == "random-step") return random_step(seed, size);
  if (family == "indicator") return StepFunction({{1.0, 1.0}});
  if (is_grid_family(family)) return to_step(generate_grid(family, seed, size));
  throw DomainError("unknown family '" + std::string(family) + "'");
}

GridFunction generate_grid(std::string_view family, std::uint64_t seed, std::size_t size,
                           int dim) {
  if (!is_grid_family(family)) {
    throw DomainError("family '" + std::string(family) + "' does not produce a grid");
  }
  check_grid_args(family, size, dim);
  if (family == "log-singularity") {
    return sample(dim, size, [dim](double x, double y) {
      return -std::log(distance(dim, x, y, 0.0, 0.0));
    });
  }
  if (family == "tent") {
    return sample(dim, size, [dim](double x, double y) {
      return std::max(0.25 - distance(dim, x, y, 0.5, 0.5), 0.0);
    });
  }
  if (family == "random-lipschitz") return random_lipschitz(seed, size, dim);
  if (family == "random-bmo-grid") return random_bmo_grid(seed, size, dim);
  return plane_2d(seed, size);
}

Generated generate(std::string_view family, std::uint64_t seed, std::size_t size, int dim) {
  if (!is_family(family)) throw DomainError("unknown family '" + std::string(family) + "'");
  if (is_grid_family(family)) return generate_grid(family, seed, size, dim);
  return generate_step(family, seed, size);
}

}  // namespace oscillatk
