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

#include <chrono>

#include "lab_internal.hpp"

namespace oscillatk {

namespace {

constexpr double kSchedule[] = {0.5, 0.1, 0.02};

// Flat coordinate view of a step function (value, mass pairs) or grid values.
std::vector<double> coordinates(const Generated& g) {
  if (const auto* s = std::get_if<StepFunction>(&g)) {
    std::vector<double> x;
    for (const Atom& a : s->atoms()) {
      x.push_back(a.value);
      x.push_back(a.mass);
    }
    return x;
  }
  const auto v = std::get<GridFunction>(g).values();
  return {v.begin(), v.end()};
}

Generated rebuild(const Generated& like, const std::vector<double>& x) {
  if (std::holds_alternative<StepFunction>(like)) {
    std::vector<Atom> atoms;
    for (std::size_t i = 0; i + 1 < x.size(); i += 2) atoms.push_back({x[i], x[i + 1]});
    return StepFunction(std::move(atoms));
  }
  return std::get<GridFunction>(like).with_values(x);
}

bool is_mass(const Generated& like, std::size_t j) {
  return std::holds_alternative<StepFunction>(like) && j % 2 == 1;
}

}  // namespace

CheckReport probe_sharpness(std::string_view name, const ParamGrid& params, std::size_t budget,
                            std::uint64_t seed) {
  const auto start = std::chrono::steady_clock::now();
  const lab::CheckDef& def = lab::definition(name);
  const CheckInfo& info = def.info;
  if (budget < 1) throw DomainError("probe_sharpness: budget must be >= 1");
  const ParamGrid grid = lab::resolve_params(params, info.defaults);
  const std::string& family = info.default_family;
  const bool on_grid = is_grid_family(family);
  const int dim = on_grid ? grid.dims.front() : 1;
  const std::size_t size = on_grid ? 32 : 6;

  std::size_t evals = 0;
  auto objective = [&](const Generated& g, std::size_t restart) {
    ++evals;
    lab::TrialContext ctx{restart, trial_seed(seed, restart), family, size, dim,
                          info.default_tolerance};
    try {
      const lab::Evaluation e = def.evaluate(g, grid, ctx);
      if (e.divergent || std::isnan(e.ratio)) return -lab::kInfinity;
      return e.ratio;
    } catch (const DomainError&) {
      return -lab::kInfinity;
    }
  };

  Rng rng(seed);
  double best = -lab::kInfinity;
  std::optional<Generated> best_fn;
  std::size_t best_restart = 0;
  std::size_t restart = 0;
  while (evals < budget) {
    Generated current = lab::trial_function(family, trial_seed(seed, restart), size, dim);
    std::vector<double> x = coordinates(current);
    double value = objective(current, restart);
    if (value > best || !best_fn) {
      best = value;
      best_fn = current;
      best_restart = restart;
    }
    for (double delta : kSchedule) {
      bool improved = true;
      while (improved && evals < budget) {
        improved = false;
        for (std::size_t j = 0; j < x.size() && evals < budget; ++j) {
          const std::size_t c = (j + rng.index(x.size())) % x.size();
          for (double sign : {1.0, -1.0}) {
            if (evals >= budget) break;
            std::vector<double> y = x;
            y[c] = y[c] != 0.0 ? y[c] * (1.0 + sign * delta) : sign * delta;
            if (is_mass(current, c) && !(y[c] > 0.0)) continue;
            Generated candidate = rebuild(current, y);
            const double r = objective(candidate, restart);
            if (r > value) {
              value = r;
              x = std::move(y);
              current = std::move(candidate);
              improved = true;
              if (value > best) {
                best = value;
                best_fn = current;
                best_restart = restart;
              }
              break;
            }
          }
        }
      }
    }
    ++restart;
  }

  CheckReport report;
  report.name = info.name;
  report.mode = info.mode;
  report.params = grid;
  report.trials = restart;
  report.tolerance = info.default_tolerance;
  report.max_ratio = best;
  report.observed_constant = best;
  report.witness.seed = trial_seed(seed, best_restart);
  report.witness.family = family;
  report.witness.size = size;
  report.witness.dim = dim;
  report.witness.trial = best_restart;
  report.witness.function = best_fn;
  if (info.mode == CheckMode::exact_constant) {
    report.pass = std::isfinite(best) && best <= 1.0 + info.default_tolerance;
  } else {
    report.pass = std::isfinite(best);
  }
  report.note = "probe: " + std::to_string(evals) + " evaluations, " + std::to_string(restart) +
                " restarts";
  const auto stop = std::chrono::steady_clock::now();
  report.runtime_ms = std::chrono::duration<double, std::milli>(stop - start).count();
  return report;
}

}  // namespace oscillatk
