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
#include <cstdlib>
#include <map>

#include "lab_internal.hpp"

namespace oscillatk {

namespace lab {

namespace {

const std::vector<std::string>& registry_order() {
  static const std::vector<std::string> order = {
      "reverse-hardy", "hardy-osc",     "lemma-K",      "j-identity",  "chen-zhu",
      "john-nirenberg", "bds",          "teomarkao",    "l1-cube-bound", "osc-doubling",
      "combinaos",     "good-lambda",   "kurtz-lp",     "sobolev-osc", "sobolev-int",
      "product",       "berkovich",     "equiva",       "expL-delta",  "jn-exp"};
  return order;
}

std::vector<CheckDef> build_definitions() {
  std::vector<CheckDef> defs;
  register_rearrangement_checks(defs);
  register_interpolation_checks(defs);
  register_bmo_checks(defs);
  register_sobolev_checks(defs);
  std::vector<CheckDef> ordered;
  for (const std::string& name : registry_order()) {
    for (CheckDef& d : defs) {
      if (d.info.name == name) ordered.push_back(std::move(d));
    }
  }
  return ordered;
}

struct TrialOutcome {
  Evaluation eval;
  Witness witness;
};

struct PassResult {
  double max_ratio = 0.0;
  Witness witness;
  bool conditions_ok = true;
  bool divergent = false;
  std::string note;
};

void append_note(std::string& note, const std::string& text) {
  if (text.empty() || note.size() > 400) return;
  if (!note.empty()) note += "; ";
  note += text;
}

PassResult run_pass(const CheckDef& def, const ParamGrid& params, const std::string& family,
                    std::uint64_t seed, std::size_t size, std::size_t trials, double tolerance) {
  const bool grid = is_grid_family(family);
  const std::vector<int> dims = grid ? params.dims : std::vector<int>{1};
  const std::function<TrialOutcome(std::size_t)> one = [&](std::size_t t) {
    TrialOutcome best;
    bool first = true;
    for (int dim : dims) {
      const std::string fam = def.family_for ? def.family_for(t, family) : family;
      const std::size_t n = is_grid_family(fam) ? side_for_dim(size, dim) : size;
      const int fdim = is_grid_family(fam) ? (fam == "plane-2d" ? 2 : dim) : 1;
      TrialContext ctx{t, trial_seed(seed, t), fam, n, fdim, tolerance};
      const Generated g = trial_function(fam, ctx.seed, n, fdim);
      Evaluation e = def.evaluate(g, params, ctx);
      if (std::isnan(e.ratio)) {
        e.divergent = true;
        append_note(e.note, "ratio is NaN");
      }
      Witness w{ctx.seed, fam, n, fdim, t, e.worst.theta, e.worst.q, e.worst.p, std::nullopt};
      if (first || e.ratio > best.eval.ratio) {
        const bool cond = first ? e.condition_ok : best.eval.condition_ok && e.condition_ok;
        const bool div = first ? e.divergent : best.eval.divergent || e.divergent;
        std::string note = first ? std::string() : best.eval.note;
        append_note(note, e.note);
        std::vector<double> profile = first ? std::vector<double>() : best.eval.profile;
        profile.insert(profile.end(), e.profile.begin(), e.profile.end());
        best.eval = std::move(e);
        best.eval.condition_ok = cond;
        best.eval.divergent = div;
        best.eval.note = std::move(note);
        best.eval.profile = std::move(profile);
        best.witness = w;
      } else {
        best.eval.condition_ok = best.eval.condition_ok && e.condition_ok;
        best.eval.divergent = best.eval.divergent || e.divergent;
        append_note(best.eval.note, e.note);
        best.eval.profile.insert(best.eval.profile.end(), e.profile.begin(), e.profile.end());
      }
      first = false;
    }
    return best;
  };
  const std::vector<TrialOutcome> results = parallel_map(trials, one);

  PassResult out;
  std::vector<Evaluation> evals;
  evals.reserve(results.size());
  for (std::size_t t = 0; t < results.size(); ++t) {
    const TrialOutcome& r = results[t];
    if (t == 0 || r.eval.ratio > out.max_ratio) {
      out.max_ratio = r.eval.ratio;
      out.witness = r.witness;
    }
    out.conditions_ok = out.conditions_ok && r.eval.condition_ok;
    out.divergent = out.divergent || r.eval.divergent;
    if (!r.eval.condition_ok || r.eval.divergent) {
      append_note(out.note, "trial " + std::to_string(t) + ": " + r.eval.note);
    }
    evals.push_back(r.eval);
  }
  if (def.aggregate) {
    const AggregateVerdict v = def.aggregate(evals, params);
    out.conditions_ok = out.conditions_ok && v.ok;
    append_note(out.note, v.note);
  }
  return out;
}

}  // namespace

const std::vector<CheckDef>& definitions() {
  static const std::vector<CheckDef> defs = build_definitions();
  return defs;
}

const CheckDef& definition(std::string_view name) {
  for (const CheckDef& d : definitions()) {
    if (d.info.name == name) return d;
  }
  throw DomainError("unknown check '" + std::string(name) + "'");
}

ParamGrid resolve_params(const ParamGrid& given, const ParamGrid& defaults) {
  ParamGrid out = given;
  if (out.theta.empty()) out.theta = defaults.theta;
  if (out.q.empty()) out.q = defaults.q;
  if (out.p.empty()) out.p = defaults.p;
  if (out.dims.empty()) out.dims = defaults.dims.empty() ? std::vector<int>{1} : defaults.dims;
  for (int d : out.dims) {
    if (d != 1 && d != 2) throw DomainError("dims must be 1 or 2");
  }
  return out;
}

std::vector<Point> points(const ParamGrid& grid) {
  const std::vector<double> none{kNaN};
  const auto& ts = grid.theta.empty() ? none : grid.theta;
  const auto& qs = grid.q.empty() ? none : grid.q;
  const auto& ps = grid.p.empty() ? none : grid.p;
  std::vector<Point> out;
  out.reserve(ts.size() * qs.size() * ps.size());
  for (double t : ts) {
    for (double q : qs) {
      for (double p : ps) out.push_back({t, q, p});
    }
  }
  return out;
}

Evaluation max_over_points(const ParamGrid& grid, const PointRatio& fn) {
  Evaluation e;
  bool first = true;
  for (const Point& pt : points(grid)) {
    double r;
    try {
      const Outcome o = fn(pt);
      if (!o.is_ok()) {
        e.divergent = true;
        append_note(e.note, o.what());
        r = kInfinity;
      } else {
        r = o.value();
      }
    } catch (const NotANumberError& err) {
      e.divergent = true;
      append_note(e.note, err.what());
      r = kInfinity;
    }
    e.profile.push_back(r);
    if (first || r > e.ratio || std::isnan(r)) {
      e.ratio = r;
      e.worst = pt;
    }
    first = false;
  }
  return e;
}

StepFunction as_step(const Generated& g) {
  if (const auto* s = std::get_if<StepFunction>(&g)) return *s;
  return to_step(std::get<GridFunction>(g));
}

const GridFunction& as_grid(const Generated& g, const std::string& who) {
  if (const auto* grid = std::get_if<GridFunction>(&g)) return *grid;
  throw DomainError(who + " needs a grid family");
}

Generated trial_function(const std::string& family, std::uint64_t seed, std::size_t size,
                         int dim) {
  return generate(family, seed, size, dim);
}

std::size_t side_for_dim(std::size_t size, int dim) {
  return dim == 1 ? size : std::max<std::size_t>(8, size / 8);
}

std::vector<double> geometric_grid(double lo, double hi, std::size_t n) {
  std::vector<double> out(n);
  if (n == 1) {
    out[0] = lo;
    return out;
  }
  const double step = std::log(hi / lo) / static_cast<double>(n - 1);
  for (std::size_t i = 0; i < n; ++i) out[i] = lo * std::exp(step * static_cast<double>(i));
  out.back() = hi;
  return out;
}

}  // namespace lab

const char* to_string(CheckMode mode) noexcept {
  return mode == CheckMode::exact_constant ? "exact-constant" : "observed-constant";
}

bool CheckReport::same_result(const CheckReport& o) const {
  auto same_double = [](double a, double b) {
    return a == b || (std::isnan(a) && std::isnan(b));
  };
  // Unused witness parameters are NaN.
  const Witness& w = witness;
  const Witness& ow = o.witness;
  const bool same_witness = w.seed == ow.seed && w.family == ow.family && w.size == ow.size &&
                            w.dim == ow.dim && w.trial == ow.trial &&
                            same_double(w.theta, ow.theta) && same_double(w.q, ow.q) &&
                            same_double(w.p, ow.p) && w.function == ow.function;
  return name == o.name && mode == o.mode && params == o.params && trials == o.trials &&
         same_double(tolerance, o.tolerance) && same_double(max_ratio, o.max_ratio) &&
         same_double(observed_constant, o.observed_constant) && same_witness &&
         pass == o.pass && refinement == o.refinement && note == o.note;
}

const std::vector<CheckInfo>& check_registry() {
  static const std::vector<CheckInfo> infos = [] {
    std::vector<CheckInfo> out;
    for (const lab::CheckDef& d : lab::definitions()) out.push_back(d.info);
    return out;
  }();
  return infos;
}

const CheckInfo* find_check(std::string_view name) {
  for (const CheckInfo& info : check_registry()) {
    if (info.name == name) return &info;
  }
  return nullptr;
}

std::size_t lab_threads() {
  if (const char* env = std::getenv("OSCILLATK_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && v >= 1) return static_cast<std::size_t>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

CheckReport run_check(const CheckSpec& spec) {
  const auto start = std::chrono::steady_clock::now();
  const lab::CheckDef& def = lab::definition(spec.name);
  const CheckInfo& info = def.info;
  if (spec.trials < 1) throw DomainError("run_check: trials must be >= 1");
  const std::string family = spec.family.empty() ? info.default_family : spec.family;
  if (!is_family(family)) throw DomainError("unknown family '" + family + "'");
  if (def.needs_grid && !is_grid_family(family)) {
    throw DomainError(info.name + " needs a grid family, got '" + family + "'");
  }
  const ParamGrid params = lab::resolve_params(spec.params, info.defaults);
  const double tol = spec.tolerance.value_or(info.default_tolerance);
  const std::size_t size = spec.size != 0 ? spec.size : info.default_size;

  const lab::PassResult base =
      lab::run_pass(def, params, family, spec.seed, size, spec.trials, tol);

  CheckReport report;
  report.name = info.name;
  report.mode = info.mode;
  report.params = params;
  report.trials = spec.trials;
  report.tolerance = tol;
  report.max_ratio = base.max_ratio;
  report.observed_constant = base.max_ratio;
  report.witness = base.witness;
  report.note = base.note;
  const bool healthy = base.conditions_ok && !base.divergent;

  if (info.mode == CheckMode::exact_constant) {
    report.pass = healthy && base.max_ratio <= 1.0 + tol;
  } else {
    const bool by_size = is_grid_family(family);
    const std::size_t refined_size = by_size ? 2 * size : size;
    const std::size_t refined_trials = by_size ? spec.trials : 2 * spec.trials;
    const lab::PassResult fine =
        lab::run_pass(def, params, family, spec.seed, refined_size, refined_trials, tol);
    Refinement ref;
    ref.base = by_size ? size : spec.trials;
    ref.refined = by_size ? refined_size : refined_trials;
    ref.base_constant = base.max_ratio;
    ref.refined_constant = fine.max_ratio;
    ref.threshold = info.drift_threshold;
    if (base.max_ratio > 0.0) {
      ref.drift = std::abs(fine.max_ratio - base.max_ratio) / base.max_ratio;
    } else {
      ref.drift = fine.max_ratio == 0.0 ? 0.0 : lab::kInfinity;
    }
    if (std::isnan(ref.drift)) ref.drift = lab::kInfinity;
    ref.stable = std::isfinite(base.max_ratio) && std::isfinite(fine.max_ratio) &&
                 ref.drift < ref.threshold;
    if (!fine.conditions_ok || fine.divergent) lab::append_note(report.note, "refined: " + fine.note);
    report.pass = healthy && fine.conditions_ok && !fine.divergent && ref.stable;
    report.refinement = ref;
  }
  const auto stop = std::chrono::steady_clock::now();
  report.runtime_ms = std::chrono::duration<double, std::milli>(stop - start).count();
  return report;
}

SuiteSummary run_suite(const std::vector<std::string>& names, std::size_t trials,
                       std::uint64_t seed) {
  const auto start = std::chrono::steady_clock::now();
  std::vector<std::string> selected = names;
  if (selected.empty()) {
    for (const CheckInfo& info : check_registry()) selected.push_back(info.name);
  }
  for (const std::string& n : selected) lab::definition(n);
  SuiteSummary summary;
  summary.seed = seed;
  summary.trials = trials;
  summary.all_pass = true;
  for (const std::string& n : selected) {
    CheckSpec spec;
    spec.name = n;
    spec.seed = seed;
    spec.trials = trials;
    summary.reports.push_back(run_check(spec));
    summary.all_pass = summary.all_pass && summary.reports.back().pass;
  }
  const auto stop = std::chrono::steady_clock::now();
  summary.runtime_ms = std::chrono::duration<double, std::milli>(stop - start).count();
  return summary;
}

}  // namespace oscillatk
