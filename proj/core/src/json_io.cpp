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

#include "oscillatk/json_io.hpp"

#include <cmath>
#include <limits>

namespace oscillatk {

namespace {

template <class Fn>
auto guarded(const char* what, Fn&& fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const Json::exception& e) {
    throw ParseError(std::string(what) + ": " + e.what());
  }
}

Json encode_doubles(std::span<const double> xs) {
  Json arr = Json::array();
  for (double x : xs) arr.push_back(encode_double(x));
  return arr;
}

std::vector<double> decode_doubles(const Json& j) {
  if (!j.is_array()) throw ParseError("expected an array of numbers");
  std::vector<double> out;
  out.reserve(j.size());
  for (const Json& x : j) out.push_back(decode_double(x));
  return out;
}

Json witness_to_json(const Witness& w) {
  Json j = {{"seed", w.seed},
            {"family", w.family},
            {"size", w.size},
            {"dim", w.dim},
            {"trial", w.trial},
            {"theta", encode_double(w.theta)},
            {"q", encode_double(w.q)},
            {"p", encode_double(w.p)}};
  if (w.function) j["function"] = to_json(*w.function);
  return j;
}

Witness witness_from_json(const Json& j) {
  Witness w;
  w.seed = j.at("seed").get<std::uint64_t>();
  w.family = j.at("family").get<std::string>();
  w.size = j.at("size").get<std::size_t>();
  w.dim = j.value("dim", 1);
  w.trial = j.value("trial", std::size_t{0});
  w.theta = j.contains("theta") ? decode_double(j.at("theta")) : 0.0;
  w.q = j.contains("q") ? decode_double(j.at("q")) : 0.0;
  w.p = j.contains("p") ? decode_double(j.at("p")) : 0.0;
  if (j.contains("function")) w.function = function_from_json(j.at("function"));
  return w;
}

CheckMode mode_from_string(const std::string& s) {
  if (s == "exact-constant") return CheckMode::exact_constant;
  if (s == "observed-constant") return CheckMode::observed_constant;
  throw ParseError("unknown check mode '" + s + "'");
}

}  // namespace

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    throw ParseError(e.what());
  }
}

std::string dump(const Json& j, int indent) { return j.dump(indent); }

Json encode_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  return v;
}

double decode_double(const Json& j) {
  if (j.is_number()) return j.get<double>();
  if (j.is_string()) {
    const auto& s = j.get_ref<const std::string&>();
    if (s == "inf") return std::numeric_limits<double>::infinity();
    if (s == "-inf") return -std::numeric_limits<double>::infinity();
    if (s == "nan") return std::numeric_limits<double>::quiet_NaN();
  }
  throw ParseError("expected a number, got " + j.dump());
}

Json to_json(const StepFunction& f) {
  Json atoms = Json::array();
  for (const Atom& a : f.atoms()) atoms.push_back({a.value, a.mass});
  return {{"atoms", atoms}};
}

StepFunction step_from_json(const Json& j) {
  return guarded("step function", [&] {
    const Json& atoms = j.at("atoms");
    if (!atoms.is_array()) throw ParseError("\"atoms\" must be an array");
    std::vector<Atom> out;
    for (const Json& a : atoms) {
      if (!a.is_array() || a.size() != 2) throw ParseError("each atom is [value, mass]");
      out.push_back({decode_double(a[0]), decode_double(a[1])});
    }
    return StepFunction(std::move(out));
  });
}

Json to_json(const GridFunction& f) {
  return {{"dim", f.dim()},
          {"n_side", f.n_side()},
          {"h", f.h()},
          {"values", encode_doubles(f.values())}};
}

GridFunction grid_from_json(const Json& j) {
  return guarded("grid function", [&] {
    return GridFunction(j.at("dim").get<int>(), j.at("n_side").get<std::size_t>(),
                        decode_double(j.at("h")), decode_doubles(j.at("values")));
  });
}

Generated function_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("expected a JSON object");
  if (j.contains("atoms")) return step_from_json(j);
  if (j.contains("values")) return grid_from_json(j);
  throw ParseError("expected \"atoms\" (step function) or \"values\" (grid function)");
}

Json to_json(const Generated& g) {
  return std::visit([](const auto& f) { return to_json(f); }, g);
}

Json to_json(const DecreasingStep& g) {
  return {{"breakpoints", encode_doubles(g.breakpoints())},
          {"values", encode_doubles(g.values())}};
}

Json to_json(const ConcaveCurve& k) {
  return {{"breakpoints", encode_doubles(k.breakpoints())},
          {"values", encode_doubles(k.values())},
          {"terminal_slope", encode_double(k.terminal_slope())}};
}

NormRequest norm_request_from_json(const Json& j) {
  return guarded("norm request", [&] {
    NormRequest r;
    r.space = j.at("space").get<std::string>();
    if (j.contains("p")) r.p = decode_double(j.at("p"));
    if (j.contains("q")) r.q = decode_double(j.at("q"));
    return r;
  });
}

Json to_json(const ParamGrid& g) {
  return {{"theta", encode_doubles(g.theta)},
          {"q", encode_doubles(g.q)},
          {"p", encode_doubles(g.p)},
          {"dims", g.dims}};
}

ParamGrid param_grid_from_json(const Json& j) {
  return guarded("parameter grid", [&] {
    ParamGrid g;
    if (j.contains("theta")) g.theta = decode_doubles(j.at("theta"));
    if (j.contains("q")) g.q = decode_doubles(j.at("q"));
    if (j.contains("p")) g.p = decode_doubles(j.at("p"));
    if (j.contains("dims")) g.dims = j.at("dims").get<std::vector<int>>();
    return g;
  });
}

Json to_json(const CheckReport& r) {
  Json j = {{"name", r.name},
            {"mode", to_string(r.mode)},
            {"params", to_json(r.params)},
            {"trials", r.trials},
            {"tolerance", encode_double(r.tolerance)},
            {"max_ratio", encode_double(r.max_ratio)},
            {"observed_constant", encode_double(r.observed_constant)},
            {"witness", witness_to_json(r.witness)},
            {"pass", r.pass},
            {"runtime_ms", encode_double(r.runtime_ms)},
            {"note", r.note}};
  if (r.refinement) {
    const Refinement& f = *r.refinement;
    j["refinement"] = {{"base", f.base},
                       {"refined", f.refined},
                       {"base_constant", encode_double(f.base_constant)},
                       {"refined_constant", encode_double(f.refined_constant)},
                       {"drift", encode_double(f.drift)},
                       {"threshold", encode_double(f.threshold)},
                       {"stable", f.stable}};
  }
  return j;
}

CheckReport report_from_json(const Json& j) {
  return guarded("check report", [&] {
    CheckReport r;
    r.name = j.at("name").get<std::string>();
    r.mode = mode_from_string(j.at("mode").get<std::string>());
    r.params = param_grid_from_json(j.at("params"));
    r.trials = j.at("trials").get<std::size_t>();
    r.tolerance = decode_double(j.at("tolerance"));
    r.max_ratio = decode_double(j.at("max_ratio"));
    r.observed_constant = decode_double(j.at("observed_constant"));
    r.witness = witness_from_json(j.at("witness"));
    r.pass = j.at("pass").get<bool>();
    r.runtime_ms = decode_double(j.at("runtime_ms"));
    r.note = j.value("note", std::string());
    if (j.contains("refinement")) {
      const Json& f = j.at("refinement");
      Refinement ref;
      ref.base = f.at("base").get<std::size_t>();
      ref.refined = f.at("refined").get<std::size_t>();
      ref.base_constant = decode_double(f.at("base_constant"));
      ref.refined_constant = decode_double(f.at("refined_constant"));
      ref.drift = decode_double(f.at("drift"));
      ref.threshold = decode_double(f.at("threshold"));
      ref.stable = f.at("stable").get<bool>();
      r.refinement = ref;
    }
    return r;
  });
}

Json to_json(const SuiteSummary& s) {
  Json reports = Json::array();
  std::size_t passed = 0;
  for (const CheckReport& r : s.reports) {
    reports.push_back(to_json(r));
    passed += r.pass ? 1 : 0;
  }
  return {{"seed", s.seed},
          {"trials", s.trials},
          {"all_pass", s.all_pass},
          {"passed", passed},
          {"count", s.reports.size()},
          {"runtime_ms", encode_double(s.runtime_ms)},
          {"reports", reports}};
}

SuiteSummary summary_from_json(const Json& j) {
  return guarded("suite summary", [&] {
    SuiteSummary s;
    s.seed = j.at("seed").get<std::uint64_t>();
    s.trials = j.at("trials").get<std::size_t>();
    s.all_pass = j.at("all_pass").get<bool>();
    s.runtime_ms = decode_double(j.at("runtime_ms"));
    for (const Json& r : j.at("reports")) s.reports.push_back(report_from_json(r));
    return s;
  });
}

}  // namespace oscillatk
