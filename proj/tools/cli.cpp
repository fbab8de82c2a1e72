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

#include "cli.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "oscillatk/cube_grid.hpp"
#include "oscillatk/inequality_lab.hpp"
#include "oscillatk/json_io.hpp"
#include "oscillatk/kcalc.hpp"
#include "oscillatk/norms.hpp"

namespace oscillatk::cli {

namespace {

constexpr std::size_t kCurvePoints = 512;

// An error whose exit code is already decided.
struct Failure {
  int code;
  std::string message;
};

struct Options {
  std::string input;
  std::string out;
  std::vector<std::string> ops;
  std::vector<std::string> suite;
  std::vector<std::string> names;
  std::size_t trials = 50;
  std::uint64_t seed = 0;
  std::size_t budget = 1000;
  std::vector<double> theta;
  std::vector<double> q;
  std::vector<double> p;
  std::optional<double> tolerance;
  std::size_t size = 0;
  std::vector<int> dims;
  std::string family;
};

std::string format_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Failure{kParseError, "cannot read input file '" + path + "'"};
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void emit(const Options& opt, const std::string& text, std::ostream& out) {
  if (opt.out.empty()) {
    out << text;
    return;
  }
  std::ofstream file(opt.out, std::ios::binary);
  if (!file) throw Failure{kParseError, "cannot write output file '" + opt.out + "'"};
  file << text;
}

Json load_json(const std::string& path) {
  try {
    return parse_json(read_file(path));
  } catch (const ParseError& e) {
    throw Failure{kParseError, std::string("malformed JSON in '") + path + "': " + e.what()};
  }
}

double first_or(const std::vector<double>& xs, double fallback) {
  return xs.empty() ? fallback : xs.front();
}

std::vector<double> log_grid(double support) {
  const double hi = support > 0.0 ? support : 1.0;
  std::vector<double> ts(kCurvePoints);
  const double lo = hi * 1e-6;
  const double step = std::log(hi / lo) / static_cast<double>(kCurvePoints - 1);
  for (std::size_t i = 0; i < kCurvePoints; ++i) {
    ts[i] = lo * std::exp(step * static_cast<double>(i));
  }
  ts.back() = hi;
  return ts;
}

double unwrap(const Outcome& o, const std::string& functional) {
  if (!o.is_ok()) {
    throw Failure{kInvalid, functional + ": " + to_string(o.status()) + " (" + o.what() + ")"};
  }
  return o.value();
}

const GridFunction& need_grid(const Generated& f, const std::string& op) {
  if (const auto* g = std::get_if<GridFunction>(&f)) return *g;
  throw Failure{kInvalid, op + ": needs a grid function input"};
}

StepFunction lab_step(const Generated& f) {
  if (const auto* s = std::get_if<StepFunction>(&f)) return *s;
  return to_step(std::get<GridFunction>(f));
}

Json sampled(const DecreasingStep& g, double (*fn)(const DecreasingStep&, double)) {
  Json ts = Json::array();
  Json vs = Json::array();
  for (double t : log_grid(g.support())) {
    ts.push_back(t);
    vs.push_back(encode_double(fn(g, t)));
  }
  return {{"t", ts}, {"value", vs}};
}

std::string key_for(std::string op) {
  std::replace(op.begin(), op.end(), '-', '_');
  return op;
}

const std::vector<std::string>& known_ops() {
  static const std::vector<std::string> ops = {
      "rearrange", "double-star", "oscillation", "linf-inf",  "lorentz",    "lorentz-inf",
      "lebesgue",  "expL",        "delta",       "k-curve",   "interp",     "gagliardo1",
      "gagliardo2", "sharp",      "bmo",         "gradient"};
  return ops;
}

int cmd_compute(const Options& opt, std::ostream& out) {
  if (opt.input.empty()) throw Failure{kParseError, "compute: --input is required"};
  for (const std::string& op : opt.ops) {
    const auto& ops = known_ops();
    if (std::find(ops.begin(), ops.end(), op) == ops.end()) {
      throw Failure{kParseError, "compute: unknown op '" + op + "'"};
    }
  }
  const Json doc = load_json(opt.input);
  Generated f = [&]() -> Generated {
    try {
      return function_from_json(doc);
    } catch (const ParseError& e) {
      throw Failure{kParseError, std::string("compute: ") + e.what()};
    } catch (const DomainError& e) {
      throw Failure{kParseError, std::string("compute: invalid function: ") + e.what()};
    }
  }();
  const StepFunction step = lab_step(f);
  const double space_measure = std::holds_alternative<GridFunction>(f)
                                   ? std::get<GridFunction>(f).cube_measure()
                                   : step.total_mass();
  const DecreasingStep g = rearrange(step);
  const double theta = first_or(opt.theta, 0.5);
  const double q = first_or(opt.q, 2.0);

  Json result = Json::object();
  for (const std::string& op : opt.ops) {
    const std::string key = key_for(op);
    try {
      if (op == "rearrange") {
        result[key] = to_json(g);
      } else if (op == "double-star") {
        result[key] = sampled(g, double_star);
      } else if (op == "oscillation") {
        result[key] = sampled(g, oscillation);
      } else if (op == "linf-inf") {
        result[key] = encode_double(linf_inf(g));
      } else if (op == "lorentz") {
        result[key] = encode_double(unwrap(lorentz_norm(g, {first_or(opt.p, 2.0), q}), op));
      } else if (op == "lorentz-inf") {
        result[key] = encode_double(unwrap(lorentz_inf_q(g, q), op));
      } else if (op == "lebesgue") {
        result[key] = encode_double(lebesgue_norm(g, first_or(opt.p, 2.0)));
      } else if (op == "expL") {
        result[key] = encode_double(luxemburg_exp_l(step, space_measure));
      } else if (op == "delta") {
        const std::vector<double> grid = opt.q.empty() ? default_delta_grid() : opt.q;
        result[key] = encode_double(unwrap(delta_extrapolation(g, grid), op));
      } else if (op == "k-curve") {
        result[key] = to_json(k_curve_l1_linf(g));
      } else if (op == "interp") {
        result[key] = encode_double(unwrap(interp_norm(k_curve_l1_linf(g), {theta, q}), op));
      } else if (op == "gagliardo1") {
        result[key] = encode_double(unwrap(gagliardo1_norm(k_curve_l1_linf(g), {theta, q}), op));
      } else if (op == "gagliardo2") {
        result[key] = encode_double(unwrap(gagliardo2_norm(k_curve_l1_linf(g), {theta, q}), op));
      } else if (op == "sharp") {
        result[key] = to_json(sharp_function(need_grid(f, op), first_or(opt.p, 1.0)));
      } else if (op == "bmo") {
        result[key] = encode_double(bmo_seminorm(need_grid(f, op), first_or(opt.p, 1.0)));
      } else if (op == "gradient") {
        result[key] = to_json(gradient_magnitude(need_grid(f, op)));
      }
    } catch (const DomainError& e) {
      throw Failure{kInvalid, op + ": " + e.what()};
    } catch (const NotANumberError& e) {
      throw Failure{kInvalid, op + ": " + e.what()};
    }
  }
  if (doc.contains("requests")) {
    Json answers = Json::array();
    for (const Json& rj : doc.at("requests")) {
      NormRequest req;
      try {
        req = norm_request_from_json(rj);
      } catch (const ParseError& e) {
        throw Failure{kParseError, e.what()};
      }
      double v;
      try {
        v = unwrap(evaluate_norm(req, step, g, space_measure), req.space);
      } catch (const DomainError& e) {
        throw Failure{kInvalid, req.space + ": " + e.what()};
      }
      answers.push_back({{"space", req.space},
                         {"p", encode_double(req.p)},
                         {"q", encode_double(req.q)},
                         {"value", encode_double(v)}});
    }
    result["requests"] = answers;
  }
  emit(opt, dump(result) + "\n", out);
  return kOk;
}

ParamGrid grid_from(const Options& opt) {
  ParamGrid grid;
  grid.theta = opt.theta;
  grid.q = opt.q;
  grid.p = opt.p;
  grid.dims = opt.dims;
  return grid;
}

std::vector<std::string> selected_checks(const Options& opt) {
  std::vector<std::string> names = opt.names;
  names.insert(names.end(), opt.suite.begin(), opt.suite.end());
  if (names.empty() || std::find(names.begin(), names.end(), "all") != names.end()) return {};
  for (const std::string& n : names) {
    if (!find_check(n)) throw Failure{kParseError, "unknown check '" + n + "'"};
  }
  return names;
}

int cmd_verify(const Options& opt, std::ostream& out, std::ostream& err) {
  if (opt.trials < 1) throw Failure{kParseError, "verify: --trials must be >= 1"};
  if (!opt.family.empty() && !is_family(opt.family)) {
    throw Failure{kParseError, "unknown family '" + opt.family + "'"};
  }
  std::vector<std::string> names = selected_checks(opt);
  if (names.empty()) {
    for (const CheckInfo& info : check_registry()) names.push_back(info.name);
  }
  SuiteSummary summary;
  summary.seed = opt.seed;
  summary.trials = opt.trials;
  summary.all_pass = true;
  const auto start = std::chrono::steady_clock::now();
  for (const std::string& n : names) {
    CheckSpec spec;
    spec.name = n;
    spec.seed = opt.seed;
    spec.trials = opt.trials;
    spec.params = grid_from(opt);
    spec.family = opt.family;
    spec.size = opt.size;
    spec.tolerance = opt.tolerance;
    CheckReport r;
    try {
      r = run_check(spec);
    } catch (const DomainError& e) {
      throw Failure{kInvalid, n + ": " + e.what()};
    }
    err << (r.pass ? "PASS " : "FAIL ") << r.name << "  max_ratio=" << format_double(r.max_ratio)
        << "  " << format_double(r.runtime_ms) << " ms\n";
    summary.all_pass = summary.all_pass && r.pass;
    summary.reports.push_back(std::move(r));
  }
  summary.runtime_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  emit(opt, dump(to_json(summary)) + "\n", out);
  return summary.all_pass ? kOk : kCheckFailed;
}

int cmd_probe(const Options& opt, std::ostream& out) {
  if (opt.names.size() != 1) throw Failure{kParseError, "probe: give exactly one check name"};
  const std::string& name = opt.names.front();
  if (!find_check(name)) throw Failure{kParseError, "unknown check '" + name + "'"};
  if (opt.budget < 1) throw Failure{kParseError, "probe: --budget must be >= 1"};
  CheckReport r;
  try {
    r = probe_sharpness(name, grid_from(opt), opt.budget, opt.seed);
  } catch (const DomainError& e) {
    throw Failure{kInvalid, name + ": " + e.what()};
  }
  emit(opt, dump(to_json(r)) + "\n", out);
  return kOk;
}

int cmd_report(const Options& opt, std::ostream& out) {
  if (opt.input.empty()) throw Failure{kParseError, "report: --input is required"};
  const Json doc = load_json(opt.input);
  std::ostringstream csv;
  if (doc.is_object() && doc.contains("reports")) {
    SuiteSummary s;
    try {
      s = summary_from_json(doc);
    } catch (const ParseError& e) {
      throw Failure{kParseError, std::string("report: ") + e.what()};
    }
    csv << "name,mode,pass,max_ratio,observed_constant,trials,runtime_ms\n";
    for (const CheckReport& r : s.reports) {
      csv << r.name << ',' << to_string(r.mode) << ',' << (r.pass ? "true" : "false") << ','
          << format_double(r.max_ratio) << ',' << format_double(r.observed_constant) << ','
          << r.trials << ',' << format_double(r.runtime_ms) << '\n';
    }
  } else {
    Generated f;
    try {
      f = function_from_json(doc);
    } catch (const ParseError& e) {
      throw Failure{kParseError, std::string("report: ") + e.what()};
    } catch (const DomainError& e) {
      throw Failure{kParseError, std::string("report: invalid function: ") + e.what()};
    }
    const DecreasingStep g = rearrange(lab_step(f));
    csv << "t,f_star,f_double_star,oscillation\n";
    for (double t : log_grid(g.support())) {
      csv << format_double(t) << ',' << format_double(g(t)) << ','
          << format_double(double_star(g, t)) << ',' << format_double(oscillation(g, t)) << '\n';
    }
  }
  emit(opt, csv.str(), out);
  return kOk;
}

void add_common(CLI::App* cmd, Options& opt) {
  cmd->add_option("--out", opt.out, "Output file (default: stdout)");
  cmd->add_option("--seed", opt.seed, "Random seed (default 0)");
  cmd->add_option("--theta", opt.theta, "Interpolation parameter(s) theta")->delimiter(',');
  cmd->add_option("--q", opt.q, "Exponent(s) q")->delimiter(',');
  cmd->add_option("--p", opt.p, "Exponent(s) p")->delimiter(',');
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options opt;
  CLI::App app{"oscillatk: rearrangement, interpolation and BMO functionals on step functions",
               "oscillatk"};
  app.require_subcommand(1);

  CLI::App* compute = app.add_subcommand("compute", "Compute functionals of a function");
  compute->add_option("--input", opt.input, "StepFunction or GridFunction JSON")->required();
  compute->add_option("--ops", opt.ops, "Comma-separated operations")->delimiter(',')->required();
  add_common(compute, opt);

  CLI::App* verify = app.add_subcommand("verify", "Run inequality checks");
  verify->add_option("names", opt.names, "Check names, or 'all'");
  verify->add_option("--suite", opt.suite, "Comma-separated check names, or 'all'")->delimiter(',');
  verify->add_option("--trials", opt.trials, "Trials per check");
  verify->add_option("--tolerance", opt.tolerance, "Override the check tolerance");
  verify->add_option("--size", opt.size, "Atom count or grid side");
  verify->add_option("--dim", opt.dims, "Grid dimension(s)")->delimiter(',');
  verify->add_option("--family", opt.family, "Function family");
  add_common(verify, opt);

  CLI::App* probe = app.add_subcommand("probe", "Search for a near-extremal witness");
  probe->add_option("names", opt.names, "Check name")->required();
  probe->add_option("--budget", opt.budget, "Ratio evaluations");
  add_common(probe, opt);

  CLI::App* report = app.add_subcommand("report", "CSV tables for plotting");
  report->add_option("--input", opt.input, "Function JSON or suite summary JSON")->required();
  report->add_option("--out", opt.out, "Output file (default: stdout)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kParseError;
  }

  try {
    if (*compute) return cmd_compute(opt, out);
    if (*verify) return cmd_verify(opt, out, err);
    if (*probe) return cmd_probe(opt, out);
    return cmd_report(opt, out);
  } catch (const Failure& f) {
    err << "error: " << f.message << "\n";
    return f.code;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kInvalid;
  }
}

}  // namespace oscillatk::cli
