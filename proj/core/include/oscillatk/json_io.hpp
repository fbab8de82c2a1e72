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

#ifndef OSCILLATK_JSON_IO_HPP
#define OSCILLATK_JSON_IO_HPP

#include <stdexcept>
#include <string>
#include <string_view>

#include "json.hpp"
#include "oscillatk/cube_grid.hpp"
#include "oscillatk/families.hpp"
#include "oscillatk/inequality_lab.hpp"
#include "oscillatk/kcalc.hpp"
#include "oscillatk/norms.hpp"
#include "oscillatk/step_measure.hpp"

namespace oscillatk {

using Json = nlohmann::json;

/// Malformed JSON or a document of the wrong shape.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Json parse_json(std::string_view text);
/// Doubles print in shortest round-trip form, so dump -> parse is bit-exact.
std::string dump(const Json& j, int indent = 2);

/// Finite values as numbers; inf, -inf and nan as the strings "inf", "-inf",
/// "nan".
Json encode_double(double v);
double decode_double(const Json& j);

/// {"atoms": [[value, mass], ...]}
Json to_json(const StepFunction& f);
StepFunction step_from_json(const Json& j);

/// {"dim": n, "n_side": N, "h": h, "values": [...]}, row-major in 2-D.
Json to_json(const GridFunction& f);
GridFunction grid_from_json(const Json& j);

/// Either of the two above, picked by the presence of "atoms".
Generated function_from_json(const Json& j);
Json to_json(const Generated& g);

/// {"breakpoints": [...], "values": [...]}
Json to_json(const DecreasingStep& g);
/// {"breakpoints": [...], "values": [...], "terminal_slope": s}
Json to_json(const ConcaveCurve& k);

/// {"space": ..., "p": ..., "q": ...}
NormRequest norm_request_from_json(const Json& j);

Json to_json(const ParamGrid& g);
ParamGrid param_grid_from_json(const Json& j);

Json to_json(const CheckReport& r);
CheckReport report_from_json(const Json& j);

Json to_json(const SuiteSummary& s);
SuiteSummary summary_from_json(const Json& j);

}  // namespace oscillatk

#endif  // OSCILLATK_JSON_IO_HPP
