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

#ifndef OSCILLATK_TOOLS_CLI_HPP
#define OSCILLATK_TOOLS_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace oscillatk::cli {

/// Exit codes of the oscillatk command.
enum ExitCode : int {
  kOk = 0,
  kParseError = 2,  // malformed arguments or input, unknown check/op name
  kInvalid = 3,     // divergent functional or invalid request
  kCheckFailed = 4,  // verify: at least one check failed
};

/// Runs the command line `args` (without the program name). Results go to
/// --out when given, else to `out`; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace oscillatk::cli

#endif  // OSCILLATK_TOOLS_CLI_HPP
