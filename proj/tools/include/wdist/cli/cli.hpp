// Copyright 2026 The wdist Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef WDIST_CLI_CLI_HPP
#define WDIST_CLI_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace wdist::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,
  kExitInvariant = 2,
};

/// Environment variable naming the default output directory.
inline constexpr const char* kOutDirEnv = "WDIST_OUT_DIR";

/// Runs one command line (args excludes the program name). Tables go to
/// --out, to $WDIST_OUT_DIR/<command>.<format>, or to `out`; the one-line
/// summary goes to `err`.
int cli_dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace wdist::cli

#endif  // WDIST_CLI_CLI_HPP
