// Copyright 2026 The Islands Authors
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

#ifndef ISLANDS_TOOLS_CLI_H
#define ISLANDS_TOOLS_CLI_H

#include <iosfwd>
#include <string>

namespace islands {

/// Exit codes of the command-line tool.
enum ExitCode : int {
    kExitOk = 0,
    kExitUsage = 1,
    kExitParse = 2,
    kExitSemantic = 3,
};

/// Rounds to `digits` decimal places, ties to even on the exact decimal
/// expansion of the double, then drops trailing zeros ("0.5", "1", "0").
std::string format_rounded(double value, int digits);

/// Entry point shared by main() and the tests.
int run_cli(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

}  // namespace islands

#endif
