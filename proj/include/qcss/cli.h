// Copyright 2026 The qcss Authors
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

#ifndef QCSS_CLI_H
#define QCSS_CLI_H

#include <iosfwd>
#include <string_view>

namespace qcss {

inline constexpr std::string_view kVersion = "0.1.0";

/// Exit codes of the command-line tool.
enum ExitCode : int {
    kExitOk = 0,
    kExitInvalid = 1,      // bad arguments, unknown code, malformed input
    kExitCheckFailed = 2,  // a verified property did not hold
};

/// Entry point of `qcss`; writes results to `out` and diagnostics to `err`.
int run_cli(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

}  // namespace qcss

#endif
