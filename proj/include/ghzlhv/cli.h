// Copyright 2026 The ghzlhv Authors
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

#ifndef GHZLHV_CLI_H
#define GHZLHV_CLI_H

#include <ostream>
#include <string>
#include <vector>

namespace ghzlhv {

/// Exit statuses shared by every subcommand.
enum ExitCode : int {
    kExitOk = 0,
    kExitMismatch = 1,  // oracle disagreement, inconsistent statistics, or a rejected circuit
    kExitUsage = 2,
};

/// Runs the command line `args` (args[0] is the program name) writing normal
/// output to `out` and diagnostics to `err`. Returns the process exit status.
/// `args` excludes the program name.
int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

}  // namespace ghzlhv

#endif
