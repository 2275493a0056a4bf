// Copyright 2026 The ksconf Authors
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


#ifndef KSCONF_CLI_H
#define KSCONF_CLI_H

#include <ostream>
#include <string>
#include <vector>

namespace ksconf {

/// Exit statuses of run_cli.
enum ExitCode : int {
    kExitOk = 0,
    kExitFailure = 1,
    kExitUsage = 2,
    kExitParse = 3,
};

/// Runs the ksconf command line. `args` excludes the program name. Results
/// go to `out`, human-oriented summaries and diagnostics to `err`.
int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

}  // namespace ksconf

#endif
