/*
   Copyright 2026 The hyperconvo Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef HYPERCONVO_TOOLS_CLI_HPP
#define HYPERCONVO_TOOLS_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace hyperconvo::cli {

enum ExitCode : int {
    kPass = 0,
    kFailure = 1,  // a property or verification check failed
    kUsage = 2,    // bad command line or invalid input
};

/// Runs one command line (without the program name). Artifacts go to
/// `--out` when given, otherwise to `out`; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hyperconvo::cli

#endif  // HYPERCONVO_TOOLS_CLI_HPP
