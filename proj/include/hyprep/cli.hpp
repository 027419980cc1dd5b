/*
   Copyright 2026 The hyprep Authors

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

#ifndef HYPREP_CLI_HPP
#define HYPREP_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace hyprep {

enum ExitCode : int {
  kExitOk = 0,
  kExitVerifyFailed = 1,
  kExitInputError = 2,
  kExitNumericalFailure = 3,
};

/// Runs one `hyprep` subcommand. args[0] is the program name. Reports go to
/// `out` as JSON, diagnostics to `err`.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int dispatch(int argc, char** argv);

}  // namespace hyprep

#endif  // HYPREP_CLI_HPP
