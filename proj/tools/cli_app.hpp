// Copyright 2026 The dspec Authors
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

#ifndef DSPEC_TOOLS_CLI_APP_HPP_
#define DSPEC_TOOLS_CLI_APP_HPP_

#include <ostream>
#include <string>
#include <vector>

namespace dspec::cli {

enum ExitCode : int {
  kSuccess = 0,
  kVerificationFailure = 1,
  kUsageError = 2,
  kRefused = 3,
};

// Runs one subcommand; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dspec::cli

#endif  // DSPEC_TOOLS_CLI_APP_HPP_
