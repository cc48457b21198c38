// Copyright 2026 The collective-arb Authors
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

#ifndef COLLECTIVE_ARB_CLI_COMMANDS_HPP_
#define COLLECTIVE_ARB_CLI_COMMANDS_HPP_

#include <ostream>

namespace collective_arb::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitValidation = 1,
  kExitInternal = 2,
};

// Entry point of the collective-arb command line. Output goes to out, errors
// and LP listings to err.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace collective_arb::cli

#endif  // COLLECTIVE_ARB_CLI_COMMANDS_HPP_
