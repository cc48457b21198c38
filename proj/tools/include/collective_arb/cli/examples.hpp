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

#ifndef COLLECTIVE_ARB_CLI_EXAMPLES_HPP_
#define COLLECTIVE_ARB_CLI_EXAMPLES_HPP_

#include <optional>
#include <string>
#include <vector>

#include "collective_arb/cli/model_io.hpp"

namespace collective_arb::cli {

struct ExampleInfo {
  std::string name;
  std::string summary;
};

// Built-in models: a one-period two-asset toy market and a two-period
// six-atom tree, each with several exchange choices.
std::vector<ExampleInfo> example_list();
std::optional<ModelFile> builtin_example(const std::string& name);

}  // namespace collective_arb::cli

#endif  // COLLECTIVE_ARB_CLI_EXAMPLES_HPP_
