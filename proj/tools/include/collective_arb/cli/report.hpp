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

#ifndef COLLECTIVE_ARB_CLI_REPORT_HPP_
#define COLLECTIVE_ARB_CLI_REPORT_HPP_

#include <string>
#include <vector>

#include "collective_arb/cli/model_io.hpp"
#include "json.hpp"

namespace collective_arb::cli {

using Json = nlohmann::ordered_json;

struct Sections {
  bool na = false;
  bool nca = false;
  bool ftap = false;
  bool price = false;
  bool fairness = false;

  static Sections all() { return {true, true, true, true, true}; }
  bool any() const { return na || nca || ftap || price || fairness; }
};

struct Analysis {
  Json report;
  // Certificates that failed independent re-verification, with reasons.
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

// Summary of a validated model. Throws ValidationError.
Json validation_report(const ModelFile& model);

// Runs the detection and pricing pipeline and re-verifies every emitted
// certificate with plain arithmetic. Module errors propagate.
Analysis analyze(const ModelFile& model, const Sections& sections);

// Human-readable rendering of a report, including the summary table row.
std::string render_text(const Json& report);

}  // namespace collective_arb::cli

#endif  // COLLECTIVE_ARB_CLI_REPORT_HPP_
