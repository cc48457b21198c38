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

#include "collective_arb/cli/commands.hpp"

#include <filesystem>
#include <fstream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "collective_arb/cli/examples.hpp"
#include "collective_arb/cli/model_io.hpp"
#include "collective_arb/cli/report.hpp"
#include "collective_arb/lp.hpp"

namespace collective_arb::cli {
namespace {

// A path that does not exist but names a built-in example loads the example.
ModelFile resolve_model(const std::string& path) {
  if (!std::filesystem::exists(path)) {
    if (auto builtin = builtin_example(path)) return *builtin;
  }
  return load_model(path);
}

int cmd_validate(const std::string& path, std::ostream& out) {
  const ModelFile model = resolve_model(path);
  const Json report = validation_report(model);
  out << render_text(Json{{"validation", report}});
  out << "valid\n";
  return kExitOk;
}

int cmd_analyze(const std::string& path, const Sections& sections,
                const std::optional<std::string>& json_out, bool dump_lp,
                std::ostream& out, std::ostream& err) {
  const ModelFile model = resolve_model(path);
  std::optional<lp::ScopedListing> listing;
  if (dump_lp) listing.emplace(err);
  const Analysis analysis = analyze(model, sections);
  listing.reset();

  if (json_out) {
    std::ofstream file(*json_out, std::ios::binary);
    if (!file) throw std::runtime_error("cannot write " + *json_out);
    file << analysis.report.dump(2) << "\n";
  }
  out << render_text(analysis.report);
  for (const auto& failure : analysis.failures) err << "certificate failure: " << failure << "\n";
  return analysis.ok() ? kExitOk : kExitInternal;
}

int cmd_examples(const std::optional<std::string>& name, std::ostream& out, std::ostream& err) {
  if (!name) {
    for (const auto& info : example_list()) out << info.name << "  " << info.summary << "\n";
    return kExitOk;
  }
  const auto model = builtin_example(*name);
  if (!model) {
    err << "error: unknown example '" << *name << "'\n";
    return kExitValidation;
  }
  out << dump_model(*model) << "\n";
  return kExitOk;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Collective arbitrage and super-replication in finite markets", "collective-arb"};
  app.require_subcommand(1);

  std::string validate_path;
  auto* validate = app.add_subcommand("validate", "Check a model file for structural errors");
  validate->add_option("file", validate_path, "Model file or built-in example name")->required();

  std::string analyze_path;
  Sections sections;
  bool all = false;
  bool dump_lp = false;
  std::optional<std::string> json_out;
  auto* analyze_cmd = app.add_subcommand("analyze", "Run arbitrage, FTAP and pricing analyses");
  analyze_cmd->add_option("file", analyze_path, "Model file or built-in example name")->required();
  analyze_cmd->add_flag("--na", sections.na, "No-arbitrage per agent and globally");
  analyze_cmd->add_flag("--nca", sections.nca, "Collective arbitrage certificate");
  analyze_cmd->add_flag("--ftap", sections.ftap, "Measure vector or polar witness");
  analyze_cmd->add_flag("--price", sections.price, "Super- and sub-replication prices");
  analyze_cmd->add_flag("--fairness", sections.fairness, "Fair allocation and cooperation value");
  analyze_cmd->add_flag("--all", all, "All sections (default)");
  analyze_cmd->add_option("--json", json_out, "Write the JSON report to this path");
  analyze_cmd->add_flag("--dump-lp", dump_lp, "Print every linear program to stderr");

  std::optional<std::string> example_name;
  auto* examples = app.add_subcommand("examples", "List built-in models or print one");
  examples->add_option("name", example_name, "Example to print");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitValidation;
  }

  try {
    if (*validate) return cmd_validate(validate_path, out);
    if (*analyze_cmd) {
      if (all) sections = Sections::all();
      return cmd_analyze(analyze_path, sections, json_out, dump_lp, out, err);
    }
    return cmd_examples(example_name, out, err);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const ValidationError& e) {
    err << "validation error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const InvariantViolation& e) {
    err << "invariant violation: " << e.what() << "\n";
    return kExitInternal;
  } catch (const lp::CertificateError& e) {
    err << "certificate re-verification failed: " << e.what() << "\n";
    return kExitInternal;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitValidation;
  }
}

}  // namespace collective_arb::cli
