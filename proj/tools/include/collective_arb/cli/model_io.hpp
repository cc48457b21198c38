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

#ifndef COLLECTIVE_ARB_CLI_MODEL_IO_HPP_
#define COLLECTIVE_ARB_CLI_MODEL_IO_HPP_

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "collective_arb/exchange_cone.hpp"
#include "collective_arb/market.hpp"
#include "collective_arb/pricing.hpp"

namespace collective_arb::cli {

// Malformed JSON. line and column are 1-based.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column);
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

using Matrix = std::vector<std::vector<Rational>>;

// Exchange description as written in a model file.
struct ExchangeSpec {
  std::string kind = "zero";  // zero, Y0, grouping, span, rays, sum
  std::size_t t = 0;
  // Agent indices per group (names are resolved while reading).
  std::vector<std::vector<std::size_t>> groups;
  std::vector<Matrix> generators;
  std::vector<ExchangeSpec> parts;
};

struct ModelFile {
  std::string name;
  MarketDescription market;
  ExchangeSpec exchange;
  bool has_exchange = false;
  std::optional<Matrix> claims;
  // Agents whose filtration is generated by their own assets.
  std::vector<bool> generated_filtration;
};

// Parses a model document. Throws ParseError for malformed JSON and
// ValidationError (location = JSON pointer) for schema violations.
ModelFile parse_model(const std::string& text, const std::string& name);
ModelFile load_model(const std::string& path);

// Serializes back to the model format with a fixed key order.
std::string dump_model(const ModelFile& model, int indent = 2);

// Validates the market, resolving generated agent filtrations.
MarketModel build_model_market(const ModelFile& model);
ExchangeCone build_cone(const MarketModel& market, const ExchangeSpec& spec);
ClaimVector build_claims(const MarketModel& market, const Matrix& claims);

}  // namespace collective_arb::cli

#endif  // COLLECTIVE_ARB_CLI_MODEL_IO_HPP_
