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

#ifndef COLLECTIVE_ARB_MARKET_HPP_
#define COLLECTIVE_ARB_MARKET_HPP_

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "collective_arb/matrix.hpp"
#include "collective_arb/rational.hpp"

namespace collective_arb {

// Thrown when a model violates a structural invariant. invariant() names the
// rule, location() points at the offending element.
class ValidationError : public std::runtime_error {
 public:
  ValidationError(std::string invariant, std::string location);

  const std::string& invariant() const { return invariant_; }
  const std::string& location() const { return location_; }

 private:
  std::string invariant_;
  std::string location_;
};

using Block = std::vector<std::size_t>;

// A partition of {0, ..., num_atoms - 1}. Blocks are kept sorted internally
// and ordered by their smallest atom, so two equal partitions compare equal.
class Partition {
 public:
  Partition() = default;
  // Throws ValidationError unless blocks are nonempty, disjoint and cover
  // every atom.
  Partition(std::size_t num_atoms, std::vector<Block> blocks);

  static Partition trivial(std::size_t num_atoms);
  static Partition discrete(std::size_t num_atoms);

  std::size_t num_atoms() const { return block_of_.size(); }
  std::size_t size() const { return blocks_.size(); }
  const std::vector<Block>& blocks() const { return blocks_; }
  const Block& block(std::size_t b) const { return blocks_[b]; }
  std::size_t block_of(std::size_t atom) const { return block_of_[atom]; }

  // True when every block of *this lies inside a block of coarser.
  bool refines(const Partition& coarser) const;
  // True when values is constant on every block.
  bool is_measurable(std::span<const Rational> values) const;

  friend bool operator==(const Partition& a, const Partition& b) {
    return a.blocks_ == b.blocks_;
  }

 private:
  std::vector<Block> blocks_;
  std::vector<std::size_t> block_of_;
};

Partition common_refinement(std::span<const Partition> partitions);

// Partitions indexed by time 0..T, each refining its predecessor, with a
// trivial time-0 partition.
class Filtration {
 public:
  Filtration() = default;
  explicit Filtration(std::vector<Partition> partitions);

  std::size_t horizon() const { return partitions_.size() - 1; }
  std::size_t num_atoms() const { return partitions_.front().num_atoms(); }
  const Partition& at(std::size_t t) const { return partitions_.at(t); }
  const std::vector<Partition>& partitions() const { return partitions_; }

  // True when at(t) is refined by other.at(t) for every t.
  bool coarsens(const Filtration& other) const;

  friend bool operator==(const Filtration& a, const Filtration& b) = default;

 private:
  std::vector<Partition> partitions_;
};

struct ProbSpace {
  std::vector<std::string> atoms;
  std::vector<Rational> prob;
};

struct PriceProcess {
  std::string name;
  // values[t][atom], t = 0..T.
  std::vector<std::vector<Rational>> values;
};

struct AgentSpec {
  std::string name;
  std::vector<std::size_t> asset_ids;
  Filtration filtration;
};

using PayoffMatrix = RationalMatrix;

// Raw, label-based model description. build_market validates it.
struct MarketDescription {
  using LabelPartition = std::vector<std::vector<std::string>>;

  struct Agent {
    std::string name;
    std::vector<std::string> assets;
    // Absent means the agent observes the global filtration.
    std::optional<std::vector<LabelPartition>> filtration;
  };

  std::vector<std::string> atoms;
  std::vector<Rational> prob;
  std::size_t horizon = 0;
  std::vector<LabelPartition> global_filtration;
  std::vector<PriceProcess> assets;
  std::vector<Agent> agents;
};

class MarketModel {
 public:
  MarketModel(ProbSpace space, std::vector<PriceProcess> assets,
              std::vector<AgentSpec> agents, Filtration global_filtration);

  const ProbSpace& space() const { return space_; }
  const std::vector<PriceProcess>& assets() const { return assets_; }
  const std::vector<AgentSpec>& agents() const { return agents_; }
  const AgentSpec& agent(std::size_t i) const { return agents_.at(i); }
  const Filtration& global_filtration() const { return global_; }

  std::size_t num_atoms() const { return space_.atoms.size(); }
  std::size_t num_agents() const { return agents_.size(); }
  std::size_t horizon() const { return global_.horizon(); }
  const Rational& prob(std::size_t atom) const { return space_.prob[atom]; }
  const std::string& atom_label(std::size_t atom) const { return space_.atoms[atom]; }

  // Agent i's time-T information partition.
  const Partition& terminal_partition(std::size_t agent) const {
    return agents_.at(agent).filtration.at(horizon());
  }
  // True when every row of the N x |atoms| matrix is measurable for its agent.
  bool is_agent_measurable(const PayoffMatrix& payoff) const;
  bool common_filtration() const;

 private:
  ProbSpace space_;
  std::vector<PriceProcess> assets_;
  std::vector<AgentSpec> agents_;
  Filtration global_;
};

// Validates a description and builds the model. Throws ValidationError naming
// the first violated invariant.
MarketModel build_market(const MarketDescription& description);

// Coarsest filtration making the given processes adapted.
Filtration generated_filtration(std::size_t num_atoms,
                                std::span<const PriceProcess> processes);

// One elementary strategy: hold one unit of asset during (t-1, t] on block
// of the time-(t-1) partition. payoff = 1_block (X_t - X_{t-1}).
struct GainsGenerator {
  std::size_t asset = 0;
  std::size_t time = 0;
  std::size_t block = 0;
  std::vector<Rational> payoff;
};

// Generating set of agent i's zero-cost terminal gains.
std::vector<GainsGenerator> gains_basis(const MarketModel& market, std::size_t agent);

// Generating set of the whole market's gains, under the global filtration.
std::vector<GainsGenerator> full_gains_basis(const MarketModel& market);

std::vector<std::vector<Rational>> payoffs_of(const std::vector<GainsGenerator>& generators);

}  // namespace collective_arb

#endif  // COLLECTIVE_ARB_MARKET_HPP_
