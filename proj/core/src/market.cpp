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

#include "collective_arb/market.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

namespace collective_arb {

ValidationError::ValidationError(std::string invariant, std::string location)
    : std::runtime_error(invariant + " (at " + location + ")"),
      invariant_(std::move(invariant)),
      location_(std::move(location)) {}

Partition::Partition(std::size_t num_atoms, std::vector<Block> blocks)
    : block_of_(num_atoms, num_atoms) {
  for (auto& b : blocks) {
    if (b.empty()) throw ValidationError("partition blocks are nonempty", "empty block");
    std::sort(b.begin(), b.end());
  }
  std::sort(blocks.begin(), blocks.end());
  for (std::size_t k = 0; k < blocks.size(); ++k) {
    for (auto atom : blocks[k]) {
      if (atom >= num_atoms) {
        throw ValidationError("partition blocks reference known atoms",
                              "atom index " + std::to_string(atom));
      }
      if (block_of_[atom] != num_atoms) {
        throw ValidationError("partition blocks are disjoint",
                              "atom index " + std::to_string(atom));
      }
      block_of_[atom] = k;
    }
  }
  for (std::size_t a = 0; a < num_atoms; ++a) {
    if (block_of_[a] == num_atoms) {
      throw ValidationError("partition covers every atom", "atom index " + std::to_string(a));
    }
  }
  blocks_ = std::move(blocks);
}

Partition Partition::trivial(std::size_t num_atoms) {
  Block all(num_atoms);
  for (std::size_t a = 0; a < num_atoms; ++a) all[a] = a;
  return Partition(num_atoms, {all});
}

Partition Partition::discrete(std::size_t num_atoms) {
  std::vector<Block> blocks;
  for (std::size_t a = 0; a < num_atoms; ++a) blocks.push_back({a});
  return Partition(num_atoms, std::move(blocks));
}

bool Partition::refines(const Partition& coarser) const {
  if (coarser.num_atoms() != num_atoms()) return false;
  for (const auto& b : blocks_) {
    const auto target = coarser.block_of(b.front());
    for (auto atom : b) {
      if (coarser.block_of(atom) != target) return false;
    }
  }
  return true;
}

bool Partition::is_measurable(std::span<const Rational> values) const {
  if (values.size() != num_atoms()) return false;
  for (const auto& b : blocks_) {
    for (auto atom : b) {
      if (values[atom] != values[b.front()]) return false;
    }
  }
  return true;
}

Partition common_refinement(std::span<const Partition> partitions) {
  if (partitions.empty()) throw std::invalid_argument("common_refinement of nothing");
  const std::size_t n = partitions.front().num_atoms();
  std::map<std::vector<std::size_t>, Block> groups;
  for (std::size_t a = 0; a < n; ++a) {
    std::vector<std::size_t> key;
    for (const auto& p : partitions) key.push_back(p.block_of(a));
    groups[key].push_back(a);
  }
  std::vector<Block> blocks;
  for (auto& [key, block] : groups) blocks.push_back(std::move(block));
  return Partition(n, std::move(blocks));
}

Filtration::Filtration(std::vector<Partition> partitions) : partitions_(std::move(partitions)) {
  if (partitions_.empty()) throw ValidationError("filtration has a time-0 partition", "t=0");
  const std::size_t n = partitions_.front().num_atoms();
  if (partitions_.front().size() != 1) {
    throw ValidationError("time-0 partition is trivial", "t=0");
  }
  for (std::size_t t = 1; t < partitions_.size(); ++t) {
    if (partitions_[t].num_atoms() != n || !partitions_[t].refines(partitions_[t - 1])) {
      throw ValidationError("partition at t+1 refines partition at t",
                            "t=" + std::to_string(t));
    }
  }
}

bool Filtration::coarsens(const Filtration& other) const {
  if (other.partitions_.size() != partitions_.size()) return false;
  for (std::size_t t = 0; t < partitions_.size(); ++t) {
    if (!other.partitions_[t].refines(partitions_[t])) return false;
  }
  return true;
}

MarketModel::MarketModel(ProbSpace space, std::vector<PriceProcess> assets,
                         std::vector<AgentSpec> agents, Filtration global_filtration)
    : space_(std::move(space)),
      assets_(std::move(assets)),
      agents_(std::move(agents)),
      global_(std::move(global_filtration)) {}

bool MarketModel::is_agent_measurable(const PayoffMatrix& payoff) const {
  if (payoff.rows() != num_agents() || payoff.cols() != num_atoms()) return false;
  for (std::size_t i = 0; i < num_agents(); ++i) {
    if (!terminal_partition(i).is_measurable(payoff.row(i))) return false;
  }
  return true;
}

bool MarketModel::common_filtration() const {
  for (const auto& a : agents_) {
    if (!(a.filtration == global_)) return false;
  }
  return true;
}

namespace {

Partition partition_from_labels(const MarketDescription::LabelPartition& blocks,
                                const std::unordered_map<std::string, std::size_t>& index,
                                const std::string& where) {
  std::vector<Block> out;
  for (const auto& block : blocks) {
    Block b;
    for (const auto& label : block) {
      auto it = index.find(label);
      if (it == index.end()) {
        throw ValidationError("partition blocks reference known labels",
                              where + ", label '" + label + "'");
      }
      b.push_back(it->second);
    }
    out.push_back(std::move(b));
  }
  try {
    return Partition(index.size(), std::move(out));
  } catch (const ValidationError& e) {
    throw ValidationError(e.invariant(), where);
  }
}

Filtration filtration_from_labels(const std::vector<MarketDescription::LabelPartition>& parts,
                                  std::size_t horizon,
                                  const std::unordered_map<std::string, std::size_t>& index,
                                  const std::string& where) {
  if (parts.size() != horizon + 1) {
    throw ValidationError("filtration has one partition per time 0..T",
                          where + ": got " + std::to_string(parts.size()) + " partitions");
  }
  std::vector<Partition> partitions;
  for (std::size_t t = 0; t < parts.size(); ++t) {
    partitions.push_back(
        partition_from_labels(parts[t], index, where + ", t=" + std::to_string(t)));
  }
  try {
    return Filtration(std::move(partitions));
  } catch (const ValidationError& e) {
    throw ValidationError(e.invariant(), where + ", " + e.location());
  }
}

}  // namespace

MarketModel build_market(const MarketDescription& d) {
  const std::size_t n = d.atoms.size();
  if (n == 0) throw ValidationError("atom count >= 1", "atoms");
  if (d.horizon < 1) throw ValidationError("T >= 1", "times");
  std::unordered_map<std::string, std::size_t> index;
  for (std::size_t a = 0; a < n; ++a) {
    if (!index.emplace(d.atoms[a], a).second) {
      throw ValidationError("labels are unique", "atom '" + d.atoms[a] + "'");
    }
  }
  if (d.prob.size() != n) {
    throw ValidationError("one probability per atom", "prob");
  }
  Rational total = 0;
  for (std::size_t a = 0; a < n; ++a) {
    if (d.prob[a] <= 0) {
      throw ValidationError("every probability is strictly positive",
                            "prob of atom '" + d.atoms[a] + "'");
    }
    total += d.prob[a];
  }
  if (total != 1) {
    throw ValidationError("prob sum ≠ 1", "prob: sum is " + to_string(total));
  }

  Filtration global = filtration_from_labels(d.global_filtration, d.horizon, index,
                                             "global_filtration");

  std::unordered_map<std::string, std::size_t> asset_index;
  for (std::size_t j = 0; j < d.assets.size(); ++j) {
    const auto& x = d.assets[j];
    if (!asset_index.emplace(x.name, j).second) {
      throw ValidationError("asset names are unique", "asset '" + x.name + "'");
    }
    if (x.values.size() != d.horizon + 1) {
      throw ValidationError("price process has T+1 rows", "asset '" + x.name + "'");
    }
    for (std::size_t t = 0; t <= d.horizon; ++t) {
      if (x.values[t].size() != n) {
        throw ValidationError("price row has one value per atom",
                              "asset '" + x.name + "', t=" + std::to_string(t));
      }
      if (!global.at(t).is_measurable(x.values[t])) {
        throw ValidationError("prices are adapted to the global filtration",
                              "asset '" + x.name + "', t=" + std::to_string(t));
      }
    }
  }
  if (d.agents.empty()) throw ValidationError("at least one agent", "agents");

  std::vector<AgentSpec> agents;
  for (std::size_t i = 0; i < d.agents.size(); ++i) {
    const auto& a = d.agents[i];
    const std::string where = "agent '" + a.name + "'";
    AgentSpec spec;
    spec.name = a.name;
    spec.filtration = a.filtration
                          ? filtration_from_labels(*a.filtration, d.horizon, index, where)
                          : global;
    if (!spec.filtration.coarsens(global)) {
      throw ValidationError("agent filtration coarsens the global filtration", where);
    }
    for (const auto& name : a.assets) {
      auto it = asset_index.find(name);
      if (it == asset_index.end()) {
        throw ValidationError("agent assets are known", where + ", asset '" + name + "'");
      }
      if (std::find(spec.asset_ids.begin(), spec.asset_ids.end(), it->second) !=
          spec.asset_ids.end()) {
        continue;
      }
      const auto& x = d.assets[it->second];
      for (std::size_t t = 0; t <= d.horizon; ++t) {
        if (!spec.filtration.at(t).is_measurable(x.values[t])) {
          throw ValidationError("agent assets are adapted to the agent filtration",
                                where + ", asset '" + name + "', t=" + std::to_string(t));
        }
      }
      spec.asset_ids.push_back(it->second);
    }
    std::sort(spec.asset_ids.begin(), spec.asset_ids.end());
    agents.push_back(std::move(spec));
  }
  for (std::size_t j = 0; j < d.assets.size(); ++j) {
    const bool held = std::any_of(agents.begin(), agents.end(), [j](const AgentSpec& a) {
      return std::binary_search(a.asset_ids.begin(), a.asset_ids.end(), j);
    });
    if (!held) throw ValidationError("every asset is held by some agent", "asset '" + d.assets[j].name + "'");
  }
  return MarketModel(ProbSpace{d.atoms, d.prob}, d.assets, std::move(agents),
                     std::move(global));
}

Filtration generated_filtration(std::size_t num_atoms, std::span<const PriceProcess> processes) {
  std::size_t horizon = 0;
  for (const auto& x : processes) {
    if (x.values.empty()) throw std::invalid_argument("empty price process");
    horizon = std::max(horizon, x.values.size() - 1);
  }
  std::vector<Partition> partitions;
  std::vector<Partition> levels;
  for (std::size_t t = 0; t <= horizon; ++t) {
    for (const auto& x : processes) {
      if (t >= x.values.size()) continue;
      std::map<Rational, Block> by_value;
      for (std::size_t a = 0; a < num_atoms; ++a) by_value[x.values[t][a]].push_back(a);
      std::vector<Block> blocks;
      for (auto& [v, b] : by_value) blocks.push_back(std::move(b));
      levels.emplace_back(num_atoms, std::move(blocks));
    }
    levels.push_back(Partition::trivial(num_atoms));
    partitions.push_back(common_refinement(levels));
  }
  return Filtration(std::move(partitions));
}

namespace {

void append_generators(const std::vector<PriceProcess>& assets,
                       const std::vector<std::size_t>& asset_ids, const Filtration& f,
                       std::vector<GainsGenerator>& out) {
  const std::size_t n = f.num_atoms();
  for (std::size_t t = 1; t <= f.horizon(); ++t) {
    const Partition& before = f.at(t - 1);
    for (std::size_t b = 0; b < before.size(); ++b) {
      for (auto j : asset_ids) {
        GainsGenerator g{j, t, b, std::vector<Rational>(n, Rational(0))};
        for (auto atom : before.block(b)) {
          g.payoff[atom] = assets[j].values[t][atom] - assets[j].values[t - 1][atom];
        }
        out.push_back(std::move(g));
      }
    }
  }
}

}  // namespace

std::vector<GainsGenerator> gains_basis(const MarketModel& market, std::size_t agent) {
  const auto& spec = market.agent(agent);
  std::vector<GainsGenerator> out;
  append_generators(market.assets(), spec.asset_ids, spec.filtration, out);
  return out;
}

std::vector<GainsGenerator> full_gains_basis(const MarketModel& market) {
  std::vector<std::size_t> all(market.assets().size());
  for (std::size_t j = 0; j < all.size(); ++j) all[j] = j;
  std::vector<GainsGenerator> out;
  append_generators(market.assets(), all, market.global_filtration(), out);
  return out;
}

std::vector<std::vector<Rational>> payoffs_of(const std::vector<GainsGenerator>& generators) {
  std::vector<std::vector<Rational>> out;
  out.reserve(generators.size());
  for (const auto& g : generators) out.push_back(g.payoff);
  return out;
}

}  // namespace collective_arb
