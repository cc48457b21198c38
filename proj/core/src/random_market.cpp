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

#include "collective_arb/random_market.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

namespace collective_arb::random {

std::size_t Generator::uniform(std::size_t lo, std::size_t hi) {
  return lo + static_cast<std::size_t>(engine_() % (hi - lo + 1));
}

long long Generator::integer(long long lo, long long hi) {
  return lo + static_cast<long long>(engine_() % static_cast<std::uint64_t>(hi - lo + 1));
}

Rational Generator::rational(long long lo, long long hi, long long max_den) {
  const long long den = integer(1, max_den);
  const long long num = integer(lo * den, hi * den);
  return Rational(num) / den;
}

bool Generator::chance(unsigned percent) { return engine_() % 100 < percent; }

MarketModel Generator::market(const Options& options) {
  const std::size_t horizon = uniform(1, options.max_horizon);
  // Grow an event tree; blocks at each time are lists of terminal atoms,
  // which are only known at the end, so record child counts first.
  std::vector<std::vector<std::size_t>> children(horizon);
  std::size_t width = 1;
  for (std::size_t t = 0; t < horizon; ++t) {
    std::size_t budget = options.max_blocks_per_period;
    for (std::size_t b = 0; b < width; ++b) {
      const std::size_t remaining = width - b - 1;
      const std::size_t most = std::max<std::size_t>(1, budget - remaining);
      const std::size_t c = uniform(1, std::min<std::size_t>(most, 3));
      children[t].push_back(c);
      budget -= c;
    }
    width = 0;
    for (auto c : children[t]) width += c;
  }
  const std::size_t n = width;
  // Walk back from the leaves to assign atoms to blocks.
  std::vector<std::vector<Block>> blocks(horizon + 1);
  for (std::size_t a = 0; a < n; ++a) blocks[horizon].push_back({a});
  for (std::size_t t = horizon; t-- > 0;) {
    std::size_t next = 0;
    for (auto c : children[t]) {
      Block merged;
      for (std::size_t k = 0; k < c; ++k, ++next) {
        merged.insert(merged.end(), blocks[t + 1][next].begin(), blocks[t + 1][next].end());
      }
      blocks[t].push_back(std::move(merged));
    }
  }
  std::vector<Partition> partitions;
  for (auto& level : blocks) partitions.emplace_back(n, level);
  Filtration global(partitions);

  ProbSpace space;
  Rational total = 0;
  std::vector<long long> weights;
  for (std::size_t a = 0; a < n; ++a) {
    space.atoms.push_back("w" + std::to_string(a + 1));
    weights.push_back(integer(1, 5));
    total += weights.back();
  }
  for (auto w : weights) space.prob.push_back(Rational(w) / total);

  // Prices are either unrelated integers per block, or conditional
  // expectations of a random terminal value under a random measure (one per
  // asset or one shared), which makes the market free of arbitrage for
  // that asset or for all of them.
  const std::size_t mode = uniform(0, 2);
  auto random_weights = [&] {
    std::vector<Rational> w(n);
    for (auto& x : w) x = integer(1, 5);
    return w;
  };
  std::vector<Rational> shared = random_weights();
  std::vector<PriceProcess> assets(uniform(1, options.max_assets));
  for (std::size_t j = 0; j < assets.size(); ++j) {
    assets[j].name = "X" + std::to_string(j + 1);
    assets[j].values.assign(horizon + 1, std::vector<Rational>(n));
    if (mode == 0) {
      for (std::size_t t = 0; t <= horizon; ++t) {
        for (const auto& b : blocks[t]) {
          const Rational v = integer(1, 12);
          for (auto a : b) assets[j].values[t][a] = v;
        }
      }
      continue;
    }
    const std::vector<Rational> q = mode == 1 ? random_weights() : shared;
    auto& terminal = assets[j].values[horizon];
    for (auto& v : terminal) v = integer(1, 12);
    for (std::size_t t = 0; t < horizon; ++t) {
      for (const auto& b : blocks[t]) {
        Rational mass = 0, value = 0;
        for (auto a : b) {
          mass += q[a];
          value += q[a] * terminal[a];
        }
        for (auto a : b) assets[j].values[t][a] = value / mass;
      }
    }
  }

  std::vector<AgentSpec> agents(uniform(1, options.max_agents));
  for (std::size_t i = 0; i < agents.size(); ++i) {
    agents[i].name = "agent" + std::to_string(i + 1);
    for (std::size_t j = 0; j < assets.size(); ++j) {
      if (chance(50)) agents[i].asset_ids.push_back(j);
    }
    if (agents[i].asset_ids.empty()) agents[i].asset_ids.push_back(uniform(0, assets.size() - 1));
  }
  for (std::size_t j = 0; j < assets.size(); ++j) {
    const bool held = std::any_of(agents.begin(), agents.end(), [j](const AgentSpec& a) {
      return std::find(a.asset_ids.begin(), a.asset_ids.end(), j) != a.asset_ids.end();
    });
    if (held) continue;
    auto& ids = agents[uniform(0, agents.size() - 1)].asset_ids;
    ids.insert(std::upper_bound(ids.begin(), ids.end(), j), j);
  }
  for (std::size_t i = 0; i < agents.size(); ++i) {
    if (options.common_filtration || chance(50)) {
      agents[i].filtration = global;
    } else {
      std::vector<PriceProcess> own;
      for (auto j : agents[i].asset_ids) own.push_back(assets[j]);
      agents[i].filtration = generated_filtration(n, own);
    }
  }
  return MarketModel(std::move(space), std::move(assets), std::move(agents), std::move(global));
}

PayoffMatrix Generator::exchange_matrix(const MarketModel& market, bool zero_sum) {
  PayoffMatrix m(market.num_agents(), market.num_atoms());
  if (zero_sum) {
    const ExchangeCone y0 = make_Y0(market, market.horizon());
    for (const auto& gen : y0.lineality()) {
      const long long c = integer(-2, 2);
      if (c != 0) m += gen * Rational(c);
    }
    return m;
  }
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (const auto& block : market.terminal_partition(i).blocks()) {
      const Rational v = integer(-3, 3);
      for (auto a : block) m(i, a) = v;
    }
  }
  return m;
}

ClaimVector Generator::claim(const MarketModel& market) {
  ClaimVector g(market.num_agents(), market.num_atoms());
  for (std::size_t i = 0; i < g.rows(); ++i) {
    for (const auto& block : market.terminal_partition(i).blocks()) {
      const Rational v = rational(0, 20, 4);
      for (auto a : block) g(i, a) = v;
    }
  }
  return g;
}

ClaimVector Generator::constant_claim(const MarketModel& market) {
  ClaimVector g(market.num_agents(), market.num_atoms());
  for (std::size_t i = 0; i < g.rows(); ++i) {
    const Rational v = integer(-5, 5);
    for (std::size_t a = 0; a < g.cols(); ++a) g(i, a) = v;
  }
  return g;
}

ExchangeCone Generator::cone(const MarketModel& market, bool with_RN0, bool zero_sum_only) {
  ExchangeCone base;
  switch (uniform(0, 4)) {
    case 0:
      base = make_zero(market);
      break;
    case 1:
      base = make_Y0(market, uniform(0, market.horizon()));
      break;
    case 2: {
      std::vector<std::vector<std::size_t>> groups;
      for (std::size_t i = 0; i < market.num_agents(); ++i) {
        if (groups.empty() || chance(40)) {
          groups.push_back({i});
        } else {
          groups[uniform(0, groups.size() - 1)].push_back(i);
        }
      }
      base = make_grouping(market, groups, uniform(0, market.horizon()));
      break;
    }
    case 3: {
      std::vector<PayoffMatrix> gens(uniform(1, 2));
      for (auto& g : gens) g = exchange_matrix(market, zero_sum_only || chance(70));
      base = make_span(market, std::move(gens));
      break;
    }
    default: {
      std::vector<PayoffMatrix> rays(uniform(1, 3));
      for (auto& r : rays) r = exchange_matrix(market, zero_sum_only || chance(70));
      base = make_rays(market, std::move(rays));
      break;
    }
  }
  return with_RN0 ? cone_add(market, base, make_RN0(market)) : base;
}

std::uint64_t seed_from_env(std::uint64_t fallback) {
  const char* text = std::getenv("COLLECTIVE_ARB_SEED");
  if (text == nullptr || *text == '\0') return fallback;
  char* end = nullptr;
  const unsigned long long value = std::strtoull(text, &end, 10);
  if (end == nullptr || *end != '\0') return fallback;
  return value;
}

}  // namespace collective_arb::random
