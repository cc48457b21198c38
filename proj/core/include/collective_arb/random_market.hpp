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

#ifndef COLLECTIVE_ARB_RANDOM_MARKET_HPP_
#define COLLECTIVE_ARB_RANDOM_MARKET_HPP_

#include <cstdint>
#include <random>

#include "collective_arb/exchange_cone.hpp"
#include "collective_arb/market.hpp"
#include "collective_arb/pricing.hpp"

// Seeded generators of small random markets, cones and claims for property
// tests and benchmarks.
namespace collective_arb::random {

struct Options {
  std::size_t max_horizon = 2;
  std::size_t max_blocks_per_period = 4;
  std::size_t max_agents = 3;
  std::size_t max_assets = 3;
  bool common_filtration = false;
};

// Deterministic across platforms: distributions are implemented here rather
// than through <random>'s implementation-defined ones.
class Generator {
 public:
  explicit Generator(std::uint64_t seed) : engine_(seed) {}

  std::size_t uniform(std::size_t lo, std::size_t hi);  // inclusive
  long long integer(long long lo, long long hi);        // inclusive
  Rational rational(long long lo, long long hi, long long max_den);
  bool chance(unsigned percent);

  MarketModel market(const Options& options);
  // Random generator matrix whose rows are measurable for their agents.
  PayoffMatrix exchange_matrix(const MarketModel& market, bool zero_sum);
  ClaimVector claim(const MarketModel& market);
  ClaimVector constant_claim(const MarketModel& market);
  // A randomly chosen cone shape: zero, Y0, grouping, span or rays. With
  // with_RN0 the deterministic zero-sum transfers are added.
  ExchangeCone cone(const MarketModel& market, bool with_RN0, bool zero_sum_only);

 private:
  std::mt19937_64 engine_;
};

// COLLECTIVE_ARB_SEED when set and numeric, otherwise fallback.
std::uint64_t seed_from_env(std::uint64_t fallback);

}  // namespace collective_arb::random

#endif  // COLLECTIVE_ARB_RANDOM_MARKET_HPP_
