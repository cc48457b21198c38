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

#ifndef COLLECTIVE_ARB_TESTS_ORACLES_HPP_
#define COLLECTIVE_ARB_TESTS_ORACLES_HPP_

#include <optional>
#include <span>
#include <vector>

#include "collective_arb/lp.hpp"
#include "collective_arb/market.hpp"

// Reference computations written independently of the library's LP and
// linear-algebra code, for cross-checking its results.
namespace collective_arb::oracle {

// Row rank by plain Gauss-Jordan elimination.
std::size_t rank(std::vector<std::vector<Rational>> rows);

// Solves the square system A x = b; nullopt when A is singular.
std::optional<std::vector<Rational>> solve_square(std::vector<std::vector<Rational>> a,
                                                  std::vector<Rational> b);

Rational expectation(std::span<const Rational> q, std::span<const Rational> values);

// Up-probability of the one-period binomial step x0 -> (up, down).
Rational binomial_up_probability(const Rational& x0, const Rational& up, const Rational& down);

// No-arbitrage for an agent holding exactly one asset, decided node by node:
// at every block of the agent's time t-1 partition the increments over its
// time-t sub-blocks are either all zero or take both signs.
bool single_asset_no_arbitrage(const MarketModel& market, std::size_t agent);

// A small LP over a finite box, solved by enumerating every basic solution.
struct BoxLP {
  std::vector<std::vector<Rational>> rows;
  std::vector<lp::Relation> relations;
  std::vector<Rational> rhs;
  std::vector<Rational> cost;
  std::vector<Rational> lower;
  std::vector<Rational> upper;
  bool maximize = false;

  lp::LinearProgram to_program() const;
};
// Optimal value, or nullopt when infeasible.
std::optional<Rational> enumerate_optimum(const BoxLP& program);

}  // namespace collective_arb::oracle

#endif  // COLLECTIVE_ARB_TESTS_ORACLES_HPP_
