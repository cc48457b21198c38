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

#ifndef COLLECTIVE_ARB_SRC_HEDGING_PROGRAM_HPP_
#define COLLECTIVE_ARB_SRC_HEDGING_PROGRAM_HPP_

#include <cstddef>
#include <vector>

#include "collective_arb/exchange_cone.hpp"
#include "collective_arb/lp.hpp"
#include "collective_arb/market.hpp"

namespace collective_arb::detail {

// Variables shared by every program that trades gains generators and
// exchanges: one free holding per generator of each row's gains space, one
// nonnegative weight per cone ray and one free weight per lineality
// generator. Row r of the position k + Y reads
//   sum_g h[r][g] payoff(r, g) + sum_k mu_k R_k(r) + sum_l nu_l L_l(r).
class HedgingProgram {
 public:
  // One row per agent, each trading its own gains basis; cone may be null.
  HedgingProgram(const MarketModel& market, const ExchangeCone* cone, lp::Sense sense);
  // A single row trading the given generators, without exchanges.
  HedgingProgram(const MarketModel& market, std::vector<GainsGenerator> generators,
                 lp::Sense sense);

  lp::LinearProgram& program() { return program_; }
  const lp::LinearProgram& program() const { return program_; }
  std::size_t rows() const { return gens_.size(); }
  std::size_t atoms() const { return atoms_; }

  // Linear terms of (k + Y)(row, atom).
  std::vector<lp::Term> position(std::size_t row, std::size_t atom) const;
  // Terms of Y(row, atom) only.
  std::vector<lp::Term> exchange_terms(std::size_t row, std::size_t atom) const;
  bool has_cone() const { return cone_ != nullptr; }

  std::vector<std::vector<Rational>> strategies(const std::vector<Rational>& x) const;
  std::vector<Rational> ray_coeffs(const std::vector<Rational>& x) const;
  std::vector<Rational> lineality_coeffs(const std::vector<Rational>& x) const;
  // Evaluated k + Y.
  PayoffMatrix outcome(const std::vector<Rational>& x) const;
  // Evaluated Y alone (zero without a cone).
  PayoffMatrix exchange(const std::vector<Rational>& x) const;

 private:
  void add_holdings();

  const ExchangeCone* cone_ = nullptr;
  std::size_t atoms_ = 0;
  lp::LinearProgram program_;
  std::vector<std::vector<GainsGenerator>> gens_;
  std::vector<std::vector<std::size_t>> h_;
  std::vector<std::size_t> mu_, nu_;
};

// Flattened index of (agent, atom).
inline std::size_t flat(std::size_t agent, std::size_t atom, std::size_t atoms) {
  return agent * atoms + atom;
}

}  // namespace collective_arb::detail

#endif  // COLLECTIVE_ARB_SRC_HEDGING_PROGRAM_HPP_
