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

#ifndef COLLECTIVE_ARB_ARBITRAGE_HPP_
#define COLLECTIVE_ARB_ARBITRAGE_HPP_

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "collective_arb/exchange_cone.hpp"
#include "collective_arb/lp.hpp"
#include "collective_arb/market.hpp"

namespace collective_arb {

// Outcome of an arbitrage search, with a certificate either way.
//
// found: strategies[i] are coefficients over agent i's gains generators (for
// the global search, over full_gains_basis), ray/lineality coefficients give
// the exchange, and outcome = k + Y is entrywise >= 0 with a positive total.
//
// !found: witness z (densities with respect to P, one row per agent in the
// search) is strictly positive and sum_i E[z^i f^i] <= 0 on every generator
// f of the super-replicable cone.
struct ArbitrageCertificate {
  bool found = false;
  std::vector<std::vector<Rational>> strategies;
  std::vector<Rational> ray_coeffs;
  std::vector<Rational> lineality_coeffs;
  PayoffMatrix outcome;
  PayoffMatrix witness;
};

// One probability vector per agent, stored as atom probabilities q^i(w).
struct MeasureVector {
  RationalMatrix q;

  std::size_t num_agents() const { return q.rows(); }
  bool is_equivalent() const;  // entrywise > 0
  Rational expectation(std::size_t agent, std::span<const Rational> values) const;
};

// Normalizes a P-density row into atom probabilities.
std::vector<Rational> density_to_measure(const MarketModel& market,
                                         std::span<const Rational> density);

ArbitrageCertificate detect_NA_agent(const MarketModel& market, std::size_t agent);
ArbitrageCertificate detect_NA_global(const MarketModel& market);
ArbitrageCertificate detect_NCA(const MarketModel& market, const ExchangeCone& cone);

// Linear description of M_i: q >= 0 (implicit), sum q = 1 and E_q[f] = 0 for
// every nonzero gains generator f of the agent.
struct MartingaleSystem {
  std::vector<std::vector<Rational>> rows;
  std::vector<Rational> rhs;

  bool contains(std::span<const Rational> q) const;
};

MartingaleSystem martingale_polytope(const MarketModel& market, std::size_t agent);

struct EmmResult {
  std::optional<MeasureVector> measure;
  // Largest common lower bound on all atom probabilities; zero when the
  // measure set has no strictly positive element, absent when it is empty.
  std::optional<Rational> epsilon;
};

// Max-epsilon point of the martingale-measure vectors satisfying
// sum_i E_{Q^i}[Y^i] <= 0 on rays and = 0 on lineality generators.
EmmResult find_emm_vector(const MarketModel& market, const ExchangeCone& cone);

// Constraint rows (over z indexed [agent * atoms + atom], as P-densities)
// describing the polar of the super-replicable cone: z >= 0 via bounds,
// orthogonality to gains generators, polarity to exchange generators.
std::vector<lp::Constraint> polar_constraints(const MarketModel& market,
                                              const ExchangeCone& cone);

// Largest-epsilon strictly positive element of the polar, normalized by
// sum_{i,w} P(w) z^i(w) <= 1. Absent when the best epsilon is zero.
std::optional<PayoffMatrix> polar_witness(const MarketModel& market,
                                          const ExchangeCone& cone);

// Constraint rows over q (indexed [agent * atoms + atom]) describing the
// measure vectors in M_1 x ... x M_N that satisfy the polarity condition.
std::vector<lp::Constraint> measure_constraints(const MarketModel& market,
                                                const ExchangeCone& cone);

}  // namespace collective_arb

#endif  // COLLECTIVE_ARB_ARBITRAGE_HPP_
