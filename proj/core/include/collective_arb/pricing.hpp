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

#ifndef COLLECTIVE_ARB_PRICING_HPP_
#define COLLECTIVE_ARB_PRICING_HPP_

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "collective_arb/arbitrage.hpp"
#include "collective_arb/exchange_cone.hpp"
#include "collective_arb/market.hpp"

namespace collective_arb {

// N x |atoms| claims; row i must be measurable for agent i.
using ClaimVector = PayoffMatrix;

// Raised when an operation's mathematical preconditions do not hold, e.g. a
// fairness allocation requested for a cone without deterministic transfers.
class PreconditionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Raised when a computed result violates an identity it must satisfy.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// A super-replication value with the hedge that attains it. For -inf values
// the fields hold some feasible hedge and descent holds a direction that keeps
// it feasible while lowering the capital without bound.
struct Hedge {
  struct Direction {
    std::vector<Rational> capital;
    std::vector<std::vector<Rational>> strategies;
    std::vector<Rational> ray_coeffs;
    std::vector<Rational> lineality_coeffs;
  };

  ExtendedRational value;
  std::vector<Rational> capital;                 // m (one entry for pi-type)
  std::vector<std::vector<Rational>> strategies;  // per agent, over gains_basis
  std::vector<Rational> ray_coeffs;
  std::vector<Rational> lineality_coeffs;
  PayoffMatrix exchange;                          // Y, empty without a cone
  // Dual multipliers of the hedging constraints, read back as measures.
  std::optional<MeasureVector> lp_dual;
  std::optional<Direction> descent;
};

// Classical super-replication of a single claim row for one agent.
Hedge rho_agent_plus(const MarketModel& market, std::size_t agent,
                     std::span<const Rational> claim);

// Classical super-replication in the whole market under the global filtration.
Hedge rho_full_plus(const MarketModel& market, std::span<const Rational> claim);

ExtendedRational rho_N_plus(const MarketModel& market, const ClaimVector& g);
ExtendedRational pi_N_plus(const MarketModel& market, const ClaimVector& g);
// pi_N_plus from its own program {min m : m + k^i >= g^i for all i}.
Hedge pi_N_plus_direct(const MarketModel& market, const ClaimVector& g);

Hedge rho_Y_plus(const MarketModel& market, const ExchangeCone& cone, const ClaimVector& g);
Hedge pi_Y_plus(const MarketModel& market, const ExchangeCone& cone, const ClaimVector& g);

struct DualValue {
  ExtendedRational value;
  std::optional<MeasureVector> optimizer;  // max-epsilon point of the argmax face
  bool via_polar = false;                  // general polar program was used
};

// sup of sum_i E_{Q^i}[g^i] over the normalized polar. With deterministic
// transfers in the cone this is posed over martingale-measure vectors,
// otherwise over the polar densities with E[z^i] = 1.
DualValue dual_rho_Y(const MarketModel& market, const ExchangeCone& cone, const ClaimVector& g);

// sup over nonzero polar z of sum_i E[z^i g^i] / sum_i E[z^i].
DualValue dual_pi_Y(const MarketModel& market, const ExchangeCone& cone, const ClaimVector& g);

// inf of sum_i E_{Q^i}[g^i] over the same set as dual_rho_Y.
DualValue dual_rho_Y_inf(const MarketModel& market, const ExchangeCone& cone,
                         const ClaimVector& g);

struct FairnessAllocation {
  MeasureVector q_hat;
  std::vector<Rational> allocations;     // E_{Qhat^i}[g^i]
  std::vector<Rational> shift;           // x^i = E_{Qhat^i}[Yhat^i], sums to 0
  std::vector<Rational> raw_capital;     // mhat
  PayoffMatrix raw_exchange;             // Yhat
  std::vector<Rational> adjusted_capital;  // mtilde = mhat + x
  PayoffMatrix adjusted_exchange;          // Ytilde = Yhat - x
  std::vector<std::vector<Rational>> strategies;
  // Per-agent cost with zero-price instruments under Qhat^i, each from its
  // own program; equals allocations.
  std::vector<Rational> agent_costs;
};

// Throws PreconditionError when the cone lacks deterministic transfers or
// the collective price is not finite.
FairnessAllocation fairness_allocation(const MarketModel& market, const ExchangeCone& cone,
                                       const ClaimVector& g);

// inf {m : m + k + Y >= g, E_q[Y] = 0} for one agent with Y measurable on its
// terminal partition.
ExtendedRational rho_under_measure(const MarketModel& market, std::size_t agent,
                                   std::span<const Rational> q,
                                   std::span<const Rational> claim);

ExtendedRational rho_Y_minus(const MarketModel& market, const ExchangeCone& cone,
                             const ClaimVector& g);
ExtendedRational pi_Y_minus(const MarketModel& market, const ExchangeCone& cone,
                            const ClaimVector& g);
ExtendedRational rho_N_minus(const MarketModel& market, const ClaimVector& g);

struct CooperationValue {
  ExtendedRational selling;  // rho_N_plus - rho_Y_plus
  ExtendedRational total;    // selling + (rho_Y_minus - rho_N_minus)
};

CooperationValue value_of_cooperation(const MarketModel& market, const ExchangeCone& cone,
                                      const ClaimVector& g);

struct Compatibility {
  bool compatible = true;
  // When incompatible: strategies and exchange with k + Y + p - g >= 0,
  // positive somewhere.
  std::vector<std::vector<Rational>> strategies;
  std::vector<Rational> ray_coeffs;
  std::vector<Rational> lineality_coeffs;
  PayoffMatrix surplus;
  // sum p > rho_Y_plus(g), which makes the total cost incompatible.
  bool total_cost_exceeds_price = false;
};

Compatibility price_compatibility(const MarketModel& market, const ExchangeCone& cone,
                                  const ClaimVector& g, std::span<const Rational> prices);

// The unique element of the measure set when it has exactly one; found by
// minimizing and maximizing every coordinate.
std::optional<MeasureVector> singleton_measure(const MarketModel& market,
                                               const ExchangeCone& cone);

struct PricingReport {
  std::vector<ExtendedRational> rho_i;
  ExtendedRational rho_N;
  ExtendedRational pi_N;
  ExtendedRational rho_Y;
  ExtendedRational pi_Y;
  std::optional<ExtendedRational> dual_value;
  Hedge primal;
  std::optional<MeasureVector> dual_optimizer;
  std::optional<FairnessAllocation> fairness;
  std::optional<std::string> fairness_unavailable;
  CooperationValue cooperation;
  ExtendedRational rho_Y_minus;
  ExtendedRational rho_N_minus;
};

// Runs every functional and checks the identities linking them. Throws
// InvariantViolation when one fails.
PricingReport price_claims(const MarketModel& market, const ExchangeCone& cone,
                           const ClaimVector& g);

}  // namespace collective_arb

#endif  // COLLECTIVE_ARB_PRICING_HPP_
