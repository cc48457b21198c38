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

#ifndef COLLECTIVE_ARB_CERTIFICATES_HPP_
#define COLLECTIVE_ARB_CERTIFICATES_HPP_

#include <optional>
#include <span>
#include <string>

#include "collective_arb/arbitrage.hpp"
#include "collective_arb/exchange_cone.hpp"
#include "collective_arb/market.hpp"
#include "collective_arb/pricing.hpp"

// Re-verification of emitted certificates using matrix arithmetic only. None
// of these routines builds or solves a linear program. Each returns nullopt
// when the certificate holds and an explanation otherwise.
namespace collective_arb::certify {

using Verdict = std::optional<std::string>;

Verdict check_agent_arbitrage(const MarketModel& market, std::size_t agent,
                              const ArbitrageCertificate& cert);
Verdict check_global_arbitrage(const MarketModel& market, const ArbitrageCertificate& cert);
Verdict check_collective_arbitrage(const MarketModel& market, const ExchangeCone& cone,
                                   const ArbitrageCertificate& cert);

// z strictly positive and in the polar of the super-replicable cone.
Verdict check_polar_witness(const MarketModel& market, const ExchangeCone& cone,
                            const PayoffMatrix& z);

// Every row a probability vector, martingale for its agent, polarity holds.
// With require_equivalent also entrywise > 0.
Verdict check_measure_vector(const MarketModel& market, const ExchangeCone& cone,
                             const MeasureVector& q, bool require_equivalent);

// m^i + k^i + Y^i >= g^i with Y in the cone and sum m = value (or m = value
// for single-capital hedges).
Verdict check_hedge(const MarketModel& market, const ExchangeCone* cone,
                    const ClaimVector& g, const Hedge& hedge);

// Single-agent hedge from rho_agent_plus: m + k >= claim.
Verdict check_agent_hedge(const MarketModel& market, std::size_t agent,
                          std::span<const Rational> claim, const Hedge& hedge);

Verdict check_fairness(const MarketModel& market, const ExchangeCone& cone,
                       const ClaimVector& g, const FairnessAllocation& fair,
                       const ExtendedRational& rho_Y);

}  // namespace collective_arb::certify

#endif  // COLLECTIVE_ARB_CERTIFICATES_HPP_
