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

#ifndef COLLECTIVE_ARB_TESTS_FIXTURES_HPP_
#define COLLECTIVE_ARB_TESTS_FIXTURES_HPP_

#include <string>
#include <vector>

#include "collective_arb/exchange_cone.hpp"
#include "collective_arb/market.hpp"
#include "collective_arb/pricing.hpp"

namespace collective_arb::testing {

// Parses "p/q" or "p"; aborts the test on malformed input.
Rational R(const std::string& text);
std::vector<Rational> Rs(const std::vector<std::string>& texts);
PayoffMatrix matrix(const std::vector<std::vector<std::string>>& rows);

// Two atoms, uniform P. Agent 1 trades X1: 2 -> (3, 1); agent 2 trades
// X2: 4 -> (x2_up, 3).
MarketDescription toy_description(const std::string& x2_up = "9");
MarketModel toy_market(const std::string& x2_up = "9");
// g = (X1_1, X2_1).
ClaimVector toy_claims(const MarketModel& market);
// span{(X1_1, -X1_1), (X2_1, -X2_1)}.
ExchangeCone toy_span_cone(const MarketModel& market);

// Six atoms, two periods, t=1 partition {w1,w2} {w3,w4} {w5,w6}; agent i
// trades Xi under the common filtration.
MarketDescription tree_description();
MarketModel tree_market();
// g1 = (26,18,24,20,12,9), g2 = (12,8,6,6,24,18).
ClaimVector tree_claims();

// The market M1 family (q/4, q/4, (1-q)/2, (1-q)/2, q/6, 2q/6) and the M2
// family with the last two entries swapped.
std::vector<Rational> tree_m1_member(const Rational& q);
std::vector<Rational> tree_m2_member(const Rational& p);

}  // namespace collective_arb::testing

#endif  // COLLECTIVE_ARB_TESTS_FIXTURES_HPP_
