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

#include "fixtures.hpp"

#include <cstdlib>
#include <iostream>

namespace collective_arb::testing {

Rational R(const std::string& text) {
  auto value = parse_rational(text);
  if (!value) {
    std::cerr << "bad rational literal in test: " << text << "\n";
    std::abort();
  }
  return *value;
}

std::vector<Rational> Rs(const std::vector<std::string>& texts) {
  std::vector<Rational> out;
  for (const auto& t : texts) out.push_back(R(t));
  return out;
}

PayoffMatrix matrix(const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::vector<Rational>> values;
  for (const auto& r : rows) values.push_back(Rs(r));
  return RationalMatrix::from_rows(values);
}

MarketDescription toy_description(const std::string& x2_up) {
  MarketDescription d;
  d.atoms = {"w1", "w2"};
  d.prob = Rs({"1/2", "1/2"});
  d.horizon = 1;
  d.global_filtration = {{{"w1", "w2"}}, {{"w1"}, {"w2"}}};
  d.assets = {{"X1", {Rs({"2", "2"}), Rs({"3", "1"})}},
              {"X2", {Rs({"4", "4"}), Rs({x2_up, "3"})}}};
  d.agents = {{"agent1", {"X1"}, std::nullopt}, {"agent2", {"X2"}, std::nullopt}};
  return d;
}

MarketModel toy_market(const std::string& x2_up) { return build_market(toy_description(x2_up)); }

ClaimVector toy_claims(const MarketModel& market) {
  ClaimVector g(2, 2);
  g.set_row(0, market.assets()[0].values[1]);
  g.set_row(1, market.assets()[1].values[1]);
  return g;
}

ExchangeCone toy_span_cone(const MarketModel& market) {
  std::vector<PayoffMatrix> gens;
  for (std::size_t j = 0; j < 2; ++j) {
    const auto& x = market.assets()[j].values[1];
    PayoffMatrix y(2, 2);
    for (std::size_t a = 0; a < 2; ++a) {
      y(0, a) = x[a];
      y(1, a) = -x[a];
    }
    gens.push_back(y);
  }
  return make_span(market, std::move(gens));
}

MarketDescription tree_description() {
  MarketDescription d;
  d.atoms = {"w1", "w2", "w3", "w4", "w5", "w6"};
  d.prob.assign(6, R("1/6"));
  d.horizon = 2;
  d.global_filtration = {{{"w1", "w2", "w3", "w4", "w5", "w6"}},
                         {{"w1", "w2"}, {"w3", "w4"}, {"w5", "w6"}},
                         {{"w1"}, {"w2"}, {"w3"}, {"w4"}, {"w5"}, {"w6"}}};
  d.assets = {{"X1",
               {std::vector<Rational>(6, R("16")), Rs({"24", "24", "16", "16", "8", "8"}),
                Rs({"32", "16", "24", "8", "12", "6"})}},
              {"X2",
               {std::vector<Rational>(6, R("12")), Rs({"16", "16", "12", "12", "8", "8"}),
                Rs({"24", "8", "16", "8", "6", "12"})}}};
  d.agents = {{"agent1", {"X1"}, std::nullopt}, {"agent2", {"X2"}, std::nullopt}};
  return d;
}

MarketModel tree_market() { return build_market(tree_description()); }

ClaimVector tree_claims() {
  return matrix({{"26", "18", "24", "20", "12", "9"}, {"12", "8", "6", "6", "24", "18"}});
}

std::vector<Rational> tree_m1_member(const Rational& q) {
  return {q / 4, q / 4, (1 - q) / 2, (1 - q) / 2, q / 6, 2 * q / 6};
}

std::vector<Rational> tree_m2_member(const Rational& p) {
  return {p / 4, p / 4, (1 - p) / 2, (1 - p) / 2, 2 * p / 6, p / 6};
}

}  // namespace collective_arb::testing
