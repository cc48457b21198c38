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

#include <gtest/gtest.h>

#include <algorithm>

#include "collective_arb/certificates.hpp"
#include "collective_arb/pricing.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

namespace collective_arb {
namespace {

using testing::R;
using testing::Rs;

ExtendedRational E(const char* text) { return ExtendedRational(R(text)); }

// Sum of expectations over the tree's Y0(t=1) measure family, which pairs the
// two agent families at the same parameter.
Rational tree_family_value(const Rational& q, const ClaimVector& g) {
  return oracle::expectation(testing::tree_m1_member(q), g.row(0)) +
         oracle::expectation(testing::tree_m2_member(q), g.row(1));
}

class TreePricing : public ::testing::Test {
 protected:
  MarketModel m = testing::tree_market();
  ClaimVector g = testing::tree_claims();
  ExchangeCone y = make_Y0(m, 1);
};

TEST_F(TreePricing, AgentPrices) {
  const auto h1 = rho_agent_plus(m, 0, g.row(0));
  const auto h2 = rho_agent_plus(m, 1, g.row(1));
  EXPECT_EQ(h1.value, E("22"));
  EXPECT_EQ(h2.value, E("16"));
  EXPECT_FALSE(certify::check_agent_hedge(m, 0, g.row(0), h1).has_value());
  EXPECT_FALSE(certify::check_agent_hedge(m, 1, g.row(1), h2).has_value());
  // The agent families are segments; linear objectives peak at an endpoint.
  const auto sup1 = std::max(oracle::expectation(testing::tree_m1_member(0), g.row(0)),
                             oracle::expectation(testing::tree_m1_member(1), g.row(0)));
  EXPECT_EQ(h1.value, ExtendedRational(sup1));
}

TEST_F(TreePricing, StandAloneAggregates) {
  EXPECT_EQ(rho_N_plus(m, g), E("38"));
  EXPECT_EQ(pi_N_plus(m, g), E("22"));
  EXPECT_EQ(pi_N_plus_direct(m, g).value, E("22"));
}

TEST_F(TreePricing, CollectivePriceAndHedge) {
  const auto h = rho_Y_plus(m, y, g);
  EXPECT_EQ(h.value, E("32"));
  EXPECT_FALSE(certify::check_hedge(m, &y, g, h).has_value());
  EXPECT_EQ(h.value, ExtendedRational(std::max(tree_family_value(0, g), tree_family_value(1, g))));
  for (std::size_t a = 0; a < 6; ++a) EXPECT_EQ(h.exchange.column_sum(a), 0);
}

TEST_F(TreePricing, DualAttainedAtFamilyEndpoint) {
  const auto d = dual_rho_Y(m, y, g);
  EXPECT_EQ(d.value, E("32"));
  ASSERT_TRUE(d.optimizer.has_value());
  EXPECT_EQ(d.optimizer->q.row_vector(0), testing::tree_m1_member(1));
  EXPECT_EQ(d.optimizer->q.row_vector(1), testing::tree_m2_member(1));
  EXPECT_FALSE(d.via_polar);
}

TEST_F(TreePricing, SubReplication) {
  const auto lower = std::min(tree_family_value(0, g), tree_family_value(1, g));
  EXPECT_EQ(rho_Y_minus(m, y, g), ExtendedRational(lower));
  EXPECT_EQ(dual_rho_Y_inf(m, y, g).value, ExtendedRational(lower));
  EXPECT_EQ(rho_Y_minus(m, y, g), -rho_Y_plus(m, y, g * Rational(-1)).value);
}

TEST_F(TreePricing, CooperationSavesSix) {
  const auto v = value_of_cooperation(m, y, g);
  EXPECT_EQ(v.selling, E("6"));
  EXPECT_GE(v.total, v.selling);
}

TEST_F(TreePricing, FairnessAllocationSumsToPrice) {
  const auto f = fairness_allocation(m, y, g);
  EXPECT_EQ(f.allocations[0] + f.allocations[1], 32);
  EXPECT_EQ(f.allocations[0], oracle::expectation(testing::tree_m1_member(1), g.row(0)));
  EXPECT_EQ(f.shift[0] + f.shift[1], 0);
  EXPECT_EQ(f.agent_costs, f.allocations);
  EXPECT_EQ(f.adjusted_capital, f.allocations);
  for (std::size_t i = 0; i < 2; ++i) {
    EXPECT_EQ(f.q_hat.expectation(i, f.adjusted_exchange.row(i)), 0);
  }
  EXPECT_FALSE(certify::check_fairness(m, y, g, f, E("32")).has_value());
}

TEST_F(TreePricing, StandAlonePricesAreIncompatible) {
  const std::vector<Rational> p{22, 16};
  const auto c = price_compatibility(m, y, g, p);
  EXPECT_FALSE(c.compatible);
  EXPECT_TRUE(c.total_cost_exceeds_price);
}

TEST_F(TreePricing, FullReportIsConsistent) {
  const auto r = price_claims(m, y, g);
  EXPECT_EQ(r.rho_Y, E("32"));
  EXPECT_EQ(r.pi_Y, E("16"));
  EXPECT_EQ(r.rho_N, E("38"));
  ASSERT_TRUE(r.dual_value.has_value());
  EXPECT_EQ(*r.dual_value, E("32"));
  ASSERT_TRUE(r.fairness.has_value());
  // The reported hedge trades only at the middle node, equal and opposite.
  const auto& y1 = r.primal.exchange;
  for (std::size_t a : {0u, 1u, 4u, 5u}) EXPECT_EQ(y1(0, a), 0) << a;
  EXPECT_EQ(y1(0, 2), y1(0, 3));
  EXPECT_EQ(Rational(abs(y1(0, 2))), 6);
  EXPECT_EQ(y1.column_sum(2), 0);
  EXPECT_FALSE(certify::check_hedge(m, &y, g, r.primal).has_value());
}

class ToyPricing : public ::testing::Test {
 protected:
  MarketModel m = testing::toy_market();
  ClaimVector g = testing::toy_claims(m);
};

TEST_F(ToyPricing, ItemOneCompleteMarkets) {
  const auto y = make_Y0(m, 0);
  const Rational e1 = oracle::expectation(Rs({"1/2", "1/2"}), g.row(0));
  const Rational e2 = oracle::expectation(Rs({"1/6", "5/6"}), g.row(1));
  EXPECT_EQ(e1, 2);
  EXPECT_EQ(e2, 4);
  EXPECT_EQ(rho_N_plus(m, g), ExtendedRational(e1 + e2));
  EXPECT_EQ(pi_N_plus(m, g), ExtendedRational(std::max(e1, e2)));
  EXPECT_EQ(rho_Y_plus(m, y, g).value, ExtendedRational(e1 + e2));
  EXPECT_EQ(pi_Y_plus(m, y, g).value, ExtendedRational(Rational((e1 + e2) / 2)));
  EXPECT_EQ(value_of_cooperation(m, y, g).selling, E("0"));
}

TEST_F(ToyPricing, ItemOneFairnessAndCompatibility) {
  const auto y = make_Y0(m, 0);
  const auto f = fairness_allocation(m, y, g);
  EXPECT_EQ(f.allocations, Rs({"2", "4"}));
  EXPECT_EQ(f.adjusted_capital, Rs({"2", "4"}));
  EXPECT_TRUE(price_compatibility(m, y, g, f.adjusted_capital).compatible);
  const std::vector<Rational> greedy{3, 4};
  EXPECT_FALSE(price_compatibility(m, y, g, greedy).compatible);
}

TEST_F(ToyPricing, ItemOneSingletonMeasure) {
  const auto y = make_Y0(m, 0);
  const auto q = singleton_measure(m, y);
  ASSERT_TRUE(q.has_value());
  EXPECT_EQ(q->expectation(0, g.row(0)) + q->expectation(1, g.row(1)), 6);
  EXPECT_FALSE(singleton_measure(testing::tree_market(), make_Y0(testing::tree_market(), 1)));
}

TEST_F(ToyPricing, ItemFourIsMinusInfinity) {
  const auto y = cone_add(m, testing::toy_span_cone(m), make_RN0(m));
  const auto h = rho_Y_plus(m, y, g);
  EXPECT_TRUE(h.value.is_neg_inf());
  EXPECT_TRUE(h.descent.has_value());
  EXPECT_FALSE(certify::check_hedge(m, &y, g, h).has_value());
  EXPECT_TRUE(dual_rho_Y(m, y, g).value.is_neg_inf());
  EXPECT_TRUE(rho_Y_plus(m, y, ClaimVector(2, 2)).value.is_neg_inf());
}

TEST_F(ToyPricing, ItemThreeSpanPrice) {
  const auto y = testing::toy_span_cone(m);
  const Rational beta = oracle::expectation(Rs({"1/6", "5/6"}), Rs({"3/2", "1/2"}));
  EXPECT_EQ(beta, R("2/3"));
  const Rational gamma = beta / (1 + beta);
  EXPECT_EQ(pi_Y_plus(m, y, g).value, ExtendedRational(Rational(gamma * 2 + (1 - gamma) * 4)));
}

TEST_F(ToyPricing, ZeroConeMatchesStandAlone) {
  const auto z = make_zero(m);
  EXPECT_EQ(rho_Y_plus(m, z, g).value, rho_N_plus(m, g));
  EXPECT_EQ(pi_Y_plus(m, z, g).value, pi_N_plus(m, g));
  EXPECT_EQ(value_of_cooperation(m, z, g).selling, E("0"));
  ExtendedRational lower = 0;
  const auto neg = g * Rational(-1);
  for (std::size_t i = 0; i < 2; ++i) lower = add(lower, -rho_agent_plus(m, i, neg.row(i)).value);
  EXPECT_EQ(rho_Y_minus(m, z, g), lower);
}

TEST_F(ToyPricing, ZeroClaim) {
  const ClaimVector zero(2, 2);
  const auto y = make_Y0(m, 0);
  EXPECT_EQ(rho_agent_plus(m, 0, zero.row(0)).value, E("0"));
  EXPECT_EQ(rho_N_plus(m, zero), E("0"));
  EXPECT_EQ(rho_Y_plus(m, y, zero).value, E("0"));
  EXPECT_EQ(rho_Y_minus(m, y, zero), E("0"));
  const auto f = fairness_allocation(m, y, zero);
  EXPECT_EQ(f.allocations, Rs({"0", "0"}));
}

TEST_F(ToyPricing, ConstantClaimsPriceAtTheirSum) {
  const auto y = make_Y0(m, 0);
  const auto c = testing::matrix({{"5/2", "5/2"}, {"-1", "-1"}});
  EXPECT_EQ(dual_rho_Y(m, y, c).value, E("3/2"));
  EXPECT_EQ(rho_Y_plus(m, y, c).value, E("3/2"));
}

TEST_F(ToyPricing, CashAdditiveAndMonotone) {
  const auto y = make_Y0(m, 0);
  const auto base = rho_Y_plus(m, y, g).value.value();
  const auto c = testing::matrix({{"1/3", "1/3"}, {"-2", "-2"}});
  EXPECT_EQ(rho_Y_plus(m, y, g + c).value, ExtendedRational(Rational(base + R("1/3") - 2)));
  auto bigger = g;
  bigger(1, 0) += 1;
  EXPECT_GE(rho_Y_plus(m, y, bigger).value, ExtendedRational(base));
  EXPECT_EQ(rho_Y_plus(m, cone_add(m, y, make_RN0(m)), g).value, ExtendedRational(base));
}

TEST_F(ToyPricing, FairnessNeedsDeterministicTransfers) {
  EXPECT_THROW(fairness_allocation(m, testing::toy_span_cone(m), g), PreconditionError);
  const auto y = cone_add(m, testing::toy_span_cone(m), make_RN0(m));
  EXPECT_THROW(fairness_allocation(m, y, g), PreconditionError);
}

TEST_F(ToyPricing, ItemTwoArbitrageGivesMinusInfinity) {
  const auto y = make_Y0(m, 1);
  EXPECT_TRUE(rho_Y_plus(m, y, g).value.is_neg_inf());
  EXPECT_TRUE(pi_Y_plus(m, y, g).value.is_neg_inf());
}

TEST(FullExchangeCollapse, CommonFiltrationMatchesFullMarket) {
  // X2 = (5, 3) from 4 shares the measure (1/2, 1/2), so no global arbitrage.
  const auto m = testing::toy_market("5");
  const auto g = testing::toy_claims(m);
  std::vector<Rational> total(2);
  for (std::size_t a = 0; a < 2; ++a) total[a] = g(0, a) + g(1, a);
  const auto full = rho_full_plus(m, total);
  EXPECT_EQ(full.value, E("6"));
  EXPECT_EQ(rho_Y_plus(m, make_Y0(m, 1), g).value, full.value);
}

TEST(ClaimValidation, RowsMustBeAgentMeasurable) {
  auto d = testing::tree_description();
  d.agents[0].filtration = std::vector<MarketDescription::LabelPartition>{
      {{"w1", "w2", "w3", "w4", "w5", "w6"}},
      {{"w1", "w2"}, {"w3", "w4"}, {"w5", "w6"}},
      {{"w1", "w2"}, {"w3", "w4"}, {"w5", "w6"}}};
  d.agents[0].assets = {};
  d.agents[1].assets = {"X1", "X2"};
  const auto m = build_market(d);
  EXPECT_THROW(rho_N_plus(m, testing::tree_claims()), ValidationError);
  EXPECT_THROW(rho_N_plus(m, ClaimVector(2, 5)), std::invalid_argument);
}

}  // namespace
}  // namespace collective_arb
