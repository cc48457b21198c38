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

#include "collective_arb/arbitrage.hpp"
#include "collective_arb/certificates.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

namespace collective_arb {
namespace {

using testing::R;
using testing::Rs;

MarketModel single_asset_market(const std::string& up, const std::string& down) {
  MarketDescription d;
  d.atoms = {"w1", "w2"};
  d.prob = Rs({"1/3", "2/3"});
  d.horizon = 1;
  d.global_filtration = {{{"w1", "w2"}}, {{"w1"}, {"w2"}}};
  d.assets = {{"X", {Rs({"1", "1"}), Rs({up, down})}}};
  d.agents = {{"solo", {"X"}, std::nullopt}};
  return build_market(d);
}

TEST(DetectNAAgent, ToyAgentOneHasUniformWitness) {
  const auto m = testing::toy_market();
  const auto c = detect_NA_agent(m, 0);
  ASSERT_FALSE(c.found);
  ASSERT_EQ(c.witness.rows(), 1u);
  EXPECT_EQ(density_to_measure(m, c.witness.row(0)), Rs({"1/2", "1/2"}));
  EXPECT_EQ(density_to_measure(m, c.witness.row(0))[0],
            oracle::binomial_up_probability(2, 3, 1));
  EXPECT_FALSE(certify::check_agent_arbitrage(m, 0, c).has_value());
}

TEST(DetectNAAgent, MonotonePriceIsArbitrage) {
  const auto m = single_asset_market("2", "1");
  const auto c = detect_NA_agent(m, 0);
  ASSERT_TRUE(c.found);
  ASSERT_EQ(c.strategies.size(), 1u);
  ASSERT_EQ(c.strategies[0].size(), 1u);
  EXPECT_GT(c.strategies[0][0], 0);
  EXPECT_FALSE(certify::check_agent_arbitrage(m, 0, c).has_value());
  EXPECT_FALSE(oracle::single_asset_no_arbitrage(m, 0));
}

TEST(DetectNAAgent, TreeAgentTwoWitnessIsMartingale) {
  const auto m = testing::tree_market();
  const auto c = detect_NA_agent(m, 1);
  ASSERT_FALSE(c.found);
  const auto q = density_to_measure(m, c.witness.row(0));
  const auto& x = m.assets()[1].values;
  EXPECT_EQ(oracle::expectation(q, x[1]), x[0][0]);
  for (const auto& block : m.global_filtration().at(1).blocks()) {
    Rational mass = 0, value = 0;
    for (auto a : block) {
      mass += q[a];
      value += q[a] * x[2][a];
    }
    EXPECT_EQ(value, mass * x[1][block[0]]);
  }
  for (const auto& v : q) EXPECT_GT(v, 0);
}

TEST(DetectNAAgent, AgreesWithNodeWiseCheck) {
  for (const auto& [up, down] : std::vector<std::pair<std::string, std::string>>{
           {"2", "1"}, {"3", "1/2"}, {"1", "1/2"}, {"1", "1"}, {"1/2", "1/4"}}) {
    const auto m = single_asset_market(up, down);
    EXPECT_EQ(!detect_NA_agent(m, 0).found, oracle::single_asset_no_arbitrage(m, 0))
        << up << "/" << down;
  }
}

TEST(DetectNAGlobal, ToyAndTreeHaveGlobalArbitrage) {
  for (const auto& m : {testing::toy_market(), testing::tree_market()}) {
    const auto c = detect_NA_global(m);
    ASSERT_TRUE(c.found);
    EXPECT_FALSE(certify::check_global_arbitrage(m, c).has_value());
    Rational total = 0;
    for (std::size_t a = 0; a < c.outcome.cols(); ++a) {
      EXPECT_GE(c.outcome(0, a), 0);
      total += c.outcome(0, a);
    }
    EXPECT_GT(total, 0);
  }
}

TEST(DetectNAGlobal, SingleAgentEqualsAgentCheck) {
  const auto m = single_asset_market("3", "1/2");
  EXPECT_FALSE(detect_NA_global(m).found);
  EXPECT_FALSE(detect_NA_agent(m, 0).found);
}

TEST(DetectNCA, ToyItemOneHolds) {
  const auto m = testing::toy_market();
  const auto y = make_Y0(m, 0);
  const auto c = detect_NCA(m, y);
  ASSERT_FALSE(c.found);
  EXPECT_EQ(c.witness.rows(), 2u);
  EXPECT_FALSE(certify::check_collective_arbitrage(m, y, c).has_value());
}

TEST(DetectNCA, ToyItemTwoFails) {
  const auto m = testing::toy_market();
  const auto y = make_Y0(m, 1);
  const auto c = detect_NCA(m, y);
  ASSERT_TRUE(c.found);
  EXPECT_FALSE(certify::check_collective_arbitrage(m, y, c).has_value());
}

TEST(DetectNCA, ZeroConeIsComponentwiseNA) {
  for (const auto& m : {testing::toy_market(), testing::tree_market(), testing::toy_market("10")}) {
    bool any = false;
    for (std::size_t i = 0; i < m.num_agents(); ++i) any = any || detect_NA_agent(m, i).found;
    EXPECT_EQ(detect_NCA(m, make_zero(m)).found, any);
  }
}

TEST(MartingalePolytope, ToyAgentOneIsAPoint) {
  const auto m = testing::toy_market();
  const auto sys = martingale_polytope(m, 0);
  const auto q = oracle::solve_square(sys.rows, sys.rhs);
  ASSERT_TRUE(q.has_value());
  EXPECT_EQ(*q, Rs({"1/2", "1/2"}));
  EXPECT_TRUE(sys.contains(*q));
  EXPECT_FALSE(sys.contains(Rs({"1/3", "2/3"})));
}

TEST(MartingalePolytope, TreeAgentOneFamily) {
  const auto m = testing::tree_market();
  const auto sys = martingale_polytope(m, 0);
  for (const auto& q : {R("0"), R("1/5"), R("1/2"), R("1")}) {
    EXPECT_TRUE(sys.contains(testing::tree_m1_member(q))) << q;
  }
  EXPECT_FALSE(sys.contains(testing::tree_m2_member(R("1/2"))));
  EXPECT_FALSE(sys.contains(std::vector<Rational>(6, R("1/6"))));
}

TEST(MartingalePolytope, ConstantAssetGivesSimplex) {
  const auto m = single_asset_market("1", "1");
  const auto sys = martingale_polytope(m, 0);
  EXPECT_TRUE(sys.contains(Rs({"1/3", "2/3"})));
  EXPECT_TRUE(sys.contains(Rs({"1", "0"})));
  EXPECT_FALSE(sys.contains(Rs({"1/2", "1/3"})));
}

TEST(FindEmmVector, ToyItemOne) {
  const auto m = testing::toy_market();
  const auto y = make_Y0(m, 0);
  const auto r = find_emm_vector(m, y);
  ASSERT_TRUE(r.measure.has_value());
  EXPECT_EQ(r.measure->q.row_vector(0), Rs({"1/2", "1/2"}));
  EXPECT_EQ(r.measure->q.row_vector(1), Rs({"1/6", "5/6"}));
  EXPECT_EQ(r.measure->q(1, 0), oracle::binomial_up_probability(4, 9, 3));
  EXPECT_TRUE(r.measure->is_equivalent());
  EXPECT_FALSE(certify::check_measure_vector(m, y, *r.measure, true).has_value());
}

TEST(FindEmmVector, TreeItemThreeAgreesOnFirstPeriod) {
  const auto m = testing::tree_market();
  const auto y = make_Y0(m, 1);
  const auto r = find_emm_vector(m, y);
  ASSERT_TRUE(r.measure.has_value());
  for (const auto& block : m.global_filtration().at(1).blocks()) {
    Rational q1 = 0, q2 = 0;
    for (auto a : block) {
      q1 += r.measure->q(0, a);
      q2 += r.measure->q(1, a);
    }
    EXPECT_EQ(q1, q2);
  }
}

TEST(FindEmmVector, ToyItemThreeIsEmptyWithoutArbitrage) {
  const auto m = testing::toy_market();
  const auto y = testing::toy_span_cone(m);
  EXPECT_FALSE(find_emm_vector(m, y).measure.has_value());
  EXPECT_FALSE(detect_NCA(m, y).found);
}

TEST(PolarWitness, ToyItemThreeExists) {
  const auto m = testing::toy_market();
  const auto y = testing::toy_span_cone(m);
  const auto z = polar_witness(m, y);
  ASSERT_TRUE(z.has_value());
  EXPECT_FALSE(certify::check_polar_witness(m, y, *z).has_value());
}

TEST(PolarWitness, AbsentUnderArbitrage) {
  const auto m = single_asset_market("2", "1");
  EXPECT_FALSE(polar_witness(m, make_zero(m)).has_value());
}

TEST(PolarWitness, PerturbedItemThreeLosesSeparation) {
  const auto m = testing::toy_market("8");
  const auto y = testing::toy_span_cone(m);
  EXPECT_FALSE(polar_witness(m, y).has_value());
  const auto c = detect_NCA(m, y);
  ASSERT_TRUE(c.found);
  EXPECT_FALSE(certify::check_collective_arbitrage(m, y, c).has_value());
}

TEST(MeasureVector, ExpectationAndEquivalence) {
  MeasureVector q{testing::matrix({{"1/2", "1/2"}, {"0", "1"}})};
  EXPECT_FALSE(q.is_equivalent());
  EXPECT_EQ(q.expectation(0, Rs({"3", "1"})), 2);
  EXPECT_EQ(q.expectation(1, Rs({"9", "3"})), 3);
}

}  // namespace
}  // namespace collective_arb
