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

#include "collective_arb/exchange_cone.hpp"
#include "collective_arb/random_market.hpp"
#include "support/fixtures.hpp"

namespace collective_arb {
namespace {

using testing::R;
using testing::Rs;

MarketModel one_atom_market(std::size_t agents) {
  MarketDescription d;
  d.atoms = {"w"};
  d.prob = {Rational(1)};
  d.horizon = 1;
  d.global_filtration = {{{"w"}}, {{"w"}}};
  d.assets = {{"X", {{Rational(1)}, {Rational(1)}}}};
  for (std::size_t i = 0; i < agents; ++i) {
    d.agents.push_back({"a" + std::to_string(i), {"X"}, std::nullopt});
  }
  return build_market(d);
}

MarketModel three_agent_toy() {
  auto d = testing::toy_description();
  d.agents.push_back({"agent3", {"X1"}, std::nullopt});
  return build_market(d);
}

bool members_equal(const ExchangeCone& a, const ExchangeCone& b) { return cone_equivalent(a, b); }

TEST(MakeY0, TimeZeroIsDeterministicTransfers) {
  const auto m = testing::toy_market();
  const auto y = make_Y0(m, 0);
  EXPECT_TRUE(y.rays().empty());
  ASSERT_EQ(y.lineality().size(), 1u);
  EXPECT_EQ(y.lineality()[0], pair_exchange(2, 2, 0, 1));
  EXPECT_TRUE(y.meta().is_zero_sum);
  EXPECT_TRUE(y.meta().contains_RN0);
  EXPECT_EQ(y.meta().measurable_at, std::optional<std::size_t>(0));
}

TEST(MakeY0, OneAtomTerminalEqualsTimeZero) {
  const auto m = one_atom_market(2);
  const auto y = make_Y0(m, 1);
  ASSERT_EQ(y.lineality().size(), 1u);
  EXPECT_TRUE(members_equal(y, make_Y0(m, 0)));
}

TEST(MakeY0, TreeTimeOneHasOneGeneratorPerNode) {
  const auto m = testing::tree_market();
  const auto y = make_Y0(m, 1);
  EXPECT_EQ(y.lineality().size(), m.global_filtration().at(1).size() * (m.num_agents() - 1));
  EXPECT_EQ(y.lineality().size(), 3u);
}

TEST(MakeGrouping, SingleGroupReducesToY0) {
  const auto m = three_agent_toy();
  for (std::size_t t = 0; t <= 1; ++t) {
    EXPECT_TRUE(members_equal(make_grouping(m, {{0, 1, 2}}, t), make_Y0(m, t)));
  }
}

TEST(MakeGrouping, IsolatedAgentNeverExchanges) {
  const auto m = three_agent_toy();
  const auto y = make_grouping(m, {{0}, {1, 2}}, 1);
  EXPECT_EQ(y.lineality().size(), m.num_atoms());
  for (const auto& gen : y.lineality()) {
    for (std::size_t a = 0; a < m.num_atoms(); ++a) {
      EXPECT_EQ(gen(0, a), 0);
      EXPECT_EQ(gen(1, a) + gen(2, a), 0);
    }
  }
  EXPECT_TRUE(y.meta().grouping);
  EXPECT_FALSE(y.meta().contains_RN0);
}

TEST(MakeGrouping, DimensionIsSumOfGroupSizesMinusOne) {
  const auto m = one_atom_market(4);
  const auto y = make_grouping(m, {{0, 1}, {2, 3}}, 1);
  std::vector<std::vector<Rational>> flat;
  for (const auto& g : y.lineality()) {
    std::vector<Rational> v;
    for (std::size_t i = 0; i < 4; ++i) v.push_back(g(i, 0));
    flat.push_back(v);
  }
  EXPECT_EQ(rank(flat), 2u);
}

TEST(MakeGrouping, RejectsNonPartitions) {
  const auto m = three_agent_toy();
  EXPECT_THROW(make_grouping(m, {{0, 1}}, 0), std::invalid_argument);
  EXPECT_THROW(make_grouping(m, {{0, 1}, {1, 2}}, 0), std::invalid_argument);
}

TEST(MakeSpan, ToyItemThreeFlags) {
  const auto m = testing::toy_market();
  const auto y = testing::toy_span_cone(m);
  ASSERT_EQ(y.lineality().size(), 2u);
  EXPECT_EQ(y.lineality()[0], testing::matrix({{"3", "1"}, {"-3", "-1"}}));
  EXPECT_EQ(y.lineality()[1], testing::matrix({{"9", "3"}, {"-9", "-3"}}));
  EXPECT_TRUE(y.meta().is_zero_sum);
  EXPECT_FALSE(y.meta().contains_RN0);
}

TEST(MakeSpan, EmptyListIsZeroCone) {
  const auto m = testing::toy_market();
  const auto y = make_span(m, {});
  EXPECT_EQ(y.num_generators(), 0u);
  EXPECT_TRUE(cone_contains(y, PayoffMatrix(2, 2)).member);
  EXPECT_FALSE(cone_contains(y, pair_exchange(2, 2, 0, 1)).member);
  EXPECT_TRUE(members_equal(y, make_zero(m)));
}

TEST(MakeSpan, ConstantTransferGivesRN0) {
  const auto m = testing::toy_market();
  const auto y = make_span(m, {pair_exchange(2, 2, 0, 1), PayoffMatrix(2, 2)});
  EXPECT_TRUE(y.meta().contains_RN0);
  EXPECT_EQ(y.num_generators(), 1u);
}

TEST(MakeSpan, RejectsUnmeasurableRows) {
  const auto m = testing::tree_market();
  PayoffMatrix y(2, 6);
  y(0, 0) = 1;
  y(1, 0) = -1;
  EXPECT_NO_THROW(make_span(m, {y}));
  auto d = testing::tree_description();
  d.agents[0].filtration = std::vector<MarketDescription::LabelPartition>{
      {{"w1", "w2", "w3", "w4", "w5", "w6"}},
      {{"w1", "w2"}, {"w3", "w4"}, {"w5", "w6"}},
      {{"w1", "w2"}, {"w3", "w4"}, {"w5", "w6"}}};
  d.agents[0].assets = {};
  d.agents[1].assets = {"X1", "X2"};
  const auto coarse = build_market(d);
  EXPECT_THROW(make_span(coarse, {y}), ValidationError);
}

TEST(ConeAdd, ZeroIsIdentity) {
  const auto m = testing::toy_market();
  const auto y = testing::toy_span_cone(m);
  EXPECT_TRUE(members_equal(cone_add(m, y, make_zero(m)), y));
}

TEST(ConeAdd, ItemFiveGainsRN0) {
  const auto m = testing::toy_market();
  const auto y = cone_add(m, testing::toy_span_cone(m), make_RN0(m));
  EXPECT_TRUE(y.meta().contains_RN0);
  EXPECT_TRUE(y.meta().is_zero_sum);
}

TEST(ConeAdd, NestedY0Collapses) {
  const auto m = testing::tree_market();
  EXPECT_TRUE(members_equal(cone_add(m, make_Y0(m, 0), make_Y0(m, 1)), make_Y0(m, 1)));
  EXPECT_FALSE(members_equal(make_Y0(m, 0), make_Y0(m, 1)));
}

TEST(ConeContains, ZeroAndGenerators) {
  const auto m = testing::toy_market();
  const auto y = make_Y0(m, 0);
  const auto zero = cone_contains(y, PayoffMatrix(2, 2));
  ASSERT_TRUE(zero.member);
  for (const auto& c : zero.lineality_coeffs) EXPECT_EQ(c, 0);
  const auto e = cone_contains(y, pair_exchange(2, 2, 0, 1));
  ASSERT_TRUE(e.member);
  EXPECT_EQ(y.combine(e.ray_coeffs, e.lineality_coeffs), pair_exchange(2, 2, 0, 1));
}

TEST(ConeContains, SeparatorForNonZeroSumConstant) {
  const auto m = testing::toy_market();
  const auto y = make_Y0(m, 0);
  const auto target = testing::matrix({{"1", "1"}, {"1", "1"}});
  const auto res = cone_contains(y, target);
  ASSERT_FALSE(res.member);
  ASSERT_TRUE(res.separator.has_value());
  for (const auto& lin : y.lineality()) EXPECT_EQ(inner(*res.separator, lin), 0);
  EXPECT_GT(inner(*res.separator, target), 0);
}

TEST(ConeContains, RaysNeedNonnegativeCoefficients) {
  const auto m = testing::toy_market();
  const auto y = make_rays(m, {pair_exchange(2, 2, 0, 1)});
  EXPECT_TRUE(cone_contains(y, pair_exchange(2, 2, 0, 1) * R("5/2")).member);
  const auto back = cone_contains(y, pair_exchange(2, 2, 1, 0));
  ASSERT_FALSE(back.member);
  ASSERT_TRUE(back.separator.has_value());
  EXPECT_LE(inner(*back.separator, y.rays()[0]), 0);
  EXPECT_GT(inner(*back.separator, pair_exchange(2, 2, 1, 0)), 0);
  EXPECT_FALSE(y.meta().contains_RN0);
}

class RandomCones : public ::testing::TestWithParam<std::uint64_t> {};

TEST_P(RandomCones, FlagsMatchVerification) {
  random::Generator gen(GetParam());
  const auto m = gen.market({});
  const std::size_t N = m.num_agents(), A = m.num_atoms();
  for (int draw = 0; draw < 4; ++draw) {
    const auto y = gen.cone(m, gen.chance(50), gen.chance(50));
    EXPECT_TRUE(cone_contains(y, PayoffMatrix(N, A)).member);

    bool all_pairs = true;
    for (std::size_t i = 0; i < N; ++i) {
      for (std::size_t j = 0; j < N; ++j) {
        if (i != j) all_pairs = all_pairs && cone_contains(y, pair_exchange(N, A, i, j)).member;
      }
    }
    EXPECT_EQ(y.meta().contains_RN0, all_pairs);

    if (y.meta().is_zero_sum) {
      for (int k = 0; k < 25; ++k) {
        std::vector<Rational> mu, nu;
        for (std::size_t r = 0; r < y.rays().size(); ++r) mu.push_back(gen.rational(0, 4, 3));
        for (std::size_t l = 0; l < y.lineality().size(); ++l) nu.push_back(gen.rational(-4, 4, 3));
        const auto e = y.combine(mu, nu);
        for (std::size_t a = 0; a < A; ++a) EXPECT_EQ(e.column_sum(a), 0);
      }
    }
    if (y.meta().measurable_at) {
      const std::size_t t = *y.meta().measurable_at;
      for (const auto* gens : {&y.rays(), &y.lineality()}) {
        for (const auto& g : *gens) {
          for (std::size_t i = 0; i < N; ++i) {
            EXPECT_TRUE(m.agent(i).filtration.at(t).is_measurable(g.row(i)));
          }
        }
      }
    }
  }
}

TEST_P(RandomCones, GroupingMaskingStaysInside) {
  random::Generator gen(GetParam() + 1000);
  auto m = gen.market({});
  while (m.num_agents() < 2) m = gen.market({});
  const std::size_t N = m.num_agents();
  const std::vector<std::vector<std::size_t>> groups =
      N == 2 ? std::vector<std::vector<std::size_t>>{{0, 1}}
             : std::vector<std::vector<std::size_t>>{{0}, {1, 2}};
  const auto y = make_grouping(m, groups, gen.uniform(0, m.horizon()));
  std::vector<Rational> nu;
  for (std::size_t l = 0; l < y.lineality().size(); ++l) nu.push_back(gen.rational(-5, 5, 2));
  const auto member = y.combine({}, nu);
  for (const auto& group : groups) {
    PayoffMatrix masked(N, m.num_atoms());
    for (auto i : group) masked.set_row(i, member.row(i));
    EXPECT_TRUE(cone_contains(y, masked).member);
  }
}

INSTANTIATE_TEST_SUITE_P(Seeds, RandomCones, ::testing::Range<std::uint64_t>(1, 26));

}  // namespace
}  // namespace collective_arb
