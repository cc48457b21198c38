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

#include "collective_arb/matrix.hpp"
#include "collective_arb/rational.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

namespace collective_arb {
namespace {

using testing::R;
using testing::Rs;

TEST(ParseRational, AcceptsIntegersAndFractions) {
  EXPECT_EQ(parse_rational("5/6"), R("5/6"));
  EXPECT_EQ(parse_rational("-3"), Rational(-3));
  EXPECT_EQ(parse_rational("+4/8"), R("1/2"));
  EXPECT_EQ(parse_rational("0"), Rational(0));
}

TEST(ParseRational, RejectsMalformedText) {
  for (const char* bad : {"", "1/0", "1.5", "a", "1/", "/2", "1/2/3", " 1", "--1", "1/-2"}) {
    EXPECT_FALSE(parse_rational(bad).has_value()) << bad;
  }
}

TEST(RationalText, CanonicalForm) {
  EXPECT_EQ(to_string(R("4/6")), "2/3");
  EXPECT_EQ(to_string(R("-10/5")), "-2");
  EXPECT_EQ(to_string(ExtendedRational::neg_inf()), "-inf");
  EXPECT_EQ(to_string(ExtendedRational::pos_inf()), "+inf");
}

TEST(ExtendedRational, OrderAndSum) {
  const auto lo = ExtendedRational::neg_inf();
  const auto hi = ExtendedRational::pos_inf();
  EXPECT_LT(lo, ExtendedRational(-1000));
  EXPECT_LT(ExtendedRational(1000), hi);
  EXPECT_EQ(add(hi, lo), lo);
  EXPECT_EQ(add(lo, hi), lo);
  EXPECT_EQ(add(ExtendedRational(R("1/2")), ExtendedRational(R("1/3"))), ExtendedRational(R("5/6")));
  EXPECT_EQ(-hi, lo);
}

TEST(RationalMatrix, ArithmeticAndInner) {
  const auto a = testing::matrix({{"1", "2"}, {"3", "4"}});
  const auto b = testing::matrix({{"1/2", "0"}, {"0", "-1"}});
  EXPECT_EQ(inner(a, b), R("1/2") - 4);
  EXPECT_EQ((a + b)(1, 1), 3);
  EXPECT_EQ((a - b)(0, 0), R("1/2"));
  EXPECT_EQ((a * R("2"))(1, 0), 6);
  EXPECT_EQ(a.column_sum(0), 4);
  EXPECT_EQ(a.total(), 10);
  EXPECT_THROW(a + RationalMatrix(1, 2), std::invalid_argument);
}

TEST(Rank, MatchesReferenceElimination) {
  const std::vector<std::vector<Rational>> rows = {
      Rs({"1", "2", "3"}), Rs({"2", "4", "6"}), Rs({"0", "1", "1/2"}), Rs({"1", "3", "7/2"})};
  EXPECT_EQ(rank(rows), oracle::rank(rows));
  EXPECT_EQ(rank(rows), 2u);
}

TEST(NullSpace, VectorsAreAnnihilatedAndIndependent) {
  const std::vector<std::vector<Rational>> rows = {Rs({"1", "1", "0", "0"}),
                                                   Rs({"0", "0", "1", "1"})};
  const auto basis = null_space(rows, 4);
  ASSERT_EQ(basis.size(), 2u);
  for (const auto& v : basis) {
    for (const auto& r : rows) EXPECT_EQ(dot(r, v), 0);
  }
  EXPECT_EQ(oracle::rank(basis), 2u);
}

}  // namespace
}  // namespace collective_arb
