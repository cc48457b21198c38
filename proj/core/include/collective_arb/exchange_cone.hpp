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

#ifndef COLLECTIVE_ARB_EXCHANGE_CONE_HPP_
#define COLLECTIVE_ARB_EXCHANGE_CONE_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "collective_arb/market.hpp"

namespace collective_arb {

struct ConeMeta {
  bool is_zero_sum = true;
  bool contains_RN0 = false;
  // Smallest t at which every generator row is constant on its agent's
  // time-t blocks.
  std::optional<std::size_t> measurable_at;
  // Built from a grouping partition of the agents.
  bool grouping = false;
  std::string description;
};

// Finitely generated convex cone of N x |atoms| exchange matrices:
// { sum_k mu_k rays[k] + sum_l nu_l lineality[l] : mu >= 0 }.
// Always closed and always contains 0. Flags in meta are computed by
// verification, never taken on trust.
class ExchangeCone {
 public:
  std::size_t num_agents() const { return agents_; }
  std::size_t num_atoms() const { return atoms_; }
  const std::vector<PayoffMatrix>& rays() const { return rays_; }
  const std::vector<PayoffMatrix>& lineality() const { return lineality_; }
  const ConeMeta& meta() const { return meta_; }
  std::size_t num_generators() const { return rays_.size() + lineality_.size(); }

  // Assembles the element for given coefficients (rays need mu >= 0).
  PayoffMatrix combine(const std::vector<Rational>& ray_coeffs,
                       const std::vector<Rational>& lineality_coeffs) const;

 private:
  friend ExchangeCone make_cone(const MarketModel&, std::vector<PayoffMatrix>,
                                std::vector<PayoffMatrix>, std::string, bool);
  std::size_t agents_ = 0;
  std::size_t atoms_ = 0;
  std::vector<PayoffMatrix> rays_;
  std::vector<PayoffMatrix> lineality_;
  ConeMeta meta_;
};

// Generic constructor. Drops zero generators, checks shapes and agent
// measurability of each row, and computes every flag.
ExchangeCone make_cone(const MarketModel& market, std::vector<PayoffMatrix> rays,
                       std::vector<PayoffMatrix> lineality, std::string description,
                       bool grouping = false);

// The cone {0}.
ExchangeCone make_zero(const MarketModel& market);

// Zero-sum exchanges measurable at time t.
ExchangeCone make_Y0(const MarketModel& market, std::size_t t);

// Exchanges that sum to zero inside each group, measurable at time t. Groups
// must partition {0, ..., N-1}.
ExchangeCone make_grouping(const MarketModel& market,
                           const std::vector<std::vector<std::size_t>>& groups,
                           std::size_t t);

// Linear span of the given matrices.
ExchangeCone make_span(const MarketModel& market, std::vector<PayoffMatrix> generators);

// Conic hull of the given matrices (nonnegative combinations only).
ExchangeCone make_rays(const MarketModel& market, std::vector<PayoffMatrix> rays);

// Minkowski sum a + b.
ExchangeCone cone_add(const MarketModel& market, const ExchangeCone& a,
                      const ExchangeCone& b);

// The deterministic zero-sum vectors, embedded as constant-in-atom matrices.
ExchangeCone make_RN0(const MarketModel& market);

struct MembershipResult {
  bool member = false;
  // On success: coefficients reproducing y.
  std::vector<Rational> ray_coeffs;
  std::vector<Rational> lineality_coeffs;
  // On failure: w with <w, ray> <= 0 for all rays, <w, lin> = 0 for all
  // lineality generators and <w, y> > 0.
  std::optional<PayoffMatrix> separator;
};

MembershipResult cone_contains(const ExchangeCone& cone, const PayoffMatrix& y);

// Both-way membership of every generator. Cones must share a shape.
bool cone_equivalent(const ExchangeCone& a, const ExchangeCone& b);

// The matrix with +1 on row i and -1 on row j, constant across atoms.
PayoffMatrix pair_exchange(std::size_t agents, std::size_t atoms, std::size_t i,
                           std::size_t j);

}  // namespace collective_arb

#endif  // COLLECTIVE_ARB_EXCHANGE_CONE_HPP_
