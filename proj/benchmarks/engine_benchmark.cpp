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

#include <benchmark/benchmark.h>

#include <vector>

#include "collective_arb/arbitrage.hpp"
#include "collective_arb/exchange_cone.hpp"
#include "collective_arb/lp.hpp"
#include "collective_arb/pricing.hpp"
#include "collective_arb/random_market.hpp"

namespace ca = collective_arb;

namespace {

ca::MarketModel tree_market() {
  ca::MarketDescription d;
  d.atoms = {"w1", "w2", "w3", "w4", "w5", "w6"};
  d.prob.assign(6, ca::Rational(1, 6));
  d.horizon = 2;
  d.global_filtration = {{{"w1", "w2", "w3", "w4", "w5", "w6"}},
                         {{"w1", "w2"}, {"w3", "w4"}, {"w5", "w6"}},
                         {{"w1"}, {"w2"}, {"w3"}, {"w4"}, {"w5"}, {"w6"}}};
  auto row = [](std::initializer_list<int> v) {
    return std::vector<ca::Rational>(v.begin(), v.end());
  };
  d.assets = {{"X1", {row({16, 16, 16, 16, 16, 16}), row({24, 24, 16, 16, 8, 8}),
                      row({32, 16, 24, 8, 12, 6})}},
              {"X2", {row({12, 12, 12, 12, 12, 12}), row({16, 16, 12, 12, 8, 8}),
                      row({24, 8, 16, 8, 6, 12})}}};
  d.agents = {{"agent1", {"X1"}, std::nullopt}, {"agent2", {"X2"}, std::nullopt}};
  return ca::build_market(d);
}

ca::ClaimVector tree_claims() {
  ca::ClaimVector g(2, 6);
  const int g1[] = {26, 18, 24, 20, 12, 9};
  const int g2[] = {12, 8, 6, 6, 24, 18};
  for (std::size_t a = 0; a < 6; ++a) {
    g(0, a) = g1[a];
    g(1, a) = g2[a];
  }
  return g;
}

// Dense random program with box bounds, so every instance is bounded.
ca::lp::LinearProgram random_program(ca::random::Generator& gen, std::size_t n) {
  ca::lp::LinearProgram p(ca::lp::Sense::kMaximize);
  for (std::size_t v = 0; v < n; ++v) {
    p.add_variable("x", ca::lp::Bound::between(-5, 5), gen.rational(-5, 5, 3));
  }
  for (std::size_t r = 0; r < n; ++r) {
    std::vector<ca::lp::Term> terms;
    for (std::size_t v = 0; v < n; ++v) terms.push_back({v, gen.rational(-4, 4, 2)});
    p.add_constraint(std::move(terms), ca::lp::Relation::kLessEqual, gen.rational(0, 6, 1));
  }
  return p;
}

void BM_SolveRandomLP(benchmark::State& state) {
  ca::random::Generator gen(ca::random::seed_from_env(11));
  const auto n = static_cast<std::size_t>(state.range(0));
  std::vector<ca::lp::LinearProgram> programs;
  for (int k = 0; k < 16; ++k) programs.push_back(random_program(gen, n));
  std::size_t next = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(ca::lp::solve(programs[next++ % programs.size()]));
  }
}
BENCHMARK(BM_SolveRandomLP)->Arg(4)->Arg(8)->Arg(16)->Unit(benchmark::kMicrosecond);

void BM_TreeCollectivePrice(benchmark::State& state) {
  const auto m = tree_market();
  const auto y = ca::make_Y0(m, 1);
  const auto g = tree_claims();
  for (auto _ : state) benchmark::DoNotOptimize(ca::rho_Y_plus(m, y, g));
}
BENCHMARK(BM_TreeCollectivePrice)->Unit(benchmark::kMicrosecond);

void BM_TreeFullReport(benchmark::State& state) {
  const auto m = tree_market();
  const auto y = ca::make_Y0(m, 1);
  const auto g = tree_claims();
  for (auto _ : state) benchmark::DoNotOptimize(ca::price_claims(m, y, g));
}
BENCHMARK(BM_TreeFullReport)->Unit(benchmark::kMillisecond);

void BM_TreeDetectNCA(benchmark::State& state) {
  const auto m = tree_market();
  const auto y = ca::make_Y0(m, 1);
  for (auto _ : state) benchmark::DoNotOptimize(ca::detect_NCA(m, y));
}
BENCHMARK(BM_TreeDetectNCA)->Unit(benchmark::kMicrosecond);

void BM_RandomMarketPricing(benchmark::State& state) {
  ca::random::Generator gen(ca::random::seed_from_env(23));
  ca::random::Options opt;
  opt.max_horizon = static_cast<std::size_t>(state.range(0));
  struct Case {
    ca::MarketModel market;
    ca::ExchangeCone cone;
    ca::ClaimVector claim;
  };
  std::vector<Case> cases;
  for (int k = 0; k < 8; ++k) {
    auto m = gen.market(opt);
    auto y = gen.cone(m, true, true);
    auto g = gen.claim(m);
    cases.push_back({std::move(m), std::move(y), std::move(g)});
  }
  std::size_t next = 0;
  for (auto _ : state) {
    const auto& c = cases[next++ % cases.size()];
    benchmark::DoNotOptimize(ca::rho_Y_plus(c.market, c.cone, c.claim));
    benchmark::DoNotOptimize(ca::dual_rho_Y(c.market, c.cone, c.claim));
  }
}
BENCHMARK(BM_RandomMarketPricing)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
