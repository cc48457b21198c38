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

#include "collective_arb/cli/examples.hpp"

namespace collective_arb::cli {
namespace {

std::vector<Rational> ints(std::initializer_list<long long> values) {
  std::vector<Rational> out;
  for (auto v : values) out.emplace_back(v);
  return out;
}

// Two atoms, one period. Asset 1 moves 2 -> (3, 1), asset 2 moves
// 4 -> (x2_up, 3); agent i trades asset i only.
ModelFile toy(const std::string& name, long long x2_up) {
  ModelFile m;
  m.name = name;
  auto& d = m.market;
  d.atoms = {"w1", "w2"};
  d.prob = {Rational(1, 2), Rational(1, 2)};
  d.horizon = 1;
  d.global_filtration = {{{"w1", "w2"}}, {{"w1"}, {"w2"}}};
  d.assets = {{"X1", {ints({2, 2}), ints({3, 1})}}, {"X2", {ints({4, 4}), ints({x2_up, 3})}}};
  d.agents = {{"agent1", {"X1"}, std::nullopt}, {"agent2", {"X2"}, std::nullopt}};
  m.generated_filtration = {false, false};
  m.claims = Matrix{ints({3, 1}), ints({x2_up, 3})};
  m.has_exchange = true;
  return m;
}

ExchangeSpec toy_span(long long x2_up) {
  ExchangeSpec s;
  s.kind = "span";
  s.generators = {Matrix{ints({3, 1}), ints({-3, -1})}, Matrix{ints({x2_up, 3}), ints({-x2_up, -3})}};
  return s;
}

ExchangeSpec y0(std::size_t t) {
  ExchangeSpec s;
  s.kind = "Y0";
  s.t = t;
  return s;
}

// Six atoms, two periods, blocks {w1,w2},{w3,w4},{w5,w6} at t = 1.
ModelFile tree(const std::string& name, std::size_t t) {
  ModelFile m;
  m.name = name;
  auto& d = m.market;
  d.atoms = {"w1", "w2", "w3", "w4", "w5", "w6"};
  d.prob.assign(6, Rational(1, 6));
  d.horizon = 2;
  d.global_filtration = {{{"w1", "w2", "w3", "w4", "w5", "w6"}},
                         {{"w1", "w2"}, {"w3", "w4"}, {"w5", "w6"}},
                         {{"w1"}, {"w2"}, {"w3"}, {"w4"}, {"w5"}, {"w6"}}};
  d.assets = {{"X1",
               {ints({16, 16, 16, 16, 16, 16}), ints({24, 24, 16, 16, 8, 8}),
                ints({32, 16, 24, 8, 12, 6})}},
              {"X2",
               {ints({12, 12, 12, 12, 12, 12}), ints({16, 16, 12, 12, 8, 8}),
                ints({24, 8, 16, 8, 6, 12})}}};
  d.agents = {{"agent1", {"X1"}, std::nullopt}, {"agent2", {"X2"}, std::nullopt}};
  m.generated_filtration = {false, false};
  m.exchange = y0(t);
  m.has_exchange = true;
  m.claims = Matrix{ints({26, 18, 24, 20, 12, 9}), ints({12, 8, 6, 6, 24, 18})};
  return m;
}

}  // namespace

std::vector<ExampleInfo> example_list() {
  return {
      {"toy71", "one-period toy market, deterministic zero-sum exchanges"},
      {"toy71_y0T", "one-period toy market, all zero-sum exchanges at T"},
      {"toy71_span", "one-period toy market, exchanges spanned by the asset payoffs"},
      {"toy71_span_rn0", "span exchanges plus deterministic zero-sum transfers"},
      {"toy71_span_perturbed", "span exchanges with X2 moving to 8 instead of 9"},
      {"tree72", "two-period tree, zero-sum exchanges known at t=1"},
      {"tree72_t0", "two-period tree, deterministic zero-sum exchanges"},
      {"tree72_t2", "two-period tree, all zero-sum exchanges at T"},
  };
}

std::optional<ModelFile> builtin_example(const std::string& name) {
  if (name == "toy71") {
    auto m = toy(name, 9);
    m.exchange = y0(0);
    return m;
  }
  if (name == "toy71_y0T") {
    auto m = toy(name, 9);
    m.exchange = y0(1);
    return m;
  }
  if (name == "toy71_span") {
    auto m = toy(name, 9);
    m.exchange = toy_span(9);
    return m;
  }
  if (name == "toy71_span_rn0") {
    auto m = toy(name, 9);
    m.exchange.kind = "sum";
    m.exchange.parts = {toy_span(9), y0(0)};
    return m;
  }
  if (name == "toy71_span_perturbed") {
    auto m = toy(name, 8);
    m.exchange = toy_span(8);
    return m;
  }
  if (name == "tree72") return tree(name, 1);
  if (name == "tree72_t0") return tree(name, 0);
  if (name == "tree72_t2") return tree(name, 2);
  return std::nullopt;
}

}  // namespace collective_arb::cli
