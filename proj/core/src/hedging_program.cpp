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

#include "hedging_program.hpp"

namespace collective_arb::detail {

HedgingProgram::HedgingProgram(const MarketModel& market, const ExchangeCone* cone,
                               lp::Sense sense)
    : cone_(cone), atoms_(market.num_atoms()), program_(sense) {
  for (std::size_t i = 0; i < market.num_agents(); ++i) gens_.push_back(gains_basis(market, i));
  add_holdings();
  if (cone_ != nullptr) {
    for (std::size_t k = 0; k < cone_->rays().size(); ++k) {
      mu_.push_back(program_.add_variable("mu" + std::to_string(k), lp::Bound::nonnegative()));
    }
    for (std::size_t l = 0; l < cone_->lineality().size(); ++l) {
      nu_.push_back(program_.add_variable("nu" + std::to_string(l), lp::Bound::free()));
    }
  }
}

HedgingProgram::HedgingProgram(const MarketModel& market, std::vector<GainsGenerator> generators,
                               lp::Sense sense)
    : atoms_(market.num_atoms()), program_(sense) {
  gens_.push_back(std::move(generators));
  add_holdings();
}

void HedgingProgram::add_holdings() {
  h_.resize(gens_.size());
  for (std::size_t r = 0; r < gens_.size(); ++r) {
    for (const auto& g : gens_[r]) {
      h_[r].push_back(program_.add_variable("h" + std::to_string(r) + "_a" +
                                                std::to_string(g.asset) + "_t" +
                                                std::to_string(g.time) + "_b" +
                                                std::to_string(g.block),
                                            lp::Bound::free()));
    }
  }
}

std::vector<lp::Term> HedgingProgram::position(std::size_t row, std::size_t atom) const {
  std::vector<lp::Term> terms;
  for (std::size_t g = 0; g < gens_[row].size(); ++g) {
    const Rational& v = gens_[row][g].payoff[atom];
    if (v != 0) terms.push_back({h_[row][g], v});
  }
  auto y = exchange_terms(row, atom);
  terms.insert(terms.end(), y.begin(), y.end());
  return terms;
}

std::vector<lp::Term> HedgingProgram::exchange_terms(std::size_t row, std::size_t atom) const {
  std::vector<lp::Term> terms;
  if (cone_ != nullptr) {
    for (std::size_t k = 0; k < mu_.size(); ++k) {
      const Rational& v = cone_->rays()[k](row, atom);
      if (v != 0) terms.push_back({mu_[k], v});
    }
    for (std::size_t l = 0; l < nu_.size(); ++l) {
      const Rational& v = cone_->lineality()[l](row, atom);
      if (v != 0) terms.push_back({nu_[l], v});
    }
  }
  return terms;
}

std::vector<std::vector<Rational>> HedgingProgram::strategies(
    const std::vector<Rational>& x) const {
  std::vector<std::vector<Rational>> out(h_.size());
  for (std::size_t r = 0; r < h_.size(); ++r) {
    for (auto v : h_[r]) out[r].push_back(x[v]);
  }
  return out;
}

std::vector<Rational> HedgingProgram::ray_coeffs(const std::vector<Rational>& x) const {
  std::vector<Rational> out;
  for (auto v : mu_) out.push_back(x[v]);
  return out;
}

std::vector<Rational> HedgingProgram::lineality_coeffs(const std::vector<Rational>& x) const {
  std::vector<Rational> out;
  for (auto v : nu_) out.push_back(x[v]);
  return out;
}

PayoffMatrix HedgingProgram::outcome(const std::vector<Rational>& x) const {
  PayoffMatrix out(rows(), atoms_);
  for (std::size_t r = 0; r < rows(); ++r) {
    for (std::size_t a = 0; a < atoms_; ++a) {
      for (const auto& [var, coef] : position(r, a)) out(r, a) += coef * x[var];
    }
  }
  return out;
}

PayoffMatrix HedgingProgram::exchange(const std::vector<Rational>& x) const {
  if (cone_ == nullptr) return PayoffMatrix(rows(), atoms_);
  return cone_->combine(ray_coeffs(x), lineality_coeffs(x));
}

}  // namespace collective_arb::detail
