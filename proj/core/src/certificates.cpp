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

#include "collective_arb/certificates.hpp"

namespace collective_arb::certify {
namespace {

std::vector<Rational> gains(const std::vector<GainsGenerator>& gens,
                            const std::vector<Rational>& holdings, std::size_t atoms) {
  std::vector<Rational> k(atoms);
  for (std::size_t g = 0; g < gens.size(); ++g) {
    if (holdings[g] == 0) continue;
    for (std::size_t a = 0; a < atoms; ++a) k[a] += holdings[g] * gens[g].payoff[a];
  }
  return k;
}

Rational expectation(const MarketModel& market, std::span<const Rational> density,
                     std::span<const Rational> values) {
  Rational s = 0;
  for (std::size_t a = 0; a < values.size(); ++a) s += market.prob(a) * density[a] * values[a];
  return s;
}

// Pairing sum_i sum_w weight(w) x^i(w) y^i(w), with weight P or uniform.
Rational pairing(const MarketModel& market, const PayoffMatrix& x, const PayoffMatrix& y,
                 bool with_prob) {
  Rational s = 0;
  for (std::size_t i = 0; i < x.rows(); ++i) {
    for (std::size_t a = 0; a < x.cols(); ++a) {
      if (y(i, a) == 0) continue;
      s += (with_prob ? Rational(market.prob(a) * x(i, a)) : x(i, a)) * y(i, a);
    }
  }
  return s;
}

Verdict check_orthogonal(const MarketModel& market, const ExchangeCone& cone,
                         const PayoffMatrix& x, bool with_prob) {
  for (std::size_t i = 0; i < x.rows(); ++i) {
    for (const auto& g : gains_basis(market, i)) {
      Rational s = 0;
      for (std::size_t a = 0; a < x.cols(); ++a) {
        s += (with_prob ? Rational(market.prob(a) * x(i, a)) : x(i, a)) * g.payoff[a];
      }
      if (s != 0) return "gains of agent '" + market.agent(i).name + "' are not priced at zero";
    }
  }
  for (const auto& r : cone.rays()) {
    if (pairing(market, x, r, with_prob) > 0) return "an exchange ray has positive value";
  }
  for (const auto& l : cone.lineality()) {
    if (pairing(market, x, l, with_prob) != 0) return "an exchange direction has nonzero value";
  }
  return std::nullopt;
}

Verdict check_single_row(const MarketModel& market, const std::vector<GainsGenerator>& gens,
                         const ArbitrageCertificate& cert) {
  const std::size_t n = market.num_atoms();
  if (cert.found) {
    if (cert.strategies.size() != 1 || cert.strategies[0].size() != gens.size()) {
      return "strategy has the wrong length";
    }
    const auto k = gains(gens, cert.strategies[0], n);
    Rational total = 0;
    for (std::size_t a = 0; a < n; ++a) {
      if (k[a] < 0) return "arbitrage loses money on atom " + market.atom_label(a);
      if (cert.outcome.rows() != 1 || cert.outcome(0, a) != k[a]) {
        return "reported outcome differs from the recomputed gains";
      }
      total += k[a];
    }
    if (total <= 0) return "arbitrage gains are identically zero";
    return std::nullopt;
  }
  if (cert.witness.rows() != 1 || cert.witness.cols() != n) return "witness has the wrong shape";
  for (std::size_t a = 0; a < n; ++a) {
    if (cert.witness(0, a) <= 0) return "witness is not strictly positive";
  }
  for (const auto& g : gens) {
    if (expectation(market, cert.witness.row(0), g.payoff) != 0) {
      return "witness does not price a gains generator at zero";
    }
  }
  return std::nullopt;
}

PayoffMatrix exchange_of(const ExchangeCone& cone, const std::vector<Rational>& rays,
                         const std::vector<Rational>& lin, Verdict& verdict) {
  if (rays.size() != cone.rays().size() || lin.size() != cone.lineality().size()) {
    verdict = "exchange coefficients have the wrong length";
    return PayoffMatrix(cone.num_agents(), cone.num_atoms());
  }
  for (const auto& mu : rays) {
    if (mu < 0) verdict = "negative weight on an exchange ray";
  }
  return cone.combine(rays, lin);
}

// Positions k^i + Y^i for strategies over each agent's gains basis.
PayoffMatrix positions(const MarketModel& market, const ExchangeCone* cone,
                       const std::vector<std::vector<Rational>>& strategies,
                       const std::vector<Rational>& rays, const std::vector<Rational>& lin,
                       Verdict& verdict) {
  const std::size_t N = market.num_agents();
  const std::size_t n = market.num_atoms();
  PayoffMatrix pos(N, n);
  if (strategies.size() != N) {
    verdict = "one strategy per agent expected";
    return pos;
  }
  for (std::size_t i = 0; i < N; ++i) {
    const auto gens = gains_basis(market, i);
    if (strategies[i].size() != gens.size()) {
      verdict = "strategy of agent '" + market.agent(i).name + "' has the wrong length";
      return pos;
    }
    const auto k = gains(gens, strategies[i], n);
    for (std::size_t a = 0; a < n; ++a) pos(i, a) = k[a];
  }
  if (cone != nullptr) {
    pos += exchange_of(*cone, rays, lin, verdict);
  } else if (!rays.empty() || !lin.empty()) {
    verdict = "exchange coefficients without a cone";
  }
  return pos;
}

}  // namespace

Verdict check_agent_arbitrage(const MarketModel& market, std::size_t agent,
                              const ArbitrageCertificate& cert) {
  return check_single_row(market, gains_basis(market, agent), cert);
}

Verdict check_global_arbitrage(const MarketModel& market, const ArbitrageCertificate& cert) {
  return check_single_row(market, full_gains_basis(market), cert);
}

Verdict check_collective_arbitrage(const MarketModel& market, const ExchangeCone& cone,
                                   const ArbitrageCertificate& cert) {
  if (!cert.found) return check_polar_witness(market, cone, cert.witness);
  Verdict verdict;
  const auto pos =
      positions(market, &cone, cert.strategies, cert.ray_coeffs, cert.lineality_coeffs, verdict);
  if (verdict) return verdict;
  if (!(pos == cert.outcome)) return "reported outcome differs from k + Y";
  for (std::size_t i = 0; i < pos.rows(); ++i) {
    for (std::size_t a = 0; a < pos.cols(); ++a) {
      if (pos(i, a) < 0) return "collective arbitrage has a negative entry";
    }
  }
  if (pos.total() <= 0) return "collective arbitrage is identically zero";
  return std::nullopt;
}

Verdict check_polar_witness(const MarketModel& market, const ExchangeCone& cone,
                            const PayoffMatrix& z) {
  if (z.rows() != market.num_agents() || z.cols() != market.num_atoms()) {
    return "witness has the wrong shape";
  }
  for (std::size_t i = 0; i < z.rows(); ++i) {
    for (std::size_t a = 0; a < z.cols(); ++a) {
      if (z(i, a) <= 0) return "witness is not strictly positive";
    }
  }
  return check_orthogonal(market, cone, z, true);
}

Verdict check_measure_vector(const MarketModel& market, const ExchangeCone& cone,
                             const MeasureVector& q, bool require_equivalent) {
  if (q.q.rows() != market.num_agents() || q.q.cols() != market.num_atoms()) {
    return "measure vector has the wrong shape";
  }
  for (std::size_t i = 0; i < q.q.rows(); ++i) {
    Rational total = 0;
    for (std::size_t a = 0; a < q.q.cols(); ++a) {
      if (q.q(i, a) < 0 || (require_equivalent && q.q(i, a) == 0)) {
        return "measure of agent '" + market.agent(i).name + "' is not " +
               (require_equivalent ? "strictly positive" : "nonnegative");
      }
      total += q.q(i, a);
    }
    if (total != 1) return "measure of agent '" + market.agent(i).name + "' has mass != 1";
  }
  return check_orthogonal(market, cone, q.q, false);
}

Verdict check_hedge(const MarketModel& market, const ExchangeCone* cone, const ClaimVector& g,
                    const Hedge& hedge) {
  const std::size_t N = market.num_agents();
  const bool shared = hedge.capital.size() == 1 && N > 1;
  if (hedge.capital.size() != N && !shared) return "capital has the wrong length";
  Verdict verdict;
  const std::size_t rows = hedge.strategies.size();
  if (rows != N) return "single-row hedges are checked with check_agent_hedge";
  const auto pos = positions(market, cone, hedge.strategies, hedge.ray_coeffs, hedge.lineality_coeffs,
                  verdict);
  if (verdict) return verdict;
  if (cone != nullptr &&
      !(cone->combine(hedge.ray_coeffs, hedge.lineality_coeffs) == hedge.exchange)) {
    return "reported exchange differs from its coefficients";
  }
  auto capital = [&](const std::vector<Rational>& m, std::size_t i) {
    return m.size() == 1 ? m[0] : m[i];
  };
  for (std::size_t i = 0; i < N; ++i) {
    for (std::size_t a = 0; a < market.num_atoms(); ++a) {
      if (capital(hedge.capital, i) + pos(i, a) < g(i, a)) {
        return "hedge of agent '" + market.agent(i).name + "' falls short on atom " +
               market.atom_label(a);
      }
    }
  }
  if (hedge.value.is_finite()) {
    Rational total = 0;
    for (const auto& m : hedge.capital) total += m;
    if (total != hedge.value.value()) return "capital does not add up to the value";
    return std::nullopt;
  }
  if (!hedge.value.is_neg_inf() || !hedge.descent) return "non-finite value without a descent";
  const auto& d = *hedge.descent;
  if (d.capital.size() != hedge.capital.size()) return "descent capital has the wrong length";
  const auto step = positions(market, cone, d.strategies, d.ray_coeffs, d.lineality_coeffs, verdict);
  if (verdict) return "descent: " + *verdict;
  Rational slope = 0;
  for (const auto& m : d.capital) slope += m;
  if (slope >= 0) return "descent does not lower the capital";
  for (std::size_t i = 0; i < N; ++i) {
    for (std::size_t a = 0; a < market.num_atoms(); ++a) {
      if (capital(d.capital, i) + step(i, a) < 0) return "descent leaves the hedging set";
    }
  }
  return std::nullopt;
}

Verdict check_agent_hedge(const MarketModel& market, std::size_t agent,
                          std::span<const Rational> claim, const Hedge& hedge) {
  const auto gens = gains_basis(market, agent);
  const std::size_t n = market.num_atoms();
  if (hedge.capital.size() != 1 || hedge.strategies.size() != 1 ||
      hedge.strategies[0].size() != gens.size()) {
    return "agent hedge has the wrong layout";
  }
  const auto k = gains(gens, hedge.strategies[0], n);
  for (std::size_t a = 0; a < n; ++a) {
    if (hedge.capital[0] + k[a] < claim[a]) return "agent hedge falls short";
  }
  if (hedge.value.is_finite()) {
    if (hedge.capital[0] != hedge.value.value()) return "capital differs from the value";
    return std::nullopt;
  }
  if (!hedge.descent || hedge.descent->capital.size() != 1 ||
      hedge.descent->strategies.size() != 1 ||
      hedge.descent->strategies[0].size() != gens.size()) {
    return "non-finite value without a descent";
  }
  if (hedge.descent->capital[0] >= 0) return "descent does not lower the capital";
  const auto step = gains(gens, hedge.descent->strategies[0], n);
  for (std::size_t a = 0; a < n; ++a) {
    if (hedge.descent->capital[0] + step[a] < 0) return "descent leaves the hedging set";
  }
  return std::nullopt;
}

Verdict check_fairness(const MarketModel& market, const ExchangeCone& cone, const ClaimVector& g,
                       const FairnessAllocation& fair, const ExtendedRational& rho_Y) {
  if (!rho_Y.is_finite()) return "fairness needs a finite collective price";
  if (auto v = check_measure_vector(market, cone, fair.q_hat, false)) return "q_hat: " + *v;
  const std::size_t N = market.num_agents();
  if (fair.allocations.size() != N || fair.shift.size() != N || fair.raw_capital.size() != N ||
      fair.adjusted_capital.size() != N) {
    return "fairness vectors have the wrong length";
  }
  Rational shift_total = 0, capital_total = 0;
  for (std::size_t i = 0; i < N; ++i) {
    if (fair.q_hat.expectation(i, fair.raw_exchange.row(i)) != fair.shift[i]) {
      return "shift is not the expected exchange";
    }
    if (fair.q_hat.expectation(i, g.row(i)) != fair.allocations[i]) {
      return "allocation is not the expected claim";
    }
    if (fair.raw_capital[i] + fair.shift[i] != fair.adjusted_capital[i]) {
      return "adjusted capital is not raw capital plus shift";
    }
    if (fair.adjusted_capital[i] != fair.allocations[i]) {
      return "adjusted capital differs from the allocation";
    }
    if (fair.q_hat.expectation(i, fair.adjusted_exchange.row(i)) != 0) {
      return "adjusted exchange has nonzero expectation";
    }
    for (std::size_t a = 0; a < market.num_atoms(); ++a) {
      if (fair.adjusted_exchange(i, a) != fair.raw_exchange(i, a) - fair.shift[i]) {
        return "adjusted exchange is not raw exchange minus shift";
      }
    }
    shift_total += fair.shift[i];
    capital_total += fair.adjusted_capital[i];
  }
  if (shift_total != 0) return "shifts do not sum to zero";
  if (capital_total != rho_Y.value()) return "allocations do not add up to the collective price";
  // The adjusted hedge must still super-replicate every claim.
  Verdict verdict;
  const auto pos = positions(market, nullptr, fair.strategies, {}, {}, verdict);
  if (verdict) return verdict;
  for (std::size_t i = 0; i < N; ++i) {
    for (std::size_t a = 0; a < market.num_atoms(); ++a) {
      if (fair.adjusted_capital[i] + pos(i, a) + fair.adjusted_exchange(i, a) < g(i, a)) {
        return "adjusted hedge falls short";
      }
    }
  }
  return std::nullopt;
}

}  // namespace collective_arb::certify
