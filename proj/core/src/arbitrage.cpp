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

#include "collective_arb/arbitrage.hpp"

#include "hedging_program.hpp"

namespace collective_arb {

bool MeasureVector::is_equivalent() const {
  for (std::size_t i = 0; i < q.rows(); ++i) {
    for (std::size_t a = 0; a < q.cols(); ++a) {
      if (q(i, a) <= 0) return false;
    }
  }
  return true;
}

Rational MeasureVector::expectation(std::size_t agent, std::span<const Rational> values) const {
  Rational s = 0;
  for (std::size_t a = 0; a < q.cols(); ++a) s += q(agent, a) * values[a];
  return s;
}

std::vector<Rational> density_to_measure(const MarketModel& market,
                                         std::span<const Rational> density) {
  std::vector<Rational> q(density.size());
  Rational total = 0;
  for (std::size_t a = 0; a < density.size(); ++a) {
    q[a] = market.prob(a) * density[a];
    total += q[a];
  }
  if (total == 0) throw std::invalid_argument("density_to_measure: zero density");
  for (auto& v : q) v /= total;
  return q;
}

namespace {

// Searches for a nonnegative position with total mass at least one. On
// failure the Farkas multipliers of the program become the witness: the
// multiplier of row (r, w) plus that of the mass row is strictly positive
// and annihilates the traded generators.
ArbitrageCertificate search(const MarketModel& market, detail::HedgingProgram& hp) {
  auto& prog = hp.program();
  const std::size_t n = hp.atoms();
  std::vector<lp::Term> mass;
  for (std::size_t r = 0; r < hp.rows(); ++r) {
    for (std::size_t a = 0; a < n; ++a) {
      auto terms = hp.position(r, a);
      mass.insert(mass.end(), terms.begin(), terms.end());
      prog.add_constraint(std::move(terms), lp::Relation::kGreaterEqual, 0,
                          "pos_" + std::to_string(r) + "_" + market.atom_label(a));
    }
  }
  prog.add_constraint(std::move(mass), lp::Relation::kGreaterEqual, 1, "mass");
  const auto out = lp::solve(prog);
  ArbitrageCertificate cert;
  if (out.optimal()) {
    cert.found = true;
    cert.strategies = hp.strategies(out.point);
    cert.ray_coeffs = hp.ray_coeffs(out.point);
    cert.lineality_coeffs = hp.lineality_coeffs(out.point);
    cert.outcome = hp.outcome(out.point);
    return cert;
  }
  const Rational& y_mass = out.farkas.back();
  cert.witness = PayoffMatrix(hp.rows(), n);
  for (std::size_t r = 0; r < hp.rows(); ++r) {
    for (std::size_t a = 0; a < n; ++a) {
      cert.witness(r, a) = (out.farkas[detail::flat(r, a, n)] + y_mass) / (y_mass * market.prob(a));
    }
  }
  return cert;
}

}  // namespace

ArbitrageCertificate detect_NA_agent(const MarketModel& market, std::size_t agent) {
  detail::HedgingProgram hp(market, gains_basis(market, agent), lp::Sense::kMinimize);
  return search(market, hp);
}

ArbitrageCertificate detect_NA_global(const MarketModel& market) {
  detail::HedgingProgram hp(market, full_gains_basis(market), lp::Sense::kMinimize);
  return search(market, hp);
}

ArbitrageCertificate detect_NCA(const MarketModel& market, const ExchangeCone& cone) {
  if (cone.num_agents() != market.num_agents() || cone.num_atoms() != market.num_atoms()) {
    throw std::invalid_argument("detect_NCA: cone shape does not match the market");
  }
  detail::HedgingProgram hp(market, &cone, lp::Sense::kMinimize);
  return search(market, hp);
}

bool MartingaleSystem::contains(std::span<const Rational> q) const {
  for (const auto& v : q) {
    if (v < 0) return false;
  }
  for (std::size_t r = 0; r < rows.size(); ++r) {
    Rational s = 0;
    for (std::size_t a = 0; a < q.size(); ++a) s += rows[r][a] * q[a];
    if (s != rhs[r]) return false;
  }
  return true;
}

MartingaleSystem martingale_polytope(const MarketModel& market, std::size_t agent) {
  MartingaleSystem sys;
  sys.rows.push_back(std::vector<Rational>(market.num_atoms(), Rational(1)));
  sys.rhs.push_back(1);
  for (const auto& g : gains_basis(market, agent)) {
    bool zero = true;
    for (const auto& v : g.payoff) zero = zero && v == 0;
    if (zero) continue;
    sys.rows.push_back(g.payoff);
    sys.rhs.push_back(0);
  }
  return sys;
}

namespace {

// Shared by the polar (weights p(w), no normalization) and measure
// (weights 1, each row a probability) descriptions.
std::vector<lp::Constraint> orthogonality(const MarketModel& market, const ExchangeCone& cone,
                                          bool densities) {
  const std::size_t n = market.num_atoms();
  auto weight = [&](std::size_t a) { return densities ? market.prob(a) : Rational(1); };
  std::vector<lp::Constraint> out;
  for (std::size_t i = 0; i < market.num_agents(); ++i) {
    if (!densities) {
      lp::Constraint c{{}, lp::Relation::kEqual, 1, "prob_" + market.agent(i).name};
      for (std::size_t a = 0; a < n; ++a) c.terms.push_back({detail::flat(i, a, n), 1});
      out.push_back(std::move(c));
    }
    for (const auto& g : gains_basis(market, i)) {
      lp::Constraint c{{}, lp::Relation::kEqual, 0,
                       "mart_" + market.agent(i).name + "_a" + std::to_string(g.asset) + "_t" +
                           std::to_string(g.time) + "_b" + std::to_string(g.block)};
      for (std::size_t a = 0; a < n; ++a) {
        if (g.payoff[a] != 0) c.terms.push_back({detail::flat(i, a, n), weight(a) * g.payoff[a]});
      }
      if (!c.terms.empty()) out.push_back(std::move(c));
    }
  }
  auto polarity = [&](const PayoffMatrix& y, lp::Relation rel, std::string name) {
    lp::Constraint c{{}, rel, 0, std::move(name)};
    for (std::size_t i = 0; i < y.rows(); ++i) {
      for (std::size_t a = 0; a < n; ++a) {
        if (y(i, a) != 0) c.terms.push_back({detail::flat(i, a, n), weight(a) * y(i, a)});
      }
    }
    out.push_back(std::move(c));
  };
  for (std::size_t k = 0; k < cone.rays().size(); ++k) {
    polarity(cone.rays()[k], lp::Relation::kLessEqual, "polar_ray" + std::to_string(k));
  }
  for (std::size_t l = 0; l < cone.lineality().size(); ++l) {
    polarity(cone.lineality()[l], lp::Relation::kEqual, "polar_lin" + std::to_string(l));
  }
  return out;
}

// Adds z (or q) variables, the given rows, z >= eps and an optional extra
// row; maximizes eps.
struct EpsilonProgram {
  lp::LinearProgram prog{lp::Sense::kMaximize};
  std::vector<std::size_t> vars;
  std::size_t eps = 0;
};

EpsilonProgram epsilon_program(const MarketModel& market, std::vector<lp::Constraint> rows) {
  EpsilonProgram ep;
  const std::size_t n = market.num_atoms();
  for (std::size_t i = 0; i < market.num_agents(); ++i) {
    for (std::size_t a = 0; a < n; ++a) {
      ep.vars.push_back(ep.prog.add_variable("z" + std::to_string(i) + "_" + market.atom_label(a),
                                             lp::Bound::nonnegative()));
    }
  }
  ep.eps = ep.prog.add_variable("eps", lp::Bound::free(), 1);
  for (auto& c : rows) ep.prog.add_constraint(std::move(c.terms), c.relation, c.rhs, c.name);
  for (auto v : ep.vars) {
    ep.prog.add_constraint({{v, 1}, {ep.eps, -1}}, lp::Relation::kGreaterEqual, 0,
                           "floor_" + ep.prog.names()[v]);
  }
  return ep;
}

PayoffMatrix reshape(const MarketModel& market, const std::vector<Rational>& x) {
  PayoffMatrix m(market.num_agents(), market.num_atoms());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t a = 0; a < m.cols(); ++a) m(i, a) = x[detail::flat(i, a, m.cols())];
  }
  return m;
}

}  // namespace

std::vector<lp::Constraint> polar_constraints(const MarketModel& market,
                                              const ExchangeCone& cone) {
  return orthogonality(market, cone, true);
}

std::vector<lp::Constraint> measure_constraints(const MarketModel& market,
                                                const ExchangeCone& cone) {
  return orthogonality(market, cone, false);
}

EmmResult find_emm_vector(const MarketModel& market, const ExchangeCone& cone) {
  auto ep = epsilon_program(market, measure_constraints(market, cone));
  const auto out = lp::solve(ep.prog);
  EmmResult result;
  if (!out.optimal()) return result;
  result.epsilon = out.value;
  if (out.value > 0) result.measure = MeasureVector{reshape(market, out.point)};
  return result;
}

std::optional<PayoffMatrix> polar_witness(const MarketModel& market, const ExchangeCone& cone) {
  auto ep = epsilon_program(market, polar_constraints(market, cone));
  std::vector<lp::Term> mass;
  const std::size_t n = market.num_atoms();
  for (std::size_t k = 0; k < ep.vars.size(); ++k) mass.push_back({ep.vars[k], market.prob(k % n)});
  ep.prog.add_constraint(std::move(mass), lp::Relation::kLessEqual, 1, "normalize");
  const auto out = lp::solve(ep.prog);
  if (!out.optimal() || out.value <= 0) return std::nullopt;
  return reshape(market, out.point);
}

}  // namespace collective_arb
