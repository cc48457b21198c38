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

#include "collective_arb/pricing.hpp"

#include <algorithm>

#include "hedging_program.hpp"

namespace collective_arb {
namespace {

void require_measurable(const MarketModel& market, const ClaimVector& g) {
  if (g.rows() != market.num_agents() || g.cols() != market.num_atoms()) {
    throw std::invalid_argument("claim vector has shape " + std::to_string(g.rows()) + "x" +
                                std::to_string(g.cols()));
  }
  for (std::size_t i = 0; i < g.rows(); ++i) {
    if (!market.terminal_partition(i).is_measurable(g.row(i))) {
      throw ValidationError("claim rows are measurable for their agent",
                            "claim of agent '" + market.agent(i).name + "'");
    }
  }
}

ClaimVector negated(const ClaimVector& g) { return g * Rational(-1); }

// Super-replicates every row of g. shared_capital selects a single m for
// all rows (pi-type) instead of one per row (rho-type).
// Among optimal hedges, one whose exchange has the smallest total absolute
// size. Keeps reports stable and free of offsetting transfers.
lp::LPOutcome sparsest_exchange(const detail::HedgingProgram& hp, const std::vector<std::size_t>& m,
                                const lp::LPOutcome& optimum) {
  lp::LinearProgram prog = hp.program();
  for (std::size_t v = 0; v < prog.num_variables(); ++v) prog.set_cost(v, 0);
  std::vector<lp::Term> capital;
  for (auto v : m) capital.push_back({v, 1});
  prog.add_constraint(std::move(capital), lp::Relation::kEqual, optimum.value, "optimal_capital");
  for (std::size_t r = 0; r < hp.rows(); ++r) {
    for (std::size_t a = 0; a < hp.atoms(); ++a) {
      const auto size = prog.add_variable("abs_y" + std::to_string(r) + "_" + std::to_string(a),
                                          lp::Bound::nonnegative(), 1);
      for (const int sign : {1, -1}) {
        std::vector<lp::Term> terms{{size, 1}};
        for (const auto& [var, coef] : hp.exchange_terms(r, a)) terms.push_back({var, -sign * coef});
        prog.add_constraint(std::move(terms), lp::Relation::kGreaterEqual, 0);
      }
    }
  }
  auto out = lp::solve(prog);
  if (!out.optimal()) throw InvariantViolation("refinement of the optimal hedge failed");
  out.point.resize(hp.program().num_variables());
  return out;
}

Hedge super_hedge(const MarketModel& market, detail::HedgingProgram& hp, const ClaimVector& g,
                  bool shared_capital, bool sparse = false) {
  auto& prog = hp.program();
  std::vector<std::size_t> m;
  const std::size_t count = shared_capital ? 1 : hp.rows();
  for (std::size_t r = 0; r < count; ++r) {
    m.push_back(prog.add_variable("m" + std::to_string(r), lp::Bound::free(), 1));
  }
  for (std::size_t r = 0; r < hp.rows(); ++r) {
    for (std::size_t a = 0; a < hp.atoms(); ++a) {
      auto terms = hp.position(r, a);
      terms.push_back({m[shared_capital ? 0 : r], 1});
      prog.add_constraint(std::move(terms), lp::Relation::kGreaterEqual, g(r, a),
                          "hedge_" + std::to_string(r) + "_" + market.atom_label(a));
    }
  }
  const auto first = lp::solve(prog);
  if (first.infeasible()) throw InvariantViolation("super-replication program is infeasible");
  const auto out = sparse && first.optimal() && hp.has_cone() ? sparsest_exchange(hp, m, first) : first;
  Hedge hedge;
  for (auto v : m) hedge.capital.push_back(out.point[v]);
  hedge.strategies = hp.strategies(out.point);
  hedge.ray_coeffs = hp.ray_coeffs(out.point);
  hedge.lineality_coeffs = hp.lineality_coeffs(out.point);
  hedge.exchange = hp.exchange(out.point);
  if (out.unbounded()) {
    hedge.value = ExtendedRational::neg_inf();
    Hedge::Direction d;
    for (auto v : m) d.capital.push_back(out.ray[v]);
    d.strategies = hp.strategies(out.ray);
    d.ray_coeffs = hp.ray_coeffs(out.ray);
    d.lineality_coeffs = hp.lineality_coeffs(out.ray);
    hedge.descent = std::move(d);
    return hedge;
  }
  hedge.value = first.value;
  if (!shared_capital || hp.rows() == 1) {
    RationalMatrix q(hp.rows(), hp.atoms());
    for (std::size_t r = 0; r < hp.rows(); ++r) {
      for (std::size_t a = 0; a < hp.atoms(); ++a) q(r, a) = first.dual[detail::flat(r, a, hp.atoms())];
    }
    hedge.lp_dual = MeasureVector{std::move(q)};
  }
  return hedge;
}

ClaimVector single_row(std::span<const Rational> claim) {
  ClaimVector g(1, claim.size());
  g.set_row(0, claim);
  return g;
}

ExtendedRational difference(const ExtendedRational& a, const ExtendedRational& b) {
  if (a.is_pos_inf() || b.is_neg_inf()) return ExtendedRational::pos_inf();
  if (a.is_neg_inf() || b.is_pos_inf()) return ExtendedRational::neg_inf();
  return Rational(a.value() - b.value());
}

struct DensityProgram {
  lp::LinearProgram prog;
  std::vector<std::size_t> vars;
};

// Variables over agent x atom with the given rows; as_density selects P-density
// coordinates (z) instead of atom probabilities (q).
DensityProgram density_program(const MarketModel& market, std::vector<lp::Constraint> rows,
                               lp::Sense sense) {
  DensityProgram dp{lp::LinearProgram(sense), {}};
  for (std::size_t i = 0; i < market.num_agents(); ++i) {
    for (std::size_t a = 0; a < market.num_atoms(); ++a) {
      dp.vars.push_back(dp.prog.add_variable("q" + std::to_string(i) + "_" + market.atom_label(a),
                                             lp::Bound::nonnegative()));
    }
  }
  for (auto& c : rows) dp.prog.add_constraint(std::move(c.terms), c.relation, c.rhs, c.name);
  return dp;
}

// For the polar route: E[z^i] = 1 for every agent.
std::vector<lp::Constraint> normalized_polar(const MarketModel& market, const ExchangeCone& cone) {
  auto rows = polar_constraints(market, cone);
  const std::size_t n = market.num_atoms();
  for (std::size_t i = 0; i < market.num_agents(); ++i) {
    lp::Constraint c{{}, lp::Relation::kEqual, 1, "unit_" + market.agent(i).name};
    for (std::size_t a = 0; a < n; ++a) c.terms.push_back({detail::flat(i, a, n), market.prob(a)});
    rows.push_back(std::move(c));
  }
  return rows;
}

// Objective weights for sum_i E[.^i g^i] in q or z coordinates.
std::vector<Rational> claim_weights(const MarketModel& market, const ClaimVector& g,
                                    bool densities) {
  std::vector<Rational> w;
  for (std::size_t i = 0; i < g.rows(); ++i) {
    for (std::size_t a = 0; a < g.cols(); ++a) {
      w.push_back(densities ? Rational(market.prob(a) * g(i, a)) : g(i, a));
    }
  }
  return w;
}

MeasureVector to_measure(const MarketModel& market, const std::vector<Rational>& x,
                         bool densities) {
  RationalMatrix q(market.num_agents(), market.num_atoms());
  for (std::size_t i = 0; i < q.rows(); ++i) {
    for (std::size_t a = 0; a < q.cols(); ++a) {
      const Rational& v = x[detail::flat(i, a, q.cols())];
      q(i, a) = densities ? Rational(v * market.prob(a)) : v;
    }
  }
  return MeasureVector{std::move(q)};
}

// Optimizes sum_i E[g^i] over the normalized set and returns the max-epsilon
// point of the optimal face.
DualValue measure_dual(const MarketModel& market, const ExchangeCone& cone, const ClaimVector& g,
                       lp::Sense sense) {
  require_measurable(market, g);
  DualValue result;
  result.via_polar = !cone.meta().contains_RN0;
  auto rows = result.via_polar ? normalized_polar(market, cone) : measure_constraints(market, cone);
  const auto weights = claim_weights(market, g, result.via_polar);

  auto dp = density_program(market, rows, sense);
  for (std::size_t k = 0; k < dp.vars.size(); ++k) dp.prog.set_cost(dp.vars[k], weights[k]);
  const auto out = lp::solve(dp.prog);
  if (out.infeasible()) {
    result.value = sense == lp::Sense::kMaximize ? ExtendedRational::neg_inf()
                                                 : ExtendedRational::pos_inf();
    return result;
  }
  if (!out.optimal()) throw InvariantViolation("normalized dual program is unbounded");
  result.value = out.value;

  auto face = density_program(market, rows, lp::Sense::kMaximize);
  std::vector<lp::Term> level;
  for (std::size_t k = 0; k < face.vars.size(); ++k) {
    if (weights[k] != 0) level.push_back({face.vars[k], weights[k]});
  }
  face.prog.add_constraint(std::move(level), lp::Relation::kEqual, out.value, "optimal_face");
  const auto eps = face.prog.add_variable("eps", lp::Bound::free(), 1);
  for (auto v : face.vars) {
    face.prog.add_constraint({{v, 1}, {eps, -1}}, lp::Relation::kGreaterEqual, 0,
                             "floor_" + face.prog.names()[v]);
  }
  const auto best = lp::solve(face.prog);
  if (!best.optimal()) throw InvariantViolation("optimal face program failed");
  result.optimizer = to_measure(market, best.point, result.via_polar);
  return result;
}

}  // namespace

Hedge rho_agent_plus(const MarketModel& market, std::size_t agent,
                     std::span<const Rational> claim) {
  if (!market.terminal_partition(agent).is_measurable(claim)) {
    throw ValidationError("claim rows are measurable for their agent",
                          "claim of agent '" + market.agent(agent).name + "'");
  }
  detail::HedgingProgram hp(market, gains_basis(market, agent), lp::Sense::kMinimize);
  return super_hedge(market, hp, single_row(claim), false);
}

Hedge rho_full_plus(const MarketModel& market, std::span<const Rational> claim) {
  if (claim.size() != market.num_atoms()) throw std::invalid_argument("claim length mismatch");
  detail::HedgingProgram hp(market, full_gains_basis(market), lp::Sense::kMinimize);
  return super_hedge(market, hp, single_row(claim), false);
}

ExtendedRational rho_N_plus(const MarketModel& market, const ClaimVector& g) {
  require_measurable(market, g);
  ExtendedRational total = 0;
  for (std::size_t i = 0; i < market.num_agents(); ++i) {
    total = add(total, rho_agent_plus(market, i, g.row(i)).value);
  }
  return total;
}

ExtendedRational pi_N_plus(const MarketModel& market, const ClaimVector& g) {
  require_measurable(market, g);
  ExtendedRational best = ExtendedRational::neg_inf();
  for (std::size_t i = 0; i < market.num_agents(); ++i) {
    best = std::max(best, rho_agent_plus(market, i, g.row(i)).value);
  }
  return best;
}

Hedge pi_N_plus_direct(const MarketModel& market, const ClaimVector& g) {
  require_measurable(market, g);
  detail::HedgingProgram hp(market, nullptr, lp::Sense::kMinimize);
  return super_hedge(market, hp, g, true);
}

Hedge rho_Y_plus(const MarketModel& market, const ExchangeCone& cone, const ClaimVector& g) {
  require_measurable(market, g);
  detail::HedgingProgram hp(market, &cone, lp::Sense::kMinimize);
  return super_hedge(market, hp, g, false);
}

Hedge pi_Y_plus(const MarketModel& market, const ExchangeCone& cone, const ClaimVector& g) {
  require_measurable(market, g);
  detail::HedgingProgram hp(market, &cone, lp::Sense::kMinimize);
  return super_hedge(market, hp, g, true);
}

DualValue dual_rho_Y(const MarketModel& market, const ExchangeCone& cone, const ClaimVector& g) {
  return measure_dual(market, cone, g, lp::Sense::kMaximize);
}

DualValue dual_rho_Y_inf(const MarketModel& market, const ExchangeCone& cone,
                         const ClaimVector& g) {
  return measure_dual(market, cone, g, lp::Sense::kMinimize);
}

DualValue dual_pi_Y(const MarketModel& market, const ExchangeCone& cone, const ClaimVector& g) {
  require_measurable(market, g);
  auto rows = polar_constraints(market, cone);
  const std::size_t n = market.num_atoms();
  lp::Constraint unit{{}, lp::Relation::kEqual, 1, "unit_total"};
  for (std::size_t i = 0; i < market.num_agents(); ++i) {
    for (std::size_t a = 0; a < n; ++a) unit.terms.push_back({detail::flat(i, a, n), market.prob(a)});
  }
  rows.push_back(std::move(unit));
  auto dp = density_program(market, std::move(rows), lp::Sense::kMaximize);
  const auto weights = claim_weights(market, g, true);
  for (std::size_t k = 0; k < dp.vars.size(); ++k) dp.prog.set_cost(dp.vars[k], weights[k]);
  const auto out = lp::solve(dp.prog);
  DualValue result;
  result.via_polar = true;
  if (out.infeasible()) {
    result.value = ExtendedRational::neg_inf();
    return result;
  }
  if (!out.optimal()) throw InvariantViolation("normalized polar program is unbounded");
  result.value = out.value;
  MeasureVector m = to_measure(market, out.point, true);
  bool normalizable = true;
  for (std::size_t i = 0; i < m.q.rows(); ++i) {
    Rational mass = 0;
    for (std::size_t a = 0; a < n; ++a) mass += m.q(i, a);
    if (mass == 0) {
      normalizable = false;
      break;
    }
    for (std::size_t a = 0; a < n; ++a) m.q(i, a) /= mass;
  }
  if (normalizable) result.optimizer = std::move(m);
  return result;
}

ExtendedRational rho_under_measure(const MarketModel& market, std::size_t agent,
                                   std::span<const Rational> q, std::span<const Rational> claim) {
  const Partition& blocks = market.terminal_partition(agent);
  detail::HedgingProgram hp(market, gains_basis(market, agent), lp::Sense::kMinimize);
  auto& prog = hp.program();
  const auto m = prog.add_variable("m", lp::Bound::free(), 1);
  std::vector<std::size_t> y;
  lp::Constraint centred{{}, lp::Relation::kEqual, 0, "zero_mean"};
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    y.push_back(prog.add_variable("y_b" + std::to_string(b), lp::Bound::free()));
    Rational mass = 0;
    for (auto atom : blocks.block(b)) mass += q[atom];
    if (mass != 0) centred.terms.push_back({y.back(), mass});
  }
  prog.add_constraint(std::move(centred.terms), centred.relation, 0, centred.name);
  for (std::size_t a = 0; a < market.num_atoms(); ++a) {
    auto terms = hp.position(0, a);
    terms.push_back({m, 1});
    terms.push_back({y[blocks.block_of(a)], 1});
    prog.add_constraint(std::move(terms), lp::Relation::kGreaterEqual, claim[a],
                        "hedge_" + market.atom_label(a));
  }
  const auto out = lp::solve(prog);
  if (out.unbounded()) return ExtendedRational::neg_inf();
  if (!out.optimal()) throw InvariantViolation("measure-restricted program is infeasible");
  return out.value;
}

FairnessAllocation fairness_allocation(const MarketModel& market, const ExchangeCone& cone,
                                       const ClaimVector& g) {
  require_measurable(market, g);
  if (!cone.meta().contains_RN0) {
    throw PreconditionError("fairness allocation needs deterministic zero-sum transfers in the cone");
  }
  const Hedge hedge = rho_Y_plus(market, cone, g);
  if (!hedge.value.is_finite()) {
    throw PreconditionError("fairness allocation needs a finite collective price");
  }
  const DualValue dual = dual_rho_Y(market, cone, g);
  if (!(dual.value == hedge.value) || !dual.optimizer) {
    throw InvariantViolation("collective price and its dual disagree");
  }
  const std::size_t N = market.num_agents();
  const std::size_t n = market.num_atoms();
  FairnessAllocation fa;
  fa.q_hat = *dual.optimizer;
  fa.raw_capital = hedge.capital;
  fa.raw_exchange = hedge.exchange;
  fa.strategies = hedge.strategies;
  fa.adjusted_exchange = hedge.exchange;
  Rational shift_total = 0;
  Rational capital_total = 0;
  for (std::size_t i = 0; i < N; ++i) {
    fa.shift.push_back(fa.q_hat.expectation(i, hedge.exchange.row(i)));
    fa.allocations.push_back(fa.q_hat.expectation(i, g.row(i)));
    fa.adjusted_capital.push_back(hedge.capital[i] + fa.shift[i]);
    for (std::size_t a = 0; a < n; ++a) fa.adjusted_exchange(i, a) -= fa.shift[i];
    shift_total += fa.shift[i];
    capital_total += fa.adjusted_capital[i];
  }
  if (shift_total != 0) throw InvariantViolation("exchange expectations do not sum to zero");
  if (capital_total != hedge.value.value()) {
    throw InvariantViolation("adjusted capital does not add up to the collective price");
  }
  for (std::size_t i = 0; i < N; ++i) {
    if (fa.adjusted_capital[i] != fa.allocations[i]) {
      throw InvariantViolation("adjusted capital differs from the allocation of agent '" +
                               market.agent(i).name + "'");
    }
    const ExtendedRational alone = rho_agent_plus(market, i, g.row(i)).value;
    if (ExtendedRational(fa.allocations[i]) > alone) {
      throw InvariantViolation("allocation exceeds the stand-alone price of agent '" +
                               market.agent(i).name + "'");
    }
    const ExtendedRational cost = rho_under_measure(market, i, fa.q_hat.q.row(i), g.row(i));
    if (!(cost == ExtendedRational(fa.allocations[i]))) {
      throw InvariantViolation("price under the fair measure differs from the allocation");
    }
    fa.agent_costs.push_back(cost.value());
  }
  return fa;
}

ExtendedRational rho_Y_minus(const MarketModel& market, const ExchangeCone& cone,
                             const ClaimVector& g) {
  return -rho_Y_plus(market, cone, negated(g)).value;
}

ExtendedRational pi_Y_minus(const MarketModel& market, const ExchangeCone& cone,
                            const ClaimVector& g) {
  return -pi_Y_plus(market, cone, negated(g)).value;
}

ExtendedRational rho_N_minus(const MarketModel& market, const ClaimVector& g) {
  return -rho_N_plus(market, negated(g));
}

CooperationValue value_of_cooperation(const MarketModel& market, const ExchangeCone& cone,
                                      const ClaimVector& g) {
  const ExtendedRational rho_y = rho_Y_plus(market, cone, g).value;
  const ExtendedRational rho_n = rho_N_plus(market, g);
  CooperationValue v;
  v.selling = rho_y.is_neg_inf() ? ExtendedRational::pos_inf() : difference(rho_n, rho_y);
  const ExtendedRational buying =
      difference(rho_Y_minus(market, cone, g), rho_N_minus(market, g));
  if (v.selling.is_pos_inf() || buying.is_pos_inf()) {
    v.total = ExtendedRational::pos_inf();
  } else {
    v.total = add(v.selling, buying);
  }
  return v;
}

Compatibility price_compatibility(const MarketModel& market, const ExchangeCone& cone,
                                  const ClaimVector& g, std::span<const Rational> prices) {
  require_measurable(market, g);
  if (prices.size() != market.num_agents()) {
    throw std::invalid_argument("one price per agent expected");
  }
  detail::HedgingProgram hp(market, &cone, lp::Sense::kMaximize);
  auto& prog = hp.program();
  const std::size_t n = market.num_atoms();
  for (std::size_t i = 0; i < hp.rows(); ++i) {
    for (std::size_t a = 0; a < n; ++a) {
      auto terms = hp.position(i, a);
      for (const auto& [var, coef] : terms) prog.set_cost(var, prog.costs()[var] + coef);
      prog.add_constraint(std::move(terms), lp::Relation::kGreaterEqual, g(i, a) - prices[i],
                          "surplus_" + std::to_string(i) + "_" + market.atom_label(a));
    }
  }
  const auto out = lp::solve(prog);
  Compatibility c;
  const Rational offset = [&] {
    Rational s = 0;
    for (std::size_t i = 0; i < hp.rows(); ++i) {
      for (std::size_t a = 0; a < n; ++a) s += prices[i] - g(i, a);
    }
    return s;
  }();
  std::vector<Rational> x;
  if (out.optimal() && out.value + offset > 0) {
    x = out.point;
  } else if (out.unbounded()) {
    // Walk along the ray until the total surplus turns positive.
    const Rational at_point = prog.objective(out.point) + offset;
    const Rational slope = prog.objective(out.ray);
    Rational step = 1;
    if (at_point <= 0) step += -at_point / slope;
    x = out.point;
    for (std::size_t k = 0; k < x.size(); ++k) x[k] += step * out.ray[k];
  }
  if (!x.empty()) {
    c.compatible = false;
    c.strategies = hp.strategies(x);
    c.ray_coeffs = hp.ray_coeffs(x);
    c.lineality_coeffs = hp.lineality_coeffs(x);
    c.surplus = hp.outcome(x);
    for (std::size_t i = 0; i < hp.rows(); ++i) {
      for (std::size_t a = 0; a < n; ++a) c.surplus(i, a) += prices[i] - g(i, a);
    }
  }
  Rational total = 0;
  for (const auto& p : prices) total += p;
  c.total_cost_exceeds_price = ExtendedRational(total) > rho_Y_plus(market, cone, g).value;
  return c;
}

std::optional<MeasureVector> singleton_measure(const MarketModel& market,
                                               const ExchangeCone& cone) {
  const auto rows = measure_constraints(market, cone);
  RationalMatrix q(market.num_agents(), market.num_atoms());
  for (std::size_t k = 0; k < q.rows() * q.cols(); ++k) {
    Rational extremes[2];
    for (int s = 0; s < 2; ++s) {
      auto dp = density_program(market, rows, s == 0 ? lp::Sense::kMinimize : lp::Sense::kMaximize);
      dp.prog.set_cost(dp.vars[k], 1);
      const auto out = lp::solve(dp.prog);
      if (!out.optimal()) return std::nullopt;
      extremes[s] = out.value;
    }
    if (extremes[0] != extremes[1]) return std::nullopt;
    q(k / q.cols(), k % q.cols()) = extremes[0];
  }
  return MeasureVector{std::move(q)};
}

PricingReport price_claims(const MarketModel& market, const ExchangeCone& cone,
                           const ClaimVector& g) {
  require_measurable(market, g);
  const std::size_t N = market.num_agents();
  PricingReport r;
  r.rho_N = 0;
  r.pi_N = ExtendedRational::neg_inf();
  for (std::size_t i = 0; i < N; ++i) {
    r.rho_i.push_back(rho_agent_plus(market, i, g.row(i)).value);
    r.rho_N = add(r.rho_N, r.rho_i.back());
    r.pi_N = std::max(r.pi_N, r.rho_i.back());
  }
  if (!(pi_N_plus_direct(market, g).value == r.pi_N)) {
    throw InvariantViolation("pi_N from its own program differs from the max of agent prices");
  }
  {
    detail::HedgingProgram hp(market, &cone, lp::Sense::kMinimize);
    r.primal = super_hedge(market, hp, g, false, true);
  }
  r.rho_Y = r.primal.value;
  r.pi_Y = pi_Y_plus(market, cone, g).value;
  if (cone.meta().contains_RN0) {
    const ExtendedRational scaled = r.pi_Y.is_finite() ? ExtendedRational(r.pi_Y.value() * N)
                                                       : r.pi_Y;
    if (!(scaled == r.rho_Y)) throw InvariantViolation("rho_Y differs from N * pi_Y");
  }
  if (r.rho_Y > r.rho_N) throw InvariantViolation("rho_Y exceeds rho_N");
  if (r.pi_Y > r.pi_N) throw InvariantViolation("pi_Y exceeds pi_N");

  const DualValue dual = dual_rho_Y(market, cone, g);
  r.dual_value = dual.value;
  r.dual_optimizer = dual.optimizer;
  if (!(dual.value == r.rho_Y)) throw InvariantViolation("rho_Y differs from its dual value");

  if (!cone.meta().contains_RN0) {
    r.fairness_unavailable = "cone lacks deterministic zero-sum transfers";
  } else if (!r.rho_Y.is_finite()) {
    r.fairness_unavailable = "collective price is not finite";
  } else {
    r.fairness = fairness_allocation(market, cone, g);
  }
  r.cooperation = value_of_cooperation(market, cone, g);
  r.rho_Y_minus = rho_Y_minus(market, cone, g);
  r.rho_N_minus = rho_N_minus(market, g);
  return r;
}

}  // namespace collective_arb
