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

#include "collective_arb/exchange_cone.hpp"

#include <algorithm>
#include <stdexcept>

#include "collective_arb/lp.hpp"

namespace collective_arb {

PayoffMatrix ExchangeCone::combine(const std::vector<Rational>& ray_coeffs,
                                   const std::vector<Rational>& lineality_coeffs) const {
  if (ray_coeffs.size() != rays_.size() || lineality_coeffs.size() != lineality_.size()) {
    throw std::invalid_argument("combine: coefficient count mismatch");
  }
  PayoffMatrix out(agents_, atoms_);
  for (std::size_t k = 0; k < rays_.size(); ++k) {
    if (ray_coeffs[k] != 0) out += rays_[k] * ray_coeffs[k];
  }
  for (std::size_t l = 0; l < lineality_.size(); ++l) {
    if (lineality_coeffs[l] != 0) out += lineality_[l] * lineality_coeffs[l];
  }
  return out;
}

PayoffMatrix pair_exchange(std::size_t agents, std::size_t atoms, std::size_t i, std::size_t j) {
  PayoffMatrix m(agents, atoms);
  for (std::size_t a = 0; a < atoms; ++a) {
    m(i, a) += 1;
    m(j, a) -= 1;
  }
  return m;
}

MembershipResult cone_contains(const ExchangeCone& cone, const PayoffMatrix& y) {
  if (y.rows() != cone.num_agents() || y.cols() != cone.num_atoms()) {
    throw std::invalid_argument("cone_contains: shape mismatch");
  }
  lp::LinearProgram prog;
  std::vector<std::size_t> mu, nu;
  for (std::size_t k = 0; k < cone.rays().size(); ++k) {
    mu.push_back(prog.add_variable("mu" + std::to_string(k), lp::Bound::nonnegative()));
  }
  for (std::size_t l = 0; l < cone.lineality().size(); ++l) {
    nu.push_back(prog.add_variable("nu" + std::to_string(l), lp::Bound::free()));
  }
  for (std::size_t i = 0; i < y.rows(); ++i) {
    for (std::size_t a = 0; a < y.cols(); ++a) {
      std::vector<lp::Term> terms;
      for (std::size_t k = 0; k < mu.size(); ++k) {
        const Rational& v = cone.rays()[k](i, a);
        if (v != 0) terms.push_back({mu[k], v});
      }
      for (std::size_t l = 0; l < nu.size(); ++l) {
        const Rational& v = cone.lineality()[l](i, a);
        if (v != 0) terms.push_back({nu[l], v});
      }
      prog.add_constraint(std::move(terms), lp::Relation::kEqual, y(i, a),
                          "entry_" + std::to_string(i) + "_" + std::to_string(a));
    }
  }
  const auto out = lp::solve(prog);
  MembershipResult result;
  if (out.optimal()) {
    result.member = true;
    for (auto v : mu) result.ray_coeffs.push_back(out.point[v]);
    for (auto v : nu) result.lineality_coeffs.push_back(out.point[v]);
    return result;
  }
  PayoffMatrix w(y.rows(), y.cols());
  for (std::size_t i = 0; i < y.rows(); ++i) {
    for (std::size_t a = 0; a < y.cols(); ++a) w(i, a) = out.farkas[i * y.cols() + a];
  }
  result.separator = std::move(w);
  return result;
}

namespace {

std::optional<std::size_t> measurable_time(const MarketModel& market,
                                           const std::vector<PayoffMatrix>& gens) {
  for (std::size_t t = 0; t <= market.horizon(); ++t) {
    bool ok = true;
    for (const auto& g : gens) {
      for (std::size_t i = 0; i < g.rows() && ok; ++i) {
        ok = market.agent(i).filtration.at(t).is_measurable(g.row(i));
      }
      if (!ok) break;
    }
    if (ok) return t;
  }
  return std::nullopt;
}

std::vector<Rational> flatten(const PayoffMatrix& m) {
  std::vector<Rational> v;
  v.reserve(m.rows() * m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    v.insert(v.end(), m.row(i).begin(), m.row(i).end());
  }
  return v;
}

bool column_sums_zero(const PayoffMatrix& m) {
  for (std::size_t a = 0; a < m.cols(); ++a) {
    if (m.column_sum(a) != 0) return false;
  }
  return true;
}

// Basis of {Y : row i measurable for agent i at time t, rows outside agents
// vanish, sum over agents of Y = 0 atomwise}.
std::vector<PayoffMatrix> zero_sum_basis(const MarketModel& market,
                                         const std::vector<std::size_t>& agents,
                                         std::size_t t) {
  const std::size_t n = market.num_atoms();
  const std::size_t N = market.num_agents();
  std::vector<PayoffMatrix> out;
  if (agents.size() < 2) return out;
  const Partition& first = market.agent(agents.front()).filtration.at(t);
  const bool shared = std::all_of(agents.begin(), agents.end(), [&](std::size_t i) {
    return market.agent(i).filtration.at(t) == first;
  });
  if (shared) {
    for (const auto& block : first.blocks()) {
      for (std::size_t k = 0; k + 1 < agents.size(); ++k) {
        PayoffMatrix m(N, n);
        for (auto atom : block) {
          m(agents[k], atom) = 1;
          m(agents[k + 1], atom) = -1;
        }
        out.push_back(std::move(m));
      }
    }
    return out;
  }
  // One unknown per (agent, block); one equation per atom.
  std::vector<std::pair<std::size_t, std::size_t>> unknowns;
  for (auto i : agents) {
    const auto& p = market.agent(i).filtration.at(t);
    for (std::size_t b = 0; b < p.size(); ++b) unknowns.push_back({i, b});
  }
  std::vector<std::vector<Rational>> eqs(n, std::vector<Rational>(unknowns.size()));
  for (std::size_t atom = 0; atom < n; ++atom) {
    for (std::size_t u = 0; u < unknowns.size(); ++u) {
      const auto& [i, b] = unknowns[u];
      if (market.agent(i).filtration.at(t).block_of(atom) == b) eqs[atom][u] = 1;
    }
  }
  for (const auto& v : null_space(eqs, unknowns.size())) {
    PayoffMatrix m(N, n);
    for (std::size_t u = 0; u < unknowns.size(); ++u) {
      if (v[u] == 0) continue;
      const auto& [i, b] = unknowns[u];
      for (auto atom : market.agent(i).filtration.at(t).block(b)) m(i, atom) = v[u];
    }
    out.push_back(std::move(m));
  }
  return out;
}

void check_time(const MarketModel& market, std::size_t t) {
  if (t > market.horizon()) {
    throw std::invalid_argument("measurability time " + std::to_string(t) + " exceeds T");
  }
}

}  // namespace

ExchangeCone make_cone(const MarketModel& market, std::vector<PayoffMatrix> rays,
                       std::vector<PayoffMatrix> lineality, std::string description,
                       bool grouping) {
  ExchangeCone cone;
  cone.agents_ = market.num_agents();
  cone.atoms_ = market.num_atoms();
  auto admit = [&](std::vector<PayoffMatrix>& source, std::vector<PayoffMatrix>& dest) {
    for (auto& g : source) {
      if (g.rows() != cone.agents_ || g.cols() != cone.atoms_) {
        throw std::invalid_argument("exchange generator has shape " +
                                    std::to_string(g.rows()) + "x" + std::to_string(g.cols()));
      }
      for (std::size_t i = 0; i < g.rows(); ++i) {
        if (!market.terminal_partition(i).is_measurable(g.row(i))) {
          throw ValidationError("exchange rows are measurable for their agent",
                                "generator " + std::to_string(dest.size()) + ", agent '" +
                                    market.agent(i).name + "'");
        }
      }
      if (!g.is_zero()) dest.push_back(std::move(g));
    }
  };
  admit(rays, cone.rays_);
  admit(lineality, cone.lineality_);

  ConeMeta& meta = cone.meta_;
  meta.description = std::move(description);
  meta.grouping = grouping;
  meta.is_zero_sum = std::all_of(cone.rays_.begin(), cone.rays_.end(), column_sums_zero) &&
                     std::all_of(cone.lineality_.begin(), cone.lineality_.end(),
                                 column_sums_zero);
  std::vector<PayoffMatrix> all = cone.rays_;
  all.insert(all.end(), cone.lineality_.begin(), cone.lineality_.end());
  meta.measurable_at = measurable_time(market, all);
  // R^N_0 is spanned by the transfers from agent 0 to each other agent.
  meta.contains_RN0 = true;
  if (cone.rays_.empty()) {
    std::vector<std::vector<Rational>> vecs;
    for (const auto& l : cone.lineality_) vecs.push_back(flatten(l));
    const std::size_t base = rank(vecs);
    for (std::size_t j = 1; j < cone.agents_; ++j) {
      vecs.push_back(flatten(pair_exchange(cone.agents_, cone.atoms_, 0, j)));
    }
    meta.contains_RN0 = rank(vecs) == base;
    return cone;
  }
  for (std::size_t j = 1; j < cone.agents_ && meta.contains_RN0; ++j) {
    const PayoffMatrix e = pair_exchange(cone.agents_, cone.atoms_, 0, j);
    meta.contains_RN0 = cone_contains(cone, e).member && cone_contains(cone, e * Rational(-1)).member;
  }
  return cone;
}

ExchangeCone make_zero(const MarketModel& market) { return make_cone(market, {}, {}, "zero"); }

ExchangeCone make_Y0(const MarketModel& market, std::size_t t) {
  check_time(market, t);
  std::vector<std::size_t> agents(market.num_agents());
  for (std::size_t i = 0; i < agents.size(); ++i) agents[i] = i;
  return make_cone(market, {}, zero_sum_basis(market, agents, t),
                   "Y0(t=" + std::to_string(t) + ")");
}

ExchangeCone make_grouping(const MarketModel& market,
                           const std::vector<std::vector<std::size_t>>& groups, std::size_t t) {
  check_time(market, t);
  std::vector<int> seen(market.num_agents(), 0);
  for (const auto& g : groups) {
    if (g.empty()) throw std::invalid_argument("grouping has an empty group");
    for (auto i : g) {
      if (i >= seen.size()) throw std::invalid_argument("grouping references an unknown agent");
      if (seen[i]++) throw std::invalid_argument("grouping repeats an agent");
    }
  }
  if (std::count(seen.begin(), seen.end(), 0) != 0) {
    throw std::invalid_argument("grouping does not cover every agent");
  }
  std::vector<PayoffMatrix> lin;
  std::string description = "grouping{";
  for (std::size_t h = 0; h < groups.size(); ++h) {
    auto members = groups[h];
    std::sort(members.begin(), members.end());
    auto part = zero_sum_basis(market, members, t);
    lin.insert(lin.end(), part.begin(), part.end());
    description += h ? "|" : "";
    for (std::size_t k = 0; k < members.size(); ++k) {
      description += (k ? "," : "") + std::to_string(members[k]);
    }
  }
  description += "}(t=" + std::to_string(t) + ")";
  return make_cone(market, {}, std::move(lin), description, groups.size() > 1);
}

ExchangeCone make_span(const MarketModel& market, std::vector<PayoffMatrix> generators) {
  return make_cone(market, {}, std::move(generators), "span");
}

ExchangeCone make_rays(const MarketModel& market, std::vector<PayoffMatrix> rays) {
  return make_cone(market, std::move(rays), {}, "cone");
}

ExchangeCone cone_add(const MarketModel& market, const ExchangeCone& a, const ExchangeCone& b) {
  if (a.num_agents() != b.num_agents() || a.num_atoms() != b.num_atoms()) {
    throw std::invalid_argument("cone_add: shape mismatch");
  }
  std::vector<PayoffMatrix> rays = a.rays();
  rays.insert(rays.end(), b.rays().begin(), b.rays().end());
  std::vector<PayoffMatrix> lin = a.lineality();
  lin.insert(lin.end(), b.lineality().begin(), b.lineality().end());
  return make_cone(market, std::move(rays), std::move(lin),
                   a.meta().description + " + " + b.meta().description,
                   a.meta().grouping && b.meta().grouping);
}

ExchangeCone make_RN0(const MarketModel& market) {
  std::vector<PayoffMatrix> lin;
  for (std::size_t i = 0; i + 1 < market.num_agents(); ++i) {
    lin.push_back(pair_exchange(market.num_agents(), market.num_atoms(), i, i + 1));
  }
  return make_cone(market, {}, std::move(lin), "RN0");
}

bool cone_equivalent(const ExchangeCone& a, const ExchangeCone& b) {
  if (a.num_agents() != b.num_agents() || a.num_atoms() != b.num_atoms()) {
    throw std::invalid_argument("cone_equivalent: shape mismatch");
  }
  auto inside = [](const ExchangeCone& x, const ExchangeCone& y) {
    for (const auto& r : x.rays()) {
      if (!cone_contains(y, r).member) return false;
    }
    for (const auto& l : x.lineality()) {
      if (!cone_contains(y, l).member) return false;
      if (!cone_contains(y, l * Rational(-1)).member) return false;
    }
    return true;
  };
  return inside(a, b) && inside(b, a);
}

}  // namespace collective_arb
