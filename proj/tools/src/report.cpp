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

#include "collective_arb/cli/report.hpp"

#include <sstream>

#include "collective_arb/arbitrage.hpp"
#include "collective_arb/certificates.hpp"
#include "collective_arb/lp.hpp"
#include "collective_arb/pricing.hpp"

namespace collective_arb::cli {
namespace {

std::string num(const Rational& r) { return to_string(r); }
std::string num(const ExtendedRational& r) { return to_string(r); }
std::string num(std::size_t n) { return std::to_string(n); }

Json atom_map(const MarketModel& market, std::span<const Rational> values) {
  Json out = Json::object();
  for (std::size_t a = 0; a < values.size(); ++a) out[market.atom_label(a)] = num(values[a]);
  return out;
}

Json agent_matrix(const MarketModel& market, const RationalMatrix& m) {
  Json out = Json::object();
  for (std::size_t i = 0; i < m.rows(); ++i) out[market.agent(i).name] = atom_map(market, m.row(i));
  return out;
}

std::string block_label(const MarketModel& market, const Partition& p, std::size_t b) {
  std::string s = "{";
  for (std::size_t k = 0; k < p.block(b).size(); ++k) {
    s += (k ? "," : "") + market.atom_label(p.block(b)[k]);
  }
  return s + "}";
}

Json strategy_json(const MarketModel& market, const std::vector<GainsGenerator>& gens,
                   const Filtration& f, const std::vector<Rational>& h) {
  Json out = Json::object();
  for (std::size_t g = 0; g < gens.size() && g < h.size(); ++g) {
    if (h[g] == 0) continue;
    const auto& gen = gens[g];
    out[market.assets()[gen.asset].name + " on " +
        block_label(market, f.at(gen.time - 1), gen.block) + " over (" +
        std::to_string(gen.time - 1) + "," + std::to_string(gen.time) + "]"] = num(h[g]);
  }
  return out;
}

Json strategies_json(const MarketModel& market, const std::vector<std::vector<Rational>>& s) {
  Json out = Json::object();
  for (std::size_t i = 0; i < s.size() && i < market.num_agents(); ++i) {
    out[market.agent(i).name] =
        strategy_json(market, gains_basis(market, i), market.agent(i).filtration, s[i]);
  }
  return out;
}

Json coefficients_json(const std::vector<Rational>& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(num(x));
  return out;
}

Json measure_json(const MarketModel& market, const MeasureVector& q) {
  return agent_matrix(market, q.q);
}

Json cone_json(const ExchangeCone& cone) {
  Json out;
  out["description"] = cone.meta().description;
  out["rays"] = num(cone.rays().size());
  out["lineality"] = num(cone.lineality().size());
  out["zero_sum"] = cone.meta().is_zero_sum;
  out["contains_RN0"] = cone.meta().contains_RN0;
  out["measurable_at"] = cone.meta().measurable_at ? num(*cone.meta().measurable_at) : "absent";
  out["grouping_normalized"] = cone.meta().grouping && !cone.meta().contains_RN0;
  return out;
}

class Auditor {
 public:
  void record(const std::string& what, const certify::Verdict& v) {
    ++checked_;
    if (v) failures_.push_back(what + ": " + *v);
  }
  std::size_t checked() const { return checked_; }
  std::vector<std::string>& failures() { return failures_; }

 private:
  std::size_t checked_ = 0;
  std::vector<std::string> failures_;
};

Json single_row_certificate(const MarketModel& market, const ArbitrageCertificate& c,
                            const std::vector<GainsGenerator>& gens, const Filtration& f) {
  Json out;
  out["holds"] = !c.found;
  if (c.found) {
    out["arbitrage"]["strategy"] = strategy_json(market, gens, f, c.strategies[0]);
    out["arbitrage"]["outcome"] = atom_map(market, c.outcome.row(0));
  } else {
    out["witness"]["density"] = atom_map(market, c.witness.row(0));
    out["witness"]["measure"] = atom_map(market, density_to_measure(market, c.witness.row(0)));
  }
  return out;
}

Json collective_certificate(const MarketModel& market, const ExchangeCone& cone,
                            const ArbitrageCertificate& c) {
  Json out;
  out["holds"] = !c.found;
  if (c.found) {
    out["arbitrage"]["strategies"] = strategies_json(market, c.strategies);
    out["arbitrage"]["ray_coeffs"] = coefficients_json(c.ray_coeffs);
    out["arbitrage"]["lineality_coeffs"] = coefficients_json(c.lineality_coeffs);
    out["arbitrage"]["exchange"] =
        agent_matrix(market, cone.combine(c.ray_coeffs, c.lineality_coeffs));
    out["arbitrage"]["outcome"] = agent_matrix(market, c.outcome);
  } else {
    out["witness"] = agent_matrix(market, c.witness);
  }
  return out;
}

std::string mark(bool yes) { return yes ? "yes" : "no"; }

}  // namespace

Json validation_report(const ModelFile& model) {
  const MarketModel market = build_model_market(model);
  const ExchangeCone cone = model.has_exchange ? build_cone(market, model.exchange) : make_zero(market);
  if (model.claims) build_claims(market, *model.claims);
  Json out;
  out["model"] = model.name;
  out["valid"] = true;
  out["atoms"] = num(market.num_atoms());
  out["horizon"] = num(market.horizon());
  out["agents"] = num(market.num_agents());
  out["assets"] = num(market.assets().size());
  out["common_filtration"] = market.common_filtration();
  out["claims"] = model.claims.has_value();
  out["exchange"] = cone_json(cone);
  return out;
}

Analysis analyze(const ModelFile& model, const Sections& requested) {
  const Sections sections = requested.any() ? requested : Sections::all();
  lp::reset_audit_counters();
  Analysis result;
  Auditor audit;
  Json& report = result.report;
  report["validation"] = validation_report(model);

  const MarketModel market = build_model_market(model);
  const ExchangeCone cone = model.has_exchange ? build_cone(market, model.exchange) : make_zero(market);
  const ExchangeCone hat =
      cone.meta().contains_RN0 ? cone : cone_add(market, cone, make_RN0(market));
  const std::size_t N = market.num_agents();

  // Arbitrage notions.
  Json agents = Json::array();
  bool all_agents = true;
  for (std::size_t i = 0; i < N; ++i) {
    const auto c = detect_NA_agent(market, i);
    audit.record("NA certificate of " + market.agent(i).name,
                 certify::check_agent_arbitrage(market, i, c));
    all_agents = all_agents && !c.found;
    Json a = single_row_certificate(market, c, gains_basis(market, i), market.agent(i).filtration);
    a = Json{{"agent", market.agent(i).name}, {"holds", a["holds"]},
             {c.found ? "arbitrage" : "witness", c.found ? a["arbitrage"] : a["witness"]}};
    agents.push_back(std::move(a));
  }
  const auto global = detect_NA_global(market);
  audit.record("global NA certificate", certify::check_global_arbitrage(market, global));
  const auto nca = detect_NCA(market, cone);
  audit.record("NCA certificate", certify::check_collective_arbitrage(market, cone, nca));
  const auto nca_hat = detect_NCA(market, hat);
  audit.record("NCA certificate with deterministic transfers",
               certify::check_collective_arbitrage(market, hat, nca_hat));

  if (sections.na) {
    report["na"]["agents"] = std::move(agents);
    report["na"]["global"] = single_row_certificate(market, global, full_gains_basis(market),
                                                    market.global_filtration());
  }
  if (sections.nca) {
    report["nca"] = collective_certificate(market, cone, nca);
    report["nca"]["with_deterministic_transfers"] = !nca_hat.found;
  }

  // Collective FTAP, both routes.
  const auto emm = find_emm_vector(market, cone);
  if (emm.measure) {
    audit.record("equivalent measure vector",
                 certify::check_measure_vector(market, cone, *emm.measure, true));
  }
  const auto polar = polar_witness(market, cone);
  if (polar) audit.record("polar witness", certify::check_polar_witness(market, cone, *polar));
  if (polar.has_value() == nca.found) {
    audit.record("polar route", "polar witness disagrees with the arbitrage search");
  }
  if (cone.meta().contains_RN0 && emm.measure.has_value() == nca.found) {
    audit.record("measure route", "measure vector disagrees with the arbitrage search");
  }
  if (sections.ftap) {
    Json f;
    f["measure_vector"] = emm.measure ? measure_json(market, *emm.measure) : Json("absent");
    f["epsilon"] = emm.epsilon ? num(*emm.epsilon) : "absent";
    f["polar_witness"] = polar ? agent_matrix(market, *polar) : Json("absent");
    f["grouping_normalized"] = cone.meta().grouping && !cone.meta().contains_RN0;
    report["ftap"] = std::move(f);
  }

  Json table;
  table["NA"] = !global.found;
  table["NCA(Y)"] = !nca.found;
  table["NCA(Y+R0)"] = !nca_hat.found;
  table["NA_i all i"] = all_agents;
  table["M_Y nonempty"] = emm.measure.has_value();
  table["pi_Y < pi_N"] = "absent";
  table["rho_Y < rho_N"] = "absent";

  if (model.claims) {
    const ClaimVector g = build_claims(market, *model.claims);
    const PricingReport pr = price_claims(market, cone, g);
    audit.record("collective hedge", certify::check_hedge(market, &cone, g, pr.primal));
    for (std::size_t i = 0; i < N; ++i) {
      const Hedge h = rho_agent_plus(market, i, g.row(i));
      audit.record("hedge of " + market.agent(i).name,
                   certify::check_agent_hedge(market, i, g.row(i), h));
    }
    const Hedge pi_hedge = pi_Y_plus(market, cone, g);
    audit.record("single-capital hedge", certify::check_hedge(market, &cone, g, pi_hedge));
    if (pr.dual_optimizer) {
      audit.record("dual optimizer",
                   certify::check_measure_vector(market, cone, *pr.dual_optimizer, false));
    }
    if (pr.fairness) {
      audit.record("fairness allocation",
                   certify::check_fairness(market, cone, g, *pr.fairness, pr.rho_Y));
    }
    table["pi_Y < pi_N"] = pr.pi_Y < pr.pi_N;
    table["rho_Y < rho_N"] = pr.rho_Y < pr.rho_N;

    if (sections.price) {
      Json p;
      Json rho_i = Json::object();
      for (std::size_t i = 0; i < N; ++i) rho_i[market.agent(i).name] = num(pr.rho_i[i]);
      p["rho_i"] = std::move(rho_i);
      p["rho_N"] = num(pr.rho_N);
      p["pi_N"] = num(pr.pi_N);
      p["rho_Y"] = num(pr.rho_Y);
      p["pi_Y"] = num(pr.pi_Y);
      p["dual_value"] = pr.dual_value ? num(*pr.dual_value) : "absent";
      if (pr.primal.value.is_finite()) {
        Json capital = Json::object();
        for (std::size_t i = 0; i < N; ++i) capital[market.agent(i).name] = num(pr.primal.capital[i]);
        p["primal"]["capital"] = std::move(capital);
        p["primal"]["strategies"] = strategies_json(market, pr.primal.strategies);
        p["primal"]["exchange"] = agent_matrix(market, pr.primal.exchange);
      } else {
        p["primal"] = "absent";
      }
      p["dual_optimizer"] = pr.dual_optimizer ? measure_json(market, *pr.dual_optimizer) : Json("absent");
      p["rho_Y_minus"] = num(pr.rho_Y_minus);
      p["rho_N_minus"] = num(pr.rho_N_minus);
      report["pricing"] = std::move(p);
    }
    if (sections.fairness) {
      Json f;
      if (pr.fairness) {
        const auto& fa = *pr.fairness;
        f["q_hat"] = measure_json(market, fa.q_hat);
        Json alloc = Json::object(), shift = Json::object(), cap = Json::object();
        for (std::size_t i = 0; i < N; ++i) {
          alloc[market.agent(i).name] = num(fa.allocations[i]);
          shift[market.agent(i).name] = num(fa.shift[i]);
          cap[market.agent(i).name] = num(fa.adjusted_capital[i]);
        }
        f["allocations"] = std::move(alloc);
        f["shift"] = std::move(shift);
        f["adjusted_capital"] = std::move(cap);
        f["adjusted_exchange"] = agent_matrix(market, fa.adjusted_exchange);
      } else {
        f["unavailable"] = pr.fairness_unavailable.value_or("absent");
      }
      f["grouping_normalized"] = cone.meta().grouping && !cone.meta().contains_RN0;
      report["fairness"] = std::move(f);
      report["cooperation"]["selling"] = num(pr.cooperation.selling);
      report["cooperation"]["total"] = num(pr.cooperation.total);
    }
  }
  report["table"] = std::move(table);

  const auto counters = lp::audit_counters();
  report["audit"]["lp_solves"] = num(counters.solves);
  report["audit"]["lp_certificates_verified"] = num(counters.verified);
  report["audit"]["certificates_checked"] = num(audit.checked());
  report["audit"]["certificates_failed"] = num(audit.failures().size());
  result.failures = std::move(audit.failures());
  return result;
}

std::string render_text(const Json& report) {
  std::ostringstream os;
  const Json& v = report.contains("validation") ? report["validation"] : report;
  os << "model " << v.value("model", std::string("?")) << ": " << v.value("atoms", std::string("?"))
     << " atoms, T=" << v.value("horizon", std::string("?")) << ", "
     << v.value("agents", std::string("?")) << " agents, " << v.value("assets", std::string("?"))
     << " assets\n";
  if (v.contains("exchange")) {
    const Json& e = v["exchange"];
    os << "exchange " << e["description"].get<std::string>() << ": zero-sum "
       << mark(e["zero_sum"].get<bool>()) << ", contains R^N_0 "
       << mark(e["contains_RN0"].get<bool>()) << ", measurable at "
       << e["measurable_at"].get<std::string>() << "\n";
  }
  if (!report.contains("table")) return os.str();

  const Json& t = report["table"];
  std::vector<std::string> header, cells;
  for (const auto& [key, value] : t.items()) {
    header.push_back(key);
    cells.push_back(value.is_boolean() ? mark(value.get<bool>()) : value.get<std::string>());
  }
  std::string top = "|", row = "|";
  for (std::size_t k = 0; k < header.size(); ++k) {
    const std::size_t w = std::max(header[k].size(), cells[k].size());
    top += " " + header[k] + std::string(w - header[k].size(), ' ') + " |";
    row += " " + cells[k] + std::string(w - cells[k].size(), ' ') + " |";
  }
  os << "\n" << top << "\n" << row << "\n";

  if (report.contains("pricing")) {
    const Json& p = report["pricing"];
    os << "\nsuper-replication\n";
    for (const auto& [agent, value] : p["rho_i"].items()) {
      os << "  rho_i " << agent << " = " << value.get<std::string>() << "\n";
    }
    for (const char* key : {"rho_N", "pi_N", "rho_Y", "pi_Y", "dual_value", "rho_Y_minus", "rho_N_minus"}) {
      os << "  " << key << " = " << p[key].get<std::string>() << "\n";
    }
    if (p["primal"].is_object()) {
      os << "  exchange of the optimal hedge\n";
      for (const auto& [agent, row] : p["primal"]["exchange"].items()) {
        os << "    " << agent << ":";
        for (const auto& [atom, val] : row.items()) os << " " << atom << "=" << val.get<std::string>();
        os << "\n";
      }
    }
  }
  if (report.contains("fairness")) {
    const Json& f = report["fairness"];
    os << "\nfairness\n";
    if (f.contains("allocations")) {
      for (const auto& [agent, value] : f["allocations"].items()) {
        os << "  " << agent << " pays " << value.get<std::string>() << "\n";
      }
    } else {
      os << "  unavailable: " << f["unavailable"].get<std::string>() << "\n";
    }
  }
  if (report.contains("cooperation")) {
    os << "\nvalue of cooperation: selling " << report["cooperation"]["selling"].get<std::string>()
       << ", total " << report["cooperation"]["total"].get<std::string>() << "\n";
  }
  if (report.contains("audit")) {
    const Json& a = report["audit"];
    os << "\naudit: " << a["lp_certificates_verified"].get<std::string>() << "/"
       << a["lp_solves"].get<std::string>() << " LP certificates verified, "
       << a["certificates_checked"].get<std::string>() << " result certificates checked, "
       << a["certificates_failed"].get<std::string>() << " failed\n";
  }
  return os.str();
}

}  // namespace collective_arb::cli
