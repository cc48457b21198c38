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

#include "collective_arb/cli/model_io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace collective_arb::cli {

using Json = nlohmann::ordered_json;

ParseError::ParseError(const std::string& message, std::size_t line, std::size_t column)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) +
                         ": " + message),
      line_(line),
      column_(column) {}

namespace {

void fail(const std::string& rule, const std::string& pointer) {
  throw ValidationError(rule, pointer.empty() ? "/" : pointer);
}

const Json& field(const Json& obj, const char* key, const std::string& at) {
  if (!obj.is_object()) fail("value is an object", at);
  auto it = obj.find(key);
  if (it == obj.end()) fail(std::string("key '") + key + "' is present", at);
  return *it;
}

const Json& array_at(const Json& v, const std::string& at) {
  if (!v.is_array()) fail("value is an array", at);
  return v;
}

std::string text_at(const Json& v, const std::string& at) {
  if (!v.is_string()) fail("value is a string", at);
  return v.get<std::string>();
}

Rational rational_at(const Json& v, const std::string& at) {
  if (v.is_number_integer()) return Rational(v.get<long long>());
  if (v.is_string()) {
    if (auto r = parse_rational(v.get<std::string>())) return *r;
    fail("rationals parse as int or int/int with nonzero denominator", at);
  }
  fail("value is a rational string or an integer", at);
  return 0;
}

std::size_t index_at(const Json& v, const std::string& at) {
  if (!v.is_number_unsigned()) fail("value is a nonnegative integer", at);
  return v.get<std::size_t>();
}

std::vector<Rational> row_at(const Json& v, const std::string& at) {
  std::vector<Rational> out;
  const auto& arr = array_at(v, at);
  for (std::size_t k = 0; k < arr.size(); ++k) out.push_back(rational_at(arr[k], at + "/" + std::to_string(k)));
  return out;
}

Matrix matrix_at(const Json& v, const std::string& at) {
  Matrix out;
  const auto& arr = array_at(v, at);
  for (std::size_t k = 0; k < arr.size(); ++k) out.push_back(row_at(arr[k], at + "/" + std::to_string(k)));
  return out;
}

MarketDescription::LabelPartition partition_at(const Json& v, const std::string& at) {
  MarketDescription::LabelPartition out;
  const auto& blocks = array_at(v, at);
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    const std::string bat = at + "/" + std::to_string(b);
    std::vector<std::string> block;
    const auto& labels = array_at(blocks[b], bat);
    for (std::size_t k = 0; k < labels.size(); ++k) {
      block.push_back(text_at(labels[k], bat + "/" + std::to_string(k)));
    }
    out.push_back(std::move(block));
  }
  return out;
}

std::vector<MarketDescription::LabelPartition> filtration_at(const Json& v, const std::string& at) {
  std::vector<MarketDescription::LabelPartition> out;
  const auto& parts = array_at(v, at);
  for (std::size_t t = 0; t < parts.size(); ++t) out.push_back(partition_at(parts[t], at + "/" + std::to_string(t)));
  return out;
}

ExchangeSpec exchange_at(const Json& v, const std::vector<std::string>& agent_names,
                         const std::string& at) {
  ExchangeSpec spec;
  spec.kind = text_at(field(v, "kind", at), at + "/kind");
  if (spec.kind == "zero") return spec;
  if (spec.kind == "Y0" || spec.kind == "grouping") {
    spec.t = v.contains("t") ? index_at(v["t"], at + "/t") : 0;
  }
  if (spec.kind == "grouping") {
    const std::string gat = at + "/groups";
    const auto& groups = array_at(field(v, "groups", at), gat);
    for (std::size_t h = 0; h < groups.size(); ++h) {
      const std::string hat = gat + "/" + std::to_string(h);
      std::vector<std::size_t> members;
      const auto& entries = array_at(groups[h], hat);
      for (std::size_t k = 0; k < entries.size(); ++k) {
        const std::string kat = hat + "/" + std::to_string(k);
        if (entries[k].is_string()) {
          const auto name = entries[k].get<std::string>();
          std::size_t found = agent_names.size();
          for (std::size_t i = 0; i < agent_names.size(); ++i) {
            if (agent_names[i] == name) found = i;
          }
          if (found == agent_names.size()) fail("grouping names known agents", kat);
          members.push_back(found);
        } else {
          members.push_back(index_at(entries[k], kat));
        }
      }
      spec.groups.push_back(std::move(members));
    }
  } else if (spec.kind == "span" || spec.kind == "rays") {
    const std::string gat = at + "/generators";
    const auto& gens = array_at(field(v, "generators", at), gat);
    for (std::size_t k = 0; k < gens.size(); ++k) spec.generators.push_back(matrix_at(gens[k], gat + "/" + std::to_string(k)));
  } else if (spec.kind == "sum") {
    const std::string pat = at + "/parts";
    const auto& parts = array_at(field(v, "parts", at), pat);
    for (std::size_t k = 0; k < parts.size(); ++k) spec.parts.push_back(exchange_at(parts[k], agent_names, pat + "/" + std::to_string(k)));
  } else if (spec.kind != "Y0") {
    fail("exchange kind is one of zero, Y0, grouping, span, rays, sum", at + "/kind");
  }
  return spec;
}

Json rational_json(const Rational& r) { return to_string(r); }

Json row_json(const std::vector<Rational>& row) {
  Json out = Json::array();
  for (const auto& v : row) out.push_back(rational_json(v));
  return out;
}

Json matrix_json(const Matrix& m) {
  Json out = Json::array();
  for (const auto& r : m) out.push_back(row_json(r));
  return out;
}

Json partition_json(const MarketDescription::LabelPartition& p) {
  Json out = Json::array();
  for (const auto& block : p) out.push_back(block);
  return out;
}

Json exchange_json(const ExchangeSpec& spec) {
  Json out;
  out["kind"] = spec.kind;
  if (spec.kind == "Y0" || spec.kind == "grouping") out["t"] = spec.t;
  if (spec.kind == "grouping") out["groups"] = spec.groups;
  if (spec.kind == "span" || spec.kind == "rays") {
    out["generators"] = Json::array();
    for (const auto& g : spec.generators) out["generators"].push_back(matrix_json(g));
  }
  if (spec.kind == "sum") {
    out["parts"] = Json::array();
    for (const auto& p : spec.parts) out["parts"].push_back(exchange_json(p));
  }
  return out;
}

std::pair<std::size_t, std::size_t> line_column(const std::string& text, std::size_t offset) {
  std::size_t line = 1, column = 1;
  for (std::size_t k = 0; k < offset && k < text.size(); ++k) {
    if (text[k] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

}  // namespace

ModelFile parse_model(const std::string& text, const std::string& name) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    // byte is the 1-based offset of the offending character.
    const auto [line, column] = line_column(text, e.byte == 0 ? 0 : e.byte - 1);
    std::string message = e.what();
    const auto colon = message.find(": ", message.find(']'));
    if (colon != std::string::npos) message = message.substr(colon + 2);
    throw ParseError(message, line, column);
  }
  ModelFile model;
  model.name = name;
  auto& d = model.market;
  const auto& atoms = array_at(field(doc, "atoms", ""), "/atoms");
  for (std::size_t a = 0; a < atoms.size(); ++a) d.atoms.push_back(text_at(atoms[a], "/atoms/" + std::to_string(a)));
  d.prob = row_at(field(doc, "prob", ""), "/prob");
  d.horizon = index_at(field(doc, "times", ""), "/times");
  d.global_filtration = filtration_at(field(doc, "global_filtration", ""), "/global_filtration");

  const auto& assets = array_at(field(doc, "assets", ""), "/assets");
  for (std::size_t j = 0; j < assets.size(); ++j) {
    const std::string at = "/assets/" + std::to_string(j);
    PriceProcess x;
    x.name = text_at(field(assets[j], "name", at), at + "/name");
    x.values = matrix_at(field(assets[j], "values", at), at + "/values");
    d.assets.push_back(std::move(x));
  }

  std::vector<std::string> agent_names;
  const auto& agents = array_at(field(doc, "agents", ""), "/agents");
  for (std::size_t i = 0; i < agents.size(); ++i) {
    const std::string at = "/agents/" + std::to_string(i);
    MarketDescription::Agent a;
    a.name = text_at(field(agents[i], "name", at), at + "/name");
    const auto& owned = array_at(field(agents[i], "assets", at), at + "/assets");
    for (std::size_t k = 0; k < owned.size(); ++k) a.assets.push_back(text_at(owned[k], at + "/assets/" + std::to_string(k)));
    bool generated = false;
    if (agents[i].contains("filtration")) {
      const auto& f = agents[i]["filtration"];
      if (f.is_string()) {
        const auto kind = f.get<std::string>();
        if (kind == "generated") {
          generated = true;
        } else if (kind != "global") {
          fail("agent filtration is \"global\", \"generated\" or a list of partitions",
               at + "/filtration");
        }
      } else {
        a.filtration = filtration_at(f, at + "/filtration");
      }
    }
    agent_names.push_back(a.name);
    d.agents.push_back(std::move(a));
    model.generated_filtration.push_back(generated);
  }

  if (doc.contains("exchange")) {
    model.exchange = exchange_at(doc["exchange"], agent_names, "/exchange");
    model.has_exchange = true;
  }
  if (doc.contains("claims")) model.claims = matrix_at(doc["claims"], "/claims");
  return model;
}

ModelFile load_model(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_model(buffer.str(), path);
}

std::string dump_model(const ModelFile& model, int indent) {
  const auto& d = model.market;
  Json doc;
  doc["atoms"] = d.atoms;
  doc["prob"] = row_json(d.prob);
  doc["times"] = d.horizon;
  doc["global_filtration"] = Json::array();
  for (const auto& p : d.global_filtration) doc["global_filtration"].push_back(partition_json(p));
  doc["assets"] = Json::array();
  for (const auto& x : d.assets) {
    Json a;
    a["name"] = x.name;
    a["values"] = matrix_json(x.values);
    doc["assets"].push_back(std::move(a));
  }
  doc["agents"] = Json::array();
  for (std::size_t i = 0; i < d.agents.size(); ++i) {
    const auto& ag = d.agents[i];
    Json a;
    a["name"] = ag.name;
    a["assets"] = ag.assets;
    if (i < model.generated_filtration.size() && model.generated_filtration[i]) {
      a["filtration"] = "generated";
    } else if (ag.filtration) {
      a["filtration"] = Json::array();
      for (const auto& p : *ag.filtration) a["filtration"].push_back(partition_json(p));
    }
    doc["agents"].push_back(std::move(a));
  }
  if (model.has_exchange) doc["exchange"] = exchange_json(model.exchange);
  if (model.claims) doc["claims"] = matrix_json(*model.claims);
  return doc.dump(indent) + "\n";
}

MarketModel build_model_market(const ModelFile& model) {
  MarketModel market = build_market(model.market);
  bool any = false;
  for (bool g : model.generated_filtration) any = any || g;
  if (!any) return market;
  MarketDescription d = model.market;
  for (std::size_t i = 0; i < d.agents.size(); ++i) {
    if (!model.generated_filtration[i]) continue;
    std::vector<PriceProcess> own;
    for (auto j : market.agent(i).asset_ids) own.push_back(market.assets()[j]);
    // An agent without assets observes nothing beyond time 0.
    if (own.empty()) {
      own.push_back({"", std::vector<std::vector<Rational>>(
                             market.horizon() + 1, std::vector<Rational>(market.num_atoms()))});
    }
    const Filtration f = generated_filtration(market.num_atoms(), own);
    std::vector<MarketDescription::LabelPartition> labels;
    for (const auto& p : f.partitions()) {
      MarketDescription::LabelPartition lp;
      for (const auto& block : p.blocks()) {
        std::vector<std::string> names;
        for (auto a : block) names.push_back(d.atoms[a]);
        lp.push_back(std::move(names));
      }
      labels.push_back(std::move(lp));
    }
    d.agents[i].filtration = std::move(labels);
  }
  return build_market(d);
}

ExchangeCone build_cone(const MarketModel& market, const ExchangeSpec& spec) {
  try {
    if (spec.kind == "zero") return make_zero(market);
    if (spec.kind == "Y0") return make_Y0(market, spec.t);
    if (spec.kind == "grouping") return make_grouping(market, spec.groups, spec.t);
    if (spec.kind == "span" || spec.kind == "rays") {
      std::vector<PayoffMatrix> gens;
      for (std::size_t k = 0; k < spec.generators.size(); ++k) {
        const auto& g = spec.generators[k];
        if (g.size() != market.num_agents()) {
          fail("exchange generators have one row per agent", "/exchange/generators/" + std::to_string(k));
        }
        for (const auto& row : g) {
          if (row.size() != market.num_atoms()) {
            fail("exchange generator rows have one entry per atom",
                 "/exchange/generators/" + std::to_string(k));
          }
        }
        gens.push_back(PayoffMatrix::from_rows(g));
      }
      return spec.kind == "span" ? make_span(market, std::move(gens))
                                 : make_rays(market, std::move(gens));
    }
    if (spec.kind == "sum") {
      ExchangeCone total = make_zero(market);
      bool first = true;
      for (const auto& part : spec.parts) {
        ExchangeCone c = build_cone(market, part);
        total = first ? c : cone_add(market, total, c);
        first = false;
      }
      return total;
    }
  } catch (const std::invalid_argument& e) {
    fail(e.what(), "/exchange");
  }
  fail("exchange kind is one of zero, Y0, grouping, span, rays, sum", "/exchange/kind");
  return make_zero(market);
}

ClaimVector build_claims(const MarketModel& market, const Matrix& claims) {
  if (claims.size() != market.num_agents()) fail("claims have one row per agent", "/claims");
  for (std::size_t i = 0; i < claims.size(); ++i) {
    if (claims[i].size() != market.num_atoms()) {
      fail("claim rows have one entry per atom", "/claims/" + std::to_string(i));
    }
    if (!market.terminal_partition(i).is_measurable(claims[i])) {
      fail("claim rows are measurable for their agent", "/claims/" + std::to_string(i));
    }
  }
  return ClaimVector::from_rows(claims);
}

}  // namespace collective_arb::cli
