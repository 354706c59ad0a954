// Copyright 2026 The rbgames Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "rbg/instance_io.h"

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>
#include <utility>

#include "rbg/errors.h"

namespace rbg {
namespace {

using nlohmann::json;

const json& Field(const json& obj, const char* key, const std::string& where) {
  if (!obj.is_object()) throw SchemaError(where + " must be an object");
  auto it = obj.find(key);
  if (it == obj.end()) {
    throw SchemaError(where + " is missing \"" + key + "\"");
  }
  return *it;
}

const json& ArrayField(const json& obj, const char* key,
                       const std::string& where) {
  const json& v = Field(obj, key, where);
  if (!v.is_array()) {
    throw SchemaError(where + "." + key + " must be an array");
  }
  return v;
}

std::string StringValue(const json& v, const std::string& where) {
  if (!v.is_string()) throw SchemaError(where + " must be a string");
  return v.get<std::string>();
}

int IntValue(const json& v, const std::string& where) {
  if (!v.is_number_integer()) throw SchemaError(where + " must be an integer");
  return v.get<int>();
}

class NameTable {
 public:
  NameTable(std::string kind) : kind_(std::move(kind)) {}

  void Add(const std::string& name, const std::string& where) {
    if (!index_.emplace(name, static_cast<int>(index_.size())).second) {
      throw InputError(where + ": duplicate " + kind_ + " '" + name + "'");
    }
  }

  int Lookup(const json& v, const std::string& where) const {
    const std::string name = StringValue(v, where);
    auto it = index_.find(name);
    if (it == index_.end()) {
      throw InputError(where + ": unknown " + kind_ + " '" + name + "'");
    }
    return it->second;
  }

  ElementSet LookupSet(const json& v, const std::string& where) const {
    if (!v.is_array()) throw SchemaError(where + " must be an array");
    ElementSet s;
    for (std::size_t k = 0; k < v.size(); ++k) {
      s.Insert(Lookup(v[k], where + "[" + std::to_string(k) + "]"));
    }
    return s;
  }

 private:
  std::string kind_;
  std::map<std::string, int> index_;
};

std::vector<ElementSet> SetList(const json& v, const NameTable& resources,
                                const std::string& where) {
  if (!v.is_array()) throw SchemaError(where + " must be an array");
  std::vector<ElementSet> sets;
  for (std::size_t k = 0; k < v.size(); ++k) {
    sets.push_back(
        resources.LookupSet(v[k], where + "[" + std::to_string(k) + "]"));
  }
  return sets;
}

StrategySpace StrategyFromJson(const json& s, const NameTable& resources,
                               const NameTable* graph_nodes,
                               const std::string& where) {
  const std::string kind =
      StringValue(Field(s, "kind", where), where + ".kind");
  if (kind == "uniform") {
    return Matroid::Uniform(
        resources.LookupSet(Field(s, "ground", where), where + ".ground"),
        IntValue(Field(s, "rank", where), where + ".rank"));
  }
  if (kind == "partition") {
    std::vector<PartitionBlock> blocks;
    const json& arr = ArrayField(s, "blocks", where);
    for (std::size_t k = 0; k < arr.size(); ++k) {
      const std::string w = where + ".blocks[" + std::to_string(k) + "]";
      blocks.push_back(
          {resources.LookupSet(Field(arr[k], "elements", w), w + ".elements"),
           IntValue(Field(arr[k], "capacity", w), w + ".capacity")});
    }
    return Matroid::Partition(std::move(blocks));
  }
  if (kind == "graphic") {
    NameTable nodes("node");
    std::vector<std::string> node_names;
    const json& node_list = ArrayField(s, "nodes", where);
    for (std::size_t k = 0; k < node_list.size(); ++k) {
      node_names.push_back(StringValue(
          node_list[k], where + ".nodes[" + std::to_string(k) + "]"));
      nodes.Add(node_names.back(), where);
    }
    std::vector<GraphicEdge> edges;
    const json& edge_list = ArrayField(s, "edges", where);
    for (std::size_t k = 0; k < edge_list.size(); ++k) {
      const std::string w = where + ".edges[" + std::to_string(k) + "]";
      const json& e = edge_list[k];
      edges.push_back({nodes.Lookup(Field(e, "tail", w), w + ".tail"),
                       nodes.Lookup(Field(e, "head", w), w + ".head"),
                       resources.Lookup(Field(e, "resource", w),
                                        w + ".resource")});
    }
    return Matroid::Graphic(std::move(node_names), std::move(edges));
  }
  if (kind == "free") {
    return Matroid::Free(
        resources.LookupSet(Field(s, "ground", where), where + ".ground"));
  }
  if (kind == "bases") {
    return Matroid::FromBases(
        SetList(Field(s, "sets", where), resources, where + ".sets"));
  }
  if (kind == "antichain") {
    return ExplicitAntichain{
        SetList(Field(s, "sets", where), resources, where + ".sets")};
  }
  if (kind == "path") {
    if (graph_nodes == nullptr) {
      throw SchemaError(where + ": path strategies need a \"graph\" section");
    }
    return NetworkTerminals{
        graph_nodes->Lookup(Field(s, "source", where), where + ".source"),
        graph_nodes->Lookup(Field(s, "target", where), where + ".target")};
  }
  throw SchemaError(where + ": unknown strategy kind '" + kind + "'");
}

CostFunction CostFromJson(const json& c, int default_max_load,
                          const std::string& where) {
  if (!c.is_object()) throw SchemaError(where + " must be an object");
  int max_load = default_max_load;
  if (c.contains("max_load")) {
    max_load = IntValue(c["max_load"], where + ".max_load");
  }
  const int families =
      c.contains("table") + c.contains("linear") + c.contains("fixed");
  if (families != 1) {
    throw SchemaError(where +
                      " needs exactly one of \"table\", \"linear\", \"fixed\"");
  }
  if (c.contains("table")) {
    const json& t = c["table"];
    if (!t.is_array()) throw SchemaError(where + ".table must be an array");
    std::vector<Rational> values;
    for (const json& v : t) values.push_back(RationalFromJson(v));
    return CostFunction(std::move(values));
  }
  if (c.contains("linear")) {
    return CostFunction::Linear(RationalFromJson(c["linear"]), max_load);
  }
  return CostFunction::Fixed(RationalFromJson(c["fixed"]), max_load);
}

json NamesOf(const std::vector<std::string>& names, const ElementSet& s) {
  json out = json::array();
  for (ResourceIndex e : s) out.push_back(names[e]);
  return out;
}

}  // namespace

json RationalToJson(const Rational& r) {
  if (r.IsInteger()) {
    const std::string s = r.ToString();
    if (s.size() < 16) return std::stoll(s);
  }
  return r.ToString();
}

Rational RationalFromJson(const json& j) {
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  if (j.is_string()) return Rational::Parse(j.get<std::string>());
  throw SchemaError("expected an integer or a \"p/q\" string, got " + j.dump());
}

GameInstance InstanceFromJson(const json& doc) {
  const std::string version =
      StringValue(Field(doc, "version", "instance"), "instance.version");
  if (version != kInstanceVersion) {
    throw SchemaError("unsupported instance version '" + version + "'");
  }
  GameInstance game;

  NameTable resources("resource");
  const json& resource_list = ArrayField(doc, "resources", "instance");
  std::vector<std::string> resource_ids;
  for (std::size_t k = 0; k < resource_list.size(); ++k) {
    const std::string w = "resources[" + std::to_string(k) + "]";
    resource_ids.push_back(
        StringValue(Field(resource_list[k], "id", w), w + ".id"));
    resources.Add(resource_ids.back(), w);
  }

  NameTable nodes("node");
  if (doc.contains("graph")) {
    const json& g = doc["graph"];
    Network net;
    const json& node_list = ArrayField(g, "nodes", "graph");
    for (std::size_t k = 0; k < node_list.size(); ++k) {
      net.nodes.push_back(
          StringValue(node_list[k], "graph.nodes[" + std::to_string(k) + "]"));
      nodes.Add(net.nodes.back(), "graph");
    }
    const json& arc_list = ArrayField(g, "arcs", "graph");
    for (std::size_t k = 0; k < arc_list.size(); ++k) {
      const std::string w = "graph.arcs[" + std::to_string(k) + "]";
      const json& a = arc_list[k];
      net.arcs.push_back(
          {nodes.Lookup(Field(a, "from", w), w + ".from"),
           nodes.Lookup(Field(a, "to", w), w + ".to"),
           resources.Lookup(Field(a, "resource", w), w + ".resource")});
    }
    game.network = std::move(net);
  }

  const json& player_list = ArrayField(doc, "players", "instance");
  for (std::size_t k = 0; k < player_list.size(); ++k) {
    const std::string w = "players[" + std::to_string(k) + "]";
    const json& p = player_list[k];
    game.players.push_back(
        {StringValue(Field(p, "id", w), w + ".id"),
         p.contains("demand") ? IntValue(p["demand"], w + ".demand") : 1,
         StrategyFromJson(Field(p, "strategy", w), resources,
                          game.network ? &nodes : nullptr, w + ".strategy")});
  }

  const int total_demand = game.TotalDemand();
  for (std::size_t k = 0; k < resource_list.size(); ++k) {
    const std::string w = "resources[" + std::to_string(k) + "]";
    game.resources.push_back(
        {resource_ids[k], CostFromJson(Field(resource_list[k], "cost", w),
                                       total_demand, w + ".cost")});
  }
  game.Validate();
  return game;
}

json InstanceToJson(const GameInstance& game) {
  std::vector<std::string> names;
  json resources = json::array();
  for (const Resource& r : game.resources) {
    names.push_back(r.id);
    json table = json::array();
    for (const Rational& v : r.cost.values()) {
      table.push_back(RationalToJson(v));
    }
    resources.push_back({{"id", r.id}, {"cost", {{"table", table}}}});
  }
  json doc = {{"version", kInstanceVersion}, {"resources", resources}};
  if (game.network) {
    json arcs = json::array();
    for (const Arc& a : game.network->arcs) {
      arcs.push_back({{"from", game.network->nodes[a.from]},
                      {"to", game.network->nodes[a.to]},
                      {"resource", names[a.resource]}});
    }
    doc["graph"] = {{"nodes", game.network->nodes}, {"arcs", arcs}};
  }
  json players = json::array();
  for (const Player& p : game.players) {
    json s;
    if (const auto* m = std::get_if<Matroid>(&p.strategy)) {
      switch (m->kind()) {
        case Matroid::Kind::kUniform:
          s = {{"kind", "uniform"},
               {"rank", m->uniform_rank()},
               {"ground", NamesOf(names, m->ground())}};
          break;
        case Matroid::Kind::kPartition: {
          json blocks = json::array();
          for (const PartitionBlock& b : m->blocks()) {
            blocks.push_back({{"elements", NamesOf(names, b.elements)},
                              {"capacity", b.capacity}});
          }
          s = {{"kind", "partition"}, {"blocks", blocks}};
          break;
        }
        case Matroid::Kind::kGraphic: {
          json edges = json::array();
          for (const GraphicEdge& e : m->edges()) {
            edges.push_back({{"tail", m->nodes()[e.tail]},
                             {"head", m->nodes()[e.head]},
                             {"resource", names[e.element]}});
          }
          s = {{"kind", "graphic"}, {"nodes", m->nodes()}, {"edges", edges}};
          break;
        }
        case Matroid::Kind::kFree:
          s = {{"kind", "free"}, {"ground", NamesOf(names, m->ground())}};
          break;
        case Matroid::Kind::kExplicitBases: {
          json sets = json::array();
          for (const ElementSet& b : m->bases()) {
            sets.push_back(NamesOf(names, b));
          }
          s = {{"kind", "bases"}, {"sets", sets}};
          break;
        }
      }
    } else if (const auto* a = std::get_if<ExplicitAntichain>(&p.strategy)) {
      json sets = json::array();
      for (const ElementSet& b : a->sets) sets.push_back(NamesOf(names, b));
      s = {{"kind", "antichain"}, {"sets", sets}};
    } else {
      const auto& t = std::get<NetworkTerminals>(p.strategy);
      s = {{"kind", "path"},
           {"source", game.network->nodes[t.source]},
           {"target", game.network->nodes[t.target]}};
    }
    players.push_back({{"id", p.id}, {"demand", p.demand}, {"strategy", s}});
  }
  doc["players"] = players;
  return doc;
}

std::string InstanceDigest(const GameInstance& game) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char ch : InstanceToJson(game).dump()) {
    h ^= ch;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx",
                static_cast<unsigned long long>(h));
  return buf;
}

json ResourceListToJson(const GameInstance& game, const ElementSet& s) {
  json out = json::array();
  for (ResourceIndex e : s) out.push_back(game.resources[e].id);
  return out;
}

json ProfileToJson(const GameInstance& game, const StrategyProfile& sp) {
  json out = json::array();
  for (int i = 0; i < game.num_players(); ++i) {
    json payments = json::object();
    for (ResourceIndex e : sp.config[i]) {
      payments[game.resources[e].id] = sp.payments.at(i, e).ToString();
    }
    out.push_back({{"player", game.players[i].id},
                   {"configuration", ResourceListToJson(game, sp.config[i])},
                   {"payments", payments}});
  }
  return out;
}

StrategyProfile ProfileFromJson(const GameInstance& game,
                                const json& profile) {
  if (!profile.is_array()) throw SchemaError("profile must be an array");
  StrategyProfile sp{ConfigurationProfile(game.num_players()),
                     PaymentMatrix(game.num_players(), game.num_resources())};
  std::vector<bool> seen(game.num_players(), false);
  for (std::size_t k = 0; k < profile.size(); ++k) {
    const std::string w = "profile[" + std::to_string(k) + "]";
    const json& entry = profile[k];
    const int i =
        game.FindPlayer(StringValue(Field(entry, "player", w), w + ".player"));
    if (seen[i]) throw InputError(w + ": player listed twice");
    seen[i] = true;
    const json& config = ArrayField(entry, "configuration", w);
    for (const json& r : config) {
      sp.config[i].Insert(
          game.FindResource(StringValue(r, w + ".configuration")));
    }
    if (entry.contains("payments")) {
      const json& payments = entry["payments"];
      if (!payments.is_object()) {
        throw SchemaError(w + ".payments must be an object");
      }
      for (const auto& [id, amount] : payments.items()) {
        sp.payments.at(i, game.FindResource(id)) = RationalFromJson(amount);
      }
    }
  }
  for (int i = 0; i < game.num_players(); ++i) {
    if (!seen[i]) {
      throw InputError("profile misses player '" + game.players[i].id + "'");
    }
  }
  return sp;
}

json ReadJsonFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  try {
    return json::parse(buffer.str());
  } catch (const json::parse_error& e) {
    throw SchemaError("'" + path + "' is not valid JSON: " + e.what());
  }
}

std::vector<std::vector<std::string>> FamilyFromJson(const json& doc) {
  if (!doc.is_array()) throw SchemaError("a family must be a list of lists");
  std::vector<std::vector<std::string>> family;
  for (const json& set : doc) {
    if (!set.is_array()) throw SchemaError("a family must be a list of lists");
    std::vector<std::string> labels;
    for (const json& label : set) {
      if (label.is_string()) {
        labels.push_back(label.get<std::string>());
      } else if (label.is_number_integer()) {
        labels.push_back(std::to_string(label.get<long long>()));
      } else {
        throw SchemaError("family labels must be strings or integers");
      }
    }
    family.push_back(std::move(labels));
  }
  return family;
}

}  // namespace rbg
