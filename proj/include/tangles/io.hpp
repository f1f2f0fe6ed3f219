// Copyright 2026 The Authors.
//
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

#pragma once

// JSON instance files, certificates and DOT output. Requires nlohmann/json
// on the include path as "json.hpp".

#include <algorithm>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "tangles.hpp"

namespace tangles::io {

using nlohmann::json;

/// Malformed JSON or a document not matching the instance schema.
class SchemaError : public Error {
 public:
  using Error::Error;
};

struct Instance {
  std::string kind;               // graph, set, matroid, circle, criteria
  std::vector<json> labels;       // ground elements as given (vertices for graphs)
  Graph graph;
  std::vector<Mask> system;  // optional explicit sides A for set instances
  bool has_system = false;
  std::vector<int> cycle;
  std::vector<Mask> criteria;
  Matroid matroid;
  std::optional<double> k;
  std::optional<int> m;
  std::optional<int> n;
};

namespace detail {

inline const json& field(const json& j, const char* name) {
  auto it = j.find(name);
  if (it == j.end()) throw SchemaError(std::string("missing field \"") + name + "\"");
  return *it;
}

inline int as_int(const json& j, const char* what) {
  if (!j.is_number_integer()) throw SchemaError(std::string(what) + " must be an integer");
  return j.get<int>();
}

inline const json& as_array(const json& j, const char* what) {
  if (!j.is_array()) throw SchemaError(std::string(what) + " must be an array");
  return j;
}

inline std::string label_text(const json& label) {
  return label.is_string() ? label.get<std::string>() : label.dump();
}

/// Index of every label; duplicate labels are rejected.
inline std::map<std::string, int> label_index(const std::vector<json>& labels) {
  std::map<std::string, int> index;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (!index.emplace(label_text(labels[i]), static_cast<int>(i)).second) {
      throw InputError("duplicate element " + label_text(labels[i]));
    }
  }
  return index;
}

inline std::vector<json> read_elements(const json& doc, const char* name) {
  std::vector<json> out;
  for (const auto& e : as_array(field(doc, name), name)) {
    if (!e.is_string() && !e.is_number_integer()) throw SchemaError("elements must be strings or integers");
    out.push_back(e);
  }
  if (out.empty()) throw InputError("ground set must be non-empty");
  if (out.size() > 16) throw InputError("at most 16 ground elements are supported");
  return out;
}

inline Mask read_subset(const json& j, const std::map<std::string, int>& index, const char* what) {
  Mask m = 0;
  for (const auto& e : as_array(j, what)) {
    auto it = index.find(label_text(e));
    if (it == index.end()) throw InputError(std::string("unknown element ") + label_text(e) + " in " + what);
    m |= Mask{1} << it->second;
  }
  return m;
}

}  // namespace detail

inline Instance parse_instance(const json& doc) {
  using namespace detail;
  if (!doc.is_object()) throw SchemaError("instance must be a JSON object");
  Instance inst;
  const json& kind = field(doc, "kind");
  if (!kind.is_string()) throw SchemaError("kind must be a string");
  inst.kind = kind.get<std::string>();
  if (doc.contains("k")) {
    if (!doc["k"].is_number()) throw SchemaError("k must be a number");
    inst.k = doc["k"].get<double>();
  }
  if (doc.contains("m")) inst.m = as_int(doc["m"], "m");
  if (doc.contains("n") && inst.kind != "graph") inst.n = as_int(doc["n"], "n");

  if (inst.kind == "graph") {
    const int n = as_int(field(doc, "n"), "n");
    if (n < 1 || n > Graph::kMaxVertices) throw InputError("graph must have between 1 and 16 vertices");
    inst.graph = Graph(n);
    for (int v = 0; v < n; ++v) inst.labels.emplace_back(v);
    for (const auto& e : as_array(field(doc, "edges"), "edges")) {
      if (!e.is_array() || e.size() != 2) throw SchemaError("each edge must be a pair [u, v]");
      const int a = as_int(e[0], "edge endpoint"), b = as_int(e[1], "edge endpoint");
      if (a < 0 || b < 0 || a >= n || b >= n) throw InputError("edge endpoint out of range");
      if (a == b) throw InputError("loops are not allowed");
      inst.graph.add_edge(a, b);
    }
    return inst;
  }
  if (inst.kind == "matroid") {
    inst.labels = read_elements(doc, "ground");
    const auto index = label_index(inst.labels);
    const json& rank = field(doc, "rank");
    if (!rank.is_object()) throw SchemaError("rank must be an object keyed by subsets");
    const int g = static_cast<int>(inst.labels.size());
    inst.matroid.ground = g;
    inst.matroid.rank.assign(std::size_t{1} << g, -1);
    for (const auto& [key, value] : rank.items()) {
      Mask m = 0;
      std::stringstream ss(key);
      std::string part;
      while (!key.empty() && std::getline(ss, part, ',')) {
        auto it = index.find(part);
        if (it == index.end()) throw InputError("unknown element " + part + " in rank key");
        if ((m >> it->second) & 1U) throw InputError("repeated element in rank key " + key);
        m |= Mask{1} << it->second;
      }
      if (inst.matroid.rank[m] >= 0) throw InputError("rank of subset given twice: " + key);
      inst.matroid.rank[m] = as_int(value, "rank value");
      if (inst.matroid.rank[m] < 0) throw InputError("negative rank for subset " + key);
    }
    for (int r : inst.matroid.rank) {
      if (r < 0) throw SchemaError("rank table must list every subset of the ground set");
    }
    return inst;
  }
  if (inst.kind == "set" || inst.kind == "circle" || inst.kind == "criteria") {
    inst.labels = read_elements(doc, "elements");
    const auto index = label_index(inst.labels);
    if (doc.contains("criteria")) {
      for (const auto& c : as_array(doc["criteria"], "criteria")) inst.criteria.push_back(read_subset(c, index, "criterion"));
    } else if (inst.kind == "criteria") {
      throw SchemaError("missing field \"criteria\"");
    }
    if (inst.kind == "circle") {
      for (const auto& e : as_array(field(doc, "cycle"), "cycle")) {
        auto it = index.find(label_text(e));
        if (it == index.end()) throw InputError("unknown element " + label_text(e) + " in cycle");
        inst.cycle.push_back(it->second);
      }
      CyclicOrder{inst.cycle}.validate(static_cast<int>(inst.labels.size()));
    }
    if (inst.kind == "set" && doc.contains("system")) {
      inst.has_system = true;
      for (const auto& side : as_array(doc["system"], "system")) {
        const Mask a = read_subset(side, index, "system side");
        inst.system.push_back(a);
      }
    }
    return inst;
  }
  throw SchemaError("unknown instance kind \"" + inst.kind + "\"");
}

inline Instance parse_instance_text(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw SchemaError(std::string("malformed JSON: ") + e.what());
  }
  return parse_instance(doc);
}

/// A loaded instance as a separation system, with labels for its ground set.
struct Model {
  Instance instance;
  std::shared_ptr<const Universe> universe;
  std::shared_ptr<const SeparationSystem> system;
  std::optional<CliqueSystem> clique;
  std::optional<OrderFunction> order;
  std::vector<json> ground_labels;  // labels of the universe's ground elements
  std::string system_name;
  double k = 0;
};

/// Builds the system the analyses run on. Graphs give their clique system
/// when `clique` is set and their edge connectivity system otherwise.
inline Model build_model(const Instance& inst, bool clique, std::optional<double> k_flag) {
  Model model;
  model.instance = inst;
  const std::optional<double> k = k_flag ? k_flag : inst.k;
  auto finish = [&](const OrderFunction& ord) {
    model.order = ord;
    model.k = k ? *k : order_bound(ord);
  };
  if (inst.kind == "graph" && clique) {
    CliqueSystem cs = clique_system(inst.graph);
    model.universe = cs.universe;
    model.system = std::make_shared<const SeparationSystem>(cs.system);
    model.ground_labels = inst.labels;
    model.system_name = "clique separations";
    model.clique = std::move(cs);
    return model;
  }
  if (inst.kind == "graph" || inst.kind == "matroid") {
    ConnectivitySystem c;
    if (inst.kind == "graph") {
      if (inst.graph.edges().empty()) throw PreconditionError("graph has no edges");
      c = connectivity_system(inst.graph);
      for (auto [a, b] : inst.graph.edges()) model.ground_labels.emplace_back(std::to_string(a) + "-" + std::to_string(b));
    } else {
      c = connectivity_system(inst.matroid);
      model.ground_labels = inst.labels;
    }
    model.universe = bipartition_universe(c.ground);
    finish(connectivity_order(*model.universe, c));
    model.system = std::make_shared<const SeparationSystem>(order_sk(model.universe, *model.order, model.k));
    model.system_name = "connectivity system, order < " + json(model.k).dump();
    return model;
  }
  const int n = static_cast<int>(inst.labels.size());
  model.universe = bipartition_universe(n);
  model.ground_labels = inst.labels;
  if (inst.kind == "set" && inst.has_system) {
    std::vector<SepId> members;
    for (Mask a : inst.system) {
      const SepId s = *model.universe->find({a, model.universe->ground_mask() & ~a});
      members.push_back(s);
      members.push_back(model.universe->inv(s));
    }
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    model.system = std::make_shared<const SeparationSystem>(model.universe, members);
    model.system_name = "explicit bipartitions";
    return model;
  }
  finish(triple_count_order(*model.universe, inst.criteria));
  if (inst.kind == "circle") {
    model.system = std::make_shared<const SeparationSystem>(
        circle_system(model.universe, CyclicOrder{inst.cycle}, *model.order, model.k));
    model.system_name = "circle separations, order < " + json(model.k).dump();
  } else {
    model.system = std::make_shared<const SeparationSystem>(order_sk(model.universe, *model.order, model.k));
    model.system_name = "bipartitions, order < " + json(model.k).dump();
  }
  return model;
}

// ---------------------------------------------------------------------------
// Separations and orientations as JSON

inline json side_json(const Model& model, Mask side) {
  json out = json::array();
  for (int v : mask_elements(side)) out.push_back(model.ground_labels[v]);
  return out;
}

inline json separation_json(const Model& model, SepId s) {
  const Payload& p = model.universe->payload(s);
  return json{{"A", side_json(model, p.a)}, {"B", side_json(model, p.b)}};
}

inline json separations_json(const Model& model, const std::vector<SepId>& seps) {
  json out = json::array();
  for (SepId s : seps) out.push_back(separation_json(model, s));
  return out;
}

inline json orientation_json(const Model& model, const Orientation& o) {
  return separations_json(model, elements(*model.system, o));
}

inline SepId parse_separation(const Model& model, const json& j) {
  if (!j.is_object() || !j.contains("A") || !j.contains("B")) throw SchemaError("separation must be {\"A\":[...],\"B\":[...]}");
  const auto index = detail::label_index(model.ground_labels);
  const Mask a = detail::read_subset(j["A"], index, "separation side");
  const Mask b = detail::read_subset(j["B"], index, "separation side");
  auto id = model.universe->find({a, b});
  if (!id) throw InputError("not a separation of this universe: " + j.dump());
  return *id;
}

/// Q file: a JSON array of separations; marks them in a universe-sized mask.
inline std::vector<char> parse_q(const Model& model, const json& doc) {
  std::vector<char> q(model.universe->size(), 0);
  for (const auto& s : detail::as_array(doc, "Q")) q[parse_separation(model, s)] = 1;
  return q;
}

/// Orientations file: a JSON array of orientations, each an array of separations.
inline std::vector<Orientation> parse_orientations(const Model& model, const json& doc) {
  std::vector<Orientation> out;
  for (const auto& o : detail::as_array(doc, "orientations")) {
    std::vector<SepId> ids;
    for (const auto& s : detail::as_array(o, "orientation")) ids.push_back(parse_separation(model, s));
    out.push_back(orientation_from(*model.system, ids));
  }
  return out;
}

inline json read_json_text(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw SchemaError(std::string("malformed JSON: ") + e.what());
  }
}

// ---------------------------------------------------------------------------
// DOT

inline std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

inline std::string separation_label(const Model& model, SepId s) {
  auto side = [&](Mask m) {
    std::string out = "{";
    bool first = true;
    for (int v : mask_elements(m)) {
      out += (first ? "" : ",") + detail::label_text(model.ground_labels[v]);
      first = false;
    }
    return out + "}";
  };
  const Payload& p = model.universe->payload(s);
  return "(" + side(p.a) + "," + side(p.b) + ")";
}

/// Nodes labelled by bag (when given) or by the star alpha(F_t); each edge
/// labelled by its separation, oriented from `first` to `second`.
inline std::string stree_dot(const Model& model, const STree& tree, const std::vector<Mask>* bags = nullptr) {
  const Universe& u = *model.universe;
  std::ostringstream os;
  os << "graph stree {\n";
  for (int t = 0; t < tree.nodes; ++t) {
    std::string label;
    if (bags) {
      label = "{";
      bool first = true;
      for (int v : mask_elements((*bags)[t])) {
        label += (first ? "" : ",") + detail::label_text(model.ground_labels[v]);
        first = false;
      }
      label += "}";
    } else {
      for (SepId s : tree.incoming(u, t)) label += separation_label(model, s) + "\\n";
    }
    os << "  n" << t << " [label=\"" << dot_escape(label) << "\"];\n";
  }
  for (std::size_t e = 0; e < tree.edges.size(); ++e) {
    os << "  n" << tree.edges[e].first << " -- n" << tree.edges[e].second << " [label=\""
       << dot_escape(separation_label(model, tree.alpha[e])) << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

/// Hasse diagram of the tree set and its inverses under <=.
inline std::string nested_dot(const Model& model, const std::vector<SepId>& tree_set) {
  const Universe& u = *model.universe;
  std::vector<SepId> all;
  for (SepId s : tree_set) {
    all.push_back(s);
    all.push_back(u.inv(s));
  }
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());
  std::ostringstream os;
  os << "digraph nested {\n";
  for (SepId s : all) os << "  s" << s << " [label=\"" << dot_escape(separation_label(model, s)) << "\"];\n";
  for (SepId a : all) {
    for (SepId b : all) {
      if (!u.lt(a, b)) continue;
      bool cover = true;
      for (SepId c : all) cover = cover && !(u.lt(a, c) && u.lt(c, b));
      if (cover) os << "  s" << a << " -> s" << b << ";\n";
    }
  }
  os << "}\n";
  return os.str();
}

}  // namespace tangles::io
