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

// tangles_cli: analyze separation systems, build trees of tangles, and
// decide tangle/tree duality for JSON instance files.

#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "tangles/io.hpp"

namespace {

using namespace tangles;
using io::json;

enum Exit { kOk = 0, kInternal = 1, kParse = 2, kPrecondition = 3, kInput = 4, kInconclusive = 5 };

struct Options {
  std::string instance;
  std::string family;
  std::optional<double> k;
  std::optional<int> m;
  std::optional<int> n;
  std::string q_file;
  std::string orientations_file;
  std::string dot_file;
  std::string json_file;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write " + path);
  out << text;
}

void emit(const Options& opt, const json& cert) {
  const std::string text = cert.dump(2) + "\n";
  if (opt.json_file.empty()) {
    std::cout << text;
  } else {
    write_file(opt.json_file, text);
  }
}

std::string default_family(const io::Instance& inst) { return inst.kind == "graph" ? "clique" : "T"; }

/// `star` asks for the star form of T, clique and fnm families.
Family make_family(const io::Model& model, const Options& opt, const std::string& name, bool star) {
  const Universe& u = *model.universe;
  if (name == "T") return Family::abstract_tangles(star);
  if (name == "Tstar") return Family::abstract_tangles(true);
  if (name == "profiles") return Family::profiles();
  if (name == "TQ") {
    std::vector<char> q = opt.q_file.empty() ? small_side_q(u) : io::parse_q(model, io::read_json_text(read_file(opt.q_file)));
    return Family::tangles_extending(u, std::move(q));
  }
  if (name == "clique") {
    if (!model.clique) throw InputError("the clique family needs a graph instance");
    return Family::clique(model.clique->graph.adjacency(), star);
  }
  if (name == "fnm") {
    const auto m = opt.m ? opt.m : model.instance.m;
    const auto n = opt.n ? opt.n : model.instance.n;
    return Family::fnm(m.value_or(1), n, star);
  }
  throw InputError("unknown family " + name);
}

json header(const char* command, const io::Model& model, const Family& f) {
  const SeparationSystem& sys = *model.system;
  json out;
  out["command"] = command;
  out["instance_kind"] = model.instance.kind;
  out["system"] = model.system_name;
  out["family"] = f.name();
  out["universe"] = {{"size", model.universe->size()}, {"distributive", model.universe->distributive()}};
  out["separations"] = {{"oriented", sys.members().size()}, {"unoriented", sys.unoriented_count()}};
  return out;
}

int cmd_analyze(const Options& opt) {
  const io::Instance inst = io::parse_instance_text(read_file(opt.instance));
  const std::string fam = opt.family.empty() ? default_family(inst) : opt.family;
  const io::Model model = io::build_model(inst, inst.kind == "graph" && fam == "clique", opt.k);
  const Family f = make_family(model, opt, fam, false);
  const SeparationSystem& sys = *model.system;
  json cert = header("analyze", model, f);
  cert["submodular"] = is_submodular(sys).submodular;
  cert["separable"] = is_separable(sys).separable;
  json tangles = json::array();
  json verification = json::array();
  for (const auto& o : enumerate_tangles(sys, f)) {
    const auto flags = classify_orientation(sys, o, f);
    if (!flags.family_tangle) throw InvariantError("enumerated orientation is not a tangle");
    tangles.push_back({{"separations", io::orientation_json(model, o)}, {"profile", flags.profile},
                       {"regular", flags.regular}});
  }
  verification.push_back("every listed tangle is consistent and avoids the family");
  cert["tangle_count"] = tangles.size();
  cert["tangles"] = std::move(tangles);
  cert["verification"] = std::move(verification);
  emit(opt, cert);
  return kOk;
}

int cmd_tot(const Options& opt) {
  const io::Instance inst = io::parse_instance_text(read_file(opt.instance));
  const std::string fam = opt.family.empty() ? (inst.kind == "graph" ? "clique" : "profiles") : opt.family;
  const io::Model model = io::build_model(inst, inst.kind == "graph" && fam == "clique", opt.k);
  const SeparationSystem& sys = *model.system;
  const Family f = make_family(model, opt, fam, false);
  if (auto sm = is_submodular(sys); !sm.submodular) {
    throw PreconditionError("system is not submodular: " + sys.describe(sm.witness->first) + ", " +
                            sys.describe(sm.witness->second));
  }
  std::vector<Orientation> pi = opt.orientations_file.empty()
                                    ? enumerate_tangles(sys, f)
                                    : io::parse_orientations(model, io::read_json_text(read_file(opt.orientations_file)));
  ToTStats stats;
  const NestedSet nested = tree_of_tangles(sys, pi, &stats);
  const auto ids = detail::reference_ids(sys, nested.separations);
  if (!is_nested_set(sys.universe(), ids)) throw InvariantError("emitted set is not nested");
  const Distinction dist = distinguishes(nested.separations, pi);
  if (!dist.all) throw InvariantError("emitted set does not distinguish the orientations");

  json cert = header("tot", model, f);
  json orientations = json::array();
  for (const auto& o : pi) orientations.push_back(io::orientation_json(model, o));
  cert["orientations"] = std::move(orientations);
  cert["tree_set"] = io::separations_json(model, ids);
  cert["is_tree_set"] = nested.tree_set;
  json matrix = json::array();
  for (std::size_t i = 0; i < pi.size(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < pi.size(); ++j) {
      const int w = dist.witness[i][j];
      if (w < 0) {
        row.push_back(nullptr);
      } else {
        const auto pos = std::find(nested.separations.begin(), nested.separations.end(), w) - nested.separations.begin();
        row.push_back(pos);
      }
    }
    matrix.push_back(std::move(row));
  }
  cert["distinguishing"] = std::move(matrix);
  cert["stats"] = {{"corner_moves", stats.corner_moves}, {"exchanges", stats.exchanges}};
  cert["verification"] = json::array({"tree set is nested", "tree set distinguishes all orientations"});
  if (!opt.dot_file.empty()) write_file(opt.dot_file, io::nested_dot(model, ids));
  emit(opt, cert);
  return kOk;
}

int cmd_duality(const Options& opt) {
  const io::Instance inst = io::parse_instance_text(read_file(opt.instance));
  const std::string fam = opt.family.empty() ? default_family(inst) : opt.family;
  const io::Model model = io::build_model(inst, inst.kind == "graph" && fam == "clique", opt.k);
  const SeparationSystem& sys = *model.system;
  const Family f = make_family(model, opt, fam, true);
  const DualityOutcome out = fam == "TQ" ? abstract_tangle_duality(sys, f.q()) : duality_decide(sys, f);
  json cert = header("duality", model, f);
  json verification = json::array();
  if (out.kind == DualityOutcome::Kind::Inconclusive) {
    cert["outcome"] = "inconclusive";
    cert["diagnostic"] = out.diagnostic;
    emit(opt, cert);
    return kInconclusive;
  }
  if (out.tangle) {
    const auto flags = classify_orientation(sys, *out.tangle, f);
    if (!flags.family_tangle) throw InvariantError("tangle witness does not re-validate");
    cert["outcome"] = "tangle";
    cert["tangle"] = io::orientation_json(model, *out.tangle);
    verification.push_back("tangle is consistent and avoids the family");
  } else {
    const STree& tree = *out.tree;
    if (!validate_stree(tree, sys, f).ok()) throw InvariantError("S-tree witness does not re-validate");
    cert["outcome"] = "stree";
    json edges = json::array();
    for (std::size_t e = 0; e < tree.edges.size(); ++e) {
      edges.push_back({{"from", tree.edges[e].first}, {"to", tree.edges[e].second},
                       {"separation", io::separation_json(model, tree.alpha[e])}});
    }
    cert["stree"] = {{"nodes", tree.nodes}, {"edges", std::move(edges)}};
    verification.push_back("S-tree labels lie in S and every node star lies in the family");
    std::optional<TreeDecomposition> td;
    if (model.clique && fam == "clique") {
      td = stree_to_tree_decomposition(tree, *model.clique);
      json bags = json::array();
      for (Mask b : td->bags) bags.push_back(io::side_json(model, b));
      cert["tree_decomposition"] = {{"bags", std::move(bags)}, {"edges", td->edges}};
      verification.push_back("tree-decomposition axioms hold and every part is a clique");
    }
    if (!opt.dot_file.empty()) write_file(opt.dot_file, io::stree_dot(model, tree, td ? &td->bags : nullptr));
  }
  cert["verification"] = std::move(verification);
  emit(opt, cert);
  return kOk;
}

struct GenerateOptions {
  std::string kind = "graph";
  int size = 6;
  std::uint64_t seed = 1;
  double probability = 0.5;
  int criteria = 3;
};

int cmd_generate(const GenerateOptions& g) {
  std::mt19937_64 rng(g.seed);
  json doc;
  if (g.kind == "graph") {
    const Graph graph = random_connected_graph(g.size, g.probability, rng);
    doc = {{"kind", "graph"}, {"n", g.size}, {"edges", graph.edges()}};
  } else if (g.kind == "set" || g.kind == "circle" || g.kind == "criteria") {
    if (g.size < 1 || g.size > 16) throw InputError("size must be in [1, 16]");
    std::vector<int> elements(g.size);
    for (int i = 0; i < g.size; ++i) elements[i] = i;
    doc = {{"kind", g.kind}, {"elements", elements}};
    if (g.kind != "set") {
      json crit = json::array();
      for (Mask c : random_criteria(g.size, g.criteria, g.probability, rng)) crit.push_back(mask_elements(c));
      doc["criteria"] = std::move(crit);
    }
    if (g.kind == "circle") doc["cycle"] = elements;
  } else {
    throw InputError("generate supports graph, set, circle and criteria");
  }
  std::cout << doc.dump() << "\n";
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Separation systems, trees of tangles and tangle/tree duality"};
  app.require_subcommand(1);
  Options opt;
  GenerateOptions gen;
  const std::vector<std::string> families = {"T", "Tstar", "TQ", "profiles", "clique", "fnm"};

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("instance", opt.instance, "Instance JSON file")->required();
    sub->add_option("--family", opt.family, "Family: T, Tstar, TQ, profiles, clique, fnm")
        ->check(CLI::IsMember(families));
    sub->add_option("--k", opt.k, "Order threshold: keep separations of order < k");
    sub->add_option("--m", opt.m, "Fnm: intersections must have fewer than m elements");
    sub->add_option("--n", opt.n, "Fnm: sets must have fewer than n members");
    sub->add_option("--Q", opt.q_file, "JSON array of separations forming Q (family TQ)");
    sub->add_option("--json", opt.json_file, "Write the certificate here instead of stdout");
  };
  CLI::App* analyze = app.add_subcommand("analyze", "Sizes, submodularity, separability and tangles");
  add_common(analyze);
  CLI::App* tot = app.add_subcommand("tot", "Tree set distinguishing a set of profiles");
  add_common(tot);
  tot->add_option("--orientations", opt.orientations_file, "JSON array of orientations to distinguish");
  tot->add_option("--dot", opt.dot_file, "Write the nesting diagram as DOT");
  CLI::App* duality = app.add_subcommand("duality", "Find a tangle or an S-tree witnessing that none exists");
  add_common(duality);
  duality->add_option("--dot", opt.dot_file, "Write the S-tree as DOT");
  CLI::App* generate = app.add_subcommand("generate", "Print a random instance");
  generate->add_option("--kind", gen.kind, "graph, set, circle or criteria");
  generate->add_option("--size", gen.size, "Vertices or elements");
  generate->add_option("--seed", gen.seed, "Random seed");
  generate->add_option("--p", gen.probability, "Edge or membership probability");
  generate->add_option("--criteria", gen.criteria, "Number of criteria sets");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kParse;
  }
  try {
    if (*analyze) return cmd_analyze(opt);
    if (*tot) return cmd_tot(opt);
    if (*duality) return cmd_duality(opt);
    return cmd_generate(gen);
  } catch (const io::SchemaError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kParse;
  } catch (const PreconditionError& e) {
    std::cerr << "precondition violated: " << e.what() << "\n";
    return kPrecondition;
  } catch (const InputError& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kInput;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInternal;
  }
}
