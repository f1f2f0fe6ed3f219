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

#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "tangles/family.hpp"
#include "tangles/system.hpp"

namespace tangles {

/// A finite tree with every oriented edge labelled by a separation.
/// `alpha[e]` labels edge e oriented from `edges[e].first` to
/// `edges[e].second`; the reverse orientation carries its inverse.
struct STree {
  int nodes = 1;
  std::vector<std::pair<int, int>> edges;
  std::vector<SepId> alpha;

  int add_node() { return nodes++; }
  void add_edge(int from, int to, SepId label) {
    edges.emplace_back(from, to);
    alpha.push_back(label);
  }

  /// alpha(F_t): the labels of all edges oriented towards t.
  std::vector<SepId> incoming(const Universe& u, int t) const {
    std::vector<SepId> out;
    for (std::size_t e = 0; e < edges.size(); ++e) {
      if (edges[e].second == t) out.push_back(alpha[e]);
      if (edges[e].first == t) out.push_back(u.inv(alpha[e]));
    }
    return out;
  }
};

/// Checks tree shape, labels inside S, and alpha(F_t) in F for every node.
inline ValidationReport validate_stree(const STree& tree, const SeparationSystem& sys, const Family& f) {
  ValidationReport report;
  const Universe& u = sys.universe();
  if (tree.nodes < 1) {
    report.add("tree has no nodes");
    return report;
  }
  if (tree.alpha.size() != tree.edges.size()) report.add("edge and label counts differ");
  if (static_cast<int>(tree.edges.size()) != tree.nodes - 1) report.add("edge count is not nodes - 1");
  std::vector<int> parent(tree.nodes);
  std::iota(parent.begin(), parent.end(), 0);
  auto root = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (auto [a, b] : tree.edges) {
    if (a < 0 || b < 0 || a >= tree.nodes || b >= tree.nodes || a == b) {
      report.add("bad edge " + std::to_string(a) + "-" + std::to_string(b));
      return report;
    }
    if (root(a) == root(b)) report.add("cycle through edge " + std::to_string(a) + "-" + std::to_string(b));
    parent[root(a)] = root(b);
  }
  for (int t = 0; t < tree.nodes; ++t) {
    if (root(t) != root(0)) {
      report.add("tree is disconnected");
      break;
    }
  }
  for (SepId s : tree.alpha) {
    if (!sys.contains(s)) report.add("label " + u.describe(s) + " not in S");
  }
  if (!report.ok()) return report;
  for (int t = 0; t < tree.nodes; ++t) {
    const auto star = tree.incoming(u, t);
    if (!f.contains(u, star)) report.add("alpha(F_" + std::to_string(t) + ") not in " + f.name());
  }
  return report;
}

}  // namespace tangles
