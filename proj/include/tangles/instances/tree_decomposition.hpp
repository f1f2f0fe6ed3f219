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

#include "tangles/instances/graph.hpp"
#include "tangles/instances/separations.hpp"
#include "tangles/stree.hpp"

namespace tangles {

struct TreeDecomposition {
  std::vector<Mask> bags;
  std::vector<std::pair<int, int>> edges;
};

namespace detail {

inline bool is_tree(int nodes, const std::vector<std::pair<int, int>>& edges) {
  if (nodes < 1 || static_cast<int>(edges.size()) != nodes - 1) return false;
  std::vector<int> parent(nodes);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (auto [a, b] : edges) {
    if (a < 0 || b < 0 || a >= nodes || b >= nodes) return false;
    const int ra = find(a), rb = find(b);
    if (ra == rb) return false;
    parent[ra] = rb;
  }
  return true;
}

/// Nodes on the `from` side of the edge from-to.
inline std::vector<char> side_of(int nodes, const std::vector<std::pair<int, int>>& edges, int from, int to) {
  std::vector<char> seen(nodes, 0);
  std::vector<int> stack{from};
  seen[from] = 1;
  seen[to] = 1;
  while (!stack.empty()) {
    const int x = stack.back();
    stack.pop_back();
    for (auto [a, b] : edges) {
      for (int y : {a == x ? b : -1, b == x ? a : -1}) {
        if (y >= 0 && !seen[y]) {
          seen[y] = 1;
          stack.push_back(y);
        }
      }
    }
  }
  seen[to] = 0;
  return seen;
}

}  // namespace detail

/// Tree shape; every vertex and edge in some bag; bags containing a vertex
/// form a subtree.
inline ValidationReport validate_tree_decomposition(const Graph& g, const TreeDecomposition& td) {
  ValidationReport report;
  const int nodes = static_cast<int>(td.bags.size());
  if (!detail::is_tree(nodes, td.edges)) {
    report.add("decomposition tree is not a tree");
    return report;
  }
  Mask covered = 0;
  for (Mask b : td.bags) covered |= b;
  if (covered != g.vertex_mask()) report.add("some vertex lies in no bag");
  for (auto [a, b] : g.edges()) {
    const Mask e = (Mask{1} << a) | (Mask{1} << b);
    bool found = false;
    for (Mask bag : td.bags) found = found || subset_of(e, bag);
    if (!found) report.add("edge " + std::to_string(a) + "-" + std::to_string(b) + " lies in no bag");
  }
  for (int v = 0; v < g.vertex_count(); ++v) {
    int count = 0, inside = 0;
    for (Mask bag : td.bags) count += (bag >> v) & 1U;
    for (auto [a, b] : td.edges) inside += ((td.bags[a] >> v) & 1U) && ((td.bags[b] >> v) & 1U);
    if (count > 0 && inside != count - 1) report.add("bags containing vertex " + std::to_string(v) + " are not connected");
  }
  return report;
}

/// Parts V_t = intersection of the right sides of alpha(F_t); validated,
/// and every part must be a clique.
inline TreeDecomposition stree_to_tree_decomposition(const STree& tree, const CliqueSystem& cs) {
  if (auto report = validate_stree(tree, cs.system, cs.stars()); !report.ok()) {
    throw PreconditionError("not an S-tree over the clique stars: " + report.violations.front());
  }
  const Universe& u = *cs.universe;
  TreeDecomposition td;
  td.edges = tree.edges;
  for (int t = 0; t < tree.nodes; ++t) td.bags.push_back(Family::right_meet(u, tree.incoming(u, t)));
  if (auto report = validate_tree_decomposition(cs.graph, td); !report.ok()) {
    throw InvariantError("derived tree-decomposition invalid: " + report.violations.front());
  }
  for (Mask bag : td.bags) {
    if (!cs.graph.is_clique(bag)) throw InvariantError("derived tree-decomposition has a non-clique part");
  }
  return td;
}

/// Inverse direction: edge s-t becomes alpha(s,t) = (union of bags on the
/// s side, union of bags on the t side).
inline STree tree_decomposition_to_stree(const TreeDecomposition& td, const CliqueSystem& cs) {
  if (auto report = validate_tree_decomposition(cs.graph, td); !report.ok()) {
    throw PreconditionError("invalid tree-decomposition: " + report.violations.front());
  }
  for (Mask bag : td.bags) {
    if (!cs.graph.is_clique(bag)) throw PreconditionError("tree-decomposition has a non-clique part");
  }
  const Universe& u = *cs.universe;
  const int nodes = static_cast<int>(td.bags.size());
  STree tree;
  tree.nodes = nodes;
  for (auto [s, t] : td.edges) {
    auto union_of = [&](const std::vector<char>& side) {
      Mask m = 0;
      for (int x = 0; x < nodes; ++x) {
        if (side[x]) m |= td.bags[x];
      }
      return m;
    };
    const Mask a = union_of(detail::side_of(nodes, td.edges, s, t));
    const Mask b = union_of(detail::side_of(nodes, td.edges, t, s));
    const auto id = u.find({a, b});
    if (!id || !cs.system.contains(*id)) throw InvariantError("edge separation is not a clique separation");
    tree.add_edge(s, t, *id);
  }
  if (auto report = validate_stree(tree, cs.system, cs.stars()); !report.ok()) {
    throw InvariantError("derived S-tree invalid: " + report.violations.front());
  }
  return tree;
}

}  // namespace tangles
