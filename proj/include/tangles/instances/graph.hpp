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

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "tangles/universe.hpp"

namespace tangles {

/// Simple undirected graph on vertices 0..n-1, adjacency as bitmasks.
class Graph {
 public:
  static constexpr int kMaxVertices = 16;

  explicit Graph(int n = 0) : adj_(check_size(n), 0) {}

  static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    Graph g(n);
    for (auto [a, b] : edges) g.add_edge(a, b);
    return g;
  }

  void add_edge(int a, int b) {
    const int n = vertex_count();
    if (a < 0 || b < 0 || a >= n || b >= n) throw InputError("edge endpoint out of range");
    if (a == b) throw InputError("loops are not allowed");
    adj_[a] |= Mask{1} << b;
    adj_[b] |= Mask{1} << a;
  }

  int vertex_count() const { return static_cast<int>(adj_.size()); }
  Mask vertex_mask() const { return vertex_count() == 0 ? 0 : (Mask{1} << vertex_count()) - 1; }
  Mask neighbors(int v) const { return adj_[v]; }
  const std::vector<Mask>& adjacency() const { return adj_; }
  bool adjacent(int a, int b) const { return (adj_[a] >> b) & 1U; }

  std::vector<std::pair<int, int>> edges() const {
    std::vector<std::pair<int, int>> out;
    for (int a = 0; a < vertex_count(); ++a) {
      for (int b = a + 1; b < vertex_count(); ++b) {
        if (adjacent(a, b)) out.emplace_back(a, b);
      }
    }
    return out;
  }

  bool is_clique(Mask vertices) const {
    for (int v : mask_elements(vertices)) {
      if (!subset_of(vertices & ~(Mask{1} << v), adj_[v])) return false;
    }
    return true;
  }
  bool is_complete() const { return is_clique(vertex_mask()); }

  /// Vertices reachable from `start` inside `within`.
  Mask component(int start, Mask within) const {
    Mask seen = Mask{1} << start;
    Mask frontier = seen;
    while (frontier) {
      Mask next = 0;
      for (int v : mask_elements(frontier)) next |= adj_[v];
      next &= within & ~seen;
      seen |= next;
      frontier = next;
    }
    return seen;
  }

  bool is_connected() const {
    return vertex_count() == 0 || component(0, vertex_mask()) == vertex_mask();
  }

  /// Graph with vertex v renamed to perm[v].
  Graph relabeled(const std::vector<int>& perm) const {
    Graph g(vertex_count());
    for (auto [a, b] : edges()) g.add_edge(perm[a], perm[b]);
    return g;
  }

  /// Edge set as a bit string over vertex pairs; used for canonical forms.
  std::uint64_t edge_code() const {
    std::uint64_t code = 0;
    int bit = 0;
    for (int a = 0; a < vertex_count(); ++a) {
      for (int b = a + 1; b < vertex_count(); ++b, ++bit) {
        if (adjacent(a, b)) code |= std::uint64_t{1} << bit;
      }
    }
    return code;
  }

  bool operator==(const Graph&) const = default;

 private:
  static std::size_t check_size(int n) {
    if (n < 0 || n > kMaxVertices) throw InputError("vertex count must be in [0, 16]");
    return static_cast<std::size_t>(n);
  }

  std::vector<Mask> adj_;
};

/// Smallest edge code over all relabelings; equal for isomorphic graphs.
inline std::uint64_t canonical_code(const Graph& g) {
  std::vector<int> perm(g.vertex_count());
  std::iota(perm.begin(), perm.end(), 0);
  std::uint64_t best = ~std::uint64_t{0};
  do {
    best = std::min(best, g.relabeled(perm).edge_code());
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

/// One representative per isomorphism class of connected, non-complete
/// graphs on n vertices.
inline std::vector<Graph> connected_noncomplete_graphs(int n) {
  if (n > 7) throw PreconditionError("isomorphism-class enumeration limited to 7 vertices");
  std::vector<std::pair<int, int>> pairs;
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) pairs.emplace_back(a, b);
  }
  std::set<std::uint64_t> seen;
  std::vector<Graph> out;
  for (std::uint64_t code = 0; code < (std::uint64_t{1} << pairs.size()); ++code) {
    Graph g(n);
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      if ((code >> i) & 1U) g.add_edge(pairs[i].first, pairs[i].second);
    }
    if (!g.is_connected() || g.is_complete()) continue;
    if (seen.insert(canonical_code(g)).second) out.push_back(std::move(g));
  }
  return out;
}

/// Random connected non-complete graph: G(n, p) conditioned by rejection.
inline Graph random_connected_graph(int n, double p, std::mt19937_64& rng) {
  if (n < 3) throw PreconditionError("need at least 3 vertices for a connected non-complete graph");
  std::bernoulli_distribution coin(p);
  for (;;) {
    Graph g(n);
    for (int a = 0; a < n; ++a) {
      for (int b = a + 1; b < n; ++b) {
        if (coin(rng)) g.add_edge(a, b);
      }
    }
    if (g.is_connected() && !g.is_complete()) return g;
  }
}

inline Graph cycle_graph(int n) {
  Graph g(n);
  for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

inline Graph complete_graph(int n) {
  Graph g(n);
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) g.add_edge(a, b);
  }
  return g;
}

}  // namespace tangles
