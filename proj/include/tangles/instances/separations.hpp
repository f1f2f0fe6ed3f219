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

#include <memory>
#include <random>
#include <vector>

#include "tangles/family.hpp"
#include "tangles/instances/graph.hpp"
#include "tangles/system.hpp"
#include "tangles/universe.hpp"

namespace tangles {

/// All oriented bipartitions (A, V\A) of V = {0..n-1}, ordered by A.
inline std::shared_ptr<const Universe> bipartition_universe(int n) {
  if (n <= 0) throw PreconditionError("bipartition universe needs a non-empty ground set");
  if (n > 20) throw PreconditionError("bipartition universe limited to 20 elements");
  const Mask all = (Mask{1} << n) - 1;
  std::vector<Payload> elems;
  elems.reserve(std::size_t{1} << n);
  for (Mask a = 0; a <= all; ++a) elems.push_back({a, all & ~a});
  return std::make_shared<const Universe>(Universe::from_payloads(n, std::move(elems), true));
}

/// All separations (A, B) of V = {0..n-1} with A u B = V.
inline std::shared_ptr<const Universe> set_separation_universe(int n) {
  if (n <= 0) throw PreconditionError("separation universe needs a non-empty ground set");
  if (n > 11) throw PreconditionError("separation universe limited to 11 elements");
  const Mask all = (Mask{1} << n) - 1;
  std::vector<Payload> elems;
  // Each vertex is in A only, in B only, or in both.
  std::size_t total = 1;
  for (int i = 0; i < n; ++i) total *= 3;
  elems.reserve(total);
  for (std::size_t code = 0; code < total; ++code) {
    Mask a = 0, b = 0;
    std::size_t c = code;
    for (int v = 0; v < n; ++v, c /= 3) {
      const auto digit = c % 3;
      if (digit != 1) a |= Mask{1} << v;
      if (digit != 0) b |= Mask{1} << v;
    }
    elems.push_back({a & all, b & all});
  }
  return std::make_shared<const Universe>(Universe::from_payloads(n, std::move(elems), true));
}

/// Separations of G whose separator spans a clique, together with the
/// clique family (non-star form and star form).
struct CliqueSystem {
  Graph graph;
  std::shared_ptr<const Universe> universe;
  SeparationSystem system;

  Family family() const { return Family::clique(graph.adjacency(), false); }
  Family stars() const { return Family::clique(graph.adjacency(), true); }
};

inline bool is_graph_separation(const Graph& g, const Payload& p) {
  const Mask only_a = p.a & ~p.b;
  const Mask only_b = p.b & ~p.a;
  for (int v : mask_elements(only_a)) {
    if (g.neighbors(v) & only_b) return false;
  }
  return (p.a | p.b) == g.vertex_mask();
}

inline CliqueSystem clique_system(const Graph& g) {
  if (g.vertex_count() == 0) throw PreconditionError("graph has no vertices");
  if (g.is_complete()) throw PreconditionError("clique system needs a non-complete graph");
  auto u = set_separation_universe(g.vertex_count());
  std::vector<SepId> members;
  for (SepId s = 0; s < u->size(); ++s) {
    const Payload& p = u->payload(s);
    if (is_graph_separation(g, p) && g.is_clique(p.a & p.b)) members.push_back(s);
  }
  SeparationSystem sys(u, members);
  for (SepId s : sys.members()) {
    if (u->is_degenerate(s)) throw InvariantError("clique system contains a degenerate separation");
  }
  return CliqueSystem{g, u, std::move(sys)};
}

/// Random inversion-closed submodular subset of a universe: a random seed
/// set of unoriented separations, repaired by adding a random one of s|t,
/// s&t (with its inverse) until every pair has a corner inside.
inline SeparationSystem random_submodular_system(const std::shared_ptr<const Universe>& u, double density,
                                                 std::mt19937_64& rng) {
  const Universe& un = *u;
  std::vector<char> in(un.size(), 0);
  std::bernoulli_distribution coin(density);
  std::bernoulli_distribution half(0.5);
  for (SepId s = 0; s < un.size(); ++s) {
    if (un.is_reference(s) && coin(rng)) in[s] = in[un.inv(s)] = 1;
  }
  bool changed = true;
  while (changed) {
    changed = false;
    for (SepId s = 0; s < un.size(); ++s) {
      if (!in[s]) continue;
      for (SepId t = 0; t < un.size(); ++t) {
        if (!in[t]) continue;
        const SepId j = un.join(s, t), m = un.meet(s, t);
        if (in[j] || in[m]) continue;
        const SepId add = half(rng) ? j : m;
        in[add] = in[un.inv(add)] = 1;
        changed = true;
      }
    }
  }
  std::vector<SepId> members;
  for (SepId s = 0; s < un.size(); ++s) {
    if (in[s]) members.push_back(s);
  }
  return SeparationSystem(u, members);
}

}  // namespace tangles
