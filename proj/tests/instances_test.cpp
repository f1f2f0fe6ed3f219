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

#include <gtest/gtest.h>

#include <random>
#include <set>

#include "oracles.hpp"
#include "tangles.hpp"

using namespace tangles;

namespace {

Graph diamond() { return Graph::from_edges(4, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}}); }

SepId bip(const Universe& u, Mask a) { return *u.find({a, u.ground_mask() & ~a}); }

}  // namespace

TEST(Graphs, IsomorphismClassCounts) {
  // Connected graphs on 3..6 vertices: 2, 6, 21, 112; minus the complete graph.
  EXPECT_EQ(connected_noncomplete_graphs(3).size(), 1u);
  EXPECT_EQ(connected_noncomplete_graphs(4).size(), 5u);
  EXPECT_EQ(connected_noncomplete_graphs(5).size(), 20u);
  EXPECT_EQ(connected_noncomplete_graphs(6).size(), 111u);
}

TEST(CliqueSystem, C4Members) {
  auto cs = clique_system(cycle_graph(4));
  std::set<std::pair<Mask, Mask>> got, want;
  for (SepId s : cs.system.members()) got.insert({cs.universe->payload(s).a, cs.universe->payload(s).b});
  want.insert({0, 0b1111});
  want.insert({0b1111, 0});
  const Graph g = cycle_graph(4);
  for (Mask k = 1; k <= 0b1111; ++k) {
    if (!g.is_clique(k)) continue;
    want.insert({k, 0b1111});
    want.insert({0b1111, k});
  }
  EXPECT_EQ(got, want);
}

TEST(CliqueSystem, PathSeparator) {
  auto cs = clique_system(Graph::from_edges(3, {{0, 1}, {1, 2}}));
  auto id = cs.universe->find({0b011, 0b110});
  ASSERT_TRUE(id.has_value());
  EXPECT_TRUE(cs.system.contains(*id));
}

TEST(CliqueSystem, RejectsComplete) { EXPECT_THROW(clique_system(complete_graph(4)), PreconditionError); }

TEST(CliqueSystem, SubmodularAndThreeCorners) {
  for (int n = 3; n <= 5; ++n) {
    for (const Graph& g : connected_noncomplete_graphs(n)) {
      auto cs = clique_system(g);
      EXPECT_TRUE(is_submodular(cs.system).submodular);
      const Universe& u = *cs.universe;
      for (SepId s : cs.system.members()) {
        for (SepId t : cs.system.members()) {
          int in = 0;
          for (SepId a : {s, u.inv(s)}) {
            for (SepId b : {t, u.inv(t)}) in += cs.system.contains(u.meet(a, b));
          }
          EXPECT_GE(in, 3);
        }
      }
    }
  }
}

TEST(CliqueSystem, StarTanglesAreRegularProfiles) {
  for (const Graph& g : connected_noncomplete_graphs(5)) {
    auto cs = clique_system(g);
    for (const auto& o : enumerate_tangles(cs.system, cs.stars())) {
      auto flags = classify_orientation(cs.system, o, cs.family());
      EXPECT_TRUE(flags.family_tangle);
      EXPECT_TRUE(flags.profile);
      EXPECT_TRUE(flags.regular);
    }
  }
}

TEST(CliqueSystem, SeparatorsInsideJSeparateInG) {
  // If K inside J(tau) separates a, b in G[J(tau)], it separates them in G.
  std::mt19937_64 rng(89);
  for (int trial = 0; trial < 40; ++trial) {
    Graph g = random_connected_graph(6, 0.45, rng);
    auto cs = clique_system(g);
    const Universe& u = *cs.universe;
    std::uniform_int_distribution<std::size_t> pick(0, cs.system.members().size() - 1);
    for (int k = 0; k < 20; ++k) {
      std::vector<SepId> tau{cs.system.members()[pick(rng)], cs.system.members()[pick(rng)]};
      const Mask j = oracle::right_meet(u, tau);
      for (Mask sep = 0; sep <= j; ++sep) {
        if (!subset_of(sep, j) || !g.is_clique(sep)) continue;
        const Mask rest_j = j & ~sep;
        for (int a : mask_elements(rest_j)) {
          const Mask comp_j = g.component(a, rest_j);
          const Mask comp_g = g.component(a, g.vertex_mask() & ~sep);
          for (int b : mask_elements(rest_j & ~comp_j)) EXPECT_FALSE((comp_g >> b) & 1U);
        }
      }
    }
  }
}

TEST(Connectivity, GraphLambda) {
  auto c = connectivity_system(complete_graph(4));
  ASSERT_EQ(c.ground, 6);
  // Edges in order 01,02,03,12,13,23; the three at vertex 0 are bits 0..2.
  EXPECT_EQ(c.lambda[0b000111], 3);
  EXPECT_EQ(c.lambda[0], 0);
  EXPECT_TRUE(validate_connectivity(c).ok());
}

TEST(Connectivity, GraphLambdaMatchesDirectCount) {
  std::mt19937_64 rng(97);
  Graph g = random_connected_graph(5, 0.5, rng);
  auto c = connectivity_system(g);
  const auto edges = g.edges();
  for (Mask f = 0; f < c.lambda.size(); ++f) {
    int count = 0;
    for (int v = 0; v < g.vertex_count(); ++v) {
      bool in = false, out = false;
      for (std::size_t e = 0; e < edges.size(); ++e) {
        if (edges[e].first != v && edges[e].second != v) continue;
        ((f >> e) & 1U ? in : out) = true;
      }
      count += in && out;
    }
    EXPECT_EQ(c.lambda[f], count);
  }
}

TEST(Connectivity, UniformMatroid) {
  Matroid m{2, {0, 1, 1, 1}};
  auto c = connectivity_system(m);
  EXPECT_EQ(c.lambda[0b01], 1);
  EXPECT_EQ(c.lambda[0b10], 1);
  EXPECT_EQ(c.lambda[0], 0);
}

TEST(Connectivity, RejectsBadMatroid) {
  Matroid m{2, {0, 1, 1, 3}};
  EXPECT_THROW(connectivity_system(m), PreconditionError);
  Matroid non_monotone{2, {0, 1, 1, 0}};
  EXPECT_FALSE(validate_matroid(non_monotone).ok());
}

TEST(Order, SkExamples) {
  auto c = connectivity_system(complete_graph(4));
  auto u = bipartition_universe(c.ground);
  auto ord = connectivity_order(*u, c);
  EXPECT_EQ(order_sk(u, ord, order_bound(ord)).members().size(), u->size());
  EXPECT_TRUE(order_sk(u, ord, 0).members().empty());
  auto s3 = order_sk(u, ord, 3);
  EXPECT_FALSE(s3.members().empty());
  EXPECT_TRUE(is_submodular(s3).submodular);
}

TEST(Order, RejectsAsymmetric) {
  auto u = bipartition_universe(2);
  OrderFunction ord{{0, 1, 2, 0}};
  EXPECT_FALSE(validate_order_function(*u, ord).ok());
  EXPECT_THROW(order_sk(u, ord, 5), PreconditionError);
}

TEST(Order, TripleCount) {
  auto u = bipartition_universe(4);
  auto zero = triple_count_order(*u, {});
  for (double v : zero.values) EXPECT_EQ(v, 0);
  auto ord = triple_count_order(*u, {0b0111});
  EXPECT_EQ(ord(bip(*u, 0b0011)), 2);
  EXPECT_EQ(ord(bip(*u, 0)), 0);
  EXPECT_TRUE(validate_order_function(*u, ord).ok());
}

TEST(Order, TripleCountSubmodularRandom) {
  std::mt19937_64 rng(101);
  for (int i = 0; i < 20; ++i) {
    auto u = bipartition_universe(5);
    EXPECT_TRUE(validate_order_function(*u, triple_count_order(*u, random_criteria(5, 4, 0.5, rng))).ok());
  }
}

TEST(Circle, FourPointCount) {
  auto u = bipartition_universe(4);
  auto ord = triple_count_order(*u, {});
  auto sys = circle_system(u, CyclicOrder::identity(4), ord, 1);
  EXPECT_EQ(sys.members().size(), 14u);
  EXPECT_FALSE(sys.contains(bip(*u, 0b0101)));
}

TEST(Circle, AllCircleSeparationsSubmodular) {
  for (int n = 3; n <= 6; ++n) {
    auto u = bipartition_universe(n);
    auto sys = circle_system(u, CyclicOrder::identity(n), triple_count_order(*u, {}), 1);
    for (SepId a : sys.members()) {
      for (SepId b : sys.members()) EXPECT_TRUE(sys.contains(u->join(a, b)) || sys.contains(u->meet(a, b)));
    }
  }
}

TEST(Circle, RotationInvariantSize) {
  std::mt19937_64 rng(103);
  auto u = bipartition_universe(6);
  for (int i = 0; i < 10; ++i) {
    auto ord = triple_count_order(*u, random_criteria(6, 3, 0.5, rng));
    CyclicOrder cyc{{0, 2, 4, 1, 3, 5}};
    for (double k : {1.0, 3.0, 6.0}) {
      const auto base = circle_system(u, cyc, ord, k).members().size();
      for (int r = 1; r < 6; ++r) EXPECT_EQ(circle_system(u, cyc.rotated(r), ord, k).members().size(), base);
    }
  }
}

TEST(Circle, RequiresZeroOrderOnEmptySide) {
  auto u = bipartition_universe(3);
  OrderFunction ord{std::vector<double>(u->size(), 1.0)};
  EXPECT_THROW(circle_system(u, CyclicOrder::identity(3), ord, 5), PreconditionError);
  EXPECT_THROW(CyclicOrder({{0, 0, 1}}).validate(3), InputError);
}

TEST(Holes, C4) {
  auto h = hole_analysis(cycle_graph(4));
  ASSERT_EQ(h.holes.size(), 1u);
  EXPECT_EQ(h.holes.front(), 0b1111u);
  EXPECT_FALSE(h.chordal);
}

TEST(Holes, Diamond) {
  auto h = hole_analysis(diamond());
  EXPECT_TRUE(h.holes.empty());
  EXPECT_TRUE(h.chordal);
  EXPECT_EQ(h.minimal_separators, std::vector<Mask>{0b0110});
}

TEST(Holes, C5Orientation) {
  auto cs = clique_system(cycle_graph(5));
  auto h = hole_analysis(cs.graph, &cs);
  ASSERT_EQ(h.hole_orientations.size(), 1u);
  const Orientation& o = h.hole_orientations.front();
  for (SepId s : elements(cs.system, o)) EXPECT_EQ(cs.universe->payload(s).b, 0b11111u);
  EXPECT_TRUE(classify_orientation(cs.system, o, cs.family()).family_tangle);
}

TEST(Holes, MatchesBruteForceChordality) {
  // Chordal iff no induced cycle of length >= 4, found by path extension.
  for (const Graph& g : connected_noncomplete_graphs(5)) {
    bool hole = false;
    const Mask all = g.vertex_mask();
    for (Mask m = 0; m <= all && !hole; ++m) {
      if (std::popcount(m) < 4) continue;
      int deg2 = 0;
      for (int v : mask_elements(m)) deg2 += std::popcount(g.neighbors(v) & m) == 2;
      hole = deg2 == std::popcount(m) && g.component(std::countr_zero(m), m) == m;
    }
    EXPECT_EQ(hole_analysis(g).chordal, !hole);
  }
}

TEST(TreeDecomposition, DiamondRoundTrip) {
  auto cs = clique_system(diamond());
  TreeDecomposition td{{0b0111, 0b1110}, {{0, 1}}};
  STree tree = tree_decomposition_to_stree(td, cs);
  ASSERT_EQ(tree.edges.size(), 1u);
  EXPECT_EQ(cs.universe->payload(tree.alpha[0]).a, 0b0111u);
  EXPECT_EQ(cs.universe->payload(tree.alpha[0]).b, 0b1110u);
  EXPECT_EQ(stree_to_tree_decomposition(tree, cs).bags, td.bags);
}

TEST(TreeDecomposition, RandomRoundTrips) {
  std::mt19937_64 rng(107);
  int done = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const int nodes = 1 + static_cast<int>(rng() % 4);
    TreeDecomposition td;
    for (int t = 1; t < nodes; ++t) td.edges.emplace_back(static_cast<int>(rng() % t), t);
    td.bags.assign(nodes, 0);
    const int n = 5;
    for (int v = 0; v < n; ++v) {
      // A random subtree: grow from a random node along random edges.
      std::vector<char> in(nodes, 0);
      in[rng() % nodes] = 1;
      for (int step = 0; step < 3; ++step) {
        for (auto [a, b] : td.edges) {
          if ((in[a] || in[b]) && rng() % 2) in[a] = in[b] = 1;
        }
      }
      for (int t = 0; t < nodes; ++t) {
        if (in[t]) td.bags[t] |= Mask{1} << v;
      }
    }
    Graph g(n);
    for (Mask bag : td.bags) {
      for (int a : mask_elements(bag)) {
        for (int b : mask_elements(bag)) {
          if (a < b) g.add_edge(a, b);
        }
      }
    }
    if (g.is_complete()) continue;
    ASSERT_TRUE(validate_tree_decomposition(g, td).ok());
    auto cs = clique_system(g);
    EXPECT_EQ(stree_to_tree_decomposition(tree_decomposition_to_stree(td, cs), cs).bags, td.bags);
    ++done;
  }
  EXPECT_GT(done, 20);
}

TEST(TreeDecomposition, ValidatorCatchesBrokenAxioms) {
  Graph g = diamond();
  EXPECT_FALSE(validate_tree_decomposition(g, {{0b0111, 0b0110}, {{0, 1}}}).ok());          // 3 uncovered
  EXPECT_FALSE(validate_tree_decomposition(g, {{0b0111, 0b1100}, {{0, 1}}}).ok());          // edge 2-3 uncovered
  EXPECT_FALSE(validate_tree_decomposition(g, {{0b0111, 0b1000, 0b1110}, {{0, 1}, {1, 2}}}).ok());  // 1,2 disconnected
}
