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

#include "oracles.hpp"
#include "tangles.hpp"

using namespace tangles;

namespace {

SepId bip(const Universe& u, Mask a) { return *u.find({a, u.ground_mask() & ~a}); }

// Principal orientation of v: every bipartition oriented towards the side containing v.
Orientation principal(const SeparationSystem& sys, int v) {
  const Universe& u = sys.universe();
  std::vector<SepId> ids;
  for (SepId s : sys.members()) {
    if ((u.payload(s).b >> v) & 1U) ids.push_back(s);
  }
  return orientation_from(sys, ids);
}

}  // namespace

TEST(Orientation, SingleSeparationHasTwo) {
  auto u = bipartition_universe(2);
  SeparationSystem sys(u, std::vector<SepId>{bip(*u, 1), bip(*u, 2)});
  EXPECT_EQ(enumerate_consistent_orientations(sys).size(), 2u);
}

TEST(Orientation, ConsistentMatchesOracle) {
  for (int n = 2; n <= 4; ++n) {
    auto u = bipartition_universe(n);
    auto sys = SeparationSystem::full(u);
    std::set<Orientation> expected;
    for (const auto& o : oracle::all_orientations(sys)) {
      if (oracle::consistent(*u, oracle::members_of(sys, o))) expected.insert(o);
    }
    auto got = enumerate_consistent_orientations(sys);
    EXPECT_EQ(std::set<Orientation>(got.begin(), got.end()), expected);
    EXPECT_TRUE(std::is_sorted(got.begin(), got.end(), [](const Orientation& a, const Orientation& b) { return a > b; }));
  }
}

TEST(Orientation, PrincipalTanglesAreAbstractTangles) {
  auto u = bipartition_universe(3);
  auto sys = SeparationSystem::full(u);
  auto tangles = enumerate_tangles(sys, Family::abstract_tangles());
  for (int v = 0; v < 3; ++v) {
    const Orientation tv = principal(sys, v);
    auto flags = classify_orientation(sys, tv, Family::abstract_tangles());
    EXPECT_TRUE(flags.abstract_tangle);
    EXPECT_TRUE(flags.profile);
    EXPECT_NE(std::find(tangles.begin(), tangles.end(), tv), tangles.end());
  }
}

TEST(Orientation, TanglesMatchOracle) {
  std::mt19937_64 rng(23);
  for (int i = 0; i < 30; ++i) {
    auto u = bipartition_universe(4 + i % 2);
    auto sys = random_submodular_system(u, 0.25, rng);
    if (sys.unoriented_count() > 14) continue;
    std::set<Orientation> t_expect, p_expect, tstar_expect;
    for (const auto& o : oracle::all_orientations(sys)) {
      if (oracle::is_tangle_t(sys, o, false)) t_expect.insert(o);
      if (oracle::is_tangle_t(sys, o, true)) tstar_expect.insert(o);
      if (oracle::is_profile(sys, o)) p_expect.insert(o);
    }
    auto t = enumerate_tangles(sys, Family::abstract_tangles());
    auto ts = enumerate_tangles(sys, Family::abstract_tangles(true));
    auto p = enumerate_tangles(sys, Family::profiles());
    EXPECT_EQ(std::set<Orientation>(t.begin(), t.end()), t_expect);
    EXPECT_EQ(std::set<Orientation>(ts.begin(), ts.end()), tstar_expect);
    EXPECT_EQ(std::set<Orientation>(p.begin(), p.end()), p_expect);
    // Every abstract tangle is a profile.
    for (const auto& o : t) EXPECT_TRUE(classify_orientation(sys, o, Family::profiles()).profile);
  }
}

TEST(Orientation, InconsistentPairDetected) {
  auto u = bipartition_universe(3);
  SeparationSystem sys(u, std::vector<SepId>{bip(*u, 1), bip(*u, 6), bip(*u, 3), bip(*u, 4)});
  // ({0},{1,2}) <= ({0,1},{2}); orient as ({1,2},{0}) and ({0,1},{2}): pointing away.
  Orientation o = orientation_from(sys, std::vector<SepId>{bip(*u, 6), bip(*u, 3)});
  EXPECT_FALSE(classify_orientation(sys, o, Family::abstract_tangles()).consistent);
}

TEST(Orientation, ConsistentContainsTrivialAndDegenerate) {
  std::mt19937_64 rng(29);
  for (int i = 0; i < 20; ++i) {
    auto u = bipartition_universe(4);
    auto sys = random_submodular_system(u, 0.3, rng);
    for (const auto& o : enumerate_consistent_orientations(sys)) {
      for (SepId s : sys.members()) {
        if (is_trivial(sys, s) || u->is_degenerate(s)) EXPECT_TRUE(contains(sys, o, s));
      }
    }
  }
}

TEST(Orientation, Distinguishes) {
  auto u = bipartition_universe(3);
  auto sys = SeparationSystem::full(u);
  const Orientation t0 = principal(sys, 0), t1 = principal(sys, 1);
  std::vector<Orientation> one{t0};
  EXPECT_TRUE(distinguishes({}, one).all);
  std::vector<Orientation> two{t0, t1};
  const int idx = sys.index_of(bip(*u, 1));
  std::vector<int> n{idx};
  auto d = distinguishes(n, two);
  EXPECT_TRUE(d.all);
  EXPECT_EQ(d.witness[0][1], idx);
  std::vector<Orientation> same{t0, t0};
  auto d2 = distinguishes(n, same);
  EXPECT_FALSE(d2.all);
  EXPECT_EQ(d2.witness[0][1], -1);
}

TEST(Orientation, RegularChecksSmallMembers) {
  auto u = bipartition_universe(3);
  auto sys = SeparationSystem::full(u);
  auto flags = classify_orientation(sys, principal(sys, 2), Family::abstract_tangles());
  EXPECT_TRUE(flags.regular);
}
