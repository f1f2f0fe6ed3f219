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

#include <bit>
#include <string>
#include <vector>

#include "tangles/instances/graph.hpp"
#include "tangles/instances/separations.hpp"
#include "tangles/orientation.hpp"

namespace tangles {

struct HoleAnalysis {
  std::vector<Mask> holes;               // vertex sets of induced cycles of length >= 4
  bool chordal = true;
  std::vector<Mask> minimal_separators;  // inclusion-minimal a-b separators, sorted, distinct
  std::vector<Orientation> hole_orientations;  // O_H per hole, over the clique system
};

/// Vertex sets inducing a cycle of length at least 4.
inline std::vector<Mask> find_holes(const Graph& g) {
  std::vector<Mask> out;
  const Mask all = g.vertex_mask();
  for (Mask h = 1; h <= all && h != 0; ++h) {
    if (popcount(h) < 4) continue;
    bool two_regular = true;
    for (int v : mask_elements(h)) two_regular = two_regular && popcount(g.neighbors(v) & h) == 2;
    if (two_regular && g.component(std::countr_zero(h), h) == h) out.push_back(h);
  }
  return out;
}

/// Inclusion-minimal separators: sets X for which two non-adjacent vertices
/// lie in distinct components of G - X that both have neighbourhood X.
inline std::vector<Mask> minimal_separators(const Graph& g) {
  const Mask all = g.vertex_mask();
  std::vector<Mask> out;
  auto neighbourhood = [&](Mask c) {
    Mask n = 0;
    for (int v : mask_elements(c)) n |= g.neighbors(v);
    return n & ~c;
  };
  for (Mask x = 0; x <= all; ++x) {
    const Mask rest = all & ~x;
    int full = 0;
    Mask seen = 0;
    for (int v : mask_elements(rest)) {
      if ((seen >> v) & 1U) continue;
      const Mask c = g.component(v, rest);
      seen |= c;
      if (neighbourhood(c) == x) ++full;
    }
    if (full >= 2) out.push_back(x);
    if (x == all) break;
  }
  return out;
}

/// O_H = {(A,B) in S : H is a subset of B} for a hole H of a clique system.
inline Orientation hole_orientation(const CliqueSystem& cs, Mask hole) {
  const Universe& u = *cs.universe;
  std::vector<SepId> chosen;
  for (SepId s : cs.system.members()) {
    if (subset_of(hole, u.payload(s).b)) chosen.push_back(s);
  }
  return orientation_from(cs.system, chosen);
}

inline HoleAnalysis hole_analysis(const Graph& g, const CliqueSystem* cs = nullptr) {
  HoleAnalysis out;
  out.holes = find_holes(g);
  out.chordal = out.holes.empty();
  out.minimal_separators = minimal_separators(g);
  bool dirac = true;
  for (Mask x : out.minimal_separators) dirac = dirac && g.is_clique(x);
  if (dirac != out.chordal) throw InvariantError("hole scan and minimal separator criterion disagree");
  if (cs) {
    for (Mask h : out.holes) out.hole_orientations.push_back(hole_orientation(*cs, h));
  }
  return out;
}

}  // namespace tangles
