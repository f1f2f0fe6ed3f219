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
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "tangles/orientation.hpp"
#include "tangles/system.hpp"

namespace tangles {

/// A set of unoriented separations (system indices, sorted).
struct NestedSet {
  std::vector<int> separations;
  bool tree_set = false;
};

struct ToTStats {
  int corner_moves = 0;  // s replaced by s|t
  int exchanges = 0;     // t replaced by s&t
};

namespace detail {

inline std::vector<SepId> reference_ids(const SeparationSystem& sys, std::span<const int> n) {
  std::vector<SepId> out;
  for (int i : n) out.push_back(sys.separations()[i].fwd);
  return out;
}

inline bool tree_set_flag(const SeparationSystem& sys, std::span<const int> n) {
  const auto ids = reference_ids(sys, n);
  if (!is_nested_set(sys.universe(), ids)) return false;
  for (SepId s : ids) {
    const Universe& u = sys.universe();
    if (u.is_degenerate(s) || is_trivial(sys, s) || is_trivial(sys, u.inv(s))) return false;
  }
  return true;
}

/// Number of elements of n crossing the separation with index s.
inline int crossing_count(const SeparationSystem& sys, std::span<const int> n, int s) {
  const Universe& u = sys.universe();
  const SepId x = sys.separations()[s].fwd;
  int d = 0;
  for (int t : n) {
    if (!nested(u, x, sys.separations()[t].fwd)) ++d;
  }
  return d;
}

inline bool only_differs_on(std::span<const int> n, const Orientation& a, const Orientation& b, int t) {
  if (a.forward[t] == b.forward[t]) return false;
  for (int x : n) {
    if (x != t && a.forward[x] != b.forward[x]) return false;
  }
  return true;
}

}  // namespace detail

/// Greedily drops elements (in index order) while `n` still distinguishes
/// `pi`; the result is inclusion-minimal.
inline NestedSet reduce_to_minimal(const SeparationSystem& sys, const NestedSet& n,
                                   std::span<const Orientation> pi) {
  if (!distinguishes(n.separations, pi).all) {
    throw PreconditionError("reduce_to_minimal: set does not distinguish the orientations");
  }
  std::vector<int> cur = n.separations;
  std::sort(cur.begin(), cur.end());
  cur.erase(std::unique(cur.begin(), cur.end()), cur.end());
  for (std::size_t i = 0; i < cur.size();) {
    std::vector<int> without = cur;
    without.erase(without.begin() + static_cast<std::ptrdiff_t>(i));
    if (distinguishes(without, pi).all) {
      cur = std::move(without);
    } else {
      ++i;
    }
  }
  NestedSet out{cur, detail::tree_set_flag(sys, cur)};
  return out;
}

/// For every t in n, the pairs (i, j), i < j, of orientations told apart by
/// t and by no other element of n.
inline std::vector<std::vector<std::pair<int, int>>> private_pairs(std::span<const int> n,
                                                                   std::span<const Orientation> pi) {
  std::vector<std::vector<std::pair<int, int>>> out(n.size());
  for (std::size_t k = 0; k < n.size(); ++k) {
    for (std::size_t i = 0; i < pi.size(); ++i) {
      for (std::size_t j = i + 1; j < pi.size(); ++j) {
        if (detail::only_differs_on(n, pi[i], pi[j], n[k])) {
          out[k].emplace_back(static_cast<int>(i), static_cast<int>(j));
        }
      }
    }
  }
  return out;
}

/// A tree set of separations of a submodular system distinguishing a set of
/// profiles, built by the uncrossing exchange argument: profiles are added
/// one at a time in input order, and for an undistinguished pair (P, P') a
/// distinguishing s is moved to the corner s|t, or a crossing t of the
/// current nested set is exchanged for s&t, until s crosses nothing.
inline NestedSet tree_of_tangles(const SeparationSystem& sys, std::span<const Orientation> pi,
                                 ToTStats* stats = nullptr) {
  const Universe& u = sys.universe();
  if (auto sm = is_submodular(sys); !sm.submodular) {
    throw PreconditionError("system is not submodular: " + u.describe(sm.witness->first) + ", " +
                            u.describe(sm.witness->second));
  }
  for (std::size_t i = 0; i < pi.size(); ++i) {
    if (pi[i].forward.size() != sys.unoriented_count()) throw InputError("orientation does not match system");
    const auto elems = elements(sys, pi[i]);
    if (!is_consistent(u, elems) || !avoids_profile_triples(sys, elems, pi[i])) {
      throw PreconditionError("orientation " + std::to_string(i) + " is not a profile");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (pi[i] == pi[j]) throw InputError("duplicate profiles " + std::to_string(j) + " and " + std::to_string(i));
    }
  }
  ToTStats local;
  ToTStats& st = stats ? *stats : local;
  const auto& seps = sys.separations();
  std::vector<int> n;

  for (std::size_t count = 2; count <= pi.size(); ++count) {
    const auto all = pi.first(count);
    const auto pi0 = pi.first(count - 1);
    if (distinguishes(n, all).all) continue;
    const Orientation& p = all.back();
    int partner = -1;
    for (std::size_t j = 0; j < pi0.size(); ++j) {
      bool same = true;
      for (int t : n) same = same && p.forward[t] == pi0[j].forward[t];
      if (same) {
        if (partner >= 0) throw InvariantError("two undistinguished partners");
        partner = static_cast<int>(j);
      }
    }
    if (partner < 0) throw InvariantError("no undistinguished partner");
    const Orientation& pp = pi0[partner];

    int s = -1;
    int best = 0;
    for (int i = 0; i < static_cast<int>(seps.size()); ++i) {
      if (p.forward[i] == pp.forward[i]) continue;
      const int d = detail::crossing_count(sys, n, i);
      if (s < 0 || d < best) {
        s = i;
        best = d;
      }
    }
    if (s < 0) throw InvariantError("profiles are equal on every separation");

    for (;;) {
      const int d = detail::crossing_count(sys, n, s);
      if (d == 0) break;
      // Orient N towards P and P', pick a minimal crossing t.
      const SepId s_ref = seps[s].fwd;
      std::vector<int> crossing;
      for (int cand : n) {
        if (!nested(u, s_ref, seps[cand].fwd)) crossing.push_back(cand);
      }
      int t = -1;
      for (int cand : crossing) {
        bool minimal = true;
        for (int other : crossing) {
          if (u.lt(oriented(sys, p, other), oriented(sys, p, cand))) minimal = false;
        }
        if (minimal) {
          t = cand;
          break;
        }
      }
      if (t < 0) throw InvariantError("no minimal crossing separation");
      const SepId t_to = oriented(sys, p, t);
      const auto priv = private_pairs(n, pi0);
      const auto pos = static_cast<std::size_t>(std::find(n.begin(), n.end(), t) - n.begin());
      if (priv[pos].size() != 1) throw InvariantError("no unique private pair for a minimal nested set");
      auto [i1, i2] = priv[pos][0];
      if (contains(sys, pi0[i1], t_to)) std::swap(i1, i2);
      const Orientation& p1 = pi0[i1];  // contains t*
      const Orientation& p2 = pi0[i2];  // contains t
      const SepId s_to = u.inv(oriented(sys, p1, s));  // s* lies in P1

      const SepId r1 = u.join(s_to, t_to);
      if (sys.contains(r1)) {
        const int next = sys.index_of(r1);
        if (detail::crossing_count(sys, n, next) >= d) throw InvariantError("corner move did not reduce crossings");
        if (p.forward[next] == pp.forward[next]) throw InvariantError("corner does not distinguish P and P'");
        s = next;
        ++st.corner_moves;
        continue;
      }
      const SepId r2 = u.meet(s_to, t_to);
      if (!sys.contains(r2)) throw InvariantError("neither corner in S although S is submodular");
      const int r2i = sys.index_of(r2);
      if (contains(sys, p1, r2) || !contains(sys, p2, r2)) {
        throw InvariantError("exchanged corner does not distinguish the private pair");
      }
      std::vector<int> next_n;
      for (int x : n) {
        if (x != t) next_n.push_back(x);
      }
      next_n.push_back(r2i);
      std::sort(next_n.begin(), next_n.end());
      if (!is_nested_set(u, detail::reference_ids(sys, next_n))) throw InvariantError("exchange broke nestedness");
      next_n = reduce_to_minimal(sys, NestedSet{next_n, false}, pi0).separations;
      if (detail::crossing_count(sys, next_n, s) >= d) throw InvariantError("exchange did not reduce crossings");
      n = std::move(next_n);
      ++st.exchanges;
    }
    n.push_back(s);
    std::sort(n.begin(), n.end());
    n = reduce_to_minimal(sys, NestedSet{n, false}, all).separations;
  }

  NestedSet out{n, detail::tree_set_flag(sys, n)};
  if (!out.tree_set || !distinguishes(out.separations, pi).all) {
    throw InvariantError("tree of tangles output failed verification");
  }
  return out;
}

}  // namespace tangles
