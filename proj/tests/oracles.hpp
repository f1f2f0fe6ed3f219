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

// Brute-force reference implementations used as test oracles. These work
// from the definitions on explicit sets and deliberately share no search
// code with the library.

#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <vector>

#include "tangles.hpp"

namespace oracle {

using tangles::Mask;
using tangles::Orientation;
using tangles::SepId;
using tangles::SeparationSystem;
using tangles::Universe;

/// Every orientation of sys, by bit pattern over the unoriented separations.
inline std::vector<Orientation> all_orientations(const SeparationSystem& sys) {
  const std::size_t n = sys.unoriented_count();
  std::vector<std::size_t> free;
  for (std::size_t i = 0; i < n; ++i) {
    if (!sys.separations()[i].degenerate()) free.push_back(i);
  }
  std::vector<Orientation> out;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << free.size()); ++bits) {
    Orientation o;
    o.forward.assign(n, 1);
    for (std::size_t k = 0; k < free.size(); ++k) o.forward[free[k]] = ((bits >> k) & 1U) ? 0 : 1;
    out.push_back(std::move(o));
  }
  return out;
}

inline std::vector<SepId> members_of(const SeparationSystem& sys, const Orientation& o) {
  std::vector<SepId> out;
  for (std::size_t i = 0; i < o.forward.size(); ++i) {
    const auto& s = sys.separations()[i];
    out.push_back(o.forward[i] ? s.fwd : s.bwd);
  }
  return out;
}

/// No distinct r, s with r <= s in O and r* in O.
inline bool consistent(const Universe& u, const std::vector<SepId>& o) {
  for (SepId a : o) {
    for (SepId b : o) {
      if (a == b || a == u.inv(b)) continue;
      if (u.le(u.inv(a), b)) return false;  // r = inv(a) <= b = s, r* = a in O
    }
  }
  return true;
}

/// Consistent orientations by plain backtracking on the pairwise definition.
inline std::vector<Orientation> consistent_orientations(const SeparationSystem& sys) {
  const Universe& u = sys.universe();
  const auto& seps = sys.separations();
  std::vector<Orientation> out;
  Orientation cur;
  cur.forward.assign(seps.size(), 1);
  std::vector<SepId> chosen;
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == seps.size()) {
      out.push_back(cur);
      return;
    }
    for (int k = 0; k < (seps[i].degenerate() ? 1 : 2); ++k) {
      const SepId e = k == 0 ? seps[i].fwd : seps[i].bwd;
      bool ok = true;
      for (SepId c : chosen) ok = ok && !u.le(u.inv(c), e) && !u.le(u.inv(e), c);
      if (!ok) continue;
      cur.forward[i] = k == 0;
      chosen.push_back(e);
      rec(i + 1);
      chosen.pop_back();
    }
    cur.forward[i] = 1;
  };
  rec(0);
  return out;
}

/// Whether some star inside o (at most max_size elements) satisfies pred.
inline bool contains_star(const Universe& u, const std::vector<SepId>& o, std::size_t max_size,
                          const std::function<bool(const std::vector<SepId>&)>& pred) {
  std::vector<SepId> cur;
  std::function<bool(std::size_t)> rec = [&](std::size_t from) {
    if (pred(cur)) return true;
    if (cur.size() == max_size) return false;
    for (std::size_t i = from; i < o.size(); ++i) {
      if (u.is_degenerate(o[i])) continue;
      bool fits = true;
      for (SepId c : cur) fits = fits && u.le(o[i], u.inv(c));
      if (!fits) continue;
      cur.push_back(o[i]);
      if (rec(i + 1)) return true;
      cur.pop_back();
    }
    return false;
  };
  return rec(0);
}

inline bool contains_any_subset(const std::vector<SepId>& o, std::size_t max_size,
                                const std::function<bool(const std::vector<SepId>&)>& in_family) {
  std::vector<SepId> cur;
  std::function<bool(std::size_t)> rec = [&](std::size_t from) {
    if (in_family(cur)) return true;
    if (cur.size() == max_size) return false;
    for (std::size_t i = from; i < o.size(); ++i) {
      cur.push_back(o[i]);
      if (rec(i + 1)) return true;
      cur.pop_back();
    }
    return false;
  };
  return rec(0);
}

inline SepId join_all(const Universe& u, const std::vector<SepId>& s) {
  SepId j = s.front();
  for (SepId x : s) j = u.join(j, x);
  return j;
}

/// Sets of at most three elements with co-small join.
inline bool in_t(const Universe& u, const std::vector<SepId>& s) {
  return !s.empty() && s.size() <= 3 && u.is_cosmall(join_all(u, s));
}

inline bool is_star(const Universe& u, const std::vector<SepId>& s) {
  for (SepId a : s) {
    if (u.is_degenerate(a)) return false;
    for (SepId b : s) {
      if (a != b && !u.le(a, u.inv(b))) return false;
    }
  }
  return true;
}

/// Sets {s, t, (s|t)*}.
inline bool in_profiles(const Universe& u, const std::vector<SepId>& s) {
  for (SepId a : s) {
    for (SepId b : s) {
      std::vector<SepId> want{a, b, u.inv(u.join(a, b))};
      std::sort(want.begin(), want.end());
      want.erase(std::unique(want.begin(), want.end()), want.end());
      std::vector<SepId> have = s;
      std::sort(have.begin(), have.end());
      if (have == want) return true;
    }
  }
  return false;
}

inline Mask right_meet(const Universe& u, const std::vector<SepId>& s) {
  Mask j = u.ground_mask();
  for (SepId x : s) j &= u.payload(x).b;
  return j;
}

inline bool is_tangle_t(const SeparationSystem& sys, const Orientation& o, bool stars) {
  const Universe& u = sys.universe();
  const auto m = members_of(sys, o);
  return consistent(u, m) && !contains_any_subset(m, 3, [&](const std::vector<SepId>& s) {
           return in_t(u, s) && (!stars || is_star(u, s));
         });
}

inline bool is_profile(const SeparationSystem& sys, const Orientation& o) {
  const Universe& u = sys.universe();
  const auto m = members_of(sys, o);
  return consistent(u, m) && !contains_any_subset(m, 3, [&](const std::vector<SepId>& s) { return in_profiles(u, s); });
}

/// Clique family: J(sigma) spans a clique. J shrinks as sigma grows, so O
/// avoids the non-star family iff J(O) does not span a clique.
inline bool is_clique_tangle(const SeparationSystem& sys, const tangles::Graph& g, const Orientation& o) {
  const Universe& u = sys.universe();
  const auto m = members_of(sys, o);
  return consistent(u, m) && !g.is_clique(right_meet(u, m));
}

/// F^n_m: fewer than n members (n = 0 for unbounded) whose right sides
/// meet in fewer than m elements.
inline bool is_fnm_tangle(const SeparationSystem& sys, const Orientation& o, int m, int n, bool stars) {
  const Universe& u = sys.universe();
  const auto el = members_of(sys, o);
  if (!consistent(u, el)) return false;
  if (n == 0 && !stars) return std::popcount(right_meet(u, el)) >= m;
  const std::size_t cap = n == 0 ? el.size() : static_cast<std::size_t>(n - 1);
  auto small_meet = [&](const std::vector<SepId>& s) { return std::popcount(right_meet(u, s)) < m; };
  return stars ? !contains_star(u, el, cap, small_meet) : !contains_any_subset(el, cap, small_meet);
}

}  // namespace oracle
