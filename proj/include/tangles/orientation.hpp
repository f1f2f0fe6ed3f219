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
#include <functional>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "tangles/family.hpp"
#include "tangles/system.hpp"

namespace tangles {

/// One orientation per unoriented member of a system, indexed like
/// `SeparationSystem::separations()`. Degenerate members are always
/// recorded as forward.
struct Orientation {
  std::vector<char> forward;

  friend bool operator==(const Orientation&, const Orientation&) = default;
  friend auto operator<=>(const Orientation&, const Orientation&) = default;
};

inline SepId oriented(const SeparationSystem& sys, const Orientation& o, std::size_t index) {
  const Unoriented& u = sys.separations()[index];
  return o.forward[index] ? u.fwd : u.bwd;
}

/// Oriented separations of `o` in increasing id order.
inline std::vector<SepId> elements(const SeparationSystem& sys, const Orientation& o) {
  std::vector<SepId> out;
  out.reserve(o.forward.size());
  for (std::size_t i = 0; i < o.forward.size(); ++i) out.push_back(oriented(sys, o, i));
  std::sort(out.begin(), out.end());
  return out;
}

inline bool contains(const SeparationSystem& sys, const Orientation& o, SepId s) {
  const int idx = sys.index_of(s);
  return idx >= 0 && oriented(sys, o, static_cast<std::size_t>(idx)) == s;
}

/// Builds an orientation from a set of oriented members; every unoriented
/// member must be hit exactly once.
inline Orientation orientation_from(const SeparationSystem& sys, std::span<const SepId> ids) {
  Orientation o;
  o.forward.assign(sys.unoriented_count(), 0);
  std::vector<char> seen(sys.unoriented_count(), 0);
  for (SepId s : ids) {
    const int idx = sys.index_of(s);
    if (idx < 0) throw InputError("orientation element " + sys.describe(s) + " not in system");
    if (seen[idx] && oriented(sys, o, static_cast<std::size_t>(idx)) != s) {
      throw InputError("orientation contains both orientations of " + sys.describe(s));
    }
    seen[idx] = 1;
    o.forward[idx] = sys.separations()[idx].fwd == s ? 1 : 0;
  }
  if (std::find(seen.begin(), seen.end(), 0) != seen.end()) {
    throw InputError("orientation does not orient every separation");
  }
  return o;
}

/// a and b (from distinct separations) may both lie in a consistent orientation.
inline bool consistent_pair(const Universe& u, SepId a, SepId b) {
  return !u.le(u.inv(a), b) && !u.le(u.inv(b), a);
}

inline bool is_consistent(const Universe& u, std::span<const SepId> oriented_set) {
  for (std::size_t i = 0; i < oriented_set.size(); ++i) {
    for (std::size_t j = i + 1; j < oriented_set.size(); ++j) {
      if (!consistent_pair(u, oriented_set[i], oriented_set[j])) return false;
    }
  }
  return true;
}

/// Depth-first search over orientations in member-index order, forward
/// orientation first. Partial orientations are pruned on inconsistency and,
/// when `avoid` is given, as soon as they contain a set of the family.
/// `visit` returns false to stop the search.
inline void search_orientations(const SeparationSystem& sys, const Family* avoid,
                                const std::function<bool(const Orientation&)>& visit) {
  const Universe& u = sys.universe();
  const auto& seps = sys.separations();
  if (avoid && avoid->find_in(u, {}, kNoSep)) return;
  Orientation cur;
  cur.forward.assign(seps.size(), 1);
  std::vector<SepId> chosen;
  chosen.reserve(seps.size());
  auto rec = [&](auto&& self, std::size_t i) -> bool {
    if (i == seps.size()) return visit(cur);
    const Unoriented& sep = seps[i];
    const SepId options[2] = {sep.fwd, sep.bwd};
    const int count = sep.degenerate() ? 1 : 2;
    for (int k = 0; k < count; ++k) {
      const SepId e = options[k];
      bool ok = true;
      for (SepId c : chosen) {
        if (!consistent_pair(u, c, e)) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      if (avoid && avoid->find_in(u, chosen, e)) continue;
      cur.forward[i] = k == 0 ? 1 : 0;
      chosen.push_back(e);
      const bool go_on = self(self, i + 1);
      chosen.pop_back();
      if (!go_on) return false;
    }
    cur.forward[i] = 1;
    return true;
  };
  rec(rec, 0);
}

inline std::vector<Orientation> enumerate_consistent_orientations(const SeparationSystem& sys) {
  std::vector<Orientation> out;
  search_orientations(sys, nullptr, [&](const Orientation& o) {
    out.push_back(o);
    return true;
  });
  return out;
}

/// All F-tangles (consistent F-avoiding orientations), in search order.
inline std::vector<Orientation> enumerate_tangles(const SeparationSystem& sys, const Family& f) {
  std::vector<Orientation> out;
  search_orientations(sys, &f, [&](const Orientation& o) {
    out.push_back(o);
    return true;
  });
  return out;
}

inline std::optional<Orientation> first_tangle(const SeparationSystem& sys, const Family& f) {
  std::optional<Orientation> out;
  search_orientations(sys, &f, [&](const Orientation& o) {
    out = o;
    return false;
  });
  return out;
}

struct OrientationFlags {
  bool consistent = false;
  bool avoids_family = false;
  bool family_tangle = false;
  bool profile = false;
  bool abstract_tangle = false;
  bool regular = false;
};

/// No s, t in O with (s|t)* in O.
inline bool avoids_profile_triples(const SeparationSystem& sys, std::span<const SepId> o_elems,
                                   const Orientation& o) {
  const Universe& u = sys.universe();
  for (SepId s : o_elems) {
    for (SepId t : o_elems) {
      if (contains(sys, o, u.inv(u.join(s, t)))) return false;
    }
  }
  return true;
}

inline OrientationFlags classify_orientation(const SeparationSystem& sys, const Orientation& o,
                                             const Family& f) {
  const Universe& u = sys.universe();
  if (o.forward.size() != sys.unoriented_count()) throw InputError("orientation does not match system");
  const auto elems = elements(sys, o);
  OrientationFlags flags;
  flags.consistent = is_consistent(u, elems);
  flags.avoids_family = f.avoided_by(u, elems);
  flags.family_tangle = flags.consistent && flags.avoids_family;
  flags.profile = flags.consistent && avoids_profile_triples(sys, elems, o);
  flags.abstract_tangle = flags.consistent && Family::abstract_tangles().avoided_by(u, elems);
  flags.regular = flags.profile;
  for (SepId s : sys.members()) {
    if (u.is_small(s) && !contains(sys, o, s)) flags.regular = false;
  }
  return flags;
}

struct Distinction {
  bool all = true;
  /// witness[i][j]: index of an unoriented separation in N telling
  /// orientations i and j apart, or -1.
  std::vector<std::vector<int>> witness;
};

/// Whether the unoriented separations `n` (system indices) pairwise
/// distinguish `pi`.
inline Distinction distinguishes(std::span<const int> n, std::span<const Orientation> pi) {
  Distinction d;
  d.witness.assign(pi.size(), std::vector<int>(pi.size(), -1));
  for (std::size_t i = 0; i < pi.size(); ++i) {
    for (std::size_t j = i + 1; j < pi.size(); ++j) {
      for (int idx : n) {
        if (pi[i].forward.at(idx) != pi[j].forward.at(idx)) {
          d.witness[i][j] = d.witness[j][i] = idx;
          break;
        }
      }
      if (d.witness[i][j] < 0) d.all = false;
    }
  }
  return d;
}

}  // namespace tangles
