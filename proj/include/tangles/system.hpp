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
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "tangles/universe.hpp"

namespace tangles {

/// An unoriented separation {s, s*}; `fwd` is the reference orientation.
struct Unoriented {
  SepId fwd = kNoSep;
  SepId bwd = kNoSep;

  bool degenerate() const { return fwd == bwd; }
};

/// An inversion-closed subset of a universe.
class SeparationSystem {
 public:
  SeparationSystem() = default;

  SeparationSystem(std::shared_ptr<const Universe> universe, std::span<const SepId> members)
      : universe_(std::move(universe)) {
    if (!universe_) throw InputError("separation system needs a universe");
    const std::size_t n = universe_->size();
    in_.assign(n, 0);
    index_.assign(n, -1);
    for (SepId s : members) {
      if (s >= n) throw InputError("separation id out of range");
      in_[s] = 1;
    }
    for (SepId s = 0; s < n; ++s) {
      if (!in_[s]) continue;
      if (!in_[universe_->inv(s)]) {
        throw InputError("member " + universe_->describe(s) + " without its inverse");
      }
      members_.push_back(s);
      if (universe_->is_reference(s)) {
        index_[s] = index_[universe_->inv(s)] = static_cast<int>(seps_.size());
        seps_.push_back({s, universe_->inv(s)});
      }
    }
  }

  /// The whole universe as a system.
  static SeparationSystem full(std::shared_ptr<const Universe> universe) {
    std::vector<SepId> all(universe->size());
    for (SepId i = 0; i < all.size(); ++i) all[i] = i;
    return SeparationSystem(std::move(universe), all);
  }

  const Universe& universe() const { return *universe_; }
  const std::shared_ptr<const Universe>& universe_ptr() const { return universe_; }

  bool contains(SepId s) const { return s < in_.size() && in_[s]; }
  /// Oriented members in increasing id order.
  const std::vector<SepId>& members() const { return members_; }
  /// Unoriented members in increasing order of their reference id.
  const std::vector<Unoriented>& separations() const { return seps_; }
  std::size_t unoriented_count() const { return seps_.size(); }

  /// Index of the unoriented separation containing `s`.
  int index_of(SepId s) const { return s < index_.size() ? index_[s] : -1; }

  std::string describe(SepId s) const { return universe_->describe(s); }

 private:
  std::shared_ptr<const Universe> universe_;
  std::vector<char> in_;
  std::vector<int> index_;
  std::vector<SepId> members_;
  std::vector<Unoriented> seps_;
};

/// Two separations are nested iff some orientations of them are comparable.
inline bool nested(const Universe& u, SepId s, SepId t) {
  const SepId si = u.inv(s);
  return u.le(s, t) || u.le(s, u.inv(t)) || u.le(si, t) || u.le(si, u.inv(t));
}

/// Set of oriented separations pairwise pointing towards each other.
inline bool is_star(const Universe& u, std::span<const SepId> sigma) {
  for (std::size_t i = 0; i < sigma.size(); ++i) {
    if (u.is_degenerate(sigma[i])) return false;
    for (std::size_t j = 0; j < sigma.size(); ++j) {
      if (sigma[i] != sigma[j] && !u.le(sigma[i], u.inv(sigma[j]))) return false;
    }
  }
  return true;
}

inline bool is_nested_set(const Universe& u, std::span<const SepId> seps) {
  for (std::size_t i = 0; i < seps.size(); ++i) {
    for (std::size_t j = i + 1; j < seps.size(); ++j) {
      if (!nested(u, seps[i], seps[j])) return false;
    }
  }
  return true;
}

enum class Comparison { Less, Equal, Greater, Incomparable };

struct Relation {
  bool nested = false;
  /// Orientations a of s and b of t with a <= b, when nested.
  std::optional<std::pair<SepId, SepId>> witness;
  /// How the given orientations compare.
  Comparison given = Comparison::Incomparable;
};

inline Relation relate(const Universe& u, SepId s, SepId t) {
  if (s >= u.size() || t >= u.size()) throw InputError("relate: unknown id");
  Relation rel;
  for (SepId a : {s, u.inv(s)}) {
    for (SepId b : {t, u.inv(t)}) {
      if (!rel.witness && u.le(a, b)) rel.witness = {a, b};
    }
  }
  rel.nested = rel.witness.has_value();
  if (s == t) {
    rel.given = Comparison::Equal;
  } else if (u.le(s, t)) {
    rel.given = Comparison::Less;
  } else if (u.le(t, s)) {
    rel.given = Comparison::Greater;
  }
  return rel;
}

/// The four corners s&t, s&t*, s*&t, s*&t* of two separations, given by
/// any of their orientations; the reference orientations are used.
struct Corners {
  SepId fwd_fwd, fwd_bwd, bwd_fwd, bwd_bwd;
};

inline Corners corners(const Universe& u, SepId s, SepId t) {
  if (s >= u.size() || t >= u.size()) throw InputError("corners: unknown id");
  if (!u.is_reference(s)) s = u.inv(s);
  if (!u.is_reference(t)) t = u.inv(t);
  const SepId si = u.inv(s), ti = u.inv(t);
  return {u.meet(s, t), u.meet(s, ti), u.meet(si, t), u.meet(si, ti)};
}

struct SeparationFlags {
  bool small = false;
  bool cosmall = false;
  bool degenerate = false;
  bool trivial = false;
  bool cotrivial = false;
};

/// s is trivial in S if s < t and s < t* for some t in S.
inline bool is_trivial(const SeparationSystem& sys, SepId s) {
  const Universe& u = sys.universe();
  for (SepId t : sys.members()) {
    if (u.lt(s, t) && u.lt(s, u.inv(t))) return true;
  }
  return false;
}

inline SeparationFlags classify_separation(const SeparationSystem& sys, SepId s) {
  if (!sys.contains(s)) throw InputError("classify_separation: " + sys.describe(s) + " not in system");
  const Universe& u = sys.universe();
  SeparationFlags f;
  f.small = u.is_small(s);
  f.cosmall = u.is_cosmall(s);
  f.degenerate = u.is_degenerate(s);
  f.trivial = is_trivial(sys, s);
  f.cotrivial = is_trivial(sys, u.inv(s));
  if (f.trivial && !f.small) throw InvariantError("trivial separation that is not small");
  return f;
}

struct SubmodularityResult {
  bool submodular = true;
  std::optional<std::pair<SepId, SepId>> witness;
};

/// For all s,t in S at least one of s|t, s&t lies in S.
inline SubmodularityResult is_submodular(const SeparationSystem& sys) {
  const Universe& u = sys.universe();
  const auto& mem = sys.members();
  for (std::size_t i = 0; i < mem.size(); ++i) {
    for (std::size_t j = i + 1; j < mem.size(); ++j) {
      const SepId s = mem[i], t = mem[j];
      if (!sys.contains(u.join(s, t)) && !sys.contains(u.meet(s, t))) {
        return {false, std::pair{s, t}};
      }
    }
  }
  return {};
}

/// Set-level submodularity for an arbitrary subset of the lattice.
inline bool is_submodular_subset(const Universe& u, const std::vector<char>& in) {
  for (SepId s = 0; s < u.size(); ++s) {
    if (!in[s]) continue;
    for (SepId t = s + 1; t < u.size(); ++t) {
      if (in[t] && !in[u.join(s, t)] && !in[u.meet(s, t)]) return false;
    }
  }
  return true;
}

}  // namespace tangles
