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

#include "tangles/system.hpp"

namespace tangles {

/// A predicate over finite sets of oriented separations.
///
/// Kinds follow the usual tangle families: `T` (triples with co-small join),
/// `Profiles` ({s, t, (s|t)*}), `FQ` (singletons {s*} for s in Q), `TQ`
/// (stars of T together with FQ), `Fnm` (fewer than n sets whose right sides
/// meet in fewer than m points), `Clique` (right sides meet in a clique) and
/// `Explicit` lists. `star_only` restricts membership to stars.
class Family {
 public:
  enum class Kind { T, Profiles, FQ, TQ, Fnm, Clique, Explicit };

  static Family abstract_tangles(bool star_only = false) { return Family(Kind::T, star_only); }
  static Family profiles() { return Family(Kind::Profiles, false); }

  /// `q` marks members of Q over the universe; must be down-closed.
  static Family forced(const Universe& u, std::vector<char> q) {
    check_down_closed(u, q);
    Family f(Kind::FQ, true);
    f.q_ = std::move(q);
    return f;
  }
  static Family tangles_extending(const Universe& u, std::vector<char> q) {
    check_down_closed(u, q);
    Family f(Kind::TQ, true);
    f.q_ = std::move(q);
    return f;
  }
  /// `n` empty means unbounded size.
  static Family fnm(int m, std::optional<int> n, bool star_only) {
    if (m < 1) throw PreconditionError("Fnm needs m >= 1");
    if (n && *n < 2) throw PreconditionError("Fnm needs n >= 2");
    Family f(Kind::Fnm, star_only);
    f.m_ = m;
    f.n_ = n;
    return f;
  }
  /// `adjacency[v]` is the neighbourhood mask of vertex v.
  static Family clique(std::vector<Mask> adjacency, bool star_only) {
    Family f(Kind::Clique, star_only);
    f.adjacency_ = std::move(adjacency);
    return f;
  }
  static Family explicit_sets(std::vector<std::vector<SepId>> sets, bool star_only) {
    Family f(Kind::Explicit, star_only);
    for (auto& s : sets) {
      std::sort(s.begin(), s.end());
      s.erase(std::unique(s.begin(), s.end()), s.end());
    }
    std::sort(sets.begin(), sets.end());
    f.sets_ = std::move(sets);
    return f;
  }

  Kind kind() const { return kind_; }
  bool star_only() const { return star_only_; }
  int m() const { return m_; }
  std::optional<int> n() const { return n_; }
  const std::vector<char>& q() const { return q_; }
  const std::vector<Mask>& adjacency() const { return adjacency_; }

  /// Same family with membership restricted to stars.
  Family stars() const {
    Family f = *this;
    f.star_only_ = true;
    return f;
  }

  std::string name() const {
    std::string base;
    switch (kind_) {
      case Kind::T: base = "T"; break;
      case Kind::Profiles: base = "P"; break;
      case Kind::FQ: return "F_Q";
      case Kind::TQ: return "T_Q";
      case Kind::Fnm:
        base = "F^" + (n_ ? std::to_string(*n_) : std::string("inf")) + "_" + std::to_string(m_);
        break;
      case Kind::Clique: base = "F_clique"; break;
      case Kind::Explicit: base = "F_explicit"; break;
    }
    return star_only_ ? base + "*" : base;
  }

  /// Membership of a set (duplicates ignored).
  bool contains(const Universe& u, std::span<const SepId> sigma_in) const {
    std::vector<SepId> sigma(sigma_in.begin(), sigma_in.end());
    std::sort(sigma.begin(), sigma.end());
    sigma.erase(std::unique(sigma.begin(), sigma.end()), sigma.end());
    if (star_only_ && !is_star(u, sigma)) return false;
    switch (kind_) {
      case Kind::T: return triple_cosmall(u, sigma);
      case Kind::Profiles: return profile_set(u, sigma);
      case Kind::FQ: return forced_singleton(u, sigma);
      case Kind::TQ: return (is_star(u, sigma) && triple_cosmall(u, sigma)) || forced_singleton(u, sigma);
      case Kind::Fnm:
      case Kind::Clique: return intersection_pred(right_meet(u, sigma), static_cast<int>(sigma.size()));
      case Kind::Explicit: return std::binary_search(sets_.begin(), sets_.end(), sigma);
    }
    return false;
  }

  /// {s*} is in the family, i.e. the family forbids orienting s as s*.
  bool forces(const Universe& u, SepId s) const {
    const SepId single[1] = {u.inv(s)};
    return contains(u, single);
  }

  /// A set sigma in the family with `required` in sigma and sigma minus
  /// `required` inside `candidates`. `required == kNoSep` asks for any subset
  /// of the candidates, including the empty set.
  std::optional<std::vector<SepId>> find_in(const Universe& u, std::span<const SepId> candidates,
                                            SepId required) const {
    std::vector<SepId> cand;
    cand.reserve(candidates.size());
    for (SepId c : candidates) {
      if (c != required) cand.push_back(c);
    }
    std::sort(cand.begin(), cand.end());
    cand.erase(std::unique(cand.begin(), cand.end()), cand.end());
    if (kind_ == Kind::Fnm || kind_ == Kind::Clique) return find_intersection(u, cand, required);
    if (kind_ == Kind::Explicit) return find_explicit(cand, required);
    return find_bounded(u, cand, required, max_bounded_size());
  }

  /// True iff no subset of `oriented` lies in the family.
  bool avoided_by(const Universe& u, std::span<const SepId> oriented) const {
    if (find_in(u, {}, kNoSep)) return false;
    for (SepId e : oriented) {
      if (find_in(u, oriented, e)) return false;
    }
    return true;
  }

  /// Membership depends only on the right-side intersection and the size.
  bool intersection_type() const { return kind_ == Kind::Fnm || kind_ == Kind::Clique; }

  /// Right-side intersection J of a set of payload separations.
  static Mask right_meet(const Universe& u, std::span<const SepId> sigma) {
    Mask j = u.ground_mask();
    for (SepId s : sigma) j &= u.payload(s).b;
    return j;
  }

  bool is_clique(Mask vertices) const {
    for (int v : mask_elements(vertices)) {
      const Mask others = vertices & ~(Mask{1} << v);
      if (!subset_of(others, adjacency_.at(static_cast<std::size_t>(v)))) return false;
    }
    return true;
  }

  bool intersection_pred(Mask j, int size) const {
    if (kind_ == Kind::Fnm) return popcount(j) < m_ && (!n_ || size < *n_);
    return is_clique(j);
  }

 private:
  Family(Kind kind, bool star_only) : kind_(kind), star_only_(star_only) {}

  static void check_down_closed(const Universe& u, const std::vector<char>& q) {
    if (q.size() != u.size()) throw InputError("Q mask size does not match universe");
    for (SepId s = 0; s < u.size(); ++s) {
      if (!q[s]) continue;
      for (SepId r = 0; r < u.size(); ++r) {
        if (!q[r] && u.le(r, s)) {
          throw PreconditionError("Q is not down-closed: " + u.describe(r) + " <= " +
                                  u.describe(s) + " in Q but not in Q");
        }
      }
    }
  }

  std::size_t max_bounded_size() const {
    switch (kind_) {
      case Kind::FQ: return 1;
      default: return 3;
    }
  }

  static bool triple_cosmall(const Universe& u, const std::vector<SepId>& sigma) {
    if (sigma.empty() || sigma.size() > 3) return false;
    SepId j = sigma[0];
    for (std::size_t i = 1; i < sigma.size(); ++i) j = u.join(j, sigma[i]);
    return u.is_cosmall(j);
  }

  static bool profile_set(const Universe& u, const std::vector<SepId>& sigma) {
    if (sigma.empty() || sigma.size() > 3) return false;
    for (SepId a : sigma) {
      for (SepId b : sigma) {
        std::vector<SepId> x = {a, b, u.inv(u.join(a, b))};
        std::sort(x.begin(), x.end());
        x.erase(std::unique(x.begin(), x.end()), x.end());
        if (x == sigma) return true;
      }
    }
    return false;
  }

  bool forced_singleton(const Universe& u, const std::vector<SepId>& sigma) const {
    if (sigma.size() != 1) return false;
    const SepId s = u.inv(sigma[0]);
    return q_[s] && !u.is_degenerate(s);
  }

  bool compatible(const Universe& u, SepId a, SepId b) const {
    if (!star_only_) return true;
    return a == b || u.le(a, u.inv(b));
  }

  std::optional<std::vector<SepId>> find_explicit(const std::vector<SepId>& cand,
                                                  SepId required) const {
    std::vector<SepId> pool = cand;
    if (required != kNoSep) pool.insert(std::upper_bound(pool.begin(), pool.end(), required), required);
    for (const auto& s : sets_) {
      if (required != kNoSep && !std::binary_search(s.begin(), s.end(), required)) continue;
      if (!std::includes(pool.begin(), pool.end(), s.begin(), s.end())) continue;
      return s;
    }
    return std::nullopt;
  }

  std::optional<std::vector<SepId>> find_bounded(const Universe& u, const std::vector<SepId>& cand,
                                                 SepId required, std::size_t max_size) const {
    std::vector<SepId> cur;
    if (required != kNoSep) {
      if (star_only_ && u.is_degenerate(required)) return std::nullopt;
      cur.push_back(required);
    }
    std::optional<std::vector<SepId>> hit;
    auto ok = [&](SepId c) {
      if (star_only_ && u.is_degenerate(c)) return false;
      for (SepId d : cur) {
        if (!compatible(u, c, d)) return false;
      }
      return true;
    };
    auto rec = [&](auto&& self, std::size_t from) -> bool {
      if (!cur.empty() && contains(u, cur)) {
        hit = cur;
        return true;
      }
      if (cur.size() >= max_size) return false;
      for (std::size_t i = from; i < cand.size(); ++i) {
        if (!ok(cand[i])) continue;
        cur.push_back(cand[i]);
        if (self(self, i + 1)) return true;
        cur.pop_back();
      }
      return false;
    };
    rec(rec, 0);
    if (!hit && required == kNoSep && contains(u, std::span<const SepId>{})) hit = std::vector<SepId>{};
    return hit;
  }

  std::optional<std::vector<SepId>> find_intersection(const Universe& u, const std::vector<SepId>& cand,
                                                      SepId required) const {
    std::vector<SepId> cur;
    Mask j = u.ground_mask();
    if (required != kNoSep) {
      if (star_only_ && u.is_degenerate(required)) return std::nullopt;
      cur.push_back(required);
      j &= u.payload(required).b;
    }
    std::optional<std::vector<SepId>> hit;
    auto rec = [&](auto&& self, std::size_t from, Mask jcur) -> bool {
      if (intersection_pred(jcur, static_cast<int>(cur.size()))) {
        hit = cur;
        std::sort(hit->begin(), hit->end());
        return true;
      }
      if (n_ && static_cast<int>(cur.size()) + 1 >= *n_) return false;
      for (std::size_t i = from; i < cand.size(); ++i) {
        const SepId c = cand[i];
        const Mask jn = jcur & u.payload(c).b;
        if (jn == jcur) continue;
        if (star_only_) {
          if (u.is_degenerate(c)) continue;
          bool fits = true;
          for (SepId d : cur) fits = fits && compatible(u, c, d);
          if (!fits) continue;
        }
        cur.push_back(c);
        if (self(self, i + 1, jn)) return true;
        cur.pop_back();
      }
      return false;
    };
    rec(rec, 0, j);
    return hit;
  }

  Kind kind_;
  bool star_only_;
  std::vector<char> q_;
  int m_ = 1;
  std::optional<int> n_;
  std::vector<Mask> adjacency_;
  std::vector<std::vector<SepId>> sets_;
};

/// F is standard for S if {s*} is in F for every trivial s in S.
inline std::optional<SepId> standardness_violation(const SeparationSystem& sys, const Family& f) {
  for (SepId s : sys.members()) {
    if (is_trivial(sys, s) && !f.forces(sys.universe(), s)) return s;
  }
  return std::nullopt;
}

}  // namespace tangles
