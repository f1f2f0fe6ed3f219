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
#include <string>
#include <utility>
#include <vector>

#include "tangles/family.hpp"
#include "tangles/orientation.hpp"
#include "tangles/stree.hpp"
#include "tangles/system.hpp"

namespace tangles {

// ---------------------------------------------------------------------------
// Emulation and shifting

/// s emulates r in S: s >= r and s|t in S for all t >= r in S other than r*.
inline bool emulates(const SeparationSystem& sys, SepId s, SepId r) {
  const Universe& u = sys.universe();
  if (!u.le(r, s)) return false;
  for (SepId t : sys.members()) {
    if (t != u.inv(r) && u.le(r, t) && !sys.contains(u.join(s, t))) return false;
  }
  return true;
}

/// The shifted set {x|s} together with {y & s*} for y in sigma minus x.
inline std::vector<SepId> shifted(const Universe& u, std::span<const SepId> sigma, SepId x, SepId s) {
  std::vector<SepId> out{u.join(x, s)};
  for (SepId y : sigma) {
    if (y != x) out.push_back(u.meet(y, u.inv(s)));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

/// Shift of a star along s; the result must again be a star inside S.
inline std::vector<SepId> shift_star(const SeparationSystem& sys, std::span<const SepId> sigma, SepId x,
                                     SepId s) {
  const Universe& u = sys.universe();
  if (std::find(sigma.begin(), sigma.end(), x) == sigma.end()) throw PreconditionError("shift_star: x not in sigma");
  auto out = shifted(u, sigma, x, s);
  for (SepId y : out) {
    if (!sys.contains(y)) throw PreconditionError("shifted set leaves S at " + u.describe(y));
  }
  if (!is_star(u, out)) throw PreconditionError("shifted set is not a star");
  return out;
}

/// Calls `visit` with sets sigma in F (stars when F is star-only) that
/// contain x, avoid `excluded`, and otherwise use members of S. For
/// intersection-type families only irredundant sets are produced: each
/// element after x strictly shrinks the intersection of the right sides of
/// the others. Every set of F containing x agrees with one of these in x,
/// in that intersection, and is no smaller, which is all that membership
/// of its shifts depends on.
inline void for_each_family_set_with(const SeparationSystem& sys, const Family& f, SepId x, SepId excluded,
                                     const std::function<void(const std::vector<SepId>&)>& visit) {
  const Universe& u = sys.universe();
  if (f.star_only() && u.is_degenerate(x)) return;
  if (f.kind() == Family::Kind::Explicit) {
    // Explicit families are small; fall back to candidate subsets of size <= 3.
  }
  std::vector<SepId> cand;
  for (SepId c : sys.members()) {
    if (c == x || c == excluded) continue;
    if (f.star_only() && (u.is_degenerate(c) || !u.le(c, u.inv(x)))) continue;
    cand.push_back(c);
  }
  std::vector<SepId> cur{x};
  if (f.intersection_type()) {
    const std::optional<int> n = f.n();
    auto rec = [&](auto&& self, std::size_t from, Mask rest) -> void {
      if (f.contains(u, cur)) visit(cur);
      if (n && static_cast<int>(cur.size()) + 1 >= *n) return;
      for (std::size_t i = from; i < cand.size(); ++i) {
        const Mask next = rest & u.payload(cand[i]).b;
        if (next == rest) continue;
        bool fits = true;
        if (f.star_only()) {
          for (std::size_t k = 1; k < cur.size(); ++k) fits = fits && u.le(cand[i], u.inv(cur[k]));
        }
        if (!fits) continue;
        cur.push_back(cand[i]);
        self(self, i + 1, next);
        cur.pop_back();
      }
    };
    rec(rec, 0, u.ground_mask());
    return;
  }
  constexpr std::size_t kMaxSize = 3;
  auto rec = [&](auto&& self, std::size_t from) -> void {
    if (f.contains(u, cur)) visit(cur);
    if (cur.size() >= kMaxSize) return;
    for (std::size_t i = from; i < cand.size(); ++i) {
      bool fits = true;
      if (f.star_only()) {
        for (std::size_t k = 1; k < cur.size(); ++k) fits = fits && u.le(cand[i], u.inv(cur[k]));
      }
      if (!fits) continue;
      cur.push_back(cand[i]);
      self(self, i + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
}

/// s emulates r in S for F: additionally every shift of a star of F along s
/// at an x >= r stays in F.
inline bool emulates_for(const SeparationSystem& sys, SepId s, SepId r, const Family& f) {
  if (!emulates(sys, s, r)) return false;
  const Universe& u = sys.universe();
  const Family stars = f.stars();
  bool ok = true;
  for (SepId x : sys.members()) {
    if (!ok) break;
    if (!u.le(r, x)) continue;
    for_each_family_set_with(sys, stars, x, u.inv(r), [&](const std::vector<SepId>& sigma) {
      if (ok && !f.contains(u, shifted(u, sigma, x, s))) ok = false;
    });
  }
  return ok;
}

// ---------------------------------------------------------------------------
// Lifting and pushing in submodular subsets of a lattice

/// x pushes y in M: x <= y and x & z in M for all z in M below y.
inline bool pushes(const Universe& u, const std::vector<char>& m, SepId x, SepId y) {
  if (!u.le(x, y)) return false;
  for (SepId z = 0; z < u.size(); ++z) {
    if (m[z] && u.le(z, y) && !m[u.meet(x, z)]) return false;
  }
  return true;
}

/// x lifts y in M: x >= y and x | z in M for all z in M above y.
inline bool lifts(const Universe& u, const std::vector<char>& m, SepId x, SepId y) {
  if (!u.le(y, x)) return false;
  for (SepId z = 0; z < u.size(); ++z) {
    if (m[z] && u.le(y, z) && !m[u.join(x, z)]) return false;
  }
  return true;
}

/// First z in M (by id) lifting a and pushing b.
inline std::optional<SepId> find_lift_push(const Universe& u, const std::vector<char>& m, SepId a, SepId b) {
  for (SepId z = 0; z < u.size(); ++z) {
    if (m[z] && lifts(u, m, z, a) && pushes(u, m, z, b)) return z;
  }
  return std::nullopt;
}

/// Pairs a <= b in M without a lift-push witness; empty iff M is strongly separable.
inline std::vector<std::pair<SepId, SepId>> strong_separability_failures(const Universe& u,
                                                                        const std::vector<char>& m) {
  std::vector<std::pair<SepId, SepId>> bad;
  for (SepId a = 0; a < u.size(); ++a) {
    if (!m[a]) continue;
    for (SepId b = 0; b < u.size(); ++b) {
      if (m[b] && u.le(a, b) && !find_lift_push(u, m, a, b)) bad.emplace_back(a, b);
    }
  }
  return bad;
}

// ---------------------------------------------------------------------------
// Separability and closure under shifting

struct SeparabilityResult {
  bool separable = true;
  std::optional<std::pair<SepId, SepId>> failing;  // (r1, r2)
};

/// Exhaustive separability check; with `f`, checks F-separability.
inline SeparabilityResult is_separable(const SeparationSystem& sys, const Family* f = nullptr) {
  const Universe& u = sys.universe();
  const auto& mem = sys.members();
  const std::size_t n = u.size();
  std::vector<char> nontrivial(n, 0);
  for (SepId s : mem) nontrivial[s] = !u.is_degenerate(s) && !is_trivial(sys, s);
  // emul[s * n + r]: -1 unknown, 0/1 known.
  std::vector<signed char> emul(n * n, -1);
  auto em = [&](SepId s, SepId r) {
    signed char& e = emul[static_cast<std::size_t>(s) * n + r];
    if (e < 0) e = f ? emulates_for(sys, s, r, *f) : emulates(sys, s, r);
    return e == 1;
  };
  for (SepId r1 : mem) {
    if (!nontrivial[r1]) continue;
    if (f && f->forces(u, r1)) continue;
    for (SepId r2 : mem) {
      if (!nontrivial[u.inv(r2)] || !u.le(r1, r2)) continue;
      if (f && f->forces(u, u.inv(r2))) continue;
      bool found = false;
      for (SepId s : mem) {
        if (u.le(r1, s) && u.le(s, r2) && em(s, r1) && em(u.inv(s), u.inv(r2))) {
          found = true;
          break;
        }
      }
      if (!found) return {false, std::pair{r1, r2}};
    }
  }
  return {};
}

struct ShiftCounterexample {
  SepId s = kNoSep;
  SepId x = kNoSep;
  std::vector<SepId> sigma;
  std::vector<SepId> shifted;
};

struct ClosureResult {
  bool closed = true;
  std::optional<ShiftCounterexample> counterexample;
  std::size_t shifts_checked = 0;
};

/// Exhaustive check that every shift sigma_x^s of a star sigma of F, with s
/// emulating some non-trivial, non-degenerate, unforced r <= x and sigma
/// avoiding r*, is again a star of F inside S.
inline ClosureResult closed_under_shifting(const SeparationSystem& sys, const Family& f) {
  if (!f.star_only()) throw PreconditionError("closed_under_shifting needs a family of stars");
  const Universe& u = sys.universe();
  const auto& mem = sys.members();
  const std::size_t n = u.size();
  std::vector<char> eligible(n, 0);
  for (SepId r : mem) {
    eligible[r] = !u.is_degenerate(r) && !is_trivial(sys, r) && !f.forces(u, r);
  }
  std::vector<char> emul(n * n, 0);
  for (SepId r : mem) {
    if (!eligible[r]) continue;
    for (SepId s : mem) emul[static_cast<std::size_t>(s) * n + r] = emulates(sys, s, r);
  }
  ClosureResult result;
  for (SepId x : mem) {
    std::vector<std::vector<SepId>> stars;
    for_each_family_set_with(sys, f, x, kNoSep, [&](const std::vector<SepId>& sigma) {
      stars.push_back(sigma);
    });
    if (stars.empty()) continue;
    for (SepId s : mem) {
      bool below = false;
      for (SepId r : mem) {
        if (r != x && eligible[r] && u.le(r, x) && emul[static_cast<std::size_t>(s) * n + r]) {
          below = true;
          break;
        }
      }
      const bool at_x = eligible[x] && emul[static_cast<std::size_t>(s) * n + x];
      if (!below && !at_x) continue;
      for (const auto& sigma : stars) {
        if (!below && std::find(sigma.begin(), sigma.end(), u.inv(x)) != sigma.end()) continue;
        auto sh = shifted(u, sigma, x, s);
        ++result.shifts_checked;
        bool inside = std::all_of(sh.begin(), sh.end(), [&](SepId y) { return sys.contains(y); });
        if (!inside || !f.contains(u, sh)) {
          result.closed = false;
          result.counterexample = ShiftCounterexample{s, x, sigma, sh};
          return result;
        }
      }
    }
  }
  return result;
}

// ---------------------------------------------------------------------------
// Uncrossing a family member inside a consistent orientation into a star

/// Turns a set sigma in F inside a consistent orientation O into a star of
/// F inside O. `f` is the non-star family (T, Fnm or Clique). Comparable
/// pairs lose their smaller element; crossing pairs are replaced by a corner
/// from S (the join for clique families when it lies in S, otherwise a
/// corner s & t*), each step keeping membership in F and lowering the
/// number of crossing pairs or the size.
inline std::vector<SepId> uncross_to_star(const SeparationSystem& sys, std::span<const SepId> sigma_in,
                                          const Orientation& o, const Family& f) {
  const Universe& u = sys.universe();
  const auto o_elems = elements(sys, o);
  if (!is_consistent(u, o_elems)) throw PreconditionError("uncross_to_star: orientation is not consistent");
  std::vector<SepId> sigma(sigma_in.begin(), sigma_in.end());
  std::sort(sigma.begin(), sigma.end());
  sigma.erase(std::unique(sigma.begin(), sigma.end()), sigma.end());
  for (SepId s : sigma) {
    if (!contains(sys, o, s)) throw PreconditionError("uncross_to_star: sigma not inside O");
    if (u.is_degenerate(s)) throw PreconditionError("uncross_to_star: degenerate element");
  }
  if (!f.contains(u, sigma)) throw PreconditionError("uncross_to_star: sigma not in family");
  const bool keep_meet = f.kind() == Family::Kind::Clique;
  const Mask j0 = keep_meet ? Family::right_meet(u, sigma) : 0;

  auto crossings = [&](const std::vector<SepId>& x) {
    int d = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
      for (std::size_t j = i + 1; j < x.size(); ++j) d += nested(u, x[i], x[j]) ? 0 : 1;
    }
    return d;
  };
  auto valid = [&](const std::vector<SepId>& x) {
    for (SepId y : x) {
      if (!sys.contains(y) || !contains(sys, o, y)) return false;
    }
    if (!f.contains(u, x)) return false;
    return !keep_meet || Family::right_meet(u, x) == j0;
  };
  auto replaced = [&](const std::vector<SepId>& x, std::vector<SepId> drop, std::vector<SepId> add) {
    std::vector<SepId> out;
    for (SepId y : x) {
      if (std::find(drop.begin(), drop.end(), y) == drop.end()) out.push_back(y);
    }
    out.insert(out.end(), add.begin(), add.end());
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  };

  while (!is_star(u, sigma)) {
    bool progressed = false;
    const int d = crossings(sigma);
    for (std::size_t i = 0; i < sigma.size() && !progressed; ++i) {
      for (std::size_t j = 0; j < sigma.size() && !progressed; ++j) {
        const SepId a = sigma[i], b = sigma[j];
        if (a == b || u.le(a, u.inv(b))) continue;
        std::vector<std::vector<SepId>> options;
        if (u.le(a, b)) {
          options.push_back(replaced(sigma, {a}, {}));
        } else if (!nested(u, a, b)) {
          if (keep_meet && sys.contains(u.join(a, b))) options.push_back(replaced(sigma, {a, b}, {u.join(a, b)}));
          options.push_back(replaced(sigma, {a}, {u.meet(a, u.inv(b))}));
          options.push_back(replaced(sigma, {b}, {u.meet(b, u.inv(a))}));
        } else {
          throw PreconditionError("uncross_to_star: pair pointing away from each other in a consistent orientation");
        }
        for (auto& opt : options) {
          const int dn = crossings(opt);
          if (valid(opt) && (dn < d || (dn == d && opt.size() < sigma.size()))) {
            sigma = std::move(opt);
            progressed = true;
            break;
          }
        }
        if (!progressed && !u.le(a, b)) {
          throw InvariantError("uncross_to_star: no admissible corner for a crossing pair");
        }
      }
    }
    if (!progressed) throw InvariantError("uncross_to_star: no progress");
  }
  return sigma;
}

// ---------------------------------------------------------------------------
// Duality decision

struct DualityOutcome {
  enum class Kind { Tangle, STree, Inconclusive };
  Kind kind = Kind::Inconclusive;
  std::optional<Orientation> tangle;
  std::optional<STree> tree;
  std::string diagnostic;
};

struct STreeSearch {
  std::optional<STree> tree;
  bool budget_exhausted = false;
};

/// Least-fixed-point search for an S-tree over a star family. An oriented
/// separation x is "closing" if some sigma in F contains x and, for every
/// other y in sigma, y* is closing; such a derivation is a subtree hanging
/// off an edge labelled x. An S-tree with at least one edge exists iff some
/// x and x* are both closing; the single-node tree exists iff the empty set
/// lies in F.
inline STreeSearch find_stree(const SeparationSystem& sys, const Family& f, std::size_t node_budget = 200000) {
  const Universe& u = sys.universe();
  STreeSearch out;
  if (f.find_in(u, {}, kNoSep)) {
    out.tree = STree{};
    return out;
  }
  const auto& mem = sys.members();
  std::vector<char> closing(u.size(), 0);
  std::vector<std::vector<SepId>> derivation(u.size());
  std::vector<SepId> cand;  // y with y* closing
  // Rounds: a derivation only uses separations closed in earlier rounds,
  // which keeps the derived subtrees shallow.
  for (;;) {
    std::vector<SepId> fresh;
    for (SepId x : mem) {
      if (closing[x]) continue;
      if (auto sigma = f.find_in(u, cand, x)) {
        closing[x] = 1;
        derivation[x] = *sigma;
        fresh.push_back(u.inv(x));
      }
    }
    if (fresh.empty()) break;
    cand.insert(cand.end(), fresh.begin(), fresh.end());
  }
  // Node count of the subtree derived for x, saturating.
  std::vector<double> size(u.size(), 0);
  auto subtree = [&](auto&& self, SepId x) -> double {
    if (size[x] > 0) return size[x];
    double total = 1;
    for (SepId y : derivation[x]) {
      if (y != x) total = std::min(1e18, total + self(self, u.inv(y)));
    }
    return size[x] = total;
  };
  SepId root = kNoSep;
  double best = 0;
  for (SepId x : mem) {
    if (!closing[x] || !closing[u.inv(x)]) continue;
    const double total = subtree(subtree, x) + subtree(subtree, u.inv(x));
    if (root == kNoSep || total < best) {
      root = x;
      best = total;
    }
  }
  if (root == kNoSep) return out;
  if (best > static_cast<double>(node_budget)) {
    out.budget_exhausted = true;
    return out;
  }

  STree tree;
  tree.nodes = 2;
  tree.add_edge(0, 1, root);
  // Work list of (node, label of the edge pointing into it from its parent).
  std::vector<std::pair<int, SepId>> work = {{1, root}, {0, u.inv(root)}};
  while (!work.empty()) {
    auto [node, in] = work.back();
    work.pop_back();
    for (SepId y : derivation[in]) {
      if (y == in) continue;
      if (static_cast<std::size_t>(tree.nodes) >= node_budget) {
        out.budget_exhausted = true;
        return out;
      }
      const int child = tree.add_node();
      tree.add_edge(child, node, y);
      work.emplace_back(child, u.inv(y));
    }
  }
  out.tree = std::move(tree);
  return out;
}

/// Decides between an F-tangle and an S-tree over F for a star family F
/// standard for a submodular S. Both searches always run; finding both
/// signals a violated duality and raises.
inline DualityOutcome duality_decide(const SeparationSystem& sys, const Family& f) {
  const Universe& u = sys.universe();
  if (!f.star_only()) throw PreconditionError("duality_decide needs a family of stars");
  if (auto sm = is_submodular(sys); !sm.submodular) {
    throw PreconditionError("system is not submodular: " + u.describe(sm.witness->first) + ", " +
                            u.describe(sm.witness->second));
  }
  if (auto bad = standardness_violation(sys, f)) {
    throw PreconditionError("family is not standard: trivial " + u.describe(*bad) + " not forced");
  }
  DualityOutcome out;
  auto tangle = first_tangle(sys, f);
  auto search = find_stree(sys, f);
  if (tangle && search.tree) throw InvariantError("found both an F-tangle and an S-tree over F");
  if (tangle) {
    out.kind = DualityOutcome::Kind::Tangle;
    out.tangle = std::move(tangle);
  } else if (search.tree) {
    out.kind = DualityOutcome::Kind::STree;
    out.tree = std::move(search.tree);
    auto report = validate_stree(*out.tree, sys, f);
    if (!report.ok()) throw InvariantError("constructed S-tree invalid: " + report.violations.front());
  } else {
    out.diagnostic = search.budget_exhausted ? "S-tree node budget exhausted"
                                             : "neither an F-tangle nor an S-tree was found";
  }
  return out;
}

/// Abstract tangles extending a down-closed Q versus S-trees over T* u F_Q.
inline DualityOutcome abstract_tangle_duality(const SeparationSystem& sys, const std::vector<char>& q) {
  const Universe& u = sys.universe();
  if (!u.distributive()) throw PreconditionError("universe is not distributive");
  for (SepId s : sys.members()) {
    if (u.is_degenerate(s)) throw PreconditionError("system has a degenerate element " + u.describe(s));
  }
  const Family f = Family::tangles_extending(u, q);
  DualityOutcome out = duality_decide(sys, f);
  if (out.tangle) {
    const auto elems = elements(sys, *out.tangle);
    if (!Family::abstract_tangles().avoided_by(u, elems)) {
      throw InvariantError("T*-tangle is not an abstract tangle");
    }
    for (SepId s : sys.members()) {
      if (q[s] && !contains(sys, *out.tangle, s)) throw InvariantError("tangle does not extend Q");
    }
  }
  return out;
}

}  // namespace tangles
