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
#include <cstdint>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace tangles {

/// Index of an oriented separation inside its universe.
using SepId = std::uint32_t;

/// Subset of a small ground set, bit i set iff element i is present.
using Mask = std::uint32_t;

inline constexpr SepId kNoSep = static_cast<SepId>(-1);

/// Base class of all errors raised on contract violations.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A documented precondition of an operation does not hold.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// The input is well formed but semantically unusable (duplicates, unknown ids).
class InputError : public Error {
 public:
  using Error::Error;
};

/// An internal invariant failed; always a bug.
class InvariantError : public Error {
 public:
  using Error::Error;
};

/// Collected violations of a structural check. Empty means valid.
struct ValidationReport {
  std::vector<std::string> violations;

  bool ok() const { return violations.empty(); }
  void add(std::string message) { violations.push_back(std::move(message)); }
};

/// Concrete representation of a separation as a pair of sides (A, B).
struct Payload {
  Mask a = 0;
  Mask b = 0;

  friend bool operator==(const Payload&, const Payload&) = default;
};

inline int popcount(Mask m) { return std::popcount(m); }

inline bool subset_of(Mask inner, Mask outer) { return (inner & ~outer) == 0; }

/// Elements of a mask in increasing order.
inline std::vector<int> mask_elements(Mask m) {
  std::vector<int> out;
  for (int i = 0; m != 0; ++i, m >>= 1) {
    if (m & 1u) out.push_back(i);
  }
  return out;
}

/// Lexicographic comparison of payloads by their sorted side lists, A first.
inline bool payload_less(const Payload& x, const Payload& y) {
  auto xa = mask_elements(x.a), ya = mask_elements(y.a);
  if (xa != ya) return xa < ya;
  return mask_elements(x.b) < mask_elements(y.b);
}

/// A finite lattice of oriented separations with an order-reversing involution.
///
/// Two storage modes exist. Table universes carry explicit order, join and
/// meet tables and are used for hand-built abstract lattices. Payload
/// universes store every element as a pair of sides (A, B) with
/// (A,B) <= (C,D) iff A is a subset of C and B a superset of D; join and meet
/// are computed side-wise and looked up in an index. Bipartitions and graph
/// separations are both payload universes.
class Universe {
 public:
  /// Builds a table universe. `le`, `join`, `meet` are row-major n*n tables.
  static Universe from_tables(std::vector<SepId> inv, std::vector<char> le,
                              std::vector<SepId> join, std::vector<SepId> meet,
                              bool distributive) {
    Universe u;
    const std::size_t n = inv.size();
    if (le.size() != n * n || join.size() != n * n || meet.size() != n * n) {
      throw InputError("universe tables have inconsistent sizes");
    }
    u.inv_ = std::move(inv);
    u.le_ = std::move(le);
    u.join_ = std::move(join);
    u.meet_ = std::move(meet);
    u.distributive_ = distributive;
    return u;
  }

  /// Builds a payload universe over a ground set of `ground_size` elements.
  /// Every payload's side swap must also be present; side-wise unions and
  /// intersections must stay inside the element list.
  static Universe from_payloads(int ground_size, std::vector<Payload> elements,
                                bool distributive) {
    if (ground_size < 0 || ground_size > 31) {
      throw InputError("ground set size must be in [0, 31]");
    }
    Universe u;
    u.ground_size_ = ground_size;
    u.payloads_ = std::move(elements);
    u.distributive_ = distributive;
    u.dense_index_ = ground_size <= 11;
    if (u.dense_index_) {
      u.dense_.assign(std::size_t{1} << (2 * ground_size), kNoSep);
    }
    for (SepId i = 0; i < u.payloads_.size(); ++i) {
      if (u.lookup(u.payloads_[i]) != kNoSep) {
        throw InputError("duplicate payload in universe");
      }
      u.insert_index(u.payloads_[i], i);
    }
    u.inv_.resize(u.payloads_.size());
    for (SepId i = 0; i < u.payloads_.size(); ++i) {
      const SepId j = u.lookup({u.payloads_[i].b, u.payloads_[i].a});
      if (j == kNoSep) throw InputError("universe is not closed under inversion");
      u.inv_[i] = j;
    }
    return u;
  }

  std::size_t size() const { return inv_.size(); }
  bool has_payload() const { return !payloads_.empty(); }
  bool distributive() const { return distributive_; }
  int ground_size() const { return ground_size_; }
  Mask ground_mask() const {
    return ground_size_ == 0 ? 0 : static_cast<Mask>((std::uint64_t{1} << ground_size_) - 1);
  }

  SepId inv(SepId s) const { return inv_[s]; }

  bool le(SepId s, SepId t) const {
    if (!has_payload()) return le_[s * size() + t] != 0;
    const Payload& x = payloads_[s];
    const Payload& y = payloads_[t];
    return subset_of(x.a, y.a) && subset_of(y.b, x.b);
  }
  bool lt(SepId s, SepId t) const { return s != t && le(s, t); }

  SepId join(SepId s, SepId t) const {
    if (!has_payload()) return join_[s * size() + t];
    const Payload& x = payloads_[s];
    const Payload& y = payloads_[t];
    return must_find({x.a | y.a, x.b & y.b});
  }
  SepId meet(SepId s, SepId t) const {
    if (!has_payload()) return meet_[s * size() + t];
    const Payload& x = payloads_[s];
    const Payload& y = payloads_[t];
    return must_find({x.a & y.a, x.b | y.b});
  }

  bool is_small(SepId s) const { return le(s, inv(s)); }
  bool is_cosmall(SepId s) const { return le(inv(s), s); }
  bool is_degenerate(SepId s) const { return inv(s) == s; }

  const Payload& payload(SepId s) const { return payloads_.at(s); }

  /// Id of the element with the given sides, if present.
  std::optional<SepId> find(const Payload& p) const {
    if (!has_payload()) return std::nullopt;
    if (!subset_of(p.a | p.b, ground_mask())) return std::nullopt;
    const SepId id = lookup(p);
    if (id == kNoSep) return std::nullopt;
    return id;
  }

  /// True when `s` is the reference orientation of its separation.
  bool is_reference(SepId s) const {
    const SepId t = inv(s);
    if (s == t) return true;
    if (!has_payload()) return s < t;
    return payload_less(payloads_[s], payloads_[t]);
  }

  std::string describe(SepId s) const {
    std::ostringstream os;
    if (!has_payload()) {
      os << '#' << s;
      return os.str();
    }
    auto side = [&](Mask m) {
      os << '{';
      bool first = true;
      for (int v : mask_elements(m)) {
        os << (first ? "" : ",") << v;
        first = false;
      }
      os << '}';
    };
    os << '(';
    side(payloads_[s].a);
    os << ',';
    side(payloads_[s].b);
    os << ')';
    return os.str();
  }

 private:
  std::uint64_t key(const Payload& p) const {
    return (std::uint64_t{p.a} << ground_size_) | p.b;
  }
  SepId lookup(const Payload& p) const {
    if (dense_index_) return dense_[key(p)];
    auto it = sparse_.find(key(p));
    return it == sparse_.end() ? kNoSep : it->second;
  }
  void insert_index(const Payload& p, SepId id) {
    if (dense_index_) {
      dense_[key(p)] = id;
    } else {
      sparse_[key(p)] = id;
    }
  }
  SepId must_find(const Payload& p) const {
    const SepId id = lookup(p);
    if (id == kNoSep) throw InvariantError("payload universe not closed under join/meet");
    return id;
  }

  std::vector<SepId> inv_;
  std::vector<char> le_;
  std::vector<SepId> join_;
  std::vector<SepId> meet_;
  bool distributive_ = false;

  int ground_size_ = 0;
  std::vector<Payload> payloads_;
  bool dense_index_ = true;
  std::vector<SepId> dense_;
  std::unordered_map<std::uint64_t, SepId> sparse_;
};

/// Checks all universe axioms exhaustively: involution, partial order,
/// order reversal, least upper / greatest lower bounds, De Morgan, and
/// distributivity when the universe claims it.
inline ValidationReport validate_universe(const Universe& u) {
  ValidationReport report;
  const SepId n = static_cast<SepId>(u.size());
  auto name = [&](SepId s) { return u.describe(s); };
  for (SepId s = 0; s < n; ++s) {
    if (u.inv(s) >= n || u.inv(u.inv(s)) != s) {
      report.add("inv is not an involution at " + name(s));
      return report;
    }
    if (!u.le(s, s)) report.add("le not reflexive at " + name(s));
  }
  for (SepId s = 0; s < n; ++s) {
    for (SepId t = 0; t < n; ++t) {
      if (s != t && u.le(s, t) && u.le(t, s)) {
        report.add("le not antisymmetric on " + name(s) + ", " + name(t));
      }
      if (u.le(s, t) && !u.le(u.inv(t), u.inv(s))) {
        report.add("inv not order-reversing on " + name(s) + " <= " + name(t));
      }
      const SepId j = u.join(s, t);
      const SepId m = u.meet(s, t);
      if (j >= n || m >= n) {
        report.add("join/meet out of range on " + name(s) + ", " + name(t));
        continue;
      }
      if (!u.le(s, j) || !u.le(t, j)) report.add("join not an upper bound of " + name(s) + ", " + name(t));
      if (!u.le(m, s) || !u.le(m, t)) report.add("meet not a lower bound of " + name(s) + ", " + name(t));
      if (u.inv(j) != u.meet(u.inv(s), u.inv(t))) {
        report.add("De Morgan fails on " + name(s) + ", " + name(t));
      }
      for (SepId x = 0; x < n; ++x) {
        if (u.le(x, s) && u.le(s, t) && !u.le(x, t)) {
          report.add("le not transitive on " + name(x) + ", " + name(s) + ", " + name(t));
        }
        if (u.le(s, x) && u.le(t, x) && !u.le(j, x)) {
          report.add("join not least for " + name(s) + ", " + name(t));
        }
        if (u.le(x, s) && u.le(x, t) && !u.le(x, m)) {
          report.add("meet not greatest for " + name(s) + ", " + name(t));
        }
        if (u.distributive() &&
            u.meet(x, j) != u.join(u.meet(x, s), u.meet(x, t))) {
          report.add("distributivity fails on " + name(x) + ", " + name(s) + ", " + name(t));
        }
      }
    }
  }
  return report;
}

}  // namespace tangles
