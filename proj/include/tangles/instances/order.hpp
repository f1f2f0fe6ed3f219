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
#include <cmath>
#include <limits>
#include <memory>
#include <random>
#include <string>
#include <vector>

#include "tangles/instances/graph.hpp"
#include "tangles/instances/separations.hpp"
#include "tangles/system.hpp"
#include "tangles/universe.hpp"

namespace tangles {

/// Order |s| of every element of a universe, indexed by SepId.
struct OrderFunction {
  std::vector<double> values;

  double operator()(SepId s) const { return values[s]; }
};

inline constexpr double kOrderTolerance = 1e-9;

/// Non-negative, symmetric, and submodular over the whole universe.
inline ValidationReport validate_order_function(const Universe& u, const OrderFunction& ord) {
  ValidationReport report;
  if (ord.values.size() != u.size()) {
    report.add("order function has " + std::to_string(ord.values.size()) + " values for " +
               std::to_string(u.size()) + " elements");
    return report;
  }
  for (SepId s = 0; s < u.size(); ++s) {
    if (!(ord(s) >= 0) || !std::isfinite(ord(s))) report.add("order of " + u.describe(s) + " is not a non-negative number");
    if (std::abs(ord(s) - ord(u.inv(s))) > kOrderTolerance) report.add("order not symmetric at " + u.describe(s));
  }
  for (SepId s = 0; s < u.size() && report.ok(); ++s) {
    for (SepId t = s + 1; t < u.size(); ++t) {
      if (ord(u.join(s, t)) + ord(u.meet(s, t)) > ord(s) + ord(t) + kOrderTolerance) {
        report.add("order not submodular at " + u.describe(s) + ", " + u.describe(t));
        break;
      }
    }
  }
  return report;
}

/// S_k: the elements of order < k, optionally restricted by `keep`.
inline SeparationSystem order_sk(const std::shared_ptr<const Universe>& u, const OrderFunction& ord, double k,
                                 const std::vector<char>* keep = nullptr) {
  if (auto report = validate_order_function(*u, ord); !report.ok()) {
    throw PreconditionError("invalid order function: " + report.violations.front());
  }
  std::vector<SepId> members;
  for (SepId s = 0; s < u->size(); ++s) {
    if (ord(s) < k && (!keep || (*keep)[s])) members.push_back(s);
  }
  SeparationSystem sys(u, members);
  if (!keep && !is_submodular(sys).submodular) throw InvariantError("S_k of a submodular order is not submodular");
  return sys;
}

/// Largest order plus one; a threshold at which S_k is everything.
inline double order_bound(const OrderFunction& ord) {
  double top = 0;
  for (double v : ord.values) top = std::max(top, v);
  return top + 1;
}

// ---------------------------------------------------------------------------
// Connectivity systems

/// Matroid given by a full rank table over subsets of its ground set.
struct Matroid {
  int ground = 0;
  std::vector<int> rank;  // indexed by subset mask
};

inline ValidationReport validate_matroid(const Matroid& m) {
  ValidationReport report;
  if (m.ground < 0 || m.ground > 16) {
    report.add("matroid ground set size must be in [0, 16]");
    return report;
  }
  const std::size_t count = std::size_t{1} << m.ground;
  if (m.rank.size() != count) {
    report.add("rank table must list all " + std::to_string(count) + " subsets");
    return report;
  }
  for (Mask a = 0; a < count; ++a) {
    if (m.rank[a] < 0 || m.rank[a] > popcount(a)) report.add("rank out of bounds at subset " + std::to_string(a));
    for (int e = 0; e < m.ground; ++e) {
      const Mask b = a | (Mask{1} << e);
      if (m.rank[b] < m.rank[a]) report.add("rank not monotone at subset " + std::to_string(a));
    }
  }
  for (Mask a = 0; a < count && report.ok(); ++a) {
    for (Mask b = a + 1; b < count; ++b) {
      if (m.rank[a | b] + m.rank[a & b] > m.rank[a] + m.rank[b]) {
        report.add("rank not submodular at subsets " + std::to_string(a) + ", " + std::to_string(b));
        break;
      }
    }
  }
  return report;
}

/// (X, lambda) with lambda indexed by subset mask of X.
struct ConnectivitySystem {
  int ground = 0;
  std::vector<int> lambda;
  std::vector<std::string> labels;  // names of the elements of X
};

inline ValidationReport validate_connectivity(const ConnectivitySystem& c) {
  ValidationReport report;
  const std::size_t count = std::size_t{1} << c.ground;
  if (c.lambda.size() != count) {
    report.add("lambda table must list all subsets");
    return report;
  }
  const Mask all = static_cast<Mask>(count - 1);
  for (Mask a = 0; a < count; ++a) {
    if (c.lambda[a] != c.lambda[all & ~a]) report.add("lambda not symmetric at subset " + std::to_string(a));
  }
  for (Mask a = 0; a < count && report.ok(); ++a) {
    for (Mask b = a + 1; b < count; ++b) {
      if (c.lambda[a | b] + c.lambda[a & b] > c.lambda[a] + c.lambda[b]) {
        report.add("lambda not submodular at subsets " + std::to_string(a) + ", " + std::to_string(b));
        break;
      }
    }
  }
  return report;
}

/// lambda(F) = number of vertices incident with edges in F and in E \ F.
inline ConnectivitySystem connectivity_system(const Graph& g) {
  const auto edges = g.edges();
  if (edges.size() > 16) throw PreconditionError("connectivity systems limited to 16 edges");
  ConnectivitySystem c;
  c.ground = static_cast<int>(edges.size());
  c.lambda.assign(std::size_t{1} << c.ground, 0);
  for (const auto& [a, b] : edges) c.labels.push_back(std::to_string(a) + "-" + std::to_string(b));
  const Mask all = static_cast<Mask>(c.lambda.size() - 1);
  for (Mask f = 0; f <= all; ++f) {
    Mask in_f = 0, out_f = 0;
    for (int e = 0; e < c.ground; ++e) {
      const Mask ends = (Mask{1} << edges[e].first) | (Mask{1} << edges[e].second);
      ((f >> e) & 1U ? in_f : out_f) |= ends;
    }
    c.lambda[f] = popcount(in_f & out_f);
  }
  if (auto report = validate_connectivity(c); !report.ok()) throw InvariantError(report.violations.front());
  return c;
}

/// lambda(A) = r(A) + r(X \ A) - r(X).
inline ConnectivitySystem connectivity_system(const Matroid& m) {
  if (auto report = validate_matroid(m); !report.ok()) throw PreconditionError("invalid matroid: " + report.violations.front());
  ConnectivitySystem c;
  c.ground = m.ground;
  c.lambda.assign(m.rank.size(), 0);
  for (int e = 0; e < m.ground; ++e) c.labels.push_back(std::to_string(e));
  const Mask all = static_cast<Mask>(m.rank.size() - 1);
  for (Mask a = 0; a <= all; ++a) c.lambda[a] = m.rank[a] + m.rank[all & ~a] - m.rank[all];
  if (auto report = validate_connectivity(c); !report.ok()) throw InvariantError(report.violations.front());
  return c;
}

/// lambda as an order function on the bipartition universe of X, reading
/// (A, X \ A) as the subset A.
inline OrderFunction connectivity_order(const Universe& u, const ConnectivitySystem& c) {
  if (u.ground_size() != c.ground || !u.has_payload()) throw PreconditionError("universe does not match X");
  OrderFunction ord;
  ord.values.resize(u.size());
  for (SepId s = 0; s < u.size(); ++s) ord.values[s] = c.lambda[u.payload(s).a];
  return ord;
}

/// Q = {(A, X \ A) : |A| <= 1}, the down-closed set tangles of order k extend.
inline std::vector<char> small_side_q(const Universe& u) {
  std::vector<char> q(u.size(), 0);
  for (SepId s = 0; s < u.size(); ++s) q[s] = popcount(u.payload(s).a) <= 1;
  return q;
}

// ---------------------------------------------------------------------------
// Circle separations

/// Circular arrangement of V = {0..n-1}.
struct CyclicOrder {
  std::vector<int> sequence;

  static CyclicOrder identity(int n) {
    CyclicOrder c;
    for (int i = 0; i < n; ++i) c.sequence.push_back(i);
    return c;
  }

  void validate(int n) const {
    if (static_cast<int>(sequence.size()) != n) throw InputError("cyclic order must list every element once");
    std::vector<char> seen(n, 0);
    for (int v : sequence) {
      if (v < 0 || v >= n || seen[v]) throw InputError("cyclic order must list every element once");
      seen[v] = 1;
    }
  }

  /// True iff `side` is a set of circularly consecutive elements (or empty, or V).
  bool is_arc(Mask side) const {
    const int n = static_cast<int>(sequence.size());
    const int size = popcount(side);
    if (size == 0 || size == n) return true;
    int starts = 0;
    for (int i = 0; i < n; ++i) {
      const bool here = (side >> sequence[i]) & 1U;
      const bool prev = (side >> sequence[(i + n - 1) % n]) & 1U;
      starts += here && !prev;
    }
    return starts == 1;
  }

  CyclicOrder rotated(int by) const {
    CyclicOrder c;
    const int n = static_cast<int>(sequence.size());
    for (int i = 0; i < n; ++i) c.sequence.push_back(sequence[((i + by) % n + n) % n]);
    return c;
  }
};

/// |{A,B}| = number of triples (a, b, c) with a in A, b in B, a and b in c.
inline OrderFunction triple_count_order(const Universe& u, const std::vector<Mask>& criteria) {
  if (!u.has_payload()) throw PreconditionError("triple count needs a bipartition universe");
  OrderFunction ord;
  ord.values.resize(u.size());
  for (SepId s = 0; s < u.size(); ++s) {
    const Payload& p = u.payload(s);
    double total = 0;
    for (Mask c : criteria) {
      if (!subset_of(c, u.ground_mask())) throw InputError("criterion is not a subset of V");
      total += static_cast<double>(popcount(p.a & c)) * popcount(p.b & c);
    }
    ord.values[s] = total;
  }
  return ord;
}

/// Circle separations of order < k.
inline SeparationSystem circle_system(const std::shared_ptr<const Universe>& u, const CyclicOrder& cyc,
                                      const OrderFunction& ord, double k) {
  cyc.validate(u->ground_size());
  const auto empty_side = u->find({0, u->ground_mask()});
  if (!empty_side) throw PreconditionError("universe is not a bipartition universe");
  if (std::abs(ord(*empty_side)) > kOrderTolerance) throw PreconditionError("order of (empty, V) must be 0");
  std::vector<char> keep(u->size(), 0);
  for (SepId s = 0; s < u->size(); ++s) {
    const Payload& p = u->payload(s);
    if ((p.a | p.b) != u->ground_mask() || (p.a & p.b)) throw PreconditionError("universe is not a bipartition universe");
    keep[s] = cyc.is_arc(p.a);
  }
  SeparationSystem sys = order_sk(u, ord, k, &keep);
  if (!is_submodular(sys).submodular) throw InvariantError("circle system is not submodular");
  return sys;
}

/// Random criteria: `count` subsets of V, each element included with probability p.
inline std::vector<Mask> random_criteria(int n, int count, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<Mask> out;
  for (int i = 0; i < count; ++i) {
    Mask c = 0;
    for (int v = 0; v < n; ++v) {
      if (coin(rng)) c |= Mask{1} << v;
    }
    out.push_back(c);
  }
  return out;
}

}  // namespace tangles
