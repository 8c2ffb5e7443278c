#pragma once

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "wkdim/error.hpp"
#include "wkdim/graph.hpp"

namespace wkdim {

/// Per-probe distance differences for one vertex pair.
struct PairDifferenceProfile {
  Vertex x = 0;
  Vertex y = 0;
  std::vector<int> per_vertex;  // |d(x,s) - d(y,s)| for every s
  int total = 0;
  int support_size = 0;         // probes with a nonzero difference
};

namespace detail {

inline void check_vertex(const Graph& g, Vertex v) {
  if (!g.contains(v))
    throw Error(ErrorCode::VertexOutOfRange, "vertex " + std::to_string(v) + " not in graph");
}

inline void check_pair(const Graph& g, Vertex x, Vertex y) {
  check_vertex(g, x);
  check_vertex(g, y);
  if (x == y) throw Error(ErrorCode::SameVertex, "pair needs two distinct vertices");
}

inline int probe_delta(const DistanceMatrix& d, Vertex x, Vertex y, Vertex s) {
  return std::abs(d(x, s) - d(y, s));
}

}  // namespace detail

/// Sorts, deduplicates and range-checks a candidate set.
inline VertexSet normalize_set(const Graph& g, VertexSet set) {
  std::sort(set.begin(), set.end());
  set.erase(std::unique(set.begin(), set.end()), set.end());
  for (Vertex v : set) detail::check_vertex(g, v);
  return set;
}

inline PairDifferenceProfile delta_pair(const Graph& g, Vertex x, Vertex y) {
  detail::check_pair(g, x, y);
  const auto& d = g.distances();
  PairDifferenceProfile p{x, y, std::vector<int>(g.vertex_count()), 0, 0};
  for (Vertex s = 0; s < g.vertex_count(); ++s) {
    p.per_vertex[s] = detail::probe_delta(d, x, y, s);
    p.total += p.per_vertex[s];
    if (p.per_vertex[s] > 0) ++p.support_size;
  }
  return p;
}

/// Sum of |d(x,s) - d(y,s)| over s in `set`.
inline int delta_over_set(const Graph& g, Vertex x, Vertex y, const VertexSet& set) {
  detail::check_pair(g, x, y);
  const auto& d = g.distances();
  int sum = 0;
  for (Vertex s : set) {
    detail::check_vertex(g, s);
    sum += detail::probe_delta(d, x, y, s);
  }
  return sum;
}

enum class KappaClass { Weak2TrueTwins, Weak3Structural, Weak4FalseTwins, Other };

inline std::string_view to_string(KappaClass c) {
  switch (c) {
    case KappaClass::Weak2TrueTwins: return "Weak2TrueTwins";
    case KappaClass::Weak3Structural: return "Weak3Structural";
    case KappaClass::Weak4FalseTwins: return "Weak4FalseTwins";
    case KappaClass::Other: return "Other";
  }
  return "Other";
}

/// Adjacent x, y with N[x] \ {z} = N[y], z a neighbor of x outside N[y], and
/// every neighbor of z inside N[N[x] ∩ N[y]].
struct Weak3Witness {
  Vertex x = 0;
  Vertex y = 0;
  Vertex z = 0;
};

struct Weak3Search {
  std::optional<Weak3Witness> witness;
  // Set when exempting x from the neighbor condition on z changes the answer.
  bool readings_disagree = false;
};

inline Weak3Search find_weak3_structure(const Graph& g) {
  const int n = g.vertex_count();
  auto closed = [&](Vertex v) {
    std::vector<char> in(n, 0);
    in[v] = 1;
    for (Vertex w : g.neighbors(v)) in[w] = 1;
    return in;
  };

  Weak3Search result;
  bool literal_found = false, relaxed_found = false;
  for (Vertex x = 0; x < n; ++x) {
    const auto nx = closed(x);
    for (Vertex y : g.neighbors(x)) {
      const auto ny = closed(y);
      for (Vertex z : g.neighbors(x)) {
        if (ny[z]) continue;
        bool equal = true;
        for (Vertex v = 0; v < n && equal; ++v)
          equal = (v == z ? true : nx[v] == ny[v]);
        if (!equal) continue;

        // N[N[x] ∩ N[y]]
        std::vector<char> reach(n, 0);
        for (Vertex c = 0; c < n; ++c) {
          if (!(nx[c] && ny[c])) continue;
          reach[c] = 1;
          for (Vertex w : g.neighbors(c)) reach[w] = 1;
        }
        bool literal = true, relaxed = true;
        for (Vertex u : g.neighbors(z)) {
          if (reach[u]) continue;
          literal = false;
          if (u != x) relaxed = false;
        }
        if (literal && !literal_found) {
          literal_found = true;
          result.witness = Weak3Witness{x, y, z};
        }
        if (relaxed) relaxed_found = true;
      }
    }
  }
  result.readings_disagree = literal_found != relaxed_found;
  return result;
}

struct KappaReport {
  int kappa = 0;
  int kappa_prime = 0;
  std::pair<Vertex, Vertex> witness_pair;        // lexicographically first argmin of Δ
  std::pair<Vertex, Vertex> kappa_prime_pair;    // argmin of support size
  KappaClass classification = KappaClass::Other;
  std::vector<Vertex> evidence;  // twin pair, or (x, y, z) for the weak-3 structure
  bool weak3_readings_disagree = false;
};

/// κ(G) is the minimum over pairs of the full-set difference Δ(x,y); κ'(G)
/// the minimum number of distinguishing probes.
inline KappaReport compute_kappa(const Graph& g) {
  const int n = g.vertex_count();
  if (n < 2) throw Error(ErrorCode::TrivialGraph, "kappa needs at least two vertices");
  const auto& d = g.distances();

  KappaReport report;
  report.kappa = std::numeric_limits<int>::max();
  report.kappa_prime = std::numeric_limits<int>::max();
  for (Vertex x = 0; x < n; ++x) {
    for (Vertex y = x + 1; y < n; ++y) {
      int total = 0, support = 0;
      for (Vertex s = 0; s < n; ++s) {
        int delta = detail::probe_delta(d, x, y, s);
        total += delta;
        support += delta > 0;
      }
      if (total < report.kappa) {
        report.kappa = total;
        report.witness_pair = {x, y};
      }
      if (support < report.kappa_prime) {
        report.kappa_prime = support;
        report.kappa_prime_pair = {x, y};
      }
    }
  }

  const auto twins = find_twins(g);
  const auto weak3 = find_weak3_structure(g);
  report.weak3_readings_disagree = weak3.readings_disagree;
  if (!twins.true_twins.empty()) {
    report.classification = KappaClass::Weak2TrueTwins;
    auto [a, b] = twins.true_twins.front();
    report.evidence = {a, b};
  } else if (weak3.witness) {
    report.classification = KappaClass::Weak3Structural;
    report.evidence = {weak3.witness->x, weak3.witness->y, weak3.witness->z};
  } else if (!twins.false_twins.empty()) {
    report.classification = KappaClass::Weak4FalseTwins;
    auto [a, b] = twins.false_twins.front();
    report.evidence = {a, b};
  }
  return report;
}

/// Outcome of a set-level check: the weakest pair (lexicographically first
/// among minimizers) and its score, so callers get a certificate either way.
struct VerifyOutcome {
  bool passed = true;
  Vertex x = -1;
  Vertex y = -1;
  int value = std::numeric_limits<int>::max();
};

namespace detail {

template <typename PairScore, typename PairFilter>
VerifyOutcome weakest_pair(const Graph& g, int k, PairScore score, PairFilter include) {
  VerifyOutcome out;
  const int n = g.vertex_count();
  for (Vertex x = 0; x < n; ++x) {
    for (Vertex y = x + 1; y < n; ++y) {
      if (!include(x, y)) continue;
      int value = score(x, y);
      if (value < out.value) {
        out.value = value;
        out.x = x;
        out.y = y;
      }
    }
  }
  out.passed = out.x < 0 || out.value >= k;
  return out;
}

}  // namespace detail

/// S is weak k-resolving iff Δ_S(x,y) >= k for every pair.
inline VerifyOutcome verify_weak_k_resolving(const Graph& g, const VertexSet& set, int k) {
  const auto s = normalize_set(g, set);
  const auto& d = g.distances();
  return detail::weakest_pair(
      g, k,
      [&](Vertex x, Vertex y) {
        int sum = 0;
        for (Vertex v : s) sum += detail::probe_delta(d, x, y, v);
        return sum;
      },
      [](Vertex, Vertex) { return true; });
}

inline int distinguishing_count(const Graph& g, const VertexSet& set, Vertex x, Vertex y) {
  const auto& d = g.distances();
  int count = 0;
  for (Vertex v : set) count += d(x, v) != d(y, v);
  return count;
}

/// S is k-resolving iff every pair is told apart by at least k members of S.
inline VerifyOutcome verify_k_resolving(const Graph& g, const VertexSet& set, int k) {
  const auto s = normalize_set(g, set);
  return detail::weakest_pair(
      g, k, [&](Vertex x, Vertex y) { return distinguishing_count(g, s, x, y); },
      [](Vertex, Vertex) { return true; });
}

/// The k-resolving requirement restricted to adjacent pairs. A graph with no
/// edges cannot occur, so the failing item is always an edge.
inline VerifyOutcome verify_local_k_resolving(const Graph& g, const VertexSet& set, int k) {
  const auto s = normalize_set(g, set);
  return detail::weakest_pair(
      g, k, [&](Vertex x, Vertex y) { return distinguishing_count(g, s, x, y); },
      [&](Vertex x, Vertex y) { return g.adjacent(x, y); });
}

inline VertexSet all_vertices(const Graph& g) {
  VertexSet v(g.vertex_count());
  for (Vertex i = 0; i < g.vertex_count(); ++i) v[i] = i;
  return v;
}

}  // namespace wkdim
