#pragma once

#include <algorithm>
#include <cstdint>
#include <istream>
#include <optional>
#include <ostream>
#include <queue>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "wkdim/error.hpp"
#include "wkdim/family_spec.hpp"

namespace wkdim {

using Vertex = int;
/// Sorted, duplicate-free list of vertex ids.
using VertexSet = std::vector<Vertex>;

struct Edge {
  Vertex u = 0;
  Vertex v = 0;  // u < v

  auto operator<=>(const Edge&) const = default;
};

/// Dense n x n matrix of hop counts.
class DistanceMatrix {
 public:
  DistanceMatrix() = default;
  explicit DistanceMatrix(int n) : n_(n), d_(static_cast<std::size_t>(n) * n, -1) {}

  int size() const { return n_; }
  int operator()(Vertex u, Vertex v) const { return d_[index(u, v)]; }
  int& at(Vertex u, Vertex v) { return d_[index(u, v)]; }

  /// Row view of distances from `u`.
  const int* row(Vertex u) const { return d_.data() + index(u, 0); }

  bool operator==(const DistanceMatrix&) const = default;

 private:
  std::size_t index(Vertex u, Vertex v) const {
    return static_cast<std::size_t>(u) * n_ + v;
  }

  int n_ = 0;
  std::vector<int> d_;
};

namespace detail {

inline std::vector<int> bfs(const std::vector<std::vector<Vertex>>& adjacency, Vertex source) {
  std::vector<int> dist(adjacency.size(), -1);
  std::queue<Vertex> frontier;
  dist[source] = 0;
  frontier.push(source);
  while (!frontier.empty()) {
    Vertex u = frontier.front();
    frontier.pop();
    for (Vertex w : adjacency[u]) {
      if (dist[w] < 0) {
        dist[w] = dist[u] + 1;
        frontier.push(w);
      }
    }
  }
  return dist;
}

}  // namespace detail

/// Immutable simple connected undirected graph on vertices 0..n-1.
///
/// The all-pairs distance matrix is computed once at construction; every
/// downstream computation reads it. Graphs produced by the family generators
/// also carry the FamilySpec they were built from.
class Graph {
 public:
  int vertex_count() const { return static_cast<int>(adjacency_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  const std::vector<Vertex>& neighbors(Vertex v) const { return adjacency_[v]; }
  const std::vector<Edge>& edges() const { return edges_; }
  int degree(Vertex v) const { return static_cast<int>(adjacency_[v].size()); }

  bool adjacent(Vertex u, Vertex v) const {
    const auto& nb = adjacency_[u];
    return std::binary_search(nb.begin(), nb.end(), v);
  }

  int distance(Vertex u, Vertex v) const { return distances_(u, v); }
  const DistanceMatrix& distances() const { return distances_; }

  const std::optional<FamilySpec>& family() const { return family_; }
  Graph with_family(FamilySpec spec) const {
    Graph copy = *this;
    copy.family_ = std::move(spec);
    return copy;
  }

  bool contains(Vertex v) const { return v >= 0 && v < vertex_count(); }

 private:
  friend Graph build_graph(int n, const std::vector<std::pair<Vertex, Vertex>>& edges);

  std::vector<std::vector<Vertex>> adjacency_;
  std::vector<Edge> edges_;
  DistanceMatrix distances_;
  std::optional<FamilySpec> family_;
};

/// BFS from every source; rows are independent.
inline DistanceMatrix all_pairs_distances(const std::vector<std::vector<Vertex>>& adjacency) {
  const int n = static_cast<int>(adjacency.size());
  DistanceMatrix d(n);
  for (Vertex s = 0; s < n; ++s) {
    auto row = detail::bfs(adjacency, s);
    for (Vertex t = 0; t < n; ++t) d.at(s, t) = row[t];
  }
  return d;
}

inline const DistanceMatrix& all_pairs_distances(const Graph& g) { return g.distances(); }

/// Validates the input and returns the graph with its distances attached.
inline Graph build_graph(int n, const std::vector<std::pair<Vertex, Vertex>>& edges) {
  if (n < 1) throw Error(ErrorCode::EmptyGraph, "graph needs at least one vertex");

  Graph g;
  g.adjacency_.assign(n, {});
  for (auto [a, b] : edges) {
    if (a < 0 || a >= n || b < 0 || b >= n)
      throw Error(ErrorCode::VertexOutOfRange,
                  "edge (" + std::to_string(a) + "," + std::to_string(b) +
                      ") outside 0.." + std::to_string(n - 1));
    if (a == b) throw Error(ErrorCode::SelfLoop, "self-loop at " + std::to_string(a));
    g.adjacency_[a].push_back(b);
    g.adjacency_[b].push_back(a);
    g.edges_.push_back({std::min(a, b), std::max(a, b)});
  }
  for (auto& nb : g.adjacency_) std::sort(nb.begin(), nb.end());
  std::sort(g.edges_.begin(), g.edges_.end());
  if (auto dup = std::adjacent_find(g.edges_.begin(), g.edges_.end()); dup != g.edges_.end())
    throw Error(ErrorCode::DuplicateEdge,
                "edge (" + std::to_string(dup->u) + "," + std::to_string(dup->v) + ") repeated");

  g.distances_ = all_pairs_distances(g.adjacency_);
  for (Vertex v = 0; v < n; ++v)
    if (g.distances_(0, v) < 0)
      throw Error(ErrorCode::NotConnected,
                  "vertex " + std::to_string(v) + " unreachable from 0");
  return g;
}

struct TwinPairs {
  std::vector<std::pair<Vertex, Vertex>> true_twins;
  std::vector<std::pair<Vertex, Vertex>> false_twins;
};

/// True twins share closed neighborhoods, false twins share open ones.
/// Pairs are listed lexicographically with x < y.
inline TwinPairs find_twins(const Graph& g) {
  TwinPairs out;
  const int n = g.vertex_count();
  auto closed = [&](Vertex v) {
    auto nb = g.neighbors(v);
    nb.insert(std::lower_bound(nb.begin(), nb.end(), v), v);
    return nb;
  };
  for (Vertex x = 0; x < n; ++x) {
    for (Vertex y = x + 1; y < n; ++y) {
      if (g.adjacent(x, y)) {
        if (closed(x) == closed(y)) out.true_twins.emplace_back(x, y);
      } else if (g.neighbors(x) == g.neighbors(y)) {
        out.false_twins.emplace_back(x, y);
      }
    }
  }
  return out;
}

// Edge-list text format: "n m" header, then m lines "u v"; '#' starts a comment.

inline Graph read_edge_list(std::istream& in) {
  std::ostringstream cleaned;
  std::string line;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    cleaned << line << '\n';
  }
  std::istringstream tokens(cleaned.str());
  long long n = 0, m = 0;
  if (!(tokens >> n >> m)) throw Error(ErrorCode::ParseError, "missing 'n m' header");
  if (n < 1 || m < 0) throw Error(ErrorCode::ParseError, "header must have n >= 1, m >= 0");

  std::vector<std::pair<Vertex, Vertex>> edges;
  edges.reserve(static_cast<std::size_t>(m));
  for (long long i = 0; i < m; ++i) {
    long long u = 0, v = 0;
    if (!(tokens >> u >> v))
      throw Error(ErrorCode::ParseError,
                  "expected " + std::to_string(m) + " edges, found " + std::to_string(i));
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw Error(ErrorCode::VertexOutOfRange,
                  "edge (" + std::to_string(u) + "," + std::to_string(v) + ") out of range");
    edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  std::string extra;
  if (tokens >> extra) throw Error(ErrorCode::ParseError, "trailing token '" + extra + "'");
  return build_graph(static_cast<int>(n), edges);
}

inline void write_edge_list(std::ostream& out, const Graph& g) {
  if (g.family()) out << "# " << to_string(*g.family()) << '\n';
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const auto& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

}  // namespace wkdim
