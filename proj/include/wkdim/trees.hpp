#pragma once

#include <algorithm>
#include <cstdlib>
#include <map>
#include <optional>
#include <queue>
#include <string>
#include <utility>
#include <vector>

#include "wkdim/error.hpp"
#include "wkdim/graph.hpp"
#include "wkdim/resolve.hpp"

namespace wkdim {

/// Pendant path hanging at a root, listed from the vertex next to the root
/// out to the leaf.
struct Thread {
  std::vector<Vertex> vertices;

  int length() const { return static_cast<int>(vertices.size()); }
  Vertex tip() const { return vertices.back(); }
};

/// A vertex of degree >= 3 with at least two threads, threads ordered by
/// (length, tip id).
struct RootThreads {
  Vertex root = 0;
  std::vector<Thread> threads;

  int root_degree() const { return static_cast<int>(threads.size()); }
  int shortest() const { return threads.front().length(); }
  int second_shortest() const { return threads[1].length(); }
};

struct TreeShape {
  int n = 0;
  std::vector<RootThreads> roots;  // sorted by root id
  bool is_path = false;
  bool is_spider3 = false;
  std::optional<int> kappa_star;   // min over roots of 2(l1 + l2)
  std::pair<Vertex, Vertex> some_edge{0, 1};
};

inline bool is_tree(const Graph& g) { return g.edge_count() == g.vertex_count() - 1; }

inline TreeShape decompose_tree(const Graph& g) {
  if (!is_tree(g)) throw Error(ErrorCode::NotATree, "graph has a cycle");

  TreeShape shape;
  shape.n = g.vertex_count();
  if (shape.n >= 2) shape.some_edge = {g.edges().front().u, g.edges().front().v};

  std::map<Vertex, std::vector<Thread>> hanging;
  for (Vertex leaf = 0; leaf < shape.n; ++leaf) {
    if (g.degree(leaf) != 1) continue;
    std::vector<Vertex> walk{leaf};
    Vertex prev = leaf, cur = g.neighbors(leaf).front();
    while (g.degree(cur) == 2) {
      walk.push_back(cur);
      Vertex next = g.neighbors(cur)[0] == prev ? g.neighbors(cur)[1] : g.neighbors(cur)[0];
      prev = cur;
      cur = next;
    }
    if (g.degree(cur) == 1) continue;  // the whole tree is a path
    std::reverse(walk.begin(), walk.end());
    hanging[cur].push_back(Thread{std::move(walk)});
  }

  for (auto& [root, threads] : hanging) {
    if (threads.size() < 2) continue;
    std::sort(threads.begin(), threads.end(), [](const Thread& a, const Thread& b) {
      return std::pair(a.length(), a.tip()) < std::pair(b.length(), b.tip());
    });
    shape.roots.push_back({root, std::move(threads)});
  }

  shape.is_path = shape.roots.empty();
  shape.is_spider3 = shape.roots.size() == 1 && shape.roots.front().root_degree() == 3;
  for (const auto& r : shape.roots) {
    int value = 2 * (r.shortest() + r.second_shortest());
    if (!shape.kappa_star || value < *shape.kappa_star) shape.kappa_star = value;
  }
  return shape;
}

/// κ(T): n for a path, min{n, κ*(T)} otherwise.
inline int tree_kappa(const TreeShape& shape) {
  if (shape.is_path) return shape.n;
  return std::min(shape.n, *shape.kappa_star);
}

/// A pair attaining κ(T): the root neighbours on the two shortest threads of
/// the minimizing root, or an edge when n < κ*.
inline std::pair<Vertex, Vertex> tree_kappa_witness(const TreeShape& shape) {
  if (shape.is_path || shape.n <= *shape.kappa_star) return shape.some_edge;
  for (const auto& r : shape.roots) {
    if (2 * (r.shortest() + r.second_shortest()) == *shape.kappa_star)
      return {r.threads[0].vertices.front(), r.threads[1].vertices.front()};
  }
  return shape.some_edge;
}

inline int ceil_div(int a, int b) { return (a + b - 1) / b; }

/// f_k(v), the size of the per-root basis slice S_k(v).
inline int root_basis_size(int root_degree, int shortest, int k) {
  const int quarter = ceil_div(k, 4);
  if (quarter <= shortest) {
    const bool trim = k % 4 == 1 || k % 4 == 2;
    return quarter * root_degree - (trim ? 1 : 0);
  }
  return shortest + (root_degree - 1) * (ceil_div(k, 2) - shortest);
}

/// S_k(v): either the first ⌈k/4⌉ vertices of every thread (dropping the
/// last of them on the shortest thread when k ≡ 1, 2 mod 4), or, when the
/// shortest thread is too short for that, all of it plus ⌈k/2⌉ - l1 vertices
/// of each other thread.
inline VertexSet root_basis(const RootThreads& root, int k) {
  VertexSet out;
  const int quarter = ceil_div(k, 4);
  const int l1 = root.shortest();
  if (quarter <= l1) {
    const bool trim = k % 4 == 1 || k % 4 == 2;
    for (std::size_t j = 0; j < root.threads.size(); ++j) {
      int take = quarter - (j == 0 && trim ? 1 : 0);
      for (int i = 0; i < take; ++i) out.push_back(root.threads[j].vertices[i]);
    }
  } else {
    const int take = ceil_div(k, 2) - l1;
    for (Vertex v : root.threads[0].vertices) out.push_back(v);
    for (std::size_t j = 1; j < root.threads.size(); ++j) {
      if (take > root.threads[j].length())
        throw Error(ErrorCode::KaboveKappa, "thread too short for k=" + std::to_string(k));
      for (int i = 0; i < take; ++i) out.push_back(root.threads[j].vertices[i]);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace detail {

inline void check_tree_k(const TreeShape& shape, int k) {
  if (k < 1) throw Error(ErrorCode::InvalidArgument, "k must be positive");
  const int kappa = tree_kappa(shape);
  if (k > kappa) {
    auto [x, y] = tree_kappa_witness(shape);
    throw InfeasibleK(ErrorCode::KaboveKappa, k, kappa,
                      "(" + std::to_string(x) + ", " + std::to_string(y) + ")");
  }
}

}  // namespace detail

/// Union of S_k(v) over all roots; a weak k-metric basis for trees other
/// than paths and three-thread spiders.
inline VertexSet tree_basis(const TreeShape& shape, int k) {
  if (shape.is_path || shape.is_spider3)
    throw Error(ErrorCode::WrongTreeClass, "tree_basis excludes paths and S3 spiders");
  detail::check_tree_k(shape, k);
  VertexSet out;
  for (const auto& root : shape.roots) {
    auto part = root_basis(root, k);
    out.insert(out.end(), part.begin(), part.end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// The first k vertices when a three-thread spider is walked outwards depth
/// by depth (threads in ascending length within a depth), root last.
inline VertexSet spider3_basis(const TreeShape& shape, int k) {
  if (!shape.is_spider3) throw Error(ErrorCode::WrongTreeClass, "not an S3 spider");
  detail::check_tree_k(shape, k);
  if (k < 2)
    throw Error(ErrorCode::FormulaNotCovered, "k=1 on an S3 spider is left to the solver");

  const auto& root = shape.roots.front();
  std::vector<Vertex> order;
  const int deepest = root.threads.back().length();
  for (int depth = 0; depth < deepest; ++depth)
    for (const auto& t : root.threads)
      if (depth < t.length()) order.push_back(t.vertices[depth]);
  order.push_back(root.root);

  VertexSet out(order.begin(), order.begin() + k);
  std::sort(out.begin(), out.end());
  return out;
}

/// Δ_S(x,y) on a tree via the path decomposition: every vertex hanging off
/// the i-th vertex of the x-y path contributes |d - 2i|.
inline int delta_tree_pair(const Graph& g, Vertex x, Vertex y, const VertexSet& set) {
  if (!is_tree(g)) throw Error(ErrorCode::NotATree, "graph has a cycle");
  detail::check_pair(g, x, y);
  const int n = g.vertex_count();

  std::vector<Vertex> parent(n, -1);
  std::vector<char> seen(n, 0);
  std::queue<Vertex> frontier;
  frontier.push(x);
  seen[x] = 1;
  while (!frontier.empty()) {
    Vertex u = frontier.front();
    frontier.pop();
    for (Vertex w : g.neighbors(u)) {
      if (!seen[w]) {
        seen[w] = 1;
        parent[w] = u;
        frontier.push(w);
      }
    }
  }
  std::vector<Vertex> path;
  for (Vertex v = y; v != -1; v = parent[v]) path.push_back(v);
  std::reverse(path.begin(), path.end());
  const int d = static_cast<int>(path.size()) - 1;

  // Label every vertex with the index of the path vertex its component hangs from.
  std::vector<int> label(n, -1);
  for (int i = 0; i <= d; ++i) {
    label[path[i]] = i;
    frontier.push(path[i]);
  }
  while (!frontier.empty()) {
    Vertex u = frontier.front();
    frontier.pop();
    for (Vertex w : g.neighbors(u)) {
      if (label[w] < 0) {
        label[w] = label[u];
        frontier.push(w);
      }
    }
  }

  int sum = 0;
  for (Vertex s : set) {
    detail::check_vertex(g, s);
    sum += std::abs(d - 2 * label[s]);
  }
  return sum;
}

}  // namespace wkdim
