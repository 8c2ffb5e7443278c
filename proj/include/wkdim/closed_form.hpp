#pragma once

#include <algorithm>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "wkdim/error.hpp"
#include "wkdim/family_spec.hpp"
#include "wkdim/generators.hpp"
#include "wkdim/graph.hpp"
#include "wkdim/grid.hpp"
#include "wkdim/trees.hpp"

namespace wkdim {

struct KappaFormula {
  int value = 0;
  std::pair<Vertex, Vertex> witness;  // a pair whose full-set Δ equals value
};

namespace detail {

inline std::string pair_text(std::pair<Vertex, Vertex> p) {
  return "(" + std::to_string(p.first) + ", " + std::to_string(p.second) + ")";
}

[[noreturn]] inline void not_covered(const FamilySpec& spec, const std::string& why) {
  throw Error(ErrorCode::FormulaNotCovered, to_string(spec) + ": " + why);
}

}  // namespace detail

inline KappaFormula kappa_formula(const FamilySpec& spec) {
  validate(spec);
  const auto& p = spec.params;
  const int n = spec.vertex_count();
  switch (spec.kind) {
    case FamilyKind::Complete:
      return {2, {0, 1}};
    case FamilyKind::Star:
      if (n <= 3) return {n, {0, 1}};  // P2 or P3
      return {4, {1, 2}};
    case FamilyKind::CompleteBipartite:
      if (std::min(p[0], p[1]) == 1) {
        if (n <= 3) return {n, {0, p[0]}};
        // K_{1,r} is a star; two vertices of the larger side are false twins.
        return p[0] > 1 ? KappaFormula{4, {0, 1}} : KappaFormula{4, {1, 2}};
      }
      return {4, {0, 1}};
    case FamilyKind::Path:
      return {n, {0, 1}};
    case FamilyKind::Cycle:
      return {n % 2 ? n - 1 : n, {0, 1}};
    case FamilyKind::Spider: {
      const int kappa_star = 2 * (p[0] + p[1]);
      if (kappa_star < n) return {kappa_star, {1, 1 + p[0]}};
      return {n, {0, 1}};
    }
    case FamilyKind::Grid:
      return {grid_kappa(p[0], p[1]), {grid_vertex(p[1], 1, 2), grid_vertex(p[1], 2, 1)}};
  }
  return {};
}

inline KappaFormula kappa_formula(const TreeShape& shape) {
  return {tree_kappa(shape), tree_kappa_witness(shape)};
}

namespace detail {

inline void check_formula_k(const KappaFormula& kappa, int k) {
  if (k < 1) throw Error(ErrorCode::InvalidArgument, "k must be positive");
  if (k > kappa.value)
    throw InfeasibleK(ErrorCode::KaboveKappa, k, kappa.value, pair_text(kappa.witness));
}

}  // namespace detail

inline int wdim_formula(const TreeShape& shape, int k) {
  detail::check_formula_k(kappa_formula(shape), k);
  if (shape.is_path) return k;
  if (shape.is_spider3) return k == 1 ? 2 : k;
  int total = 0;
  for (const auto& root : shape.roots)
    total += root_basis_size(root.root_degree(), root.shortest(), k);
  return total;
}

/// wdim_k for a family instance. Parameter ranges the closed forms do not
/// cover (S_4, C_3, C_4, K_{1,r}) raise FormulaNotCovered.
inline int wdim_formula(const FamilySpec& spec, int k) {
  detail::check_formula_k(kappa_formula(spec), k);
  const auto& p = spec.params;
  const int n = spec.vertex_count();
  switch (spec.kind) {
    case FamilyKind::Complete:
      return k == 1 ? n - 1 : n;
    case FamilyKind::Star:
      if (n <= 3) return k;
      if (n == 4) detail::not_covered(spec, "star formulas need n >= 5");
      return k <= 2 ? n - 2 : n - 1;
    case FamilyKind::CompleteBipartite:
      if (std::min(p[0], p[1]) < 2) detail::not_covered(spec, "needs q, r >= 2");
      return k <= 2 ? n - 2 : n;
    case FamilyKind::Path:
      return k;
    case FamilyKind::Cycle:
      if (n < 5) detail::not_covered(spec, "cycle formulas need n >= 5");
      if (k == 1) return 2;
      return n % 2 ? k + 1 : k;
    case FamilyKind::Spider:
      return wdim_formula(decompose_tree(generate(spec)), k);
    case FamilyKind::Grid:
      return k % 2 ? k + 1 : k;
  }
  return 0;
}

namespace detail {

inline VertexSet iota_set(Vertex first, Vertex last) {
  VertexSet out(std::max(0, last - first));
  std::iota(out.begin(), out.end(), first);
  return out;
}

/// Path vertices in order, starting from the smaller-id endpoint.
inline std::vector<Vertex> path_order(const Graph& g) {
  const int n = g.vertex_count();
  if (n == 1) return {0};
  Vertex start = 0;
  while (g.degree(start) != 1) ++start;
  std::vector<Vertex> order{start};
  Vertex prev = -1, cur = start;
  while (static_cast<int>(order.size()) < n) {
    Vertex next = g.neighbors(cur)[0] == prev ? g.neighbors(cur)[1] : g.neighbors(cur)[0];
    order.push_back(next);
    prev = cur;
    cur = next;
  }
  return order;
}

inline VertexSet path_prefix(const Graph& g, int k) {
  auto order = path_order(g);
  VertexSet out(order.begin(), order.begin() + k);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace detail

/// Constructive basis for a tree: the first k path vertices, the S3 depth
/// prefix, or the union of per-root slices.
inline VertexSet formula_basis(const Graph& g, const TreeShape& shape, int k) {
  detail::check_formula_k(kappa_formula(shape), k);
  if (shape.is_path) return detail::path_prefix(g, k);
  if (shape.is_spider3) return spider3_basis(shape, k);
  return tree_basis(shape, k);
}

/// Constructive basis matching wdim_formula for a generated family graph.
inline VertexSet formula_basis(const Graph& g, int k) {
  if (!g.family()) throw Error(ErrorCode::FormulaNotCovered, "graph carries no family spec");
  const auto& spec = *g.family();
  const int n = spec.vertex_count();
  const auto& p = spec.params;
  wdim_formula(spec, k);  // range checks

  switch (spec.kind) {
    case FamilyKind::Complete:
      return detail::iota_set(0, k == 1 ? n - 1 : n);
    case FamilyKind::Star:
      if (n <= 3) return detail::path_prefix(g, k);
      return detail::iota_set(k <= 2 ? 2 : 1, n);
    case FamilyKind::CompleteBipartite: {
      if (k > 2) return detail::iota_set(0, n);
      auto out = detail::iota_set(0, p[0] - 1);
      auto rest = detail::iota_set(p[0], n - 1);
      out.insert(out.end(), rest.begin(), rest.end());
      return out;
    }
    case FamilyKind::Path:
      return detail::iota_set(0, k);
    case FamilyKind::Cycle:
      if (k == 1) return {0, 1};
      return detail::iota_set(0, n % 2 ? k + 1 : k);
    case FamilyKind::Spider:
      return formula_basis(g, decompose_tree(g), k);
    case FamilyKind::Grid:
      return grid_basis(p[0], p[1], k);
  }
  return {};
}

}  // namespace wkdim
