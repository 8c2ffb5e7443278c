#pragma once

#include <utility>
#include <vector>

#include "wkdim/family_spec.hpp"
#include "wkdim/graph.hpp"

namespace wkdim {

/// Grid vertex (u_i, v_j), 1-based, as a dense id.
inline Vertex grid_vertex(int r, int i, int j) { return (i - 1) * r + (j - 1); }

/// Builds the family instance with canonical numbering:
///  - path/cycle: ids follow the path order, cycle closes with (n-1, 0);
///  - star: center 0, leaves 1..n-1;
///  - complete bipartite: part A is 0..q-1, part B is q..q+r-1;
///  - spider: root 0, threads laid out one after another in ascending length,
///    each listed from the vertex next to the root outwards;
///  - grid q x r: (u_i, v_j) -> (i-1)*r + (j-1).
inline Graph generate(const FamilySpec& spec) {
  validate(spec);
  std::vector<std::pair<Vertex, Vertex>> edges;
  const int n = spec.vertex_count();
  const auto& p = spec.params;

  switch (spec.kind) {
    case FamilyKind::Path:
      for (Vertex v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
      break;
    case FamilyKind::Cycle:
      for (Vertex v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
      edges.emplace_back(n - 1, 0);
      break;
    case FamilyKind::Star:
      for (Vertex v = 1; v < n; ++v) edges.emplace_back(0, v);
      break;
    case FamilyKind::Complete:
      for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) edges.emplace_back(u, v);
      break;
    case FamilyKind::CompleteBipartite:
      for (Vertex a = 0; a < p[0]; ++a)
        for (Vertex b = p[0]; b < n; ++b) edges.emplace_back(a, b);
      break;
    case FamilyKind::Spider: {
      Vertex next = 1;
      for (int length : p) {
        Vertex prev = 0;
        for (int i = 0; i < length; ++i) {
          edges.emplace_back(prev, next);
          prev = next++;
        }
      }
      break;
    }
    case FamilyKind::Grid: {
      const int q = p[0], r = p[1];
      for (int i = 1; i <= q; ++i) {
        for (int j = 1; j <= r; ++j) {
          if (j < r) edges.emplace_back(grid_vertex(r, i, j), grid_vertex(r, i, j + 1));
          if (i < q) edges.emplace_back(grid_vertex(r, i, j), grid_vertex(r, i + 1, j));
        }
      }
      break;
    }
  }
  return build_graph(n, edges).with_family(spec);
}

}  // namespace wkdim
