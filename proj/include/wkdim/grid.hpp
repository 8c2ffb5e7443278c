#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "wkdim/error.hpp"
#include "wkdim/generators.hpp"
#include "wkdim/graph.hpp"
#include "wkdim/trees.hpp"

namespace wkdim {

/// Ranking of the 2q+2r-4 border vertices of the q x r grid.
///
/// The two outer columns (j = 1 and j = r) come first, row by row, left
/// before right: (1,1), (1,r), (2,1), (2,r), ... Then the remaining vertices
/// of the top and bottom rows, column by column, top before bottom:
/// (1,2), (q,2), (1,3), (q,3), ... Any prefix of even length is a weak
/// k-metric basis for k up to that length.
struct GridBorderLabeling {
  int q = 0;
  int r = 0;
  std::vector<Vertex> order;  // order[f - 1] is the vertex ranked f
  std::vector<int> rank;      // rank[v] = f(v), 0 for interior vertices
};

inline GridBorderLabeling grid_border_labeling(int q, int r) {
  if (q < 2 || r < 2) throw Error(ErrorCode::ParameterOutOfRange, "grid needs q, r >= 2");
  GridBorderLabeling f{q, r, {}, std::vector<int>(static_cast<std::size_t>(q) * r, 0)};
  for (int i = 1; i <= q; ++i) {
    f.order.push_back(grid_vertex(r, i, 1));
    f.order.push_back(grid_vertex(r, i, r));
  }
  for (int j = 2; j <= r - 1; ++j) {
    f.order.push_back(grid_vertex(r, 1, j));
    f.order.push_back(grid_vertex(r, q, j));
  }
  for (std::size_t i = 0; i < f.order.size(); ++i) f.rank[f.order[i]] = static_cast<int>(i) + 1;
  return f;
}

inline int grid_kappa(int q, int r) { return 2 * q + 2 * r - 4; }

/// {x in border : f(x) <= 2⌈k/2⌉}
inline VertexSet grid_basis(int q, int r, int k) {
  if (q < 2 || r < 2) throw Error(ErrorCode::ParameterOutOfRange, "grid needs q, r >= 2");
  if (k < 1) throw Error(ErrorCode::InvalidArgument, "k must be positive");
  if (k > grid_kappa(q, r))
    throw InfeasibleK(ErrorCode::KaboveKappa, k, grid_kappa(q, r),
                      "(" + std::to_string(grid_vertex(r, 1, 2)) + ", " +
                          std::to_string(grid_vertex(r, 2, 1)) + ")");
  const auto f = grid_border_labeling(q, r);
  const int size = 2 * ceil_div(k, 2);
  VertexSet out(f.order.begin(), f.order.begin() + size);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace wkdim
