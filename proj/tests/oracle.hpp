#pragma once

// Test-only reference computations. Nothing here touches the library's
// distance matrix or search code: distances come from Floyd-Warshall over the
// raw edge list and set searches are plain bitmask sweeps.

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <utility>
#include <vector>

namespace oracle {

using EdgeList = std::vector<std::pair<int, int>>;
using Matrix = std::vector<std::vector<int>>;

inline Matrix floyd_warshall(int n, const EdgeList& edges) {
  const int inf = 1 << 20;
  Matrix d(n, std::vector<int>(n, inf));
  for (int v = 0; v < n; ++v) d[v][v] = 0;
  for (auto [u, v] : edges) d[u][v] = d[v][u] = 1;
  for (int m = 0; m < n; ++m)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) d[i][j] = std::min(d[i][j], d[i][m] + d[m][j]);
  return d;
}

inline int delta_mask(const Matrix& d, int x, int y, std::uint64_t mask) {
  int sum = 0;
  for (int s = 0; s < static_cast<int>(d.size()); ++s)
    if (mask >> s & 1) sum += std::abs(d[x][s] - d[y][s]);
  return sum;
}

inline bool weak_resolving(const Matrix& d, std::uint64_t mask, int k) {
  const int n = static_cast<int>(d.size());
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y)
      if (delta_mask(d, x, y, mask) < k) return false;
  return true;
}

inline int kappa(const Matrix& d) {
  const int n = static_cast<int>(d.size());
  const std::uint64_t all = n == 64 ? ~0ULL : (1ULL << n) - 1;
  int best = 1 << 30;
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y) best = std::min(best, delta_mask(d, x, y, all));
  return best;
}

/// Smallest popcount over all 2^n masks that weakly k-resolve; -1 if none.
inline int wdim(const Matrix& d, int k) {
  const int n = static_cast<int>(d.size());
  int best = -1;
  for (std::uint64_t mask = 0; mask < (1ULL << n); ++mask) {
    int size = __builtin_popcountll(mask);
    if (best >= 0 && size >= best) continue;
    if (weak_resolving(d, mask, k)) best = size;
  }
  return best;
}

}  // namespace oracle
