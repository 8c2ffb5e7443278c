#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <limits>
#include <mutex>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "wkdim/error.hpp"
#include "wkdim/graph.hpp"
#include "wkdim/resolve.hpp"

namespace wkdim {

/// Which items must be told apart: vertex pairs, edge pairs, or every pair
/// drawn from vertices and edges together.
enum class Variant { Vertex, Edge, Mixed };

inline std::string_view to_string(Variant v) {
  switch (v) {
    case Variant::Vertex: return "vertex";
    case Variant::Edge: return "edge";
    case Variant::Mixed: return "mixed";
  }
  return "vertex";
}

inline Variant parse_variant(std::string_view text) {
  if (text == "vertex") return Variant::Vertex;
  if (text == "edge") return Variant::Edge;
  if (text == "mixed") return Variant::Mixed;
  throw Error(ErrorCode::InvalidArgument, "unknown variant '" + std::string(text) + "'");
}

/// A vertex (v == -1) or an edge {u, v} with u < v.
struct Item {
  Vertex u = 0;
  Vertex v = -1;

  bool is_edge() const { return v >= 0; }
  auto operator<=>(const Item&) const = default;
};

inline std::string to_string(const Item& item) {
  return item.is_edge() ? std::to_string(item.u) + "-" + std::to_string(item.v)
                        : std::to_string(item.u);
}

struct ItemPair {
  Item a;
  Item b;
  std::vector<int> delta;  // Δ_s(a, b) for every vertex s
  int total = 0;
};

struct PairProfiles {
  Variant variant = Variant::Vertex;
  int n = 0;
  std::vector<Item> items;
  std::vector<ItemPair> pairs;
  // Minimum total over pairs, with the first pair attaining it. Empty when the
  // variant has fewer than two items.
  std::optional<int> kappa;
  std::size_t kappa_pair = 0;

  std::string pair_label(std::size_t p) const {
    return "(" + to_string(pairs[p].a) + ", " + to_string(pairs[p].b) + ")";
  }
};

/// d(s, e) = min(d(s, u), d(s, v)) for an edge e = uv.
inline std::vector<int> item_distances(const Graph& g, const Item& item) {
  const int n = g.vertex_count();
  std::vector<int> row(n);
  for (Vertex s = 0; s < n; ++s) {
    row[s] = item.is_edge() ? std::min(g.distance(s, item.u), g.distance(s, item.v))
                            : g.distance(s, item.u);
  }
  return row;
}

inline PairProfiles pair_profiles(const Graph& g, Variant variant) {
  PairProfiles out;
  out.variant = variant;
  out.n = g.vertex_count();
  if (variant != Variant::Edge)
    for (Vertex v = 0; v < out.n; ++v) out.items.push_back({v, -1});
  if (variant != Variant::Vertex)
    for (const auto& e : g.edges()) out.items.push_back({e.u, e.v});

  std::vector<std::vector<int>> rows;
  rows.reserve(out.items.size());
  for (const auto& item : out.items) rows.push_back(item_distances(g, item));

  for (std::size_t i = 0; i < out.items.size(); ++i) {
    for (std::size_t j = i + 1; j < out.items.size(); ++j) {
      ItemPair p{out.items[i], out.items[j], std::vector<int>(out.n), 0};
      for (int s = 0; s < out.n; ++s) {
        p.delta[s] = std::abs(rows[i][s] - rows[j][s]);
        p.total += p.delta[s];
      }
      if (!out.kappa || p.total < *out.kappa) {
        out.kappa = p.total;
        out.kappa_pair = out.pairs.size();
      }
      out.pairs.push_back(std::move(p));
    }
  }
  return out;
}

/// The weakest pair for a given set, with its Δ_S.
struct Certificate {
  Item a;
  Item b;
  int value = std::numeric_limits<int>::max();
};

inline Certificate weakest_pair(const PairProfiles& profiles, const VertexSet& set) {
  Certificate cert;
  for (const auto& p : profiles.pairs) {
    int sum = 0;
    for (Vertex s : set) sum += p.delta[s];
    if (sum < cert.value) cert = {p.a, p.b, sum};
  }
  return cert;
}

struct VariantVerifyOutcome {
  bool passed = true;
  Certificate weakest;
};

inline VariantVerifyOutcome verify_variant(const Graph& g, Variant variant,
                                           const VertexSet& set, int k) {
  const auto s = normalize_set(g, set);
  const auto profiles = pair_profiles(g, variant);
  VariantVerifyOutcome out;
  out.weakest = weakest_pair(profiles, s);
  out.passed = profiles.pairs.empty() || out.weakest.value >= k;
  return out;
}

struct SolverStats {
  std::int64_t nodes = 0;
  std::string engine;  // "brute" or "bnb"
};

struct DimensionResult {
  Variant variant = Variant::Vertex;
  int k = 0;
  int value = 0;
  VertexSet basis;
  Certificate certificate;
  SolverStats stats;
};

inline constexpr int kDefaultSizeCap = 16;

namespace detail {

inline PairProfiles feasible_profiles(const Graph& g, Variant variant, int k) {
  if (k < 1) throw Error(ErrorCode::InvalidArgument, "k must be positive");
  auto profiles = pair_profiles(g, variant);
  if (!profiles.kappa)
    throw Error(ErrorCode::InvalidArgument,
                std::string("the ") + std::string(to_string(variant)) +
                    " variant needs at least two items");
  if (k > *profiles.kappa)
    throw InfeasibleK(ErrorCode::KaboveKappa, k, *profiles.kappa,
                      profiles.pair_label(profiles.kappa_pair));
  return profiles;
}

/// Visits k-subsets of {0..n-1} in lexicographic order until `visit` returns true.
template <typename Visit>
bool for_each_combination(int n, int size, Visit visit) {
  std::vector<int> idx(size);
  for (int i = 0; i < size; ++i) idx[i] = i;
  while (true) {
    if (visit(idx)) return true;
    int i = size - 1;
    while (i >= 0 && idx[i] == n - size + i) --i;
    if (i < 0) return false;
    ++idx[i];
    for (int j = i + 1; j < size; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace detail

/// Exhaustive search by increasing subset size; within a size, subsets are
/// tried in lexicographic order, so the basis is the lexicographically
/// smallest optimum.
inline DimensionResult solve_bruteforce(const Graph& g, Variant variant, int k,
                                        int size_cap = kDefaultSizeCap) {
  const int n = g.vertex_count();
  if (n > size_cap)
    throw Error(ErrorCode::TooLarge, std::to_string(n) + " vertices exceed the brute-force cap " +
                                         std::to_string(size_cap));
  const auto profiles = detail::feasible_profiles(g, variant, k);

  DimensionResult result;
  result.variant = variant;
  result.k = k;
  result.stats.engine = "brute";

  std::size_t hot = 0;  // last failing pair, checked first
  auto feasible = [&](const std::vector<int>& set) {
    ++result.stats.nodes;
    auto meets = [&](std::size_t p) {
      int sum = 0;
      for (int s : set) sum += profiles.pairs[p].delta[s];
      return sum >= k;
    };
    if (!meets(hot)) return false;
    for (std::size_t p = 0; p < profiles.pairs.size(); ++p) {
      if (!meets(p)) {
        hot = p;
        return false;
      }
    }
    return true;
  };

  for (int size = 0; size <= n; ++size) {
    bool found = detail::for_each_combination(n, size, [&](const std::vector<int>& set) {
      if (!feasible(set)) return false;
      result.basis.assign(set.begin(), set.end());
      return true;
    });
    if (found) {
      result.value = size;
      result.certificate = weakest_pair(profiles, result.basis);
      return result;
    }
  }
  // Unreachable once k <= kappa: the full vertex set qualifies.
  throw Error(ErrorCode::KaboveKappa, "no feasible set");
}

namespace detail {

/// Include/exclude branch-and-bound over vertices for
///   min |S|  s.t.  Σ_{s∈S} Δ_s(pair) >= k  for every pair.
class BranchAndBound {
 public:
  BranchAndBound(const PairProfiles& profiles, int k)
      : n_(profiles.n), pairs_(profiles.pairs.size()), column_(n_) {
    for (int s = 0; s < n_; ++s) {
      column_[s].resize(pairs_);
      for (std::size_t p = 0; p < pairs_; ++p) column_[s][p] = profiles.pairs[p].delta[s];
    }
    root_.residual.assign(pairs_, k);
    root_.state.assign(n_, kUndecided);
  }

  VertexSet run(int workers) {
    seed_incumbent_greedily();
    if (workers <= 1) {
      Node node = root_;
      search(node, nullptr);
    } else {
      std::vector<Node> frontier;
      int depth = 0;
      while ((1 << depth) < workers * 8 && depth < n_) ++depth;
      Node node = root_;
      split_depth_ = depth;
      search(node, &frontier);
      split_depth_ = -1;
      std::atomic<std::size_t> next{0};
      std::vector<std::thread> pool;
      for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
          for (std::size_t i = next++; i < frontier.size(); i = next++) search(frontier[i], nullptr);
        });
      }
      for (auto& t : pool) t.join();
    }
    return best_set_;
  }

  std::int64_t nodes() const { return nodes_.load(); }

 private:
  static constexpr char kUndecided = 0, kIn = 1, kOut = 2;

  struct Node {
    std::vector<int> residual;
    std::vector<char> state;
    VertexSet chosen;
  };

  void offer(const VertexSet& chosen) {
    std::lock_guard lock(mutex_);
    if (static_cast<int>(chosen.size()) < best_.load()) {
      best_set_ = chosen;
      std::sort(best_set_.begin(), best_set_.end());
      best_.store(static_cast<int>(chosen.size()));
    }
  }

  void seed_incumbent_greedily() {
    auto residual = root_.residual;
    VertexSet chosen;
    std::vector<char> used(n_, 0);
    while (std::any_of(residual.begin(), residual.end(), [](int r) { return r > 0; })) {
      int pick = -1;
      long long pick_gain = 0;
      for (int s = 0; s < n_; ++s) {
        if (used[s]) continue;
        long long gain = 0;
        for (std::size_t p = 0; p < pairs_; ++p) gain += std::min(column_[s][p], residual[p]);
        if (gain > pick_gain) {
          pick_gain = gain;
          pick = s;
        }
      }
      if (pick < 0) return;  // infeasible; caller checked kappa already
      used[pick] = 1;
      chosen.push_back(pick);
      for (std::size_t p = 0; p < pairs_; ++p)
        residual[p] = std::max(0, residual[p] - column_[pick][p]);
    }
    offer(chosen);
  }

  void search(Node& node, std::vector<Node>* frontier) {
    ++nodes_;
    const int taken = static_cast<int>(node.chosen.size());

    std::vector<std::size_t> open;
    for (std::size_t p = 0; p < pairs_; ++p)
      if (node.residual[p] > 0) open.push_back(p);
    if (open.empty()) {
      offer(node.chosen);
      return;
    }
    if (taken + 1 >= best_.load()) return;

    std::vector<int> avail(open.size(), 0), max_delta(open.size(), 0);
    std::vector<long long> score(n_, 0), capped(n_, 0);
    long long residual_sum = 0;
    for (std::size_t i = 0; i < open.size(); ++i) residual_sum += node.residual[open[i]];
    for (int s = 0; s < n_; ++s) {
      if (node.state[s] != kUndecided) continue;
      const auto& col = column_[s];
      for (std::size_t i = 0; i < open.size(); ++i) {
        int v = col[open[i]];
        avail[i] += v;
        max_delta[i] = std::max(max_delta[i], v);
        score[s] += v;
        capped[s] += std::min(v, node.residual[open[i]]);
      }
    }

    int bound = 0;
    for (std::size_t i = 0; i < open.size(); ++i) {
      int r = node.residual[open[i]];
      if (avail[i] < r) return;
      bound = std::max(bound, (r + max_delta[i] - 1) / max_delta[i]);
    }
    long long best_column = *std::max_element(capped.begin(), capped.end());
    bound = std::max(bound, static_cast<int>((residual_sum + best_column - 1) / best_column));
    if (taken + bound >= best_.load()) return;

    if (frontier && taken + count_decided(node) >= split_depth_) {
      frontier->push_back(node);
      return;
    }

    int branch = -1;
    for (int s = 0; s < n_; ++s) {
      if (node.state[s] != kUndecided) continue;
      if (branch < 0 || score[s] > score[branch]) branch = s;
    }

    const auto saved = node.residual;
    node.state[branch] = kIn;
    node.chosen.push_back(branch);
    for (std::size_t p : open)
      node.residual[p] = std::max(0, node.residual[p] - column_[branch][p]);
    search(node, frontier);
    node.residual = saved;
    node.chosen.pop_back();

    node.state[branch] = kOut;
    search(node, frontier);
    node.state[branch] = kUndecided;
  }

  static int count_decided(const Node& node) {
    int out = 0;
    for (char c : node.state) out += c == kOut;
    return out;
  }

  int n_;
  std::size_t pairs_;
  std::vector<std::vector<int>> column_;
  Node root_;
  int split_depth_ = -1;

  std::mutex mutex_;
  std::atomic<int> best_{std::numeric_limits<int>::max()};
  VertexSet best_set_;
  std::atomic<std::int64_t> nodes_{0};
};

}  // namespace detail

/// Certified-optimal branch-and-bound. The value is independent of `workers`;
/// the basis is deterministic only with a single worker.
inline DimensionResult solve_bnb(const Graph& g, Variant variant, int k, int workers = 1) {
  const auto profiles = detail::feasible_profiles(g, variant, k);
  detail::BranchAndBound bnb(profiles, k);

  DimensionResult result;
  result.variant = variant;
  result.k = k;
  result.basis = bnb.run(std::max(1, workers));
  result.value = static_cast<int>(result.basis.size());
  result.certificate = weakest_pair(profiles, result.basis);
  result.stats = {bnb.nodes(), "bnb"};
  return result;
}

/// Exhaustive dim_k: every vertex pair must be told apart by >= k members.
inline DimensionResult solve_kmetric_dim(const Graph& g, int k, int size_cap = kDefaultSizeCap) {
  const int n = g.vertex_count();
  if (k < 1) throw Error(ErrorCode::InvalidArgument, "k must be positive");
  if (n > size_cap)
    throw Error(ErrorCode::TooLarge, std::to_string(n) + " vertices exceed the brute-force cap " +
                                         std::to_string(size_cap));
  const auto report = compute_kappa(g);
  if (k > report.kappa_prime)
    throw InfeasibleK(ErrorCode::KaboveKappaPrime, k, report.kappa_prime,
                      "(" + std::to_string(report.kappa_prime_pair.first) + ", " +
                          std::to_string(report.kappa_prime_pair.second) + ")");

  DimensionResult result;
  result.k = k;
  result.stats.engine = "brute";
  for (int size = k; size <= n; ++size) {
    bool found = detail::for_each_combination(n, size, [&](const std::vector<int>& set) {
      ++result.stats.nodes;
      VertexSet s(set.begin(), set.end());
      if (!verify_k_resolving(g, s, k).passed) return false;
      result.basis = std::move(s);
      return true;
    });
    if (found) {
      result.value = size;
      auto weakest = verify_k_resolving(g, result.basis, k);
      result.certificate = {{weakest.x, -1}, {weakest.y, -1}, weakest.value};
      return result;
    }
  }
  throw Error(ErrorCode::KaboveKappaPrime, "no feasible set");
}

/// Writes the covering model in CPLEX LP text: one binary per vertex, one
/// row per item pair with the Δ profile as coefficients.
inline void write_lp(std::ostream& out, const PairProfiles& profiles, int k) {
  auto var = [](int s) { return "x" + std::to_string(s); };
  auto row_name = [](const Item& item) {
    return item.is_edge() ? "e" + std::to_string(item.u) + "." + std::to_string(item.v)
                          : "v" + std::to_string(item.u);
  };

  out << "\\ weak " << to_string(profiles.variant) << " k-metric dimension, k = " << k << '\n';
  out << "Minimize\n obj:";
  for (int s = 0; s < profiles.n; ++s) out << (s ? " + " : " ") << var(s);
  out << "\nSubject To\n";
  for (const auto& p : profiles.pairs) {
    out << " " << row_name(p.a) << "_" << row_name(p.b) << ":";
    bool first = true;
    for (int s = 0; s < profiles.n; ++s) {
      if (p.delta[s] == 0) continue;
      out << (first ? " " : " + ");
      if (p.delta[s] != 1) out << p.delta[s] << ' ';
      out << var(s);
      first = false;
    }
    if (first) out << " 0 " << var(0);
    out << " >= " << k << '\n';
  }
  out << "Binary\n";
  for (int s = 0; s < profiles.n; ++s) out << ' ' << var(s);
  out << "\nEnd\n";
}

}  // namespace wkdim
