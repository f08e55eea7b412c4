#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <optional>
#include <utility>
#include <vector>

#include "hopcore/errors.hpp"

namespace hopcore {

using Weight = std::int64_t;
constexpr Weight kInfiniteDistance = std::numeric_limits<Weight>::max() / 4;

/// Undirected weighted graph on dense vertex ids 0..n-1. Weights are integers
/// in [1, aspect_ratio]; a stored weight of 0 means the pair has no edge.
/// Most of the library expects a complete graph (see complete_closure);
/// connector construction also accepts incomplete graphs.
class WeightedGraph {
 public:
  WeightedGraph() = default;

  explicit WeightedGraph(int n, Weight aspect_ratio = 1)
      : n_(n), aspect_ratio_(aspect_ratio), w_(static_cast<std::size_t>(n) * n, 0) {
    require(n >= 1, ErrorKind::invalid_parameter, "graph needs at least one vertex");
    require(aspect_ratio >= 1, ErrorKind::invalid_weight, "aspect ratio must be >= 1");
  }

  int size() const { return n_; }
  Weight aspect_ratio() const { return aspect_ratio_; }

  bool valid_vertex(int v) const { return v >= 0 && v < n_; }

  Weight weight(int u, int v) const { return w_[idx(u, v)]; }
  bool has_edge(int u, int v) const { return u != v && weight(u, v) > 0; }

  void set_edge(int u, int v, Weight w) {
    require(valid_vertex(u) && valid_vertex(v), ErrorKind::invalid_parameter, "vertex out of range");
    require(u != v, ErrorKind::invalid_weight, "no self-loop weights");
    require(w >= 1, ErrorKind::invalid_weight, "edge weight must be a positive integer");
    w_[idx(u, v)] = w;
    w_[idx(v, u)] = w;
    aspect_ratio_ = std::max(aspect_ratio_, w);
    check_overflow_guard();
  }

  bool is_complete() const {
    for (int u = 0; u < n_; ++u)
      for (int v = u + 1; v < n_; ++v)
        if (!has_edge(u, v)) return false;
    return true;
  }

  int edge_count() const {
    int m = 0;
    for (int u = 0; u < n_; ++u)
      for (int v = u + 1; v < n_; ++v)
        if (has_edge(u, v)) ++m;
    return m;
  }

  std::vector<std::pair<int, int>> edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n_; ++u)
      for (int v = u + 1; v < n_; ++v)
        if (has_edge(u, v)) out.emplace_back(u, v);
    return out;
  }

  /// Induced subgraph on `keep` (order defines new ids 0..k-1).
  WeightedGraph induced(const std::vector<int>& keep) const {
    WeightedGraph g(static_cast<int>(keep.size()), aspect_ratio_);
    for (std::size_t i = 0; i < keep.size(); ++i)
      for (std::size_t j = i + 1; j < keep.size(); ++j) {
        Weight w = weight(keep[i], keep[j]);
        if (w > 0) g.set_edge(static_cast<int>(i), static_cast<int>(j), w);
      }
    return g;
  }

  void set_aspect_ratio(Weight L) {
    require(L >= aspect_ratio_, ErrorKind::invalid_weight, "declared aspect ratio below max edge weight");
    aspect_ratio_ = L;
    check_overflow_guard();
  }

 private:
  std::size_t idx(int u, int v) const { return static_cast<std::size_t>(u) * n_ + v; }

  void check_overflow_guard() {
    // Exact 64-bit distances need n^2 * L * n < 2^63.
    __int128 bound = static_cast<__int128>(n_) * n_ * aspect_ratio_ * n_;
    require(bound < (static_cast<__int128>(1) << 62), ErrorKind::invalid_weight,
            "n^2 * L * n exceeds the 64-bit distance guard");
  }

  int n_ = 0;
  Weight aspect_ratio_ = 1;
  std::vector<Weight> w_;
};

/// Edge subset of a parent graph; vertices are the edge endpoints.
struct Subgraph {
  const WeightedGraph* parent = nullptr;
  std::vector<std::pair<int, int>> edges;  // unordered pairs, stored u < v

  Subgraph() = default;
  Subgraph(const WeightedGraph& g, std::vector<std::pair<int, int>> e) : parent(&g), edges(std::move(e)) {
    for (auto& [u, v] : edges) {
      if (u > v) std::swap(u, v);
      require(g.has_edge(u, v), ErrorKind::invalid_input, "subgraph edge missing in parent");
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  }

  Weight total_weight() const {
    Weight s = 0;
    for (auto [u, v] : edges) s += parent->weight(u, v);
    return s;
  }

  std::vector<int> vertices() const {
    std::vector<int> vs;
    for (auto [u, v] : edges) {
      vs.push_back(u);
      vs.push_back(v);
    }
    std::sort(vs.begin(), vs.end());
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
    return vs;
  }

  std::vector<std::vector<int>> adjacency(int n) const {
    std::vector<std::vector<int>> adj(n);
    for (auto [u, v] : edges) {
      adj[u].push_back(v);
      adj[v].push_back(u);
    }
    for (auto& a : adj) std::sort(a.begin(), a.end());
    return adj;
  }
};

/// A walk in the graph; not required to be simple. hops() counts edges with
/// multiplicity.
struct HopPath {
  std::vector<int> vertices;
  Weight length = 0;

  int hops() const { return static_cast<int>(vertices.size()) - 1; }

  bool valid_in(const WeightedGraph& g) const {
    if (vertices.empty()) return false;
    Weight sum = 0;
    for (std::size_t i = 0; i + 1 < vertices.size(); ++i) {
      if (!g.has_edge(vertices[i], vertices[i + 1])) return false;
      sum += g.weight(vertices[i], vertices[i + 1]);
    }
    return sum == length;
  }

  std::vector<std::pair<int, int>> edge_set() const {
    std::vector<std::pair<int, int>> es;
    for (std::size_t i = 0; i + 1 < vertices.size(); ++i) {
      int a = vertices[i], b = vertices[i + 1];
      if (a > b) std::swap(a, b);
      es.emplace_back(a, b);
    }
    std::sort(es.begin(), es.end());
    es.erase(std::unique(es.begin(), es.end()), es.end());
    return es;
  }
};

/// Completes the graph: every missing pair gets weight n^2 * L where L is the
/// current aspect ratio; the aspect ratio becomes n^2 * L. Already-complete
/// graphs are returned unchanged.
inline WeightedGraph complete_closure(const WeightedGraph& g) {
  if (g.is_complete()) return g;
  int n = g.size();
  Weight big = static_cast<Weight>(n) * n * g.aspect_ratio();
  WeightedGraph out(n, 1);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) out.set_edge(u, v, g.has_edge(u, v) ? g.weight(u, v) : big);
  out.set_aspect_ratio(big);
  return out;
}

namespace detail {

// Layered Bellman-Ford table: row j holds the best length over walks with at
// most j hops from the source. rounds is capped at n-1 since positive weights
// make longer walks useless.
inline std::vector<std::vector<Weight>> hop_distance_table(const WeightedGraph& g, int source, int h) {
  int n = g.size();
  int rounds = static_cast<int>(std::min<std::int64_t>(h, n - 1));
  std::vector<std::vector<Weight>> dist(static_cast<std::size_t>(rounds) + 1,
                                        std::vector<Weight>(n, kInfiniteDistance));
  dist[0][source] = 0;
  for (int j = 1; j <= rounds; ++j) {
    dist[j] = dist[j - 1];
    for (int v = 0; v < n; ++v) {
      for (int u = 0; u < n; ++u) {
        if (u == v || dist[j - 1][u] >= kInfiniteDistance) continue;
        Weight w = g.weight(u, v);
        if (w == 0) continue;
        Weight cand = dist[j - 1][u] + w;
        if (cand < dist[j][v]) dist[j][v] = cand;
      }
    }
  }
  return dist;
}

}  // namespace detail

/// d^(h)(source, v) for every v, by h rounds of edge relaxation.
inline std::vector<Weight> hop_distances_from(const WeightedGraph& g, int source, std::int64_t h) {
  require(h >= 1, ErrorKind::invalid_parameter, "hop bound must be >= 1");
  require(g.valid_vertex(source), ErrorKind::invalid_parameter, "vertex out of range");
  auto table = detail::hop_distance_table(g, source, h > g.size() ? g.size() : static_cast<int>(h));
  return table.back();
}

inline Weight hop_distance(const WeightedGraph& g, int u, int v, std::int64_t h) {
  require(g.valid_vertex(v), ErrorKind::invalid_parameter, "vertex out of range");
  return hop_distances_from(g, u, h)[v];
}

/// Witness path realising hop_distance, recovered by backtracking the DP.
inline HopPath hop_shortest_path(const WeightedGraph& g, int u, int v, std::int64_t h) {
  require(h >= 1, ErrorKind::invalid_parameter, "hop bound must be >= 1");
  require(g.valid_vertex(u) && g.valid_vertex(v), ErrorKind::invalid_parameter, "vertex out of range");
  if (u == v) return HopPath{{u}, 0};
  auto table = detail::hop_distance_table(g, u, h > g.size() ? g.size() : static_cast<int>(h));
  Weight best = table.back()[v];
  require(best < kInfiniteDistance, ErrorKind::infeasible_instance, "no path within hop bound");
  // Walk back from (rounds, v): at each step find a predecessor on a shortest walk.
  std::vector<int> rev{v};
  int j = static_cast<int>(table.size()) - 1;
  int cur = v;
  Weight remaining = best;
  while (!(cur == u && remaining == 0)) {
    while (j > 0 && table[j - 1][cur] == remaining) --j;  // shed unused hops
    require(j >= 1, ErrorKind::invalid_input, "hop DP backtrack failed");
    int pred = -1;
    for (int p = 0; p < g.size(); ++p) {
      if (p == cur || !g.has_edge(p, cur)) continue;
      if (table[j - 1][p] < kInfiniteDistance && table[j - 1][p] + g.weight(p, cur) == remaining) {
        pred = p;
        break;
      }
    }
    require(pred >= 0, ErrorKind::invalid_input, "hop DP backtrack failed");
    remaining -= g.weight(pred, cur);
    cur = pred;
    --j;
    rev.push_back(cur);
  }
  std::reverse(rev.begin(), rev.end());
  return HopPath{std::move(rev), best};
}

/// All-pairs unconstrained shortest-path metric d_G (Floyd-Warshall).
inline std::vector<std::vector<Weight>> shortest_path_metric(const WeightedGraph& g) {
  int n = g.size();
  std::vector<std::vector<Weight>> d(n, std::vector<Weight>(n, kInfiniteDistance));
  for (int u = 0; u < n; ++u) {
    d[u][u] = 0;
    for (int v = 0; v < n; ++v)
      if (g.has_edge(u, v)) d[u][v] = g.weight(u, v);
  }
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i) {
      if (d[i][k] >= kInfiniteDistance) continue;
      for (int j = 0; j < n; ++j)
        if (d[k][j] < kInfiniteDistance && d[i][k] + d[k][j] < d[i][j]) d[i][j] = d[i][k] + d[k][j];
    }
  return d;
}

struct TrivialApprox {
  std::vector<std::vector<Weight>> scaled_metric;  // alpha * d_G
  bool guarantee_holds = false;                    // alpha * (beta*h + 1) >= L
  struct Violation {
    int u, v;
    Weight approx_value;  // alpha * d_G(u,v)
    Weight lower_bound;   // d^(beta*h)(u,v)
  };
  std::optional<Violation> violation;  // a pair breaking the sandwich, if any
};

/// Scaled shortest-path metric alpha * d_G as an approximation of d^(h).
/// The sandwich d^(beta*h) <= alpha*d_G <= alpha*d^(h) is guaranteed exactly
/// when alpha*(beta*h + 1) >= L; a violating pair is searched for regardless.
inline TrivialApprox trivial_metric_approx(const WeightedGraph& g, std::int64_t h, std::int64_t alpha,
                                           std::int64_t beta) {
  require(alpha >= 1 && beta >= 1, ErrorKind::invalid_parameter, "alpha and beta must be >= 1");
  require(h >= 1, ErrorKind::invalid_parameter, "hop bound must be >= 1");
  require(g.is_complete(), ErrorKind::invalid_parameter, "trivial approximation expects a complete graph");
  int n = g.size();
  TrivialApprox out;
  out.scaled_metric = shortest_path_metric(g);
  for (auto& row : out.scaled_metric)
    for (auto& x : row) x *= alpha;
  out.guarantee_holds = alpha * (beta * h + 1) >= g.aspect_ratio();
  for (int u = 0; u < n && !out.violation; ++u) {
    auto lower = hop_distances_from(g, u, beta * h);
    for (int v = 0; v < n; ++v) {
      if (out.scaled_metric[u][v] < lower[v]) {
        out.violation = TrivialApprox::Violation{u, v, out.scaled_metric[u][v], lower[v]};
        break;
      }
    }
  }
  return out;
}

/// Hop-count BFS distances inside an edge subset (unit hops).
inline std::vector<int> bfs_hops(const std::vector<std::vector<int>>& adj, int source) {
  std::vector<int> dist(adj.size(), -1);
  std::vector<int> queue{source};
  dist[source] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    int u = queue[head];
    for (int v : adj[u])
      if (dist[v] < 0) {
        dist[v] = dist[u] + 1;
        queue.push_back(v);
      }
  }
  return dist;
}

}  // namespace hopcore
