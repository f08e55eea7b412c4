#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <vector>

#include "hopcore/graph.hpp"
#include "hopcore/rational.hpp"
#include "hopcore/rng.hpp"

namespace hopcore {

/// Finite metric with exact rational distances sharing one denominator.
struct RationalMetric {
  int n = 0;
  std::int64_t den = 1;
  std::vector<std::int64_t> num;  // n*n numerators; kInfiniteDistance = unreachable

  std::int64_t numerator(int u, int v) const { return num[static_cast<std::size_t>(u) * n + v]; }
  Rational at(int u, int v) const {
    std::int64_t x = numerator(u, v);
    return x >= kInfiniteDistance ? Rational::infinity() : Rational(x, den);
  }

  bool leq(int u, int v, const Rational& r) const {
    std::int64_t x = numerator(u, v);
    if (x >= kInfiniteDistance) return false;
    if (r.is_infinite()) return true;
    return static_cast<__int128>(x) * r.den <= static_cast<__int128>(r.num) * den;
  }

  // Symmetric, zero diagonal, triangle inequality.
  bool is_metric() const {
    for (int u = 0; u < n; ++u) {
      if (numerator(u, u) != 0) return false;
      for (int v = u + 1; v < n; ++v)
        if (numerator(u, v) != numerator(v, u) || numerator(u, v) == 0) return false;
    }
    for (int k = 0; k < n; ++k)
      for (int i = 0; i < n; ++i) {
        std::int64_t dik = numerator(i, k);
        if (dik >= kInfiniteDistance) continue;
        for (int j = 0; j < n; ++j) {
          std::int64_t dkj = numerator(k, j);
          if (dkj < kInfiniteDistance && numerator(i, j) > dik + dkj) return false;
        }
      }
    return true;
  }
};

/// Edge weights w'(e) = 1/h + w(e)/b, kept exact: with h = hn/hd and
/// b = bn/bd every edge weight is (hd*bn + w*bd*hn) / (hn*bn).
struct MixtureMetric {
  int n = 0;
  Rational hop_scale;
  Rational weight_scale;
  std::int64_t den = 1;                // hn * bn, shared by all edge weights
  std::vector<std::int64_t> edge_num;  // n*n; 0 where no edge

  Rational weight(int u, int v) const {
    std::int64_t x = edge_num[static_cast<std::size_t>(u) * n + v];
    require(x > 0, ErrorKind::invalid_parameter, "mixture weight of a non-edge");
    return Rational(x, den);
  }

  bool has_edge(int u, int v) const { return edge_num[static_cast<std::size_t>(u) * n + v] > 0; }

  /// Shortest-path closure d' of the mixture weights.
  RationalMetric distances() const {
    RationalMetric m;
    m.n = n;
    m.den = den;
    m.num.assign(static_cast<std::size_t>(n) * n, kInfiniteDistance);
    std::vector<std::int64_t> dist(n);
    std::vector<char> done(n);
    for (int s = 0; s < n; ++s) {
      std::fill(dist.begin(), dist.end(), kInfiniteDistance);
      std::fill(done.begin(), done.end(), 0);
      dist[s] = 0;
      for (int iter = 0; iter < n; ++iter) {
        int best = -1;
        for (int v = 0; v < n; ++v)
          if (!done[v] && dist[v] < kInfiniteDistance && (best < 0 || dist[v] < dist[best])) best = v;
        if (best < 0) break;
        done[best] = 1;
        for (int v = 0; v < n; ++v) {
          std::int64_t w = edge_num[static_cast<std::size_t>(best) * n + v];
          if (w > 0 && !done[v] && dist[best] + w < dist[v]) dist[v] = dist[best] + w;
        }
      }
      for (int v = 0; v < n; ++v) m.num[static_cast<std::size_t>(s) * n + v] = dist[v];
    }
    return m;
  }
};

inline MixtureMetric mixture_weights(const WeightedGraph& g, const Rational& h, const Rational& b) {
  require(!h.is_infinite() && h.num > 0, ErrorKind::invalid_parameter, "hop scale must be positive");
  require(!b.is_infinite() && b.num > 0, ErrorKind::invalid_parameter, "weight scale must be positive");
  MixtureMetric m;
  m.n = g.size();
  m.hop_scale = h;
  m.weight_scale = b;
  __int128 den_wide = static_cast<__int128>(h.num) * b.num;
  require(den_wide < (static_cast<__int128>(1) << 62), ErrorKind::invalid_parameter, "mixture scale overflow");
  m.den = static_cast<std::int64_t>(den_wide);
  m.edge_num.assign(static_cast<std::size_t>(m.n) * m.n, 0);
  for (int u = 0; u < m.n; ++u)
    for (int v = 0; v < m.n; ++v) {
      if (u == v || !g.has_edge(u, v)) continue;
      __int128 x = static_cast<__int128>(h.den) * b.num +
                   static_cast<__int128>(g.weight(u, v)) * b.den * h.num;
      require(x * m.n < (static_cast<__int128>(kInfiniteDistance)), ErrorKind::invalid_parameter,
              "mixture weight overflow");
      m.edge_num[static_cast<std::size_t>(u) * m.n + v] = static_cast<std::int64_t>(x);
    }
  return m;
}

struct DecompositionParams {
  double c_pad = 4.0;           // rho_pad = c_pad * ln n
  double gamma = 0.1;           // per-level exclusion probability
  std::optional<double> delta;  // override for the 2*rho_pad scale of the lemma

  double rho_pad(int n) const { return c_pad * std::max(1.0, std::log(static_cast<double>(n))); }
  double effective_delta(int n) const { return delta ? *delta : 2.0 * rho_pad(n); }

  void validate() const {
    require(c_pad > 0, ErrorKind::invalid_parameter, "c_pad must be positive");
    require(gamma > 0 && gamma < 1, ErrorKind::invalid_parameter, "gamma must be in (0,1)");
    require(!delta || *delta > 0, ErrorKind::invalid_parameter, "delta must be positive");
  }
};

struct PartialVertexPartition {
  std::vector<std::vector<int>> parts;  // disjoint, non-empty, sorted
  std::vector<int> excluded;            // sorted

  bool is_valid(int n) const {
    std::vector<int> seen(n, 0);
    for (const auto& part : parts) {
      if (part.empty()) return false;
      for (int v : part) {
        if (v < 0 || v >= n || seen[v]) return false;
        seen[v] = 1;
      }
    }
    for (int v : excluded) {
      if (v < 0 || v >= n || seen[v]) return false;
      seen[v] = 1;
    }
    for (int v = 0; v < n; ++v)
      if (!seen[v]) return false;
    return true;
  }

  int part_of(int v) const {  // -1 when excluded
    for (std::size_t i = 0; i < parts.size(); ++i)
      for (int u : parts[i])
        if (u == v) return static_cast<int>(i);
    return -1;
  }
};

/// Truncated-exponential ball carving: random vertex order, each unassigned
/// center claims the unassigned vertices within radius min(Exp(lambda), delta/2)
/// where lambda = 2 ln(n) / delta. Every part has metric diameter <= delta.
/// Radii are rounded down to dyadic rationals so membership tests are exact.
inline std::vector<std::vector<int>> padded_decomposition(const RationalMetric& metric, const Rational& delta,
                                                          Rng& rng, bool validate = true) {
  require(!delta.is_infinite() && delta.num > 0, ErrorKind::invalid_parameter, "delta must be positive");
  if (validate) require(metric.is_metric(), ErrorKind::invalid_metric, "input violates the triangle inequality");
  int n = metric.n;
  Rational cap = delta / Rational(2);
  double lambda = 2.0 * std::max(1.0, std::log(static_cast<double>(n))) / delta.to_double();
  std::vector<int> assignment(n, -1);
  std::vector<std::vector<int>> parts;
  for (int center : rng.permutation(n)) {
    if (assignment[center] >= 0) continue;
    Rational radius = dyadic_floor(rng.exponential(lambda));
    if (cap < radius) radius = cap;
    std::vector<int> part;
    for (int v = 0; v < n; ++v)
      if (assignment[v] < 0 && metric.leq(center, v, radius)) {
        assignment[v] = static_cast<int>(parts.size());
        part.push_back(v);
      }
    parts.push_back(std::move(part));
  }
  return parts;
}

/// Lemma-style decomposition: carve the mixture metric of (h, b) at unit scale,
/// then drop every vertex whose d'-ball of radius 2*gamma/delta is broken.
/// Guarantees per draw, with rho = c_pad ln n and delta = 2*rho by default:
///   (1) d^(h)(u,v) <= b inside every part;
///   (2) d^(h*gamma/delta)(u,v) > b*gamma/delta across parts.
inline PartialVertexPartition hop_constrained_decomposition(const WeightedGraph& g, const Rational& h,
                                                            const Rational& b, double gamma, Rng& rng,
                                                            const DecompositionParams& params = {}) {
  require(gamma > 0 && gamma < 1, ErrorKind::invalid_parameter, "gamma must be in (0,1)");
  params.validate();
  int n = g.size();
  MixtureMetric mixture = mixture_weights(g, h, b);
  RationalMetric dist = mixture.distances();
  std::vector<std::vector<int>> carved = padded_decomposition(dist, Rational(1), rng, /*validate=*/false);

  std::vector<int> part_of(n, -1);
  for (std::size_t i = 0; i < carved.size(); ++i)
    for (int v : carved[i]) part_of[v] = static_cast<int>(i);

  Rational removal_radius = dyadic_ceil(2.0 * gamma / params.effective_delta(n));
  PartialVertexPartition out;
  out.parts.assign(carved.size(), {});
  for (int v = 0; v < n; ++v) {
    bool broken = false;
    for (int u = 0; u < n && !broken; ++u)
      if (part_of[u] != part_of[v] && dist.leq(v, u, removal_radius)) broken = true;
    if (broken)
      out.excluded.push_back(v);
    else
      out.parts[part_of[v]].push_back(v);
  }
  out.parts.erase(std::remove_if(out.parts.begin(), out.parts.end(),
                                 [](const std::vector<int>& p) { return p.empty(); }),
                  out.parts.end());
  return out;
}

}  // namespace hopcore
