#pragma once

#include <algorithm>
#include <vector>

#include "hopcore/graph.hpp"

namespace hopcore {

/// Rooted weighted tree on dense node ids; weight[v] is the edge to parent[v].
struct RootedTree {
  int root = -1;
  std::vector<int> parent;     // -1 at root
  std::vector<Weight> weight;  // ignored at root

  int size() const { return static_cast<int>(parent.size()); }
  bool empty() const { return parent.empty(); }

  std::vector<std::vector<int>> children() const {
    std::vector<std::vector<int>> ch(parent.size());
    for (int v = 0; v < size(); ++v)
      if (parent[v] >= 0) ch[parent[v]].push_back(v);
    return ch;
  }

  std::vector<int> depths() const {
    std::vector<int> d(parent.size(), -1);
    if (empty()) return d;
    d[root] = 0;
    // parents may appear after children; iterate until settled
    bool changed = true;
    while (changed) {
      changed = false;
      for (int v = 0; v < size(); ++v)
        if (d[v] < 0 && parent[v] >= 0 && d[parent[v]] >= 0) {
          d[v] = d[parent[v]] + 1;
          changed = true;
        }
    }
    return d;
  }

  bool is_valid() const {
    if (empty()) return true;
    if (root < 0 || root >= size() || parent[root] != -1) return false;
    auto d = depths();
    for (int v = 0; v < size(); ++v)
      if (d[v] < 0) return false;  // disconnected or cyclic
    return true;
  }

  /// Node sequence a .. lca .. b.
  std::vector<int> path_nodes(int a, int b) const {
    auto d = depths();
    std::vector<int> up, down;
    int x = a, y = b;
    while (d[x] > d[y]) {
      up.push_back(x);
      x = parent[x];
    }
    while (d[y] > d[x]) {
      down.push_back(y);
      y = parent[y];
    }
    while (x != y) {
      up.push_back(x);
      down.push_back(y);
      x = parent[x];
      y = parent[y];
    }
    up.push_back(x);
    up.insert(up.end(), down.rbegin(), down.rend());
    return up;
  }

  Weight path_weight(int a, int b) const {
    auto nodes = path_nodes(a, b);
    Weight s = 0;
    for (std::size_t i = 0; i + 1 < nodes.size(); ++i) {
      int u = nodes[i], v = nodes[i + 1];
      s += parent[u] == v ? weight[u] : weight[v];
    }
    return s;
  }

  int path_hops(int a, int b) const { return static_cast<int>(path_nodes(a, b).size()) - 1; }

  int hop_diameter() const {
    if (size() <= 1) return 0;
    auto d = depths();
    // farthest-from-farthest works on trees
    int far = root;
    for (int v = 0; v < size(); ++v)
      if (d[v] > d[far]) far = v;
    int best = 0;
    for (int v = 0; v < size(); ++v) best = std::max(best, path_hops(far, v));
    return best;
  }
};

/// Rooted tree whose nodes carry graph-vertex labels and whose edge weights
/// are powers of two, strictly decreasing down every root-to-leaf path.
struct WellSeparatedTree {
  RootedTree shape;
  std::vector<int> label;  // node -> graph vertex (or copy id)

  int size() const { return shape.size(); }
  bool empty() const { return shape.empty(); }
  int root_label() const { return label[shape.root]; }

  int node_of(int lbl) const {
    for (int v = 0; v < size(); ++v)
      if (label[v] == lbl) return v;
    return -1;
  }

  std::vector<int> labels_sorted() const {
    auto out = label;
    std::sort(out.begin(), out.end());
    return out;
  }

  Weight distance_by_label(int la, int lb) const { return shape.path_weight(node_of(la), node_of(lb)); }

  bool is_well_separated() const {
    for (int v = 0; v < size(); ++v) {
      if (shape.parent[v] < 0) continue;
      Weight w = shape.weight[v];
      if (w < 1 || (w & (w - 1)) != 0) return false;  // power of two
      int p = shape.parent[v];
      if (shape.parent[p] >= 0 && 2 * w > shape.weight[p]) return false;
    }
    return true;
  }
};

}  // namespace hopcore
