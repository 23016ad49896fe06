#pragma once

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "sombor/graph.hpp"

namespace helpers {

inline std::vector<int> random_permutation(int n, std::mt19937& rng) {
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  return perm;
}

inline sombor::Graph relabel_randomly(const sombor::Graph& g,
                                      std::mt19937& rng) {
  return g.relabeled(random_permutation(g.order(), rng));
}

inline sombor::Graph random_graph(int n, double p, std::mt19937& rng) {
  std::bernoulli_distribution flip(p);
  std::vector<sombor::Edge> edges;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u) {
      if (flip(rng)) edges.emplace_back(u, v);
    }
  }
  return sombor::Graph(n, edges);
}

inline sombor::Graph petersen() {
  std::vector<sombor::Edge> edges;
  for (int i = 0; i < 5; ++i) {
    edges.emplace_back(i, (i + 1) % 5);
    edges.emplace_back(i, i + 5);
    edges.emplace_back(5 + i, 5 + (i + 2) % 5);
  }
  return sombor::Graph(10, edges);
}

inline sombor::Graph grid(int rows, int cols) {
  std::vector<sombor::Edge> edges;
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      const int v = r * cols + c;
      if (c + 1 < cols) edges.emplace_back(v, v + 1);
      if (r + 1 < rows) edges.emplace_back(v, v + cols);
    }
  }
  return sombor::Graph(rows * cols, edges);
}

// Labeled tree on n vertices from a degree sequence word over [0, n).
inline sombor::Graph prufer_decode(int n, const std::vector<int>& seq) {
  std::vector<int> degree(n, 1);
  for (int v : seq) degree[v] += 1;
  std::vector<sombor::Edge> edges;
  std::vector<bool> used(n, false);
  for (int s : seq) {
    int leaf = -1;
    for (int v = 0; v < n; ++v) {
      if (degree[v] == 1 && !used[v]) {
        leaf = v;
        break;
      }
    }
    edges.emplace_back(leaf, s);
    used[leaf] = true;
    degree[leaf] -= 1;
    degree[s] -= 1;
  }
  int a = -1;
  for (int v = 0; v < n; ++v) {
    if (degree[v] == 1 && !used[v]) {
      if (a < 0) {
        a = v;
      } else {
        edges.emplace_back(a, v);
      }
    }
  }
  return sombor::Graph(n, edges);
}

// Exhaustive isomorphism test by backtracking over vertex maps; intended
// for orders up to about 10.
inline bool isomorphic_brute_force(const sombor::Graph& a,
                                   const sombor::Graph& b) {
  const int n = a.order();
  if (n != b.order() || a.edge_count() != b.edge_count()) return false;
  std::vector<int> deg_a(n), deg_b(n);
  for (int v = 0; v < n; ++v) {
    deg_a[v] = a.degree(v);
    deg_b[v] = b.degree(v);
  }
  {
    std::vector<int> sa = deg_a, sb = deg_b;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return false;
  }
  std::vector<int> map(n, -1);
  std::vector<bool> taken(n, false);
  auto extend = [&](auto&& self, int v) -> bool {
    if (v == n) return true;
    for (int w = 0; w < n; ++w) {
      if (taken[w] || deg_a[v] != deg_b[w]) continue;
      bool ok = true;
      for (int u = 0; u < v; ++u) {
        if (a.has_edge(u, v) != b.has_edge(map[u], w)) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      map[v] = w;
      taken[w] = true;
      if (self(self, v + 1)) return true;
      map[v] = -1;
      taken[w] = false;
    }
    return false;
  };
  return extend(extend, 0);
}

}  // namespace helpers
