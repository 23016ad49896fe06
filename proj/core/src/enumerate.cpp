#include "sombor/enumerate.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <utility>

#include "sombor/canonical.hpp"

namespace sombor {

namespace {

// Rooted trees as canonical level sequences: s[0] = 0 and s[i] is the depth
// of the i-th vertex in preorder, with sibling subtrees in non-increasing
// lexicographic order. successor() rewrites the sequence in place and
// returns false once the star [0,1,...,1] has been passed
// (Beyer-Hedetniemi iteration, depths kept zero-based).
bool successor(std::vector<int>& s) {
  const int n = static_cast<int>(s.size());
  int p = -1;
  for (int i = n - 1; i >= 0; --i) {
    if (s[i] >= 2) {
      p = i;
      break;
    }
  }
  if (p < 0) return false;
  int q = -1;
  for (int i = p - 1; i >= 0; --i) {
    if (s[i] == s[p] - 1) {
      q = i;
      break;
    }
  }
  for (int i = p; i < n; ++i) s[i] = s[i - (p - q)];
  return true;
}

std::vector<int> parents_of(const std::vector<int>& s) {
  const int n = static_cast<int>(s.size());
  std::vector<int> parent(n, -1);
  for (int i = 1; i < n; ++i) {
    for (int j = i - 1; j >= 0; --j) {
      if (s[j] == s[i] - 1) {
        parent[i] = j;
        break;
      }
    }
  }
  return parent;
}

Graph graph_from_levels(const std::vector<int>& s) {
  const int n = static_cast<int>(s.size());
  const std::vector<int> parent = parents_of(s);
  std::vector<Edge> edges;
  edges.reserve(n > 0 ? n - 1 : 0);
  for (int i = 1; i < n; ++i) edges.emplace_back(parent[i], i);
  return Graph(n, edges);
}

std::vector<int> centroids(const std::vector<std::vector<int>>& adj) {
  const int n = static_cast<int>(adj.size());
  std::vector<int> size(n, 1);
  std::vector<int> order;
  order.reserve(n);
  std::vector<int> parent(n, -1);
  std::vector<int> stack = {0};
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    order.push_back(v);
    for (int w : adj[v]) {
      if (w == parent[v]) continue;
      parent[w] = v;
      stack.push_back(w);
    }
  }
  for (int i = n - 1; i > 0; --i) size[parent[order[i]]] += size[order[i]];
  std::vector<int> result;
  for (int v = 0; v < n; ++v) {
    int heaviest = n - size[v];
    for (int w : adj[v]) {
      if (w != parent[v]) heaviest = std::max(heaviest, size[w]);
    }
    if (2 * heaviest <= n) result.push_back(v);
  }
  return result;
}

// Canonical level sequence of the tree rooted at v: [0] followed by the
// child sequences shifted one level down, in non-increasing lexicographic
// order. This is the same ordering the successor iteration preserves, so a
// generated sequence represents its free tree exactly when it equals the
// canonical sequence at a centroid.
std::vector<int> rooted_canonical_levels(const std::vector<std::vector<int>>& adj,
                                         int v, int parent) {
  std::vector<std::vector<int>> child_seqs;
  for (int w : adj[v]) {
    if (w == parent) continue;
    child_seqs.push_back(rooted_canonical_levels(adj, w, v));
  }
  std::sort(child_seqs.begin(), child_seqs.end(), std::greater<>());
  std::vector<int> seq = {0};
  for (const auto& child : child_seqs) {
    for (int level : child) seq.push_back(level + 1);
  }
  return seq;
}

bool is_centroid_rooted(const std::vector<int>& s) {
  const int n = static_cast<int>(s.size());
  if (n <= 2) return true;
  const std::vector<int> parent = parents_of(s);
  std::vector<std::vector<int>> adj(n);
  for (int i = 1; i < n; ++i) {
    adj[parent[i]].push_back(i);
    adj[i].push_back(parent[i]);
  }
  const std::vector<int> centers = centroids(adj);
  std::vector<int> best;
  for (int c : centers) {
    std::vector<int> candidate = rooted_canonical_levels(adj, c, -1);
    if (best.empty() || candidate > best) best = std::move(candidate);
  }
  return s == best;
}

void check_order(int n, int low, int high, const char* what) {
  if (n < low || n > high) {
    throw std::out_of_range(std::string(what) + " supports " +
                            std::to_string(low) + " <= n <= " +
                            std::to_string(high) + ", got " +
                            std::to_string(n));
  }
}

std::vector<Graph> sorted_by_canonical_form(
    std::vector<std::pair<CanonicalForm, Graph>> keyed) {
  std::sort(keyed.begin(), keyed.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<Graph> result;
  result.reserve(keyed.size());
  for (auto& [key, g] : keyed) result.push_back(std::move(g));
  return result;
}

}  // namespace

bool satisfies(const Graph& g, const ClassConstraints& c) {
  if (g.order() != c.n) return false;
  if (c.diameter && diameter(g) != *c.diameter) return false;
  if (c.matching_number && matching_number(g) != *c.matching_number) return false;
  if (c.pendent_count &&
      static_cast<int>(pendent_vertices(g).size()) != *c.pendent_count) {
    return false;
  }
  if (c.branching_count && branching_number(g) != *c.branching_count) return false;
  if (c.max_degree || c.second_max_degree) {
    const DegreeSequence seq = degree_sequence(g);
    if (c.max_degree && seq.max_degree() > *c.max_degree) return false;
    if (c.second_max_degree && seq.second_max_degree() != *c.second_max_degree) {
      return false;
    }
  }
  if (c.girth && girth(g) != *c.girth) return false;
  return true;
}

void for_each_tree(int n, const std::function<void(const Graph&)>& fn) {
  check_order(n, 1, 18, "for_each_tree");
  if (n == 1) {
    fn(Graph(1));
    return;
  }
  std::vector<int> s(n);
  for (int i = 0; i < n; ++i) s[i] = i;
  do {
    if (is_centroid_rooted(s)) fn(graph_from_levels(s));
  } while (successor(s));
}

std::vector<Graph> all_trees(int n) {
  check_order(n, 1, 18, "all_trees");
  std::vector<std::pair<CanonicalForm, Graph>> keyed;
  for_each_tree(n, [&](const Graph& g) {
    CanonicalForm key = canonical_form(g);
    Graph representative = graph_from_canonical(key);
    keyed.emplace_back(std::move(key), std::move(representative));
  });
  return sorted_by_canonical_form(std::move(keyed));
}

std::vector<Graph> all_unicyclic(int n) {
  check_order(n, 3, 14, "all_unicyclic");
  std::unordered_set<CanonicalForm, CanonicalFormHash> seen;
  std::vector<std::pair<CanonicalForm, Graph>> keyed;
  for_each_tree(n, [&](const Graph& tree) {
    for (int v = 1; v < n; ++v) {
      for (int u = 0; u < v; ++u) {
        if (tree.has_edge(u, v)) continue;
        CanonicalForm key = canonical_form(tree.with_edge(u, v));
        if (!seen.insert(key).second) continue;
        Graph representative = graph_from_canonical(key);
        keyed.emplace_back(std::move(key), std::move(representative));
      }
    }
  });
  return sorted_by_canonical_form(std::move(keyed));
}

std::vector<Graph> all_connected(int n) {
  check_order(n, 1, 7, "all_connected");
  const int pair_count = n * (n - 1) / 2;
  std::vector<Edge> pairs;
  pairs.reserve(pair_count);
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u) pairs.emplace_back(u, v);
  }
  std::vector<Edge> edges;
  std::vector<std::pair<CanonicalForm, Graph>> keyed;
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << pair_count); ++mask) {
    edges.clear();
    for (int bit = 0; bit < pair_count; ++bit) {
      if (mask >> bit & 1) edges.push_back(pairs[bit]);
    }
    Graph g(n, edges);
    if (!is_connected(g) || !is_min_labeled(g)) continue;
    keyed.emplace_back(canonical_form(g), std::move(g));
  }
  return sorted_by_canonical_form(std::move(keyed));
}

std::vector<Graph> graphs_matching(const ClassConstraints& c) {
  std::vector<Graph> pool;
  switch (c.kind) {
    case GraphClass::tree:
      pool = all_trees(c.n);
      break;
    case GraphClass::unicyclic:
      pool = all_unicyclic(c.n);
      break;
    case GraphClass::connected:
      pool = all_connected(c.n);
      break;
  }
  std::vector<Graph> result;
  for (Graph& g : pool) {
    if (satisfies(g, c)) result.push_back(std::move(g));
  }
  return result;
}

}  // namespace sombor
