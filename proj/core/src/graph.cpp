#include "sombor/graph.hpp"

#include <algorithm>
#include <bit>
#include <queue>
#include <stdexcept>
#include <string>

namespace sombor {

Graph::Graph(int n) : n_(n) {
  if (n < 0 || n > max_order) {
    throw std::invalid_argument("graph order out of range: " +
                                std::to_string(n));
  }
}

Graph::Graph(int n, std::span<const Edge> edges) : Graph(n) {
  for (auto [u, v] : edges) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) {
      throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
    }
    if (has_edge(u, v)) {
      throw std::invalid_argument("parallel edge " + std::to_string(u) + "-" +
                                  std::to_string(v));
    }
    adj_[u] |= 1u << v;
    adj_[v] |= 1u << u;
    ++m_;
  }
}

Graph::Graph(int n, std::initializer_list<Edge> edges)
    : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

void Graph::check_vertex(int v) const {
  if (v < 0 || v >= n_) {
    throw std::invalid_argument("vertex out of range: " + std::to_string(v));
  }
}

bool Graph::has_edge(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  return (adj_[u] >> v) & 1u;
}

int Graph::degree(int v) const {
  check_vertex(v);
  return std::popcount(adj_[v]);
}

std::uint32_t Graph::neighbor_mask(int v) const {
  check_vertex(v);
  return adj_[v];
}

std::vector<int> Graph::neighbors(int v) const {
  std::uint32_t mask = neighbor_mask(v);
  std::vector<int> out;
  out.reserve(std::popcount(mask));
  while (mask) {
    int w = std::countr_zero(mask);
    out.push_back(w);
    mask &= mask - 1;
  }
  return out;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(m_);
  for (int u = 0; u < n_; ++u) {
    std::uint32_t mask = adj_[u] >> (u + 1) << (u + 1);
    while (mask) {
      int v = std::countr_zero(mask);
      out.emplace_back(u, v);
      mask &= mask - 1;
    }
  }
  return out;
}

Graph Graph::with_edge(int u, int v) const {
  if (has_edge(u, v) || u == v) {
    throw std::invalid_argument("with_edge requires a missing edge");
  }
  Graph g = *this;
  g.adj_[u] |= 1u << v;
  g.adj_[v] |= 1u << u;
  ++g.m_;
  return g;
}

Graph Graph::without_edge(int u, int v) const {
  if (!has_edge(u, v)) {
    throw std::invalid_argument("without_edge requires an existing edge");
  }
  Graph g = *this;
  g.adj_[u] &= ~(1u << v);
  g.adj_[v] &= ~(1u << u);
  --g.m_;
  return g;
}

Graph Graph::relabeled(std::span<const int> perm) const {
  if (static_cast<int>(perm.size()) != n_) {
    throw std::invalid_argument("permutation length must equal order");
  }
  std::uint32_t seen = 0;
  for (int v : perm) {
    check_vertex(v);
    seen |= 1u << v;
  }
  if (std::popcount(seen) != n_) {
    throw std::invalid_argument("permutation is not a bijection");
  }
  Graph g(n_);
  for (auto [u, v] : edges()) {
    g.adj_[perm[u]] |= 1u << perm[v];
    g.adj_[perm[v]] |= 1u << perm[u];
  }
  g.m_ = m_;
  return g;
}

DegreeSequence::DegreeSequence(std::vector<int> sorted_non_increasing)
    : values_(std::move(sorted_non_increasing)) {
  if (!std::is_sorted(values_.rbegin(), values_.rend())) {
    throw std::invalid_argument("degree sequence must be non-increasing");
  }
}

int DegreeSequence::max_degree() const {
  return values_.empty() ? 0 : values_.front();
}

int DegreeSequence::second_max_degree() const {
  return values_.size() < 2 ? 0 : values_[1];
}

int DegreeSequence::count_of(int degree) const {
  return static_cast<int>(std::count(values_.begin(), values_.end(), degree));
}

void EdgeDegreeDistribution::add(int i, int j, int count) {
  if (i > j) std::swap(i, j);
  counts_[{i, j}] += count;
  if (counts_[{i, j}] == 0) counts_.erase({i, j});
}

int EdgeDegreeDistribution::count(int i, int j) const {
  if (i > j) std::swap(i, j);
  auto it = counts_.find({i, j});
  return it == counts_.end() ? 0 : it->second;
}

int EdgeDegreeDistribution::total() const {
  int sum = 0;
  for (const auto& [pair, count] : counts_) sum += count;
  return sum;
}

DegreeSequence degree_sequence(const Graph& g) {
  std::vector<int> degrees(g.order());
  for (int v = 0; v < g.order(); ++v) degrees[v] = g.degree(v);
  std::sort(degrees.rbegin(), degrees.rend());
  return DegreeSequence(std::move(degrees));
}

EdgeDegreeDistribution edge_degree_distribution(const Graph& g) {
  EdgeDegreeDistribution dist;
  for (auto [u, v] : g.edges()) dist.add(g.degree(u), g.degree(v));
  return dist;
}

namespace {

// Reaches every vertex connected to start using word-parallel frontier
// expansion; returns the visited mask.
std::uint32_t component_mask(const Graph& g, int start) {
  std::uint32_t visited = 1u << start;
  std::uint32_t frontier = visited;
  while (frontier) {
    std::uint32_t next = 0;
    while (frontier) {
      int v = std::countr_zero(frontier);
      frontier &= frontier - 1;
      next |= g.neighbor_mask(v);
    }
    frontier = next & ~visited;
    visited |= next;
  }
  return visited;
}

std::uint32_t full_mask(int n) {
  return n == 32 ? ~0u : (1u << n) - 1;
}

}  // namespace

bool is_connected(const Graph& g) {
  if (g.order() == 0) return false;
  return component_mask(g, 0) == full_mask(g.order());
}

bool is_tree(const Graph& g) {
  return g.order() >= 1 && g.edge_count() == g.order() - 1 && is_connected(g);
}

bool is_unicyclic(const Graph& g) {
  return g.order() >= 3 && g.edge_count() == g.order() && is_connected(g);
}

namespace {

// Distances from start to all vertices, -1 if unreachable.
std::array<int, max_order> bfs_distances(const Graph& g, int start) {
  std::array<int, max_order> dist;
  dist.fill(-1);
  dist[start] = 0;
  std::uint32_t visited = 1u << start;
  std::uint32_t frontier = visited;
  int level = 0;
  while (frontier) {
    ++level;
    std::uint32_t next = 0;
    while (frontier) {
      int v = std::countr_zero(frontier);
      frontier &= frontier - 1;
      next |= g.neighbor_mask(v);
    }
    next &= ~visited;
    visited |= next;
    for (std::uint32_t m = next; m;) {
      int v = std::countr_zero(m);
      m &= m - 1;
      dist[v] = level;
    }
    frontier = next;
  }
  return dist;
}

}  // namespace

int diameter(const Graph& g) {
  if (!is_connected(g)) {
    throw std::invalid_argument("diameter is undefined on disconnected graphs");
  }
  int best = 0;
  for (int v = 0; v < g.order(); ++v) {
    auto dist = bfs_distances(g, v);
    for (int u = 0; u < g.order(); ++u) best = std::max(best, dist[u]);
  }
  return best;
}

std::optional<int> girth(const Graph& g) {
  // Shortest cycle through root, over all roots: BFS where revisiting an
  // already-seen vertex (other than the parent) closes a cycle.
  int best = -1;
  for (int root = 0; root < g.order(); ++root) {
    std::array<int, max_order> dist;
    std::array<int, max_order> parent;
    dist.fill(-1);
    parent.fill(-1);
    dist[root] = 0;
    std::queue<int> queue;
    queue.push(root);
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop();
      for (int w : g.neighbors(v)) {
        if (w == parent[v]) continue;
        if (dist[w] < 0) {
          dist[w] = dist[v] + 1;
          parent[w] = v;
          queue.push(w);
        } else {
          int len = dist[v] + dist[w] + 1;
          if (best < 0 || len < best) best = len;
        }
      }
    }
  }
  if (best < 0) return std::nullopt;
  return best;
}

namespace {

// Blossom algorithm state for one augmenting-path search.
struct BlossomSearch {
  const Graph& g;
  std::array<int, max_order>& match;
  std::array<int, max_order> parent;
  std::array<int, max_order> base;
  std::array<bool, max_order> used;
  std::array<bool, max_order> blossom;

  explicit BlossomSearch(const Graph& graph, std::array<int, max_order>& m)
      : g(graph), match(m) {}

  int lowest_common_ancestor(int a, int b) {
    std::array<bool, max_order> visited{};
    for (;;) {
      a = base[a];
      visited[a] = true;
      if (match[a] < 0) break;
      a = parent[match[a]];
    }
    for (;;) {
      b = base[b];
      if (visited[b]) return b;
      b = parent[match[b]];
    }
  }

  void mark_path(int v, int b, int child) {
    while (base[v] != b) {
      blossom[base[v]] = true;
      blossom[base[match[v]]] = true;
      parent[v] = child;
      child = match[v];
      v = parent[match[v]];
    }
  }

  // Returns an unmatched vertex reached by an alternating path from root,
  // or -1 when none exists.
  int find_augmenting_path(int root) {
    used.fill(false);
    parent.fill(-1);
    for (int v = 0; v < g.order(); ++v) base[v] = v;
    used[root] = true;
    std::queue<int> queue;
    queue.push(root);
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop();
      for (int to : g.neighbors(v)) {
        if (base[v] == base[to] || match[v] == to) continue;
        if (to == root || (match[to] >= 0 && parent[match[to]] >= 0)) {
          int b = lowest_common_ancestor(v, to);
          blossom.fill(false);
          mark_path(v, b, to);
          mark_path(to, b, v);
          for (int u = 0; u < g.order(); ++u) {
            if (blossom[base[u]]) {
              base[u] = b;
              if (!used[u]) {
                used[u] = true;
                queue.push(u);
              }
            }
          }
        } else if (parent[to] < 0) {
          parent[to] = v;
          if (match[to] < 0) return to;
          used[match[to]] = true;
          queue.push(match[to]);
        }
      }
    }
    return -1;
  }
};

}  // namespace

int matching_number(const Graph& g) {
  std::array<int, max_order> match;
  match.fill(-1);
  int size = 0;
  for (int root = 0; root < g.order(); ++root) {
    if (match[root] >= 0) continue;
    BlossomSearch search(g, match);
    int v = search.find_augmenting_path(root);
    if (v < 0) continue;
    ++size;
    while (v >= 0) {
      int previous = search.parent[v];
      int next = match[previous];
      match[v] = previous;
      match[previous] = v;
      v = next;
    }
  }
  return size;
}

namespace {

int matching_brute(const std::vector<Edge>& edges, std::size_t index,
                   std::uint32_t covered) {
  if (index == edges.size()) return 0;
  int best = matching_brute(edges, index + 1, covered);
  auto [u, v] = edges[index];
  std::uint32_t uv = (1u << u) | (1u << v);
  if (!(covered & uv)) {
    best = std::max(best, 1 + matching_brute(edges, index + 1, covered | uv));
  }
  return best;
}

}  // namespace

int matching_number_brute_force(const Graph& g) {
  auto edge_list = g.edges();
  return matching_brute(edge_list, 0, 0);
}

std::vector<int> pendent_vertices(const Graph& g) {
  std::vector<int> out;
  for (int v = 0; v < g.order(); ++v) {
    if (g.degree(v) == 1) out.push_back(v);
  }
  return out;
}

int branching_number(const Graph& g) {
  int count = 0;
  for (int v = 0; v < g.order(); ++v) {
    if (g.degree(v) >= 3) ++count;
  }
  return count;
}

Graph edge_lifting(const Graph& g, int u, int v) {
  if (!g.has_edge(u, v)) {
    throw std::invalid_argument("edge_lifting requires an edge uv");
  }
  if (g.degree(u) < 2 || g.degree(v) < 2) {
    throw std::invalid_argument("edge_lifting requires a non-pendent edge");
  }
  Graph lifted = g;
  for (int w : g.neighbors(u)) {
    if (w == v) continue;
    lifted = lifted.without_edge(u, w);
    if (!lifted.has_edge(v, w)) lifted = lifted.with_edge(v, w);
  }
  return lifted;
}

}  // namespace sombor
