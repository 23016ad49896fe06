#pragma once

#include <array>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace sombor {

// Adjacency rows are single 32-bit words, so supported order is capped at 32.
inline constexpr int max_order = 32;

using Edge = std::pair<int, int>;

// Simple undirected graph on vertices {0..n-1}. No self-loops, no parallel
// edges. Immutable after construction; derived graphs are returned by value.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);
  Graph(int n, std::span<const Edge> edges);
  Graph(int n, std::initializer_list<Edge> edges);

  [[nodiscard]] int order() const { return n_; }
  [[nodiscard]] int edge_count() const { return m_; }
  [[nodiscard]] bool has_edge(int u, int v) const;
  [[nodiscard]] int degree(int v) const;
  [[nodiscard]] std::uint32_t neighbor_mask(int v) const;
  [[nodiscard]] std::vector<int> neighbors(int v) const;
  // Lexicographically sorted, each pair with first < second.
  [[nodiscard]] std::vector<Edge> edges() const;

  [[nodiscard]] Graph with_edge(int u, int v) const;
  [[nodiscard]] Graph without_edge(int u, int v) const;
  // Vertex v of this graph becomes vertex perm[v] of the result.
  [[nodiscard]] Graph relabeled(std::span<const int> perm) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  void check_vertex(int v) const;

  int n_ = 0;
  int m_ = 0;
  std::array<std::uint32_t, max_order> adj_{};
};

// Vertex degrees sorted non-increasing, so values()[0] is the maximum degree
// and values()[1] the second maximum counted with multiplicity.
class DegreeSequence {
 public:
  explicit DegreeSequence(std::vector<int> sorted_non_increasing);

  [[nodiscard]] const std::vector<int>& values() const { return values_; }
  [[nodiscard]] int max_degree() const;
  [[nodiscard]] int second_max_degree() const;
  [[nodiscard]] int count_of(int degree) const;

  friend bool operator==(const DegreeSequence&, const DegreeSequence&) = default;

 private:
  std::vector<int> values_;
};

// Counts of edges by unordered endpoint-degree pair {i, j}, i <= j.
class EdgeDegreeDistribution {
 public:
  void add(int i, int j, int count = 1);
  [[nodiscard]] int count(int i, int j) const;
  [[nodiscard]] int total() const;
  [[nodiscard]] const std::map<std::pair<int, int>, int>& counts() const {
    return counts_;
  }

  friend bool operator==(const EdgeDegreeDistribution&,
                         const EdgeDegreeDistribution&) = default;

 private:
  std::map<std::pair<int, int>, int> counts_;
};

[[nodiscard]] DegreeSequence degree_sequence(const Graph& g);
[[nodiscard]] EdgeDegreeDistribution edge_degree_distribution(const Graph& g);

[[nodiscard]] bool is_connected(const Graph& g);
[[nodiscard]] bool is_tree(const Graph& g);
[[nodiscard]] bool is_unicyclic(const Graph& g);

// Throws std::invalid_argument on a disconnected or empty graph.
[[nodiscard]] int diameter(const Graph& g);

// Length of a shortest cycle; nullopt for forests, never 0.
[[nodiscard]] std::optional<int> girth(const Graph& g);

// Maximum matching cardinality (blossom algorithm, correct on odd cycles).
[[nodiscard]] int matching_number(const Graph& g);

// Brute force over edge subsets; oracle for graphs with few edges.
[[nodiscard]] int matching_number_brute_force(const Graph& g);

// Vertices of degree exactly 1, ascending.
[[nodiscard]] std::vector<int> pendent_vertices(const Graph& g);

// Number of vertices of degree >= 3.
[[nodiscard]] int branching_number(const Graph& g);

// Moves every neighbor of u other than v onto v, leaving u pendent on v.
// Requires uv to be a non-pendent edge (both endpoint degrees >= 2); throws
// std::invalid_argument otherwise. Order is preserved; the edge count is
// preserved whenever u and v have no common neighbor.
[[nodiscard]] Graph edge_lifting(const Graph& g, int u, int v);

}  // namespace sombor
