#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "sombor/graph.hpp"

namespace sombor {

enum class GraphClass { tree, unicyclic, connected };

// Constraint template for the graph classes the theorems quantify over.
// max_degree is an upper bound (chemical trees need <= 4); the other fields
// match exactly. A girth constraint never matches a tree.
struct ClassConstraints {
  int n = 0;
  GraphClass kind = GraphClass::tree;
  std::optional<int> diameter;
  std::optional<int> matching_number;
  std::optional<int> pendent_count;
  std::optional<int> branching_count;
  std::optional<int> max_degree;
  std::optional<int> second_max_degree;
  std::optional<int> girth;
};

[[nodiscard]] bool satisfies(const Graph& g, const ClassConstraints& c);

// Calls fn once per isomorphism class of free trees on n vertices, in
// generation order (canonical level-sequence successor, filtered to
// centroid-rooted representatives). 1 <= n <= 18.
void for_each_tree(int n, const std::function<void(const Graph&)>& fn);

// One canonical representative per isomorphism class, sorted by canonical
// form. all_trees: 1 <= n <= 18; all_unicyclic: 3 <= n <= 14 (every tree
// plus every non-edge, deduplicated); all_connected: 1 <= n <= 7 (orders
// beyond 7 are refused, the class count explodes).
[[nodiscard]] std::vector<Graph> all_trees(int n);
[[nodiscard]] std::vector<Graph> all_unicyclic(int n);
[[nodiscard]] std::vector<Graph> all_connected(int n);

// The class selected by c.kind, filtered by the constraints.
[[nodiscard]] std::vector<Graph> graphs_matching(const ClassConstraints& c);

}  // namespace sombor
