#include "sombor/canonical.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <numeric>
#include <stdexcept>
#include <string>

namespace sombor {

namespace {

// Key layout: [order][upper-triangle bits (0,1),(0,2),(1,2),(0,3),...,
// packed MSB-first]. Lexicographic byte order therefore equals column-major
// bit order, the same order the exhaustive search minimizes column by column.
std::vector<std::uint8_t> pack_triangle(const Graph& g) {
  int n = g.order();
  std::vector<std::uint8_t> bytes;
  bytes.push_back(static_cast<std::uint8_t>(n));
  std::uint8_t accumulator = 0;
  int filled = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u) {
      accumulator = static_cast<std::uint8_t>(accumulator << 1);
      if (g.has_edge(u, v)) accumulator |= 1;
      if (++filled == 8) {
        bytes.push_back(accumulator);
        accumulator = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) {
    bytes.push_back(static_cast<std::uint8_t>(accumulator << (8 - filled)));
  }
  return bytes;
}

// ---------------------------------------------------------------------------
// Exhaustive search, orders <= 8. Columns are compared as bytes: in column p
// the bit for smaller row u is more significant, matching the key layout.

struct ExhaustiveSearch {
  const Graph& g;
  int n;
  std::array<std::uint8_t, 8> best{};
  std::array<int, 8> placed{};

  explicit ExhaustiveSearch(const Graph& graph) : g(graph), n(graph.order()) {
    best.fill(0xFF);
  }

  std::uint8_t column_for(int candidate, int position) const {
    std::uint8_t column = 0;
    for (int u = 0; u < position; ++u) {
      column = static_cast<std::uint8_t>(column << 1);
      if (g.has_edge(placed[u], candidate)) column |= 1;
    }
    return column;
  }

  void run(int position, std::uint32_t used) {
    if (position == n) return;
    std::array<std::pair<std::uint8_t, int>, 8> candidates;
    int count = 0;
    for (int x = 0; x < n; ++x) {
      if (used & (1u << x)) continue;
      candidates[count++] = {column_for(x, position), x};
    }
    std::sort(candidates.begin(), candidates.begin() + count);
    for (int i = 0; i < count; ++i) {
      auto [column, x] = candidates[i];
      if (column > best[position]) break;
      if (column < best[position]) {
        // Strict improvement: commit the prefix, reset deeper columns so the
        // descent below re-establishes them.
        best[position] = column;
        for (int p = position + 1; p < n; ++p) best[p] = 0xFF;
      }
      placed[position] = x;
      run(position + 1, used | (1u << x));
    }
  }
};

std::vector<std::uint8_t> exhaustive_key(const Graph& g) {
  int n = g.order();
  ExhaustiveSearch search(g);
  search.run(0, 0);
  std::vector<std::uint8_t> bytes;
  bytes.push_back(static_cast<std::uint8_t>(n));
  std::uint8_t accumulator = 0;
  int filled = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u) {
      accumulator = static_cast<std::uint8_t>(accumulator << 1);
      if ((search.best[v] >> (v - 1 - u)) & 1) accumulator |= 1;
      if (++filled == 8) {
        bytes.push_back(accumulator);
        accumulator = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) {
    bytes.push_back(static_cast<std::uint8_t>(accumulator << (8 - filled)));
  }
  return bytes;
}

// ---------------------------------------------------------------------------
// Rooted tree codes. A code is a balanced-parentheses string; children are
// concatenated in descending code order. Equal codes mean isomorphic rooted
// subtrees, so the preorder labeling below is invariant under sibling ties.

std::string rooted_code(const Graph& g, int v, int parent,
                        std::uint32_t forbidden) {
  std::vector<std::string> child_codes;
  for (int w : g.neighbors(v)) {
    if (w == parent || (forbidden & (1u << w))) continue;
    child_codes.push_back(rooted_code(g, w, v, forbidden));
  }
  std::sort(child_codes.rbegin(), child_codes.rend());
  std::string code = "(";
  for (const auto& child : child_codes) code += child;
  code += ")";
  return code;
}

void preorder_label(const Graph& g, int v, int parent, std::uint32_t forbidden,
                    std::vector<int>& perm, int& next_label) {
  perm[v] = next_label++;
  std::vector<std::pair<std::string, int>> children;
  for (int w : g.neighbors(v)) {
    if (w == parent || (forbidden & (1u << w))) continue;
    children.emplace_back(rooted_code(g, w, v, forbidden), w);
  }
  std::sort(children.rbegin(), children.rend());
  for (auto& [code, w] : children) {
    preorder_label(g, w, v, forbidden, perm, next_label);
  }
}

std::vector<int> tree_centers(const Graph& g) {
  int n = g.order();
  std::vector<int> degree(n);
  for (int v = 0; v < n; ++v) degree[v] = g.degree(v);
  std::vector<int> layer;
  std::uint32_t removed = 0;
  int remaining = n;
  for (int v = 0; v < n; ++v) {
    if (degree[v] <= 1) layer.push_back(v);
  }
  while (remaining > 2) {
    std::vector<int> next;
    for (int v : layer) {
      removed |= 1u << v;
      --remaining;
    }
    for (int v : layer) {
      for (int w : g.neighbors(v)) {
        if (removed & (1u << w)) continue;
        if (--degree[w] == 1) next.push_back(w);
      }
    }
    layer = std::move(next);
  }
  std::vector<int> centers;
  for (int v = 0; v < n; ++v) {
    if (!(removed & (1u << v))) centers.push_back(v);
  }
  return centers;
}

std::vector<std::uint8_t> tree_key(const Graph& g) {
  auto centers = tree_centers(g);
  std::vector<int> perm(g.order(), -1);
  int next_label = 0;
  if (centers.size() == 1) {
    preorder_label(g, centers[0], -1, 0, perm, next_label);
  } else {
    int a = centers[0];
    int b = centers[1];
    if (rooted_code(g, b, a, 0) < rooted_code(g, a, b, 0)) std::swap(a, b);
    preorder_label(g, a, b, 0, perm, next_label);
    preorder_label(g, b, a, 0, perm, next_label);
  }
  return pack_triangle(g.relabeled(perm));
}

// ---------------------------------------------------------------------------
// Unicyclic graphs: strip leaves down to the unique cycle, then take the
// byte-minimal labeling over all rotations and reflections of the cycle,
// with each cycle vertex carrying its hanging tree in preorder.

std::vector<int> cycle_order(const Graph& g) {
  int n = g.order();
  std::vector<int> degree(n);
  for (int v = 0; v < n; ++v) degree[v] = g.degree(v);
  std::vector<int> stack;
  std::uint32_t removed = 0;
  for (int v = 0; v < n; ++v) {
    if (degree[v] == 1) stack.push_back(v);
  }
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    removed |= 1u << v;
    for (int w : g.neighbors(v)) {
      if (removed & (1u << w)) continue;
      if (--degree[w] == 1) stack.push_back(w);
    }
  }
  int start = std::countr_zero(static_cast<std::uint32_t>(~removed));
  std::vector<int> order{start};
  int previous = -1;
  int current = start;
  for (;;) {
    int next = -1;
    for (int w : g.neighbors(current)) {
      if ((removed & (1u << w)) || w == previous) continue;
      next = w;
      break;
    }
    if (next == start) break;
    order.push_back(next);
    previous = current;
    current = next;
  }
  return order;
}

std::vector<std::uint8_t> unicyclic_key(const Graph& g) {
  auto cycle = cycle_order(g);
  int k = static_cast<int>(cycle.size());
  std::uint32_t cycle_mask = 0;
  for (int v : cycle) cycle_mask |= 1u << v;

  std::vector<std::uint8_t> best;
  for (int start = 0; start < k; ++start) {
    for (int direction : {1, -1}) {
      std::vector<int> perm(g.order(), -1);
      int next_label = 0;
      for (int step = 0; step < k; ++step) {
        int v = cycle[((start + step * direction) % k + k) % k];
        preorder_label(g, v, -1, cycle_mask & ~(1u << v), perm, next_label);
      }
      auto bytes = pack_triangle(g.relabeled(perm));
      if (best.empty() || bytes < best) best = std::move(bytes);
    }
  }
  return best;
}

// ---------------------------------------------------------------------------
// General case: equitable degree-partition refinement, individualization of
// the first non-singleton cell, minimum over discrete leaves. Automorphisms
// discovered from key-equal leaves prune sibling branches orbit-wise.

struct RefineSearch {
  const Graph& g;
  int n;
  std::vector<std::vector<int>> generators;
  std::vector<int> base;
  std::vector<std::uint8_t> best_bytes;
  std::vector<int> first_perm;
  std::vector<std::uint8_t> first_bytes;

  explicit RefineSearch(const Graph& graph) : g(graph), n(graph.order()) {}

  using Partition = std::vector<std::vector<int>>;

  void refine(Partition& cells) const {
  restart:
    for (std::size_t w = 0; w < cells.size(); ++w) {
      std::uint32_t w_mask = 0;
      for (int v : cells[w]) w_mask |= 1u << v;
      for (std::size_t x = 0; x < cells.size(); ++x) {
        if (cells[x].size() < 2) continue;
        auto count_in_w = [&](int v) {
          return std::popcount(g.neighbor_mask(v) & w_mask);
        };
        int first_count = count_in_w(cells[x][0]);
        bool uniform = std::all_of(
            cells[x].begin(), cells[x].end(),
            [&](int v) { return count_in_w(v) == first_count; });
        if (uniform) continue;
        std::vector<std::pair<int, int>> keyed;
        for (int v : cells[x]) keyed.emplace_back(count_in_w(v), v);
        std::stable_sort(keyed.begin(), keyed.end(),
                         [](const auto& a, const auto& b) {
                           return a.first < b.first;
                         });
        Partition fragments;
        for (auto [count, v] : keyed) {
          if (fragments.empty() || count_in_w(fragments.back().front()) != count) {
            fragments.push_back({});
          }
          fragments.back().push_back(v);
        }
        cells.erase(cells.begin() + static_cast<std::ptrdiff_t>(x));
        cells.insert(cells.begin() + static_cast<std::ptrdiff_t>(x),
                     fragments.begin(), fragments.end());
        goto restart;
      }
    }
  }

  void record_leaf(const Partition& cells) {
    std::vector<int> perm(n);
    for (int i = 0; i < static_cast<int>(cells.size()); ++i) {
      perm[cells[i][0]] = i;
    }
    auto bytes = pack_triangle(g.relabeled(perm));
    if (first_bytes.empty()) {
      first_bytes = bytes;
      first_perm = perm;
    } else if (bytes == first_bytes) {
      // Two labelings with the same image compose to an automorphism.
      std::vector<int> inverse(n);
      for (int v = 0; v < n; ++v) inverse[perm[v]] = v;
      std::vector<int> automorphism(n);
      for (int v = 0; v < n; ++v) automorphism[v] = inverse[first_perm[v]];
      generators.push_back(std::move(automorphism));
    }
    if (best_bytes.empty() || bytes < best_bytes) best_bytes = std::move(bytes);
  }

  // Orbits of the subgroup generated by automorphisms fixing the current
  // individualization base pointwise.
  std::vector<int> base_fixing_orbits() const {
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int v) {
      while (parent[v] != v) v = parent[v] = parent[parent[v]];
      return v;
    };
    for (const auto& gen : generators) {
      bool fixes_base = std::all_of(base.begin(), base.end(),
                                    [&](int b) { return gen[b] == b; });
      if (!fixes_base) continue;
      for (int v = 0; v < n; ++v) {
        int a = find(v);
        int b = find(gen[v]);
        if (a != b) parent[a] = b;
      }
    }
    std::vector<int> root(n);
    for (int v = 0; v < n; ++v) root[v] = find(v);
    return root;
  }

  void search(Partition cells) {
    refine(cells);
    auto target = std::find_if(cells.begin(), cells.end(), [](const auto& c) {
      return c.size() >= 2;
    });
    if (target == cells.end()) {
      record_leaf(cells);
      return;
    }
    std::size_t target_index = static_cast<std::size_t>(target - cells.begin());
    std::vector<int> tried;
    for (int v : cells[target_index]) {
      auto orbit = base_fixing_orbits();
      bool redundant = std::any_of(tried.begin(), tried.end(), [&](int u) {
        return orbit[u] == orbit[v];
      });
      if (redundant) continue;
      tried.push_back(v);
      Partition child;
      child.reserve(cells.size() + 1);
      for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i == target_index) {
          child.push_back({v});
          std::vector<int> rest;
          for (int u : cells[i]) {
            if (u != v) rest.push_back(u);
          }
          child.push_back(std::move(rest));
        } else {
          child.push_back(cells[i]);
        }
      }
      base.push_back(v);
      search(std::move(child));
      base.pop_back();
    }
  }
};

std::vector<std::uint8_t> refined_key(const Graph& g) {
  int n = g.order();
  std::vector<std::pair<int, int>> by_degree;
  for (int v = 0; v < n; ++v) by_degree.emplace_back(g.degree(v), v);
  std::sort(by_degree.begin(), by_degree.end());
  RefineSearch::Partition initial;
  for (auto [degree, v] : by_degree) {
    if (initial.empty() || g.degree(initial.back().front()) != degree) {
      initial.push_back({});
    }
    initial.back().push_back(v);
  }
  RefineSearch search(g);
  search.search(std::move(initial));
  return search.best_bytes;
}

}  // namespace

std::size_t CanonicalFormHash::operator()(const CanonicalForm& form) const {
  std::uint64_t hash = 1469598103934665603ull;
  for (std::uint8_t byte : form.bytes) {
    hash ^= byte;
    hash *= 1099511628211ull;
  }
  return static_cast<std::size_t>(hash);
}

CanonicalForm canonical_form(const Graph& g) {
  if (g.order() <= 8) return CanonicalForm{exhaustive_key(g)};
  if (is_tree(g)) return CanonicalForm{tree_key(g)};
  if (is_unicyclic(g)) return CanonicalForm{unicyclic_key(g)};
  return CanonicalForm{refined_key(g)};
}

Graph graph_from_canonical(const CanonicalForm& form) {
  if (form.bytes.empty()) {
    throw std::invalid_argument("empty canonical form");
  }
  int n = form.bytes[0];
  std::vector<Edge> edges;
  std::size_t bit_index = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u, ++bit_index) {
      std::size_t byte_index = 1 + bit_index / 8;
      if (byte_index >= form.bytes.size()) {
        throw std::invalid_argument("truncated canonical form");
      }
      if ((form.bytes[byte_index] >> (7 - bit_index % 8)) & 1) {
        edges.emplace_back(u, v);
      }
    }
  }
  return Graph(n, edges);
}

Graph canonical_representative(const Graph& g) {
  return graph_from_canonical(canonical_form(g));
}

bool is_min_labeled(const Graph& g) {
  int n = g.order();
  if (n > 8) {
    throw std::invalid_argument("is_min_labeled requires order <= 8");
  }
  // Identity columns, most significant bit = smallest row index.
  std::array<std::uint8_t, 8> identity{};
  for (int v = 1; v < n; ++v) {
    std::uint8_t column = 0;
    for (int u = 0; u < v; ++u) {
      column = static_cast<std::uint8_t>(column << 1);
      if (g.has_edge(u, v)) column |= 1;
    }
    identity[v] = column;
  }
  std::array<int, 8> placed{};
  // Depth-first search for any placement whose key is strictly smaller.
  auto dfs = [&](auto&& self, int position, std::uint32_t used) -> bool {
    if (position == n) return true;
    std::array<std::pair<std::uint8_t, int>, 8> candidates;
    int count = 0;
    for (int x = 0; x < n; ++x) {
      if (used & (1u << x)) continue;
      std::uint8_t column = 0;
      for (int u = 0; u < position; ++u) {
        column = static_cast<std::uint8_t>(column << 1);
        if (g.has_edge(placed[u], x)) column |= 1;
      }
      candidates[count++] = {column, x};
    }
    std::sort(candidates.begin(), candidates.begin() + count);
    for (int i = 0; i < count; ++i) {
      auto [column, x] = candidates[i];
      if (column < identity[position]) return false;
      if (column > identity[position]) break;
      placed[position] = x;
      if (!self(self, position + 1, used | (1u << x))) return false;
    }
    return true;
  };
  return dfs(dfs, 0, 0);
}

}  // namespace sombor
