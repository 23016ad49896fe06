#include "sombor/families.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <stdexcept>
#include <string>

#include "sombor/invariants.hpp"

namespace sombor {

namespace {

void require(bool condition, const std::string& message) {
  if (!condition) throw std::invalid_argument(message);
}

void self_check(bool condition, const std::string& family,
                const std::string& property) {
  if (!condition) {
    throw std::logic_error("construction self-check failed for " + family +
                           ": " + property);
  }
}

std::int64_t cube(std::int64_t x) { return x * x * x; }

// Attaches a path of `length` new vertices to `root`, using `next` as the
// first free label. Returns the label after the path.
int attach_path(std::vector<Edge>& edges, int root, int length, int next) {
  int previous = root;
  for (int step = 0; step < length; ++step) {
    edges.emplace_back(previous, next);
    previous = next++;
  }
  return next;
}

}  // namespace

Graph make_path(int n) {
  require(n >= 1 && n <= max_order, "path order out of range");
  std::vector<Edge> edges;
  for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  return Graph(n, edges);
}

Graph make_star(int n) {
  require(n >= 1 && n <= max_order, "star order out of range");
  std::vector<Edge> edges;
  for (int v = 1; v < n; ++v) edges.emplace_back(0, v);
  return Graph(n, edges);
}

Graph make_cycle(int n) {
  require(n >= 3 && n <= max_order, "cycle order out of range");
  std::vector<Edge> edges;
  for (int v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
  return Graph(n, edges);
}

Graph make_complete(int n) {
  require(n >= 0 && n <= max_order, "complete graph order out of range");
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  }
  return Graph(n, edges);
}

Graph make_star_subdivided(int n) {
  require(n >= 4, "subdivided star needs order >= 4");
  return make_M(n, 2);
}

Graph make_T(int n, int d, int i) {
  require(n >= 3 && n <= max_order, "T family order out of range");
  require(2 <= d && d <= n - 1, "T family needs 2 <= d <= n-1");
  require(1 <= i && i <= d - 1, "T family needs 1 <= i <= d-1");
  std::vector<Edge> edges;
  for (int v = 0; v < d; ++v) edges.emplace_back(v, v + 1);
  for (int u = d + 1; u < n; ++u) edges.emplace_back(i, u);
  Graph g(n, edges);
  std::int64_t q = n - d + 1;
  self_check(is_tree(g), "T", "tree");
  self_check(diameter(g) == d, "T", "diameter");
  self_check(so1_doubled_exact(g) == q * (q * q - 1), "T", "doubled SO1");
  return g;
}

Graph make_U(int n, int d, int i) {
  require(n <= max_order, "U family order out of range");
  require(4 <= d && d <= n - 2, "U family needs 4 <= d <= n-2");
  require(1 <= i && i <= d - 3, "U family needs 1 <= i <= d-3");
  Graph g = make_T(n, d, i).with_edge(n - 1, i + 2);
  std::int64_t q = n - d + 1;
  self_check(is_unicyclic(g), "U", "unicyclic");
  self_check(diameter(g) == d, "U", "diameter");
  self_check(girth(g) == 4, "U", "girth");
  self_check(so1_doubled_exact(g) == (q - 1) * q * (q + 1) + 12, "U",
             "doubled SO1");
  return g;
}

Graph make_R(int n, int d, int i) {
  require(n <= max_order, "R family order out of range");
  require(2 <= d && d <= n - 2, "R family needs 2 <= d <= n-2");
  require(1 <= i && i <= d - 1, "R family needs 1 <= i <= d-1");
  Graph g = make_T(n, d, i).with_edge(n - 1, i + 1);
  std::int64_t q = n - d + 1;
  std::int64_t expected =
      i <= d - 2 ? q * (q * q - 1) + 2 : q * (q * q - 1) - 6;
  self_check(is_unicyclic(g), "R", "unicyclic");
  self_check(diameter(g) == d, "R", "diameter");
  self_check(girth(g) == 3, "R", "girth");
  self_check(so1_doubled_exact(g) == expected, "R", "doubled SO1");
  return g;
}

Graph make_W(int n, int d, int i) {
  require(n <= max_order, "W family order out of range");
  require(2 <= d && d <= n - 3, "W family needs 2 <= d <= n-3");
  require(1 <= i && i <= d - 1, "W family needs 1 <= i <= d-1");
  Graph g = make_T(n, d, i).with_edge(n - 1, n - 2);
  std::int64_t q = n - d + 1;
  self_check(is_unicyclic(g), "W", "unicyclic");
  self_check(diameter(g) == d, "W", "diameter");
  self_check(girth(g) == 3, "W", "girth");
  self_check(so1_doubled_exact(g) == (q - 1) * q * (q + 1) - 6, "W",
             "doubled SO1");
  return g;
}

Graph make_M(int n, int beta) {
  require(n >= 2 && n <= max_order, "M family order out of range");
  require(1 <= beta && 2 * beta <= n, "M family needs 1 <= beta <= n/2");
  // Star on n-beta+1 vertices, then subdivide beta-1 pendent edges.
  int star_leaves = n - beta;
  std::vector<Edge> edges;
  int next = 1;
  for (int leaf = 0; leaf < star_leaves; ++leaf) {
    edges.emplace_back(0, next++);
  }
  for (int path = 0; path < beta - 1; ++path) {
    edges.emplace_back(1 + path, next++);
  }
  Graph g(n, edges);
  self_check(is_tree(g), "M", "tree");
  self_check(matching_number(g) == beta, "M", "matching number");
  return g;
}

Graph make_broom(int n, int p) {
  require(n >= 3 && n <= max_order, "broom order out of range");
  require(2 <= p && p <= n - 1, "broom needs 2 <= p <= n-1");
  std::vector<Edge> edges;
  int next = 1;
  for (int leaf = 0; leaf < p - 1; ++leaf) edges.emplace_back(0, next++);
  attach_path(edges, 0, n - p, next);
  Graph g(n, edges);
  std::int64_t pd = p;
  self_check(is_tree(g), "broom", "tree");
  self_check(static_cast<int>(pendent_vertices(g).size()) == p, "broom",
             "pendent count");
  self_check(so1_doubled_exact(g) == (pd - 1) * pd * (pd + 1), "broom",
             "doubled SO1");
  return g;
}

Graph make_starlike(int n, std::span<const int> legs) {
  require(n <= max_order, "starlike order out of range");
  require(legs.size() >= 3, "starlike needs at least 3 legs");
  require(std::all_of(legs.begin(), legs.end(), [](int l) { return l >= 1; }),
          "starlike legs must be positive");
  require(std::accumulate(legs.begin(), legs.end(), 0) == n - 1,
          "starlike legs must cover n-1 vertices");
  std::vector<Edge> edges;
  int next = 1;
  for (int leg : legs) next = attach_path(edges, 0, leg, next);
  Graph g(n, edges);
  std::int64_t delta = static_cast<std::int64_t>(legs.size());
  self_check(is_tree(g), "starlike", "tree");
  self_check(branching_number(g) == 1, "starlike", "one branching vertex");
  self_check(degree_sequence(g).max_degree() == static_cast<int>(delta),
             "starlike", "maximum degree");
  self_check(so1_doubled_exact(g) == cube(delta) - delta, "starlike",
             "doubled SO1");
  return g;
}

Graph make_double_starlike(int n, int delta, int delta2,
                           std::span<const int> legs_a,
                           std::span<const int> legs_b) {
  require(n <= max_order, "double starlike order out of range");
  require(delta >= delta2 && delta2 >= 3,
          "double starlike needs delta >= delta2 >= 3");
  require(static_cast<int>(legs_a.size()) == delta - 1,
          "double starlike needs delta-1 legs at the first center");
  require(static_cast<int>(legs_b.size()) == delta2 - 1,
          "double starlike needs delta2-1 legs at the second center");
  auto positive = [](int l) { return l >= 1; };
  require(std::all_of(legs_a.begin(), legs_a.end(), positive) &&
              std::all_of(legs_b.begin(), legs_b.end(), positive),
          "double starlike legs must be positive");
  require(std::accumulate(legs_a.begin(), legs_a.end(), 0) +
                  std::accumulate(legs_b.begin(), legs_b.end(), 0) ==
              n - 2,
          "double starlike legs must cover n-2 vertices");
  std::vector<Edge> edges{{0, 1}};
  int next = 2;
  for (int leg : legs_a) next = attach_path(edges, 0, leg, next);
  for (int leg : legs_b) next = attach_path(edges, 1, leg, next);
  Graph g(n, edges);
  std::int64_t d1 = delta;
  std::int64_t d2 = delta2;
  std::int64_t expected = (d1 - 1) * (d1 * d1 - 1) + (d2 - 1) * (d2 * d2 - 1) +
                          d1 * d1 - d2 * d2;
  self_check(is_tree(g), "double starlike", "tree");
  self_check(branching_number(g) == 2, "double starlike",
             "two branching vertices");
  self_check(g.degree(0) == delta && g.degree(1) == delta2, "double starlike",
             "center degrees");
  self_check(so1_doubled_exact(g) == expected, "double starlike",
             "doubled SO1");
  return g;
}

Graph make_A(int n, int g, int delta, std::span<const int> legs) {
  require(n <= max_order, "A family order out of range");
  require(g >= 3, "A family needs girth >= 3");
  require(delta >= 3, "A family needs delta >= 3");
  require(static_cast<int>(legs.size()) == delta,
          "A family needs delta legs (first one joins the cycle)");
  require(std::all_of(legs.begin(), legs.end(), [](int l) { return l >= 1; }),
          "A family legs must be positive");
  require(std::accumulate(legs.begin(), legs.end(), 0) == n - g,
          "A family legs must cover n-g vertices");
  std::vector<Edge> edges;
  for (int v = 0; v < g; ++v) edges.emplace_back(v, (v + 1) % g);
  int next = g;
  // Connecting path of legs[0] vertices ends at the starlike center.
  next = attach_path(edges, 0, legs[0], next);
  int center = next - 1;
  for (std::size_t leg = 1; leg < legs.size(); ++leg) {
    next = attach_path(edges, center, legs[leg], next);
  }
  Graph graph(n, edges);
  std::int64_t d = delta;
  std::int64_t expected = legs[0] == 1 ? cube(d) - d + 2 : cube(d) - d + 12;
  self_check(is_unicyclic(graph), "A", "unicyclic");
  self_check(girth(graph) == g, "A", "girth");
  self_check(degree_sequence(graph).max_degree() == delta, "A",
             "maximum degree");
  self_check(so1_doubled_exact(graph) == expected, "A", "doubled SO1");
  return graph;
}

Graph make_B(int n, int g, int delta) {
  require(n <= max_order, "B family order out of range");
  require(g >= 3, "B family needs girth >= 3");
  require(delta >= 2, "B family needs delta >= 2");
  if (delta == 2) {
    require(n == g, "B family with delta = 2 is the cycle itself");
    return make_cycle(n);
  }
  require(n - g >= delta - 2,
          "B family needs n-g vertices for delta-2 nonempty paths");
  std::vector<Edge> edges;
  for (int v = 0; v < g; ++v) edges.emplace_back(v, (v + 1) % g);
  int next = g;
  int first_path = n - g - (delta - 3);
  next = attach_path(edges, 0, first_path, next);
  for (int path = 1; path < delta - 2; ++path) {
    next = attach_path(edges, 0, 1, next);
  }
  Graph graph(n, edges);
  std::int64_t d = delta;
  self_check(is_unicyclic(graph), "B", "unicyclic");
  self_check(girth(graph) == g, "B", "girth");
  self_check(degree_sequence(graph).max_degree() == delta, "B",
             "maximum degree");
  self_check(so1_doubled_exact(graph) == cube(d) - d - 6, "B", "doubled SO1");
  return graph;
}

Graph make_h_min(int n, int b) {
  require(n <= max_order, "branching-minimum tree order out of range");
  require(1 <= b && 2 * b <= n - 2,
          "branching-minimum tree needs 1 <= b <= (n-2)/2");
  std::vector<Edge> edges;
  for (int v = 0; v + 1 < b; ++v) edges.emplace_back(v, v + 1);
  int next = b;
  // One branch absorbs every 2-vertex; all other branches are pendent edges.
  next = attach_path(edges, 0, n - 2 * b - 1, next);
  next = attach_path(edges, 0, 1, next);
  if (b == 1) {
    next = attach_path(edges, 0, 1, next);
  } else {
    next = attach_path(edges, b - 1, 1, next);
    next = attach_path(edges, b - 1, 1, next);
    for (int v = 1; v + 1 < b; ++v) next = attach_path(edges, v, 1, next);
  }
  Graph g(n, edges);
  self_check(is_tree(g), "branching-minimum tree", "tree");
  self_check(branching_number(g) == b, "branching-minimum tree",
             "branching number");
  self_check(edge_degree_distribution(g).count(3, 3) == b - 1,
             "branching-minimum tree", "adjacent branching spine");
  self_check(so1_doubled_exact(g) == 8ll * b + 16, "branching-minimum tree",
             "doubled SO1");
  return g;
}

Graph make_h_max(int n, int b) {
  require(n <= max_order, "branching-maximum tree order out of range");
  require(1 <= b && 2 * b <= n - 2,
          "branching-maximum tree needs 1 <= b <= (n-2)/2");
  int center_degree = n - 2 * b + 1;
  std::vector<Edge> edges;
  for (int v = 0; v + 1 < b; ++v) edges.emplace_back(v, v + 1);
  int next = b;
  int center_pendants = center_degree - (b > 1 ? 1 : 0);
  for (int leaf = 0; leaf < center_pendants; ++leaf) {
    next = attach_path(edges, 0, 1, next);
  }
  for (int v = 1; v + 1 < b; ++v) next = attach_path(edges, v, 1, next);
  if (b > 1) {
    next = attach_path(edges, b - 1, 1, next);
    next = attach_path(edges, b - 1, 1, next);
  }
  Graph g(n, edges);
  std::int64_t delta = center_degree;
  std::int64_t expected = cube(delta) - 9 * delta + 8ll * (n - b);
  self_check(is_tree(g), "branching-maximum tree", "tree");
  self_check(branching_number(g) == b, "branching-maximum tree",
             "branching number");
  self_check(degree_sequence(g).max_degree() == center_degree,
             "branching-maximum tree", "center degree");
  self_check(degree_sequence(g).count_of(2) == 0, "branching-maximum tree",
             "no 2-vertices");
  self_check(so1_doubled_exact(g) == expected, "branching-maximum tree",
             "doubled SO1");
  return g;
}

Graph make_complete_split(int m, int t) {
  require(m >= 1 && m <= max_order, "complete split order out of range");
  require(1 <= t && t <= m, "complete split needs 1 <= t <= m");
  std::vector<Edge> edges;
  for (int u = 0; u < t; ++u) {
    for (int v = u + 1; v < m; ++v) edges.emplace_back(u, v);
  }
  return Graph(m, edges);
}

Graph make_H(int n, int k, int t) {
  require(n >= 4 && n <= max_order, "H family order out of range");
  require(1 <= k && k <= n - 3, "H family needs 1 <= k <= n-3");
  require(1 <= t && t <= n - k - 2, "H family needs 1 <= t <= n-k-2");
  int split_order = n - k - 1;
  std::vector<Edge> edges;
  // Vertices: 0 is the star center, 1..k its leaves, the rest the split
  // graph (clique first).
  for (int leaf = 1; leaf <= k; ++leaf) edges.emplace_back(0, leaf);
  int base = k + 1;
  for (int u = 0; u < t; ++u) {
    for (int v = u + 1; v < split_order; ++v) {
      edges.emplace_back(base + u, base + v);
    }
  }
  for (int v = 0; v < split_order; ++v) edges.emplace_back(0, base + v);
  Graph g(n, edges);
  auto degrees = degree_sequence(g);
  self_check(is_connected(g), "H", "connected");
  self_check(static_cast<int>(pendent_vertices(g).size()) == k, "H",
             "pendent count");
  self_check(degrees.max_degree() == n - 1, "H", "maximum degree");
  self_check(degrees.count_of(n - 1) == 1, "H", "unique maximum degree");
  self_check(degrees.second_max_degree() == n - k - 1, "H",
             "second maximum degree");
  return g;
}

std::string_view to_string(FamilyId id) {
  switch (id) {
    case FamilyId::PATH: return "path";
    case FamilyId::STAR: return "star";
    case FamilyId::CYCLE: return "cycle";
    case FamilyId::STAR_SUBDIV: return "star-subdivided";
    case FamilyId::T_NDI: return "T";
    case FamilyId::U_NDI: return "U";
    case FamilyId::R_NDI: return "R";
    case FamilyId::W_NDI: return "W";
    case FamilyId::M_NBETA: return "M";
    case FamilyId::BROOM_YNP: return "broom";
    case FamilyId::STARLIKE: return "starlike";
    case FamilyId::DSTARLIKE: return "double-starlike";
    case FamilyId::A_GDELTA: return "A";
    case FamilyId::B_GDELTA: return "B";
    case FamilyId::HMINSEQ: return "h-min";
    case FamilyId::HMAXSEQ: return "h-max";
    case FamilyId::COMPLETE_SPLIT: return "complete-split";
    case FamilyId::H_NKT: return "H";
  }
  throw std::invalid_argument("unknown family id");
}

std::optional<FamilyId> family_id_from_string(std::string_view name) {
  constexpr std::array<FamilyId, 18> ids = {
      FamilyId::PATH,        FamilyId::STAR,      FamilyId::CYCLE,
      FamilyId::STAR_SUBDIV, FamilyId::T_NDI,     FamilyId::U_NDI,
      FamilyId::R_NDI,       FamilyId::W_NDI,     FamilyId::M_NBETA,
      FamilyId::BROOM_YNP,   FamilyId::STARLIKE,  FamilyId::DSTARLIKE,
      FamilyId::A_GDELTA,    FamilyId::B_GDELTA,  FamilyId::HMINSEQ,
      FamilyId::HMAXSEQ,     FamilyId::COMPLETE_SPLIT, FamilyId::H_NKT};
  for (FamilyId id : ids) {
    if (name == to_string(id)) return id;
  }
  return std::nullopt;
}

Graph make_family(const FamilySpec& spec) {
  auto param = [&spec](const std::string& name) {
    auto it = spec.params.find(name);
    if (it == spec.params.end()) {
      throw std::invalid_argument("family " + std::string(to_string(spec.id)) +
                                  " needs parameter " + name);
    }
    return it->second;
  };
  switch (spec.id) {
    case FamilyId::PATH: return make_path(param("n"));
    case FamilyId::STAR: return make_star(param("n"));
    case FamilyId::CYCLE: return make_cycle(param("n"));
    case FamilyId::STAR_SUBDIV: return make_star_subdivided(param("n"));
    case FamilyId::T_NDI: return make_T(param("n"), param("d"), param("i"));
    case FamilyId::U_NDI: return make_U(param("n"), param("d"), param("i"));
    case FamilyId::R_NDI: return make_R(param("n"), param("d"), param("i"));
    case FamilyId::W_NDI: return make_W(param("n"), param("d"), param("i"));
    case FamilyId::M_NBETA: return make_M(param("n"), param("beta"));
    case FamilyId::BROOM_YNP: return make_broom(param("n"), param("p"));
    case FamilyId::STARLIKE: return make_starlike(param("n"), spec.legs);
    case FamilyId::DSTARLIKE:
      return make_double_starlike(param("n"), param("delta"), param("delta2"),
                                  spec.legs, spec.legs_b);
    case FamilyId::A_GDELTA:
      return make_A(param("n"), param("g"), param("delta"), spec.legs);
    case FamilyId::B_GDELTA:
      return make_B(param("n"), param("g"), param("delta"));
    case FamilyId::HMINSEQ: return make_h_min(param("n"), param("b"));
    case FamilyId::HMAXSEQ: return make_h_max(param("n"), param("b"));
    case FamilyId::COMPLETE_SPLIT:
      return make_complete_split(param("m"), param("t"));
    case FamilyId::H_NKT:
      return make_H(param("n"), param("k"), param("t"));
  }
  throw std::invalid_argument("unknown family id");
}

}  // namespace sombor
