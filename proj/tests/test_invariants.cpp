#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>
#include <vector>

#include "helpers.hpp"
#include "sombor/enumerate.hpp"
#include "sombor/families.hpp"
#include "sombor/invariants.hpp"

using namespace sombor;

namespace {

// Straight per-edge accumulation, an independent route to the same values.
IndexVector by_edge_sum(const Graph& g) {
  const double pi = std::numbers::pi;
  const double rt2 = std::numbers::sqrt2;
  IndexVector out{};
  std::int64_t doubled = 0;
  for (auto [u, v] : g.edges()) {
    const double a = g.degree(u);
    const double b = g.degree(v);
    const double s = a * a + b * b;
    const double diff = std::abs(a * a - b * b);
    out.values[0] += std::sqrt(s);
    doubled += static_cast<std::int64_t>(std::llround(diff));
    out.values[2] += diff / s;
    out.values[3] += pi * rt2 * s / (a + b);
    out.values[4] += pi / 2.0 * (s / (a + b)) * (s / (a + b));
    out.values[5] += pi * 2.0 * diff / (rt2 + 2.0 * std::sqrt(s));
    const double t = diff / (rt2 + 2.0 * std::sqrt(s));
    out.values[6] += pi * t * t;
  }
  out.so1_doubled = doubled;
  out.values[1] = static_cast<double>(doubled) / 2.0;
  return out;
}

}  // namespace

TEST_CASE("invariants: octane baseline row") {
  const IndexVector iv = index_vector(make_path(8));
  CHECK(iv.values[0] == doctest::Approx(18.6143).epsilon(1e-5));
  CHECK(iv.values[1] == 3.0);
  CHECK(iv.values[2] == doctest::Approx(1.2).epsilon(1e-12));
  CHECK(iv.values[3] == doctest::Approx(59.2384).epsilon(1e-5));
  CHECK(iv.values[4] == doctest::Approx(40.1426).epsilon(1e-5));
  CHECK(iv.values[5] == doctest::Approx(6.4045).epsilon(1e-4));
  CHECK(iv.values[6] == doctest::Approx(1.63204).epsilon(1e-5));
  CHECK(iv.so1_doubled == 6);
}

TEST_CASE("invariants: closed forms on regular and star graphs") {
  const double pi = std::numbers::pi;
  const double rt2 = std::numbers::sqrt2;

  for (int n : {3, 5, 8}) {
    const IndexVector cycle = index_vector(make_cycle(n));
    CHECK(cycle.values[0] == doctest::Approx(n * 2.0 * rt2));
    CHECK(cycle.values[1] == 0.0);
    CHECK(cycle.values[2] == 0.0);
    CHECK(cycle.values[3] == doctest::Approx(2.0 * rt2 * pi * n));
    CHECK(cycle.values[4] == doctest::Approx(2.0 * pi * n));
    CHECK(cycle.values[5] == 0.0);
    CHECK(cycle.values[6] == 0.0);
  }

  const IndexVector edge = index_vector(make_path(2));
  CHECK(edge.values[0] == doctest::Approx(rt2));
  CHECK(edge.values[3] == doctest::Approx(pi * rt2));
  CHECK(edge.values[4] == doctest::Approx(pi / 2.0));

  CHECK(so1_doubled_exact(make_star(5)) == 60);
  const IndexVector star = index_vector(make_star(5));
  CHECK(star.values[0] == doctest::Approx(4.0 * std::sqrt(17.0)));
  CHECK(star.values[1] == 30.0);
  CHECK(star.values[2] == doctest::Approx(4.0 * 15.0 / 17.0));

  CHECK(so1_doubled_exact(make_complete(6)) == 0);
}

TEST_CASE("invariants: distribution route equals graph route") {
  const Graph g = make_broom(9, 4);
  CHECK(index_vector(g) == index_vector(edge_degree_distribution(g)));
}

TEST_CASE("invariants: edge-sum route agrees everywhere") {
  auto close = [](const IndexVector& a, const IndexVector& b) {
    CHECK(a.so1_doubled == b.so1_doubled);
    for (int k = 0; k < 7; ++k) {
      CHECK(a.values[k] == doctest::Approx(b.values[k]).epsilon(1e-12));
    }
  };
  for (const Graph& g : all_connected(6)) close(index_vector(g), by_edge_sum(g));
  for (const Graph& g : all_trees(9)) close(index_vector(g), by_edge_sum(g));
  close(index_vector(helpers::petersen()), by_edge_sum(helpers::petersen()));
}

TEST_CASE("invariants: relabeling leaves every index bit-identical") {
  std::mt19937 rng(31415);
  for (const Graph& g : all_unicyclic(8)) {
    const IndexVector reference = index_vector(g);
    for (int trial = 0; trial < 5; ++trial) {
      CHECK(index_vector(helpers::relabel_randomly(g, rng)) == reference);
    }
  }
}

TEST_CASE("invariants: second index stays below the edge count") {
  for (const Graph& g : all_connected(6)) {
    if (g.edge_count() == 0) continue;
    CHECK(index_vector(g).values[2] < g.edge_count());
  }
}

TEST_CASE("invariants: exact doubled value matches the float route") {
  for (const Graph& g : all_trees(10)) {
    const IndexVector iv = index_vector(g);
    CHECK(iv.values[1] * 2.0 == static_cast<double>(iv.so1_doubled));
    CHECK(so1_doubled_exact(g) == iv.so1_doubled);
  }
}

TEST_CASE("invariants: kind names round-trip") {
  for (IndexKind kind : all_index_kinds) {
    CHECK(index_kind_from_string(to_string(kind)) == kind);
  }
  CHECK(index_kind_from_string("SO3") == IndexKind::SO3);
  CHECK_FALSE(index_kind_from_string("so").has_value());
  CHECK_FALSE(index_kind_from_string("SO7").has_value());
  CHECK(index(IndexKind::SO1, make_star(5)) == 30.0);
}

TEST_CASE("invariants: path potential over explicit walks") {
  const Graph p5 = make_path(5);
  const std::vector<int> walk = {0, 1, 2, 3, 4};
  CHECK(phi_path(p5, walk) == 6);

  const std::vector<int> reversed = {4, 3, 2, 1, 0};
  CHECK(phi_path(p5, reversed) == 6);

  const std::vector<int> lone = {2};
  CHECK(phi_path(p5, lone) == 0);

  const Graph star = make_star(6);
  const std::vector<int> ray = {1, 0};
  CHECK(phi_path(star, ray) == 24);

  const std::vector<int> gap = {0, 2};
  CHECK_THROWS_AS((void)phi_path(p5, gap), std::invalid_argument);
  const std::vector<int> empty;
  CHECK_THROWS_AS((void)phi_path(p5, empty), std::invalid_argument);
  const std::vector<int> stray = {7};
  CHECK_THROWS_AS((void)phi_path(p5, stray), std::invalid_argument);
}

TEST_CASE("invariants: path potential dominates the endpoint gap") {
  std::mt19937 rng(2718);
  for (const Graph& tree : all_trees(9)) {
    // Walk down from vertex 0 to a farthest vertex via parents.
    const int n = tree.order();
    std::vector<int> parent(n, -1);
    std::vector<int> order = {0};
    std::vector<bool> seen(n, false);
    seen[0] = true;
    for (std::size_t i = 0; i < order.size(); ++i) {
      for (int w : tree.neighbors(order[i])) {
        if (!seen[w]) {
          seen[w] = true;
          parent[w] = order[i];
          order.push_back(w);
        }
      }
    }
    const int far = order.back();
    std::vector<int> walk;
    for (int v = far; v != -1; v = parent[v]) walk.push_back(v);
    const std::int64_t a = tree.degree(walk.front());
    const std::int64_t b = tree.degree(walk.back());
    CHECK(phi_path(tree, walk) >= std::abs(a * a - b * b));
    (void)rng;
  }
}
