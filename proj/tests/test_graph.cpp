#include <doctest.h>

#include <random>
#include <stdexcept>
#include <vector>

#include "helpers.hpp"
#include "sombor/enumerate.hpp"
#include "sombor/families.hpp"
#include "sombor/graph.hpp"

using namespace sombor;

TEST_CASE("graph: construction validates its input") {
  CHECK_THROWS_AS(Graph(-1), std::invalid_argument);
  CHECK_THROWS_AS(Graph(max_order + 1), std::invalid_argument);
  CHECK_THROWS_AS(Graph(3, {{0, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph(3, {{0, 1}, {1, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph(3, {{0, 3}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph(3, {{-1, 2}}), std::invalid_argument);
  CHECK_NOTHROW(Graph(max_order));
  CHECK(Graph().order() == 0);
}

TEST_CASE("graph: accessors expose sorted adjacency") {
  const Graph g(5, {{2, 4}, {0, 1}, {1, 2}, {1, 4}});
  CHECK(g.order() == 5);
  CHECK(g.edge_count() == 4);
  CHECK(g.has_edge(4, 2));
  CHECK_FALSE(g.has_edge(0, 2));
  CHECK(g.degree(1) == 3);
  CHECK(g.degree(3) == 0);
  CHECK(g.neighbors(1) == std::vector<int>{0, 2, 4});
  CHECK(g.edges() == std::vector<Edge>{{0, 1}, {1, 2}, {1, 4}, {2, 4}});
  CHECK(g.neighbor_mask(1) == 0b10101u);
}

TEST_CASE("graph: with_edge and without_edge leave the original intact") {
  const Graph g = make_path(4);
  const Graph plus = g.with_edge(0, 3);
  CHECK(plus.edge_count() == 4);
  CHECK(g.edge_count() == 3);
  const Graph minus = plus.without_edge(1, 2);
  CHECK(minus.edge_count() == 3);
  CHECK(plus.has_edge(1, 2));
  CHECK_FALSE(minus.has_edge(1, 2));
}

TEST_CASE("graph: relabeled applies v -> perm[v]") {
  const Graph g(3, {{0, 1}, {1, 2}});
  const std::vector<int> perm = {2, 0, 1};
  const Graph h = g.relabeled(perm);
  CHECK(h.has_edge(2, 0));
  CHECK(h.has_edge(0, 1));
  CHECK_FALSE(h.has_edge(1, 2));
}

TEST_CASE("degree sequence: ordering, multiplicity, validation") {
  const DegreeSequence star = degree_sequence(make_star(5));
  CHECK(star.values() == std::vector<int>{4, 1, 1, 1, 1});
  CHECK(star.max_degree() == 4);
  CHECK(star.second_max_degree() == 1);
  CHECK(star.count_of(1) == 4);
  CHECK(star.count_of(3) == 0);

  const DegreeSequence cycle = degree_sequence(make_cycle(4));
  CHECK(cycle.max_degree() == 2);
  CHECK(cycle.second_max_degree() == 2);

  CHECK_THROWS_AS(DegreeSequence({1, 2, 3}), std::invalid_argument);
}

TEST_CASE("edge degree distribution: path and star") {
  const EdgeDegreeDistribution p4 = edge_degree_distribution(make_path(4));
  CHECK(p4.count(1, 2) == 2);
  CHECK(p4.count(2, 1) == 2);
  CHECK(p4.count(2, 2) == 1);
  CHECK(p4.total() == 3);

  EdgeDegreeDistribution manual;
  manual.add(2, 1, 2);
  manual.add(2, 2);
  CHECK(manual == p4);
}

TEST_CASE("graph: class predicates") {
  CHECK(is_connected(make_path(6)));
  CHECK_FALSE(is_connected(Graph(4, {{0, 1}, {2, 3}})));
  CHECK(is_connected(Graph(1)));

  CHECK(is_tree(make_path(6)));
  CHECK(is_tree(Graph(1)));
  CHECK_FALSE(is_tree(make_cycle(6)));
  CHECK_FALSE(is_tree(Graph(4, {{0, 1}, {2, 3}})));

  CHECK(is_unicyclic(make_cycle(6)));
  CHECK(is_unicyclic(make_R(8, 4, 1)));
  CHECK_FALSE(is_unicyclic(make_path(6)));
  CHECK_FALSE(is_unicyclic(Graph(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}})));
}

TEST_CASE("graph: diameter") {
  CHECK(diameter(make_path(8)) == 7);
  CHECK(diameter(make_cycle(8)) == 4);
  CHECK(diameter(make_complete(4)) == 1);
  CHECK(diameter(make_star(9)) == 2);
  CHECK(diameter(Graph(1)) == 0);
  CHECK(diameter(helpers::petersen()) == 2);
  CHECK_THROWS_AS((void)diameter(Graph(2)), std::invalid_argument);
  CHECK_THROWS_AS((void)diameter(Graph()), std::invalid_argument);
}

TEST_CASE("graph: girth") {
  CHECK_FALSE(girth(make_path(5)).has_value());
  CHECK_FALSE(girth(Graph(3)).has_value());
  CHECK(girth(make_cycle(5)) == 5);
  CHECK(girth(make_complete(4)) == 3);
  CHECK(girth(make_U(8, 4, 1)) == 4);
  CHECK(girth(make_R(8, 4, 1)) == 3);
  CHECK(girth(helpers::petersen()) == 5);
  CHECK(girth(helpers::grid(3, 3)) == 4);
}

TEST_CASE("graph: matching number on known graphs") {
  CHECK(matching_number(make_path(8)) == 4);
  CHECK(matching_number(make_path(7)) == 3);
  CHECK(matching_number(make_cycle(9)) == 4);
  CHECK(matching_number(make_star(9)) == 1);
  CHECK(matching_number(make_complete(6)) == 3);
  CHECK(matching_number(helpers::petersen()) == 5);
  CHECK(matching_number(Graph(5)) == 0);
  for (int beta = 1; beta <= 5; ++beta) {
    CHECK(matching_number(make_M(10, beta)) == beta);
  }
}

TEST_CASE("graph: matching number agrees with the exhaustive search") {
  for (const Graph& g : all_connected(5)) {
    CHECK(matching_number(g) == matching_number_brute_force(g));
  }
  for (const Graph& g : all_unicyclic(7)) {
    CHECK(matching_number(g) == matching_number_brute_force(g));
  }
  std::mt19937 rng(20240817);
  for (int trial = 0; trial < 120; ++trial) {
    const Graph g = helpers::random_graph(8, 0.35, rng);
    CHECK(matching_number(g) == matching_number_brute_force(g));
  }
}

TEST_CASE("graph: pendent vertices are listed in ascending order") {
  const Graph broom = make_broom(8, 5);
  const std::vector<int> pendents = pendent_vertices(broom);
  CHECK(pendents.size() == 5);
  CHECK(std::is_sorted(pendents.begin(), pendents.end()));
  for (int v : pendents) CHECK(broom.degree(v) == 1);
  CHECK(pendent_vertices(make_cycle(5)).empty());
  CHECK(pendent_vertices(make_path(2)) == std::vector<int>{0, 1});
}

TEST_CASE("graph: branching number") {
  CHECK(branching_number(make_path(9)) == 0);
  CHECK(branching_number(make_cycle(9)) == 0);
  CHECK(branching_number(make_star(9)) == 1);
  CHECK(branching_number(make_broom(9, 4)) == 1);
  std::vector<int> legs_a = {1, 1, 1};
  std::vector<int> legs_b = {3, 1};
  CHECK(branching_number(make_double_starlike(9, 4, 3, legs_a, legs_b)) == 2);
  CHECK(branching_number(make_h_min(12, 3)) == 3);
}

TEST_CASE("graph: edge lifting moves a whole neighborhood") {
  const Graph p4 = make_path(4);
  const Graph lifted = edge_lifting(p4, 1, 2);
  CHECK(lifted.edge_count() == 3);
  CHECK(lifted.degree(2) == 3);
  CHECK(lifted.degree(1) == 1);
  CHECK(helpers::isomorphic_brute_force(lifted, make_star(4)));

  CHECK_THROWS_AS((void)edge_lifting(p4, 0, 1), std::invalid_argument);
  CHECK_THROWS_AS((void)edge_lifting(p4, 0, 2), std::invalid_argument);

  const Graph c3 = make_cycle(3);
  const Graph collapsed = edge_lifting(c3, 0, 1);
  CHECK(collapsed.edge_count() == 2);
}
