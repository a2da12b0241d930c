#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "fcgp/generators.hpp"
#include "oracle.hpp"

using namespace fcgp;

TEST_CASE("gap family layout") {
  GapInstanceSpec tiny{2, 1, {1, 10}};
  Graph g = gen_gap_graph(tiny);
  REQUIRE(g.n == 5);  // hub, 2-clique, 2 pendants
  std::vector<int> degs;
  for (int v = 0; v < g.n; ++v) degs.push_back(g.degree(v));
  CHECK(degs == std::vector<int>{2, 1, 1, 1, 1});

  GapInstanceSpec spec{4, 3, {1, 6}};
  Graph big = gen_gap_graph(spec);
  CHECK(big.n == 3 + 4 + 12);
  CHECK(big.m() == 12 + 6);
  for (int i = 0; i < 3; ++i) CHECK(big.degree(i) == 4);

  Instance inst = gen_gap_instance(spec);
  CHECK(inst.alpha == Rational(1, 6));
  CHECK(inst.direction == Direction::Max);
  CHECK(inst.k == 4);

  CHECK(gap_hub_set(GapInstanceSpec{4, 5, {1, 6}}) == std::vector<int>{0, 1, 2, 3});
  CHECK(gap_clique_set(spec) == std::vector<int>{3, 4, 5, 6});

  CHECK_THROWS_AS(gen_gap_graph(GapInstanceSpec{1, 1, {1, 10}}), input_error);
  CHECK_THROWS_AS(gen_gap_graph(GapInstanceSpec{2, 0, {1, 10}}), input_error);
  CHECK_THROWS_AS(gen_gap_graph(GapInstanceSpec{2, 1, {1, 2}}), input_error);
  CHECK_THROWS_AS(gen_gap_graph(GapInstanceSpec{2, 1, {0, 1}}), input_error);
  CHECK_THROWS_AS(gap_hub_set(GapInstanceSpec{4, 3, {1, 6}}), input_error);
}

TEST_CASE("gap report arithmetic") {
  GapReport r = gap_report(GapInstanceSpec{30, 40, {1, 10}});
  CHECK(r.alpha == Rational(7, 30));
  CHECK(r.hub_value == Rational(210));
  CHECK(r.clique_value == Rational(667, 2));
  CHECK(r.ratio == Rational(420, 667));
  CHECK(r.loose_bound == Rational(7, 10));
  CHECK(r.asymptotic_bound == Rational(7, 13));

  // the report's selection values match direct evaluation on the graph
  GapInstanceSpec small{4, 5, {1, 6}};
  Instance inst = gen_gap_instance(small);
  GapReport sr = gap_report(small);
  CHECK(cov_alpha(inst.graph, gap_hub_set(small), inst.alpha) == sr.hub_value);
  CHECK(cov_alpha(inst.graph, gap_clique_set(small), inst.alpha) == sr.clique_value);

  // and the clique really is optimal here
  oracle::NaiveGraph ng{inst.graph.n, inst.graph.edges};
  CHECK(oracle::best_subset(ng, inst.k, inst.alpha, true).value == sr.clique_value);
}

TEST_CASE("deterministic families") {
  CHECK(gen_complete(4).m() == 6);
  CHECK(gen_complete(0).n == 0);
  CHECK(gen_cycle(3).m() == 3);
  CHECK_THROWS_AS(gen_cycle(2), input_error);
  CHECK(gen_path(1).m() == 0);
  CHECK(gen_path(5).m() == 4);
  CHECK_THROWS_AS(gen_path(0), input_error);
  Graph star = gen_star(6);
  CHECK(star.n == 7);
  CHECK(star.degree(0) == 6);

  Graph g22 = gen_grid(2, 2);
  CHECK(g22.m() == 4);
  Graph g34 = gen_grid(3, 4);
  CHECK(g34.n == 12);
  CHECK(g34.m() == 17);
  CHECK(g34.has_edge(0, 1));
  CHECK(g34.has_edge(0, 4));
  CHECK(!g34.has_edge(3, 4));  // row wrap is not an edge
  CHECK_THROWS_AS(gen_grid(0, 3), input_error);
}

TEST_CASE("gnm sampling") {
  Graph g = gen_random_gnm(9, 14, 5);
  CHECK(g.n == 9);
  CHECK(g.m() == 14);
  Graph again = gen_random_gnm(9, 14, 5);
  CHECK(g.edges == again.edges);
  Graph other = gen_random_gnm(9, 14, 6);
  CHECK(g.edges != other.edges);

  CHECK(gen_random_gnm(5, 10, 1).m() == 10);  // the complete graph
  CHECK(gen_random_gnm(4, 0, 1).m() == 0);
  CHECK_THROWS_AS(gen_random_gnm(4, 7, 1), input_error);
  CHECK_THROWS_AS(gen_random_gnm(-1, 0, 1), input_error);

  // sparse sampling on a large vertex set goes through the rejection path
  Graph sparse = gen_random_gnm(5000, 10, 9);
  CHECK(sparse.m() == 10);
  Graph sparse_again = gen_random_gnm(5000, 10, 9);
  CHECK(sparse.edges == sparse_again.edges);
}

TEST_CASE("regular graphs") {
  Graph k4 = gen_regular(4, 3, 2);
  CHECK(k4.edges == gen_complete(4).edges);

  Graph r = gen_regular(6, 2, 11);
  for (int v = 0; v < 6; ++v) CHECK(r.degree(v) == 2);
  CHECK(gen_regular(6, 2, 11).edges == r.edges);

  Graph r4 = gen_regular(10, 4, 3);
  for (int v = 0; v < 10; ++v) CHECK(r4.degree(v) == 4);

  CHECK_THROWS_AS(gen_regular(5, 3, 1), input_error);  // odd n * d
  CHECK_THROWS_AS(gen_regular(4, 4, 1), input_error);  // d >= n
  CHECK(gen_regular(3, 0, 1).m() == 0);
}
