#include <catch2/catch_amalgamated.hpp>

#include <algorithm>

#include "fcgp/generators.hpp"
#include "fcgp/subexp.hpp"
#include "oracle.hpp"

using namespace fcgp;

namespace {

struct PrefixBest {
  Rational value;
  bool found = false;
};

// best k-subset of the prefix, scored on the whole graph; optionally require
// the given position to be picked
PrefixBest best_over_prefix(const Graph& g, const PrefixSubproblem& sp, int k,
                            const Rational& alpha, Direction dir, int forced_pos = -1) {
  oracle::NaiveGraph ng{g.n, g.edges};
  PrefixBest out;
  if (k > sp.j) return out;
  std::vector<int> pick(k);
  for (int i = 0; i < k; ++i) pick[i] = i;
  for (;;) {
    bool ok = forced_pos < 0 || std::find(pick.begin(), pick.end(), forced_pos) != pick.end();
    if (ok) {
      std::vector<int> ids;
      for (int p : pick) ids.push_back(sp.original_ids[p]);
      Rational val = oracle::cov(ng, ids, alpha);
      if (!out.found || (dir == Direction::Max ? out.value < val : val < out.value)) {
        out.found = true;
        out.value = val;
      }
    }
    int i = k - 1;
    while (i >= 0 && pick[i] == sp.j - k + i) --i;
    if (i < 0) break;
    ++pick[i];
    for (int j2 = i + 1; j2 < k; ++j2) pick[j2] = pick[j2 - 1] + 1;
  }
  return out;
}

}  // namespace

TEST_CASE("prefix subproblem relabeling") {
  Graph grid = gen_grid(3, 3);
  DegreeOrdering ord = degree_ordering(grid, OrderBy::NonIncreasing);
  CHECK(ord.vertices == std::vector<int>{4, 1, 3, 5, 7, 0, 2, 6, 8});

  PrefixSubproblem sp = make_prefix_subproblem(grid, ord, 5);
  CHECK(sp.original_ids == std::vector<int>{4, 1, 3, 5, 7});
  CHECK(sp.prefix_graph.m() == 4);  // a star centered at position 0
  for (int p = 1; p < 5; ++p) CHECK(sp.prefix_graph.has_edge(0, p));
  CHECK(sp.boundary_weight == std::vector<long long>{0, 2, 2, 2, 2});

  CHECK_THROWS_AS(make_prefix_subproblem(grid, ord, 10), input_error);
}

TEST_CASE("greedy dominating set") {
  CHECK(greedy_dominating_set(gen_path(4)) == std::vector<int>{1, 2});
  CHECK(greedy_dominating_set(gen_grid(3, 3)) == std::vector<int>{1, 4, 7});
  CHECK(greedy_dominating_set(gen_star(4)) == std::vector<int>{0});
  CHECK(greedy_dominating_set(make_graph(3, {})) == std::vector<int>{0, 1, 2});
}

TEST_CASE("exchange witness on the five-cycle") {
  Graph c5 = gen_cycle(5);
  ExchangeWitness w = check_exchange_lemma(make_instance(c5, 2, {1, 2}, Direction::Max));
  CHECK(w.solution == std::vector<int>{0, 2});
  CHECK(w.j == 3);
  CHECK(w.dominated);
}

TEST_CASE("ordering regime gates") {
  Graph c5 = gen_cycle(5);
  CHECK_THROWS_AS(check_exchange_lemma(make_instance(c5, 2, {1, 4}, Direction::Max)),
                  unsupported_error);
  CHECK_THROWS_AS(check_exchange_lemma(make_instance(c5, 2, {1, 2}, Direction::Min)),
                  unsupported_error);
  CHECK_THROWS_AS(solve_subexponential(make_instance(c5, 2, {1, 4}, Direction::Max)),
                  unsupported_error);
  CHECK_NOTHROW(check_exchange_lemma(make_instance(c5, 2, {1, 3}, Direction::Min)));
}

TEST_CASE("prefix dp matches exhaustive search through the whole-graph objective") {
  for (int t = 0; t < 6; ++t) {
    int n = 7 + t % 3;
    long long all = static_cast<long long>(n) * (n - 1) / 2;
    Graph g = gen_random_gnm(n, t % 2 ? all / 3 : all / 2, 7100 + t);
    Direction dir = t % 2 ? Direction::Min : Direction::Max;
    Rational alpha = dir == Direction::Max ? Rational(1, 2) : Rational(1, 6);
    OrderBy by = dir == Direction::Max ? OrderBy::NonIncreasing : OrderBy::NonDecreasing;
    DegreeOrdering ord = degree_ordering(g, by);
    for (int k : {1, 2, 3})
      for (int j = k; j <= n; ++j) {
        PrefixSubproblem sp = make_prefix_subproblem(g, ord, j);
        TreeDecomposition td = tree_decomposition_heuristic(sp.prefix_graph);
        PrefixDpResult dp = dp_solve_prefix(sp, td, k, alpha, dir);
        REQUIRE(dp.states > 0);
        REQUIRE(static_cast<int>(dp.solution.vertices.size()) == k);

        // the reported value is the whole-graph objective of the picked set
        std::vector<int> ids;
        for (int p : dp.solution.vertices) ids.push_back(sp.original_ids[p]);
        std::sort(ids.begin(), ids.end());
        REQUIRE(cov_alpha(g, ids, alpha) == dp.solution.value);

        PrefixBest ref = best_over_prefix(g, sp, k, alpha, dir);
        REQUIRE(ref.found);
        REQUIRE(dp.solution.value == ref.value);

        // forcing the last prefix position
        PrefixDpResult forced = dp_solve_prefix(sp, td, k, alpha, dir, j - 1);
        PrefixBest fref = best_over_prefix(g, sp, k, alpha, dir, j - 1);
        REQUIRE(forced.solution.vertices.end() !=
                std::find(forced.solution.vertices.begin(), forced.solution.vertices.end(),
                          j - 1));
        REQUIRE(forced.solution.value == fref.value);
      }
  }
}

TEST_CASE("dp input validation") {
  Graph c4 = gen_cycle(4);
  DegreeOrdering ord = degree_ordering(c4, OrderBy::NonIncreasing);
  PrefixSubproblem sp = make_prefix_subproblem(c4, ord, 3);
  TreeDecomposition td = tree_decomposition_heuristic(sp.prefix_graph);
  CHECK_THROWS_AS(dp_solve_prefix(sp, td, 2, {1, 2}, Direction::Max, 7), input_error);

  TreeDecomposition wrong = tree_decomposition_heuristic(gen_cycle(4));
  CHECK_THROWS_AS(dp_solve_prefix(sp, wrong, 2, {1, 2}, Direction::Max), input_error);
}

TEST_CASE("width budget schedule") {
  CHECK(default_width_budget(1) == 4);
  CHECK(default_width_budget(2) == 5);
  CHECK(default_width_budget(3) == 6);
  CHECK(default_width_budget(4) == 6);
  CHECK(default_width_budget(9) == 9);
  CHECK(default_width_budget(16) == 12);
}

TEST_CASE("portfolio driver") {
  Graph c5 = gen_cycle(5);
  ExactResult r = solve_subexponential(make_instance(c5, 2, {1, 2}, Direction::Max));
  CHECK(r.solution.value == Rational(2));
  CHECK(r.method == Method::Subexponential);
  CHECK(r.solution.provenance.algorithm == "subexponential");
  CHECK(r.nodes_explored > 0);

  // matches brute force across a regime sweep
  for (int t = 0; t < 6; ++t) {
    int n = 7 + t % 3;
    long long all = static_cast<long long>(n) * (n - 1) / 2;
    Graph g = gen_random_gnm(n, all / 3, 7300 + t);
    Direction dir = t % 2 ? Direction::Min : Direction::Max;
    Rational alpha = dir == Direction::Max ? Rational(t % 3 ? 1 : 2, t % 3 ? 2 : 3)
                                           : Rational(1, t % 3 ? 6 : 3);
    for (int k : {1, 2, 3}) {
      Instance inst = make_instance(g, k, alpha, dir);
      CHECK(solve_subexponential(inst).solution.value ==
            solve_brute_force(inst).solution.value);
    }
  }

  // an impossible width budget trips every gate
  Graph k6 = gen_complete(6);
  CHECK_THROWS_AS(solve_subexponential(make_instance(k6, 2, {1, 2}, Direction::Max), 0),
                  gate_exhausted_error);
}
