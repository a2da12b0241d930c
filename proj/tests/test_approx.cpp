#include <catch2/catch_amalgamated.hpp>

#include "fcgp/approx.hpp"
#include "fcgp/generators.hpp"
#include "oracle.hpp"

using namespace fcgp;

TEST_CASE("greedy extremal degree") {
  Graph c4 = gen_cycle(4);
  Solution s = greedy_extremal_degree(make_instance(c4, 2, {1, 2}, Direction::Max));
  CHECK(s.vertices == std::vector<int>{0, 1});  // all degrees tie, ids decide
  CHECK(s.value == Rational(3, 2));
  CHECK(s.provenance.algorithm == "greedy");
  CHECK(s.provenance.branch == "top-degree");

  Graph star = gen_star(3);
  Solution c = greedy_extremal_degree(make_instance(star, 1, {1, 1}, Direction::Max));
  CHECK(c.vertices == std::vector<int>{0});
  CHECK(c.value == Rational(3));

  Solution leaf = greedy_extremal_degree(make_instance(star, 1, {1, 1}, Direction::Min));
  CHECK(leaf.vertices == std::vector<int>{1});
  CHECK(leaf.value == Rational(1));
  CHECK(leaf.provenance.branch == "bottom-degree");
}

TEST_CASE("epsilon ranges") {
  Graph g = gen_cycle(5);
  Instance mx = make_instance(g, 2, {1, 2}, Direction::Max);
  CHECK_THROWS_AS(fptas_general(mx, Rational(0)), unsupported_error);
  CHECK_THROWS_AS(fptas_general(mx, Rational(2)), unsupported_error);
  CHECK_THROWS_AS(fptas_general(mx, Rational(-1, 2)), unsupported_error);
  CHECK_NOTHROW(fptas_general(mx, Rational(1)));  // closed at 1
  CHECK_THROWS_AS(fptas_topdegree(mx, Rational(1)), unsupported_error);  // open at 1
  CHECK_NOTHROW(fptas_topdegree(mx, Rational(1, 2)));

  Instance zero = make_instance(g, 2, {0, 1}, Direction::Max);
  CHECK_THROWS_AS(fptas_general(zero, Rational(1, 2)), unsupported_error);
  CHECK_THROWS_WITH(fptas_general(zero, Rational(1, 2)),
                    Catch::Matchers::ContainsSubstring("exact solver"));
}

TEST_CASE("general scheme branch selection on stars") {
  // k = 1, eps = 1/2, alpha = 1/2 puts the degree cutoff at exactly 9
  Rational eps{1, 2};
  Graph at = gen_star(9);
  ApproxResult on_cut = fptas_general(make_instance(at, 1, {1, 2}, Direction::Max), eps);
  CHECK(on_cut.branch == ApproxBranch::BoundedDegree);
  CHECK(on_cut.degree_threshold == Rational(9));
  CHECK(on_cut.solution.provenance.branch == "degree-bounded-exact");
  CHECK(on_cut.solution.value == Rational(9, 2));  // exact: the center

  Graph above = gen_star(10);
  ApproxResult over = fptas_general(make_instance(above, 1, {1, 2}, Direction::Max), eps);
  CHECK(over.branch == ApproxBranch::Greedy);
  CHECK(over.solution.provenance.branch == "high-degree-greedy");
  CHECK(over.solution.vertices == std::vector<int>{0});
  CHECK(over.guarantee == Rational(1, 2));
}

TEST_CASE("general scheme minimization branches") {
  // low-degree pool covers the whole star; exact answer wins the tie
  Graph star = gen_star(6);
  ApproxResult r = fptas_general(make_instance(star, 2, {1, 2}, Direction::Min), Rational(1));
  CHECK(r.branch == ApproxBranch::BoundedDegree);
  CHECK(r.solution.provenance.branch == "low-degree-exact");
  CHECK(r.solution.vertices == std::vector<int>{1, 2});
  CHECK(r.solution.value == Rational(1));
  CHECK(r.guarantee == Rational(2));

  // K20 at alpha = 1: every degree is 19, the pool (cutoff 10) is empty
  Graph k20 = gen_complete(20);
  ApproxResult g = fptas_general(make_instance(k20, 2, {1, 1}, Direction::Min), Rational(1));
  CHECK(g.branch == ApproxBranch::Greedy);
  CHECK(g.solution.provenance.branch == "low-degree-greedy");
  CHECK(g.solution.value == Rational(36));
}

TEST_CASE("top-degree candidate pool") {
  // k = 2, eps = 1/2: k + ceil(4k/eps^2) = 2 + 32 = 34
  Graph big = gen_complete(40);
  std::vector<int> cand = top_degree_candidates(big, 2, {1, 2});
  REQUIRE(cand.size() == 34);
  CHECK(std::is_sorted(cand.begin(), cand.end()));
  CHECK(cand.front() == 0);
  CHECK(cand.back() == 33);  // degree ties resolved by id

  Graph small = gen_complete(10);
  CHECK(top_degree_candidates(small, 2, {1, 2}).size() == 10);
}

TEST_CASE("top-degree scheme regime") {
  Graph c5 = gen_cycle(5);
  CHECK_THROWS_AS(fptas_topdegree(make_instance(c5, 2, {1, 2}, Direction::Min), Rational(1, 2)),
                  unsupported_error);
  CHECK_THROWS_AS(fptas_topdegree(make_instance(c5, 2, {1, 4}, Direction::Max), Rational(1, 2)),
                  unsupported_error);

  ApproxResult r = fptas_topdegree(make_instance(c5, 2, {1, 2}, Direction::Max), Rational(1, 2));
  CHECK(r.branch == ApproxBranch::CandidateEnum);
  CHECK(r.solution.provenance.algorithm == "fptas-topdegree");
  CHECK(r.solution.vertices == std::vector<int>{0, 2});
  CHECK(r.solution.value == Rational(2));
  CHECK(r.guarantee == Rational(1, 2));
}

TEST_CASE("guarantees hold against the oracle") {
  const Rational alphas[] = {{1, 4}, {1, 3}, {1, 2}, {3, 4}, {1, 1}};
  const Rational epss[] = {{1, 4}, {1, 2}};
  for (int t = 0; t < 10; ++t) {
    int n = 7 + t % 4;
    long long all = static_cast<long long>(n) * (n - 1) / 2;
    Graph g = gen_random_gnm(n, t % 2 ? all / 3 : all / 2, 4200 + t);
    oracle::NaiveGraph ng{g.n, g.edges};
    for (int k : {1, 2, 3})
      for (const Rational& a : alphas)
        for (Direction dir : {Direction::Max, Direction::Min}) {
          Instance inst = make_instance(g, k, a, dir);
          Rational opt = oracle::best_subset(ng, k, a, dir == Direction::Max).value;

          Rational greedy = greedy_extremal_degree(inst).value;
          Rational slack = dir == Direction::Max ? opt - greedy : greedy - opt;
          REQUIRE(slack.sign() >= 0);
          REQUIRE(slack <= Rational(2 * k * k));

          for (const Rational& eps : epss) {
            Rational got = fptas_general(inst, eps).solution.value;
            if (dir == Direction::Max)
              REQUIRE(got >= (Rational(1) - eps) * opt);
            else
              REQUIRE(got <= (Rational(1) + eps) * opt);

            if (dir == Direction::Max && a >= Rational(1, 3)) {
              Rational td = fptas_topdegree(inst, eps).solution.value;
              REQUIRE(td >= (Rational(1) - eps) * opt);
            }
          }
        }
  }
}
