#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "fcgp/errors.hpp"
#include "fcgp/exact.hpp"
#include "fcgp/instance.hpp"

namespace fcgp {

enum class ApproxBranch { Greedy, BoundedDegree, CandidateEnum };

inline const char* approx_branch_name(ApproxBranch b) {
  switch (b) {
    case ApproxBranch::Greedy: return "greedy";
    case ApproxBranch::BoundedDegree: return "bounded-degree-exact";
    default: return "candidate-enumeration";
  }
}

struct ApproxResult {
  Solution solution;
  ApproxBranch branch = ApproxBranch::Greedy;
  Rational guarantee;  // promised factor: 1-eps for Max, 1+eps for Min
  std::optional<Rational> degree_threshold;  // cutoff used by the general scheme
};

// k vertices of extremal degree: largest for Max, smallest for Min, ties by
// ascending id.  Off from the optimum by at most 2k^2 additively: swapping
// one chosen vertex for an optimal one changes at most 2k edge slots.
inline Solution greedy_extremal_degree(const Instance& inst) {
  DegreeOrdering ord = degree_ordering(
      inst.graph, inst.direction == Direction::Max ? OrderBy::NonIncreasing
                                                   : OrderBy::NonDecreasing);
  std::vector<int> pick(ord.vertices.begin(), ord.vertices.begin() + inst.k);
  std::sort(pick.begin(), pick.end());
  Solution s;
  s.vertices = std::move(pick);
  s.value = cov_alpha(inst.graph, s.vertices, inst.alpha);
  s.provenance = {"greedy", inst.direction == Direction::Max ? "top-degree" : "bottom-degree"};
  return s;
}

namespace detail {

inline void check_epsilon(const Rational& eps, bool allow_one) {
  if (eps.sign() <= 0 || eps > Rational(1) || (!allow_one && eps == Rational(1)))
    throw unsupported_error("epsilon outside " + std::string(allow_one ? "(0, 1]" : "(0, 1)"));
}

inline int max_degree(const Graph& g) {
  int d = 0;
  for (int v = 0; v < g.n; ++v) d = std::max(d, g.degree(v));
  return d;
}

}  // namespace detail

// Approximation scheme for general graphs, factor 1-eps (Max) / 1+eps (Min).
//
// Max: with the degree cutoff D = 2k^2/(eps*alpha) + k, a maximum degree
// above D makes the greedy value alone at least alpha*(d_max - k) > 2k^2/eps,
// which absorbs the additive 2k^2 loss; otherwise the graph is degree-bounded
// and an exact search is run as-is.
//
// Min: the greedy pick is good once the optimum is large (>= 2k^2/eps); a
// small optimum cannot afford any vertex of degree above D, so an exact
// search restricted to the low-degree candidate pool covers that case.  The
// better of the two answers is returned.
inline ApproxResult fptas_general(const Instance& inst, const Rational& eps) {
  if (inst.alpha.sign() == 0)
    throw unsupported_error("alpha = 0 is outside this scheme; use an exact solver");
  detail::check_epsilon(eps, /*allow_one=*/true);

  const long long k = inst.k;
  const Rational cutoff =
      Rational(2 * k * k) / (eps * inst.alpha) + Rational(k);

  ApproxResult r;
  r.degree_threshold = cutoff;

  if (inst.direction == Direction::Max) {
    r.guarantee = Rational(1) - eps;
    if (Rational(detail::max_degree(inst.graph)) > cutoff) {
      r.solution = greedy_extremal_degree(inst);
      r.solution.provenance = {"fptas-general", "high-degree-greedy"};
      r.branch = ApproxBranch::Greedy;
    } else {
      r.solution = solve_branch_and_bound(inst).solution;
      r.solution.provenance = {"fptas-general", "degree-bounded-exact"};
      r.branch = ApproxBranch::BoundedDegree;
    }
    return r;
  }

  r.guarantee = Rational(1) + eps;
  Solution greedy = greedy_extremal_degree(inst);
  std::vector<int> pool;
  for (int v = 0; v < inst.graph.n; ++v)
    if (Rational(inst.graph.degree(v)) <= cutoff) pool.push_back(v);
  if (static_cast<int>(pool.size()) >= inst.k) {
    Solution exact = solve_branch_and_bound(inst, pool).solution;
    if (exact.value <= greedy.value) {
      exact.provenance = {"fptas-general", "low-degree-exact"};
      r.solution = std::move(exact);
      r.branch = ApproxBranch::BoundedDegree;
      return r;
    }
  }
  greedy.provenance = {"fptas-general", "low-degree-greedy"};
  r.solution = std::move(greedy);
  r.branch = ApproxBranch::Greedy;
  return r;
}

// the candidate pool for the top-degree scheme: the k + ceil(4k/eps^2)
// highest-degree vertices (ties by id), or everything if that already
// exceeds n
inline std::vector<int> top_degree_candidates(const Graph& g, int k, const Rational& eps) {
  detail::check_epsilon(eps, /*allow_one=*/false);
  Rational need = Rational(4 * static_cast<long long>(k)) / (eps * eps);
  long long want = static_cast<long long>(k) + ceil_to_int(need);
  long long take = std::min<long long>(want, g.n);
  DegreeOrdering ord = degree_ordering(g, OrderBy::NonIncreasing);
  std::vector<int> cand(ord.vertices.begin(), ord.vertices.begin() + take);
  std::sort(cand.begin(), cand.end());
  return cand;
}

// Maximization scheme for alpha >= 1/3: some optimum can always be pushed
// into the top k + ceil(4k/eps^2) degrees at a 1-eps loss, so exhaustive
// search over that candidate set suffices.
inline ApproxResult fptas_topdegree(const Instance& inst, const Rational& eps,
                                    std::uint64_t budget = kDefaultSubsetBudget) {
  if (inst.direction != Direction::Max)
    throw unsupported_error("top-degree scheme handles maximization only");
  if (inst.alpha < Rational(1, 3))
    throw unsupported_error("top-degree scheme needs alpha >= 1/3");
  detail::check_epsilon(eps, /*allow_one=*/false);

  std::vector<int> cand = top_degree_candidates(inst.graph, inst.k, eps);
  ExactResult er = solve_brute_force(inst, cand, budget);

  ApproxResult r;
  r.solution = std::move(er.solution);
  r.solution.provenance = {"fptas-topdegree", "candidate-enumeration"};
  r.branch = ApproxBranch::CandidateEnum;
  r.guarantee = Rational(1) - eps;
  return r;
}

}  // namespace fcgp
