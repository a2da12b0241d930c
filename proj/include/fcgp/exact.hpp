#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fcgp/errors.hpp"
#include "fcgp/instance.hpp"

namespace fcgp {

enum class Method { BruteForce, BranchAndBound, Subexponential };

struct ExactResult {
  Solution solution;
  std::uint64_t nodes_explored = 0;  // complete k-subsets evaluated
  Method method = Method::BruteForce;
};

inline constexpr std::uint64_t kDefaultSubsetBudget = 100'000'000;

// C(n, k) saturated at cap
inline std::uint64_t binomial_capped(std::uint64_t n, std::uint64_t k, std::uint64_t cap) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  unsigned __int128 r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
    if (r > cap) return cap + 1;
  }
  return static_cast<std::uint64_t>(r);
}

namespace detail {

inline std::vector<int> checked_candidates(const Instance& inst, std::vector<int> candidates) {
  if (candidates.empty()) {
    candidates.resize(inst.graph.n);
    for (int v = 0; v < inst.graph.n; ++v) candidates[v] = v;
    return candidates;
  }
  std::sort(candidates.begin(), candidates.end());
  if (std::adjacent_find(candidates.begin(), candidates.end()) != candidates.end())
    throw input_error("duplicate candidate");
  if (candidates.front() < 0 || candidates.back() >= inst.graph.n)
    throw input_error("candidate out of range");
  if (static_cast<int>(candidates.size()) < inst.k)
    throw input_error("fewer candidates than k");
  return candidates;
}

// Shared enumeration state.  Subsets are visited in lexicographic order of
// their sorted vertex lists; with strict improvement only, the first optimum
// seen is the lexicographically smallest one.
struct SubsetSearch {
  const Graph& g;
  AlphaWeights w;
  int k;
  bool maximize;
  std::vector<int> cand;

  std::vector<char> picked;
  std::vector<int> current;
  long long degsum = 0;
  long long inside = 0;
  std::uint64_t leaves = 0;

  bool have_best = false;
  long long best = 0;
  std::vector<int> best_set;

  SubsetSearch(const Instance& inst, std::vector<int> candidates)
      : g(inst.graph),
        w(alpha_weights(inst.alpha)),
        k(inst.k),
        maximize(inst.direction == Direction::Max),
        cand(std::move(candidates)),
        picked(g.n, 0) {
    current.reserve(k);
  }

  void take(int v) {
    degsum += g.degree(v);
    for (int u : g.adj[v]) inside += picked[u];
    picked[v] = 1;
    current.push_back(v);
  }

  void untake(int v) {
    current.pop_back();
    picked[v] = 0;
    for (int u : g.adj[v]) inside -= picked[u];
    degsum -= g.degree(v);
  }

  void leaf() {
    ++leaves;
    long long val = w.scaled(degsum, inside);
    if (!have_best || (maximize ? val > best : val < best)) {
      have_best = true;
      best = val;
      best_set = current;
    }
  }
};

}  // namespace detail

// Exhaustive reference solver: tries every k-subset of the candidate list
// (all vertices by default).  Refuses up front when the subset count exceeds
// the budget.
inline ExactResult solve_brute_force(const Instance& inst, std::vector<int> candidates = {},
                                     std::uint64_t budget = kDefaultSubsetBudget) {
  std::vector<int> cand = detail::checked_candidates(inst, std::move(candidates));
  std::uint64_t count = binomial_capped(cand.size(), inst.k, budget);
  if (count > budget)
    throw resource_error("brute force would enumerate more than " + std::to_string(budget) +
                         " subsets; use branch-and-bound");

  detail::SubsetSearch s(inst, cand);
  // depth-first over candidate indices, take-before-skip = lexicographic
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (static_cast<int>(s.current.size()) == s.k) {
      s.leaf();
      return;
    }
    std::size_t needed = s.k - s.current.size();
    if (s.cand.size() - i < needed) return;
    int v = s.cand[i];
    s.take(v);
    self(self, i + 1);
    s.untake(v);
    self(self, i + 1);
  };
  rec(rec, 0);

  ExactResult r;
  r.solution.vertices = s.best_set;
  r.solution.value = cov_alpha(inst.graph, s.best_set, inst.alpha);
  r.solution.provenance = {"brute-force", "exhaustive"};
  r.nodes_explored = s.leaves;
  r.method = Method::BruteForce;
  return r;
}

// Depth-first search in the same lexicographic order as brute force, with an
// admissible completion bound, pruning partial selections that cannot
// strictly beat the incumbent (which preserves the lexicographic tie-break).
//
// Picking v with e neighbors already selected changes the scaled objective by
// p*(d(v)-e) + (q-2p)*e: each untouched edge slot lands as a boundary edge
// worth p, each slot into the selection flips a counted boundary edge into an
// internal one, a net q-2p (negative past alpha = 1/2).  So one pick moves
// the value by between min(p, q-2p)*d and max(p, q-2p)*d.  For Max we relax
// the upper constant to max(p, q-p), which dominates, applied to the highest
// remaining degrees; for Min the pessimistic mirror keeps min(p, q-2p) and
// takes the lowest remaining degrees, or the highest once the constant goes
// negative.
inline ExactResult solve_branch_and_bound(const Instance& inst,
                                          std::vector<int> candidates = {}) {
  std::vector<int> cand = detail::checked_candidates(inst, std::move(candidates));
  detail::SubsetSearch s(inst, cand);

  const int k = inst.k;
  const std::size_t nc = cand.size();
  const bool maximize = s.maximize;
  const long long flip_w = s.w.inside_w - s.w.cross_w;  // q - 2p
  const long long coeff = maximize ? std::max(s.w.cross_w, s.w.inside_w)
                                   : std::min(s.w.cross_w, flip_w);
  const bool want_highest = maximize || coeff < 0;

  // extreme_sum[i][r]: sum of the r highest (or lowest) degrees in cand[i..]
  std::vector<std::vector<long long>> extreme_sum(nc + 1, std::vector<long long>(k + 1, 0));
  {
    std::vector<int> kept;  // at most k degrees, best first
    for (std::size_t i = nc; i-- > 0;) {
      int d = s.g.degree(cand[i]);
      auto pos = std::lower_bound(kept.begin(), kept.end(), d, [&](int a, int b) {
        return want_highest ? a > b : a < b;
      });
      kept.insert(pos, d);
      if (static_cast<int>(kept.size()) > k) kept.pop_back();
      long long acc = 0;
      for (int r = 1; r <= k; ++r) {
        if (r <= static_cast<int>(kept.size())) acc += kept[r - 1];
        extreme_sum[i][r] = acc;
      }
    }
  }

  auto rec = [&](auto&& self, std::size_t i) -> void {
    int need = k - static_cast<int>(s.current.size());
    if (need == 0) {
      s.leaf();
      return;
    }
    if (nc - i < static_cast<std::size_t>(need)) return;
    if (s.have_best) {
      long long partial = s.w.scaled(s.degsum, s.inside);
      long long reach = partial + coeff * extreme_sum[i][need];
      if (maximize ? reach <= s.best : reach >= s.best) return;
    }
    int v = s.cand[i];
    s.take(v);
    self(self, i + 1);
    s.untake(v);
    self(self, i + 1);
  };
  rec(rec, 0);

  ExactResult r;
  r.solution.vertices = s.best_set;
  r.solution.value = cov_alpha(inst.graph, s.best_set, inst.alpha);
  r.solution.provenance = {"branch-and-bound", "degree-bound-dfs"};
  r.nodes_explored = s.leaves;
  r.method = Method::BranchAndBound;
  return r;
}

}  // namespace fcgp
