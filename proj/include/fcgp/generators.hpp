#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "fcgp/errors.hpp"
#include "fcgp/graph.hpp"
#include "fcgp/instance.hpp"

namespace fcgp {
namespace detail {

// mt19937_64 is bit-exact across platforms; the rejection loop removes the
// modulo bias so generated graphs only depend on the seed
struct SplitRng {
  std::mt19937_64 eng;

  explicit SplitRng(std::uint64_t seed) : eng(seed) {}
  std::uint64_t below(std::uint64_t bound) {
    std::uint64_t rem = (0 - bound) % bound;
    for (;;) {
      std::uint64_t x = eng();
      if (x >= rem) return x % bound;
    }
  }
};

}  // namespace detail

// ---- adversarial gap family ----

// hub_count hubs, each the center of its own k-star, next to a disjoint
// k-clique; pendant vertices pad the tail.  At alpha = 1/3 - margin the
// degree-greedy rule grabs hubs while the clique is the better pick.
struct GapInstanceSpec {
  int k = 2;
  int hub_count = 1;
  Rational margin{1, 10};
};

inline void check_gap_spec(const GapInstanceSpec& spec) {
  if (spec.k < 2) throw input_error("gap family needs k >= 2");
  if (spec.hub_count < 1) throw input_error("gap family needs at least one hub");
  if (spec.margin.sign() <= 0 || Rational(1, 3) < spec.margin)
    throw input_error("gap margin must lie in (0, 1/3]");
}

inline Graph gen_gap_graph(const GapInstanceSpec& spec) {
  check_gap_spec(spec);
  const int k = spec.k, hubs = spec.hub_count;
  const int clique0 = hubs;          // clique occupies [hubs, hubs + k)
  const int pend0 = hubs + k;        // hub i owns pendants pend0 + i*k ..
  const int n = hubs + k + hubs * k;
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < hubs; ++i)
    for (int t = 0; t < k; ++t) edges.push_back({i, pend0 + i * k + t});
  for (int a = 0; a < k; ++a)
    for (int b = a + 1; b < k; ++b) edges.push_back({clique0 + a, clique0 + b});
  return make_graph(n, edges);
}

inline Instance gen_gap_instance(const GapInstanceSpec& spec) {
  return make_instance(gen_gap_graph(spec), spec.k, Rational(1, 3) - spec.margin,
                       Direction::Max);
}

// the k hubs a degree-greedy pick gravitates to, and the clique it misses
inline std::vector<int> gap_hub_set(const GapInstanceSpec& spec) {
  check_gap_spec(spec);
  if (spec.hub_count < spec.k) throw input_error("need at least k hubs for a hub selection");
  std::vector<int> s(spec.k);
  for (int i = 0; i < spec.k; ++i) s[i] = i;
  return s;
}

inline std::vector<int> gap_clique_set(const GapInstanceSpec& spec) {
  check_gap_spec(spec);
  std::vector<int> s(spec.k);
  for (int i = 0; i < spec.k; ++i) s[i] = spec.hub_count + i;
  return s;
}

struct GapReport {
  Rational alpha;
  Rational hub_value;     // all-hubs selection: alpha * k^2
  Rational clique_value;  // clique selection: (1 - alpha) * k(k-1)/2
  Rational ratio;         // hub over clique
  Rational loose_bound;       // 1 - 3 * margin
  Rational asymptotic_bound;  // (1/3 - margin) / (1/3 + margin)
};

inline GapReport gap_report(const GapInstanceSpec& spec) {
  check_gap_spec(spec);
  const long long k = spec.k;
  GapReport r;
  r.alpha = Rational(1, 3) - spec.margin;
  r.hub_value = r.alpha * Rational(k * k);
  r.clique_value = (Rational(1) - r.alpha) * Rational(k * (k - 1) / 2);
  r.ratio = r.hub_value / r.clique_value;
  r.loose_bound = Rational(1) - Rational(3) * spec.margin;
  r.asymptotic_bound = (Rational(1, 3) - spec.margin) / (Rational(1, 3) + spec.margin);
  return r;
}

// ---- tiny deterministic families ----

inline Graph gen_complete(int n) {
  if (n < 0) throw input_error("vertex count must be nonnegative");
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) edges.push_back({u, v});
  return make_graph(n, std::move(edges));
}

inline Graph gen_cycle(int n) {
  if (n < 3) throw input_error("cycle needs at least 3 vertices");
  std::vector<std::pair<int, int>> edges;
  for (int v = 0; v + 1 < n; ++v) edges.push_back({v, v + 1});
  edges.push_back({0, n - 1});
  return make_graph(n, std::move(edges));
}

inline Graph gen_path(int n) {
  if (n < 1) throw input_error("path needs at least 1 vertex");
  std::vector<std::pair<int, int>> edges;
  for (int v = 0; v + 1 < n; ++v) edges.push_back({v, v + 1});
  return make_graph(n, std::move(edges));
}

// vertex 0 is the center
inline Graph gen_star(int leaves) {
  if (leaves < 0) throw input_error("leaf count must be nonnegative");
  std::vector<std::pair<int, int>> edges;
  for (int v = 1; v <= leaves; ++v) edges.push_back({0, v});
  return make_graph(leaves + 1, std::move(edges));
}

// ---- random families ----

inline Graph gen_random_gnm(int n, long long m, std::uint64_t seed) {
  if (n < 0) throw input_error("vertex count must be nonnegative");
  const long long pairs = static_cast<long long>(n) * (n - 1) / 2;
  if (m < 0 || m > pairs) throw input_error("edge count out of range");
  detail::SplitRng rng(seed);
  std::vector<std::pair<int, int>> edges;
  if (pairs <= 5'000'000) {
    // partial Fisher-Yates over the explicit pair list
    std::vector<std::pair<int, int>> all;
    all.reserve(pairs);
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v) all.push_back({u, v});
    for (long long i = 0; i < m; ++i) {
      long long pick = i + static_cast<long long>(rng.below(pairs - i));
      std::swap(all[i], all[pick]);
    }
    edges.assign(all.begin(), all.begin() + m);
  } else {
    std::set<std::pair<int, int>> chosen;
    while (static_cast<long long>(chosen.size()) < m) {
      int u = static_cast<int>(rng.below(n));
      int v = static_cast<int>(rng.below(n));
      if (u == v) continue;
      chosen.insert({std::min(u, v), std::max(u, v)});
    }
    edges.assign(chosen.begin(), chosen.end());
  }
  return make_graph(n, std::move(edges));
}

inline Graph gen_grid(int rows, int cols) {
  if (rows < 1 || cols < 1) throw input_error("grid needs positive dimensions");
  std::vector<std::pair<int, int>> edges;
  auto id = [&](int r, int c) { return r * cols + c; };
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) {
      if (c + 1 < cols) edges.push_back({id(r, c), id(r, c + 1)});
      if (r + 1 < rows) edges.push_back({id(r, c), id(r + 1, c)});
    }
  return make_graph(rows * cols, std::move(edges));
}

// pairing model with retry; bails out rather than looping forever on
// parameter choices that rarely pair up simple
inline Graph gen_regular(int n, int d, std::uint64_t seed) {
  if (n < 0 || d < 0 || d >= std::max(n, 1))
    throw input_error("regular graph needs 0 <= d < n");
  if ((static_cast<long long>(n) * d) % 2 != 0)
    throw input_error("regular graph needs n * d even");
  if (d == 0) return make_graph(n, {});
  detail::SplitRng rng(seed);
  const long long stubs = static_cast<long long>(n) * d;
  std::vector<int> stub(stubs);
  for (long long i = 0; i < stubs; ++i) stub[i] = static_cast<int>(i / d);
  for (int attempt = 0; attempt < 1000; ++attempt) {
    for (long long i = stubs - 1; i > 0; --i) {
      long long jx = static_cast<long long>(rng.below(i + 1));
      std::swap(stub[i], stub[jx]);
    }
    std::set<std::pair<int, int>> chosen;
    bool ok = true;
    for (long long i = 0; i + 1 < stubs && ok; i += 2) {
      int u = stub[i], v = stub[i + 1];
      if (u == v) ok = false;
      else ok = chosen.insert({std::min(u, v), std::max(u, v)}).second;
    }
    if (ok) return make_graph(n, {chosen.begin(), chosen.end()});
  }
  throw resource_error("pairing model failed to produce a simple graph; lower d or change seed");
}

}  // namespace fcgp
