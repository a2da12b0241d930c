#pragma once

#include <algorithm>
#include <climits>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "fcgp/errors.hpp"
#include "fcgp/exact.hpp"
#include "fcgp/graph.hpp"
#include "fcgp/instance.hpp"
#include "fcgp/tree_decomposition.hpp"

namespace fcgp {

// Induced subgraph on the first j vertices of a degree ordering, relabeled
// by ordering position.  boundary_weight[p] counts neighbors the vertex at
// position p has beyond the prefix, so prefix-local objectives still equal
// the whole-graph objective for any selection inside the prefix.
struct PrefixSubproblem {
  int j = 0;
  Graph prefix_graph;
  std::vector<long long> boundary_weight;
  std::vector<int> original_ids;
};

inline PrefixSubproblem make_prefix_subproblem(const Graph& g, const DegreeOrdering& ord,
                                               int j) {
  if (j < 0 || j > g.n) throw input_error("prefix length out of range");
  PrefixSubproblem sp;
  sp.j = j;
  sp.original_ids.assign(ord.vertices.begin(), ord.vertices.begin() + j);
  std::vector<int> pos(g.n, -1);
  for (int p = 0; p < j; ++p) pos[sp.original_ids[p]] = p;
  std::vector<std::pair<int, int>> edges;
  for (auto [u, v] : g.edges)
    if (pos[u] >= 0 && pos[v] >= 0)
      edges.push_back({std::min(pos[u], pos[v]), std::max(pos[u], pos[v])});
  sp.prefix_graph = make_graph(j, edges);
  sp.boundary_weight.resize(j);
  for (int p = 0; p < j; ++p)
    sp.boundary_weight[p] = g.degree(sp.original_ids[p]) - sp.prefix_graph.degree(p);
  return sp;
}

// Greedy dominating set: repeatedly take the vertex covering the most not
// yet dominated closed neighborhoods, lowest id on ties.
inline std::vector<int> greedy_dominating_set(const Graph& g) {
  std::vector<char> covered(g.n, 0);
  int uncovered = g.n;
  std::vector<int> ds;
  while (uncovered > 0) {
    int best = -1, best_gain = -1;
    for (int v = 0; v < g.n; ++v) {
      int gain = covered[v] ? 0 : 1;
      for (int u : g.adj[v]) gain += covered[u] ? 0 : 1;
      if (gain > best_gain) {
        best_gain = gain;
        best = v;
      }
    }
    ds.push_back(best);
    if (!covered[best]) {
      covered[best] = 1;
      --uncovered;
    }
    for (int u : g.adj[best])
      if (!covered[u]) {
        covered[u] = 1;
        --uncovered;
      }
  }
  std::sort(ds.begin(), ds.end());
  return ds;
}

namespace detail {

inline void require_ordering_regime(const Instance& inst) {
  Rational third{1, 3};
  if (inst.direction == Direction::Max && inst.alpha < third)
    throw unsupported_error("degree ordering argument needs alpha >= 1/3 for maximization");
  if (inst.direction == Direction::Min && third < inst.alpha)
    throw unsupported_error("degree ordering argument needs alpha <= 1/3 for minimization");
}

}  // namespace detail

// Evidence that the prefix restriction is safe for one instance: the
// position-lexicographic smallest optimum, the prefix length j that contains
// it (its last vertex sits at position j-1), and whether that optimum
// dominates the prefix graph.
struct ExchangeWitness {
  std::vector<int> solution;  // original vertex ids, sorted
  int j = 0;
  bool dominated = false;
};

inline ExchangeWitness check_exchange_lemma(const Instance& inst) {
  detail::require_ordering_regime(inst);
  OrderBy by = inst.direction == Direction::Max ? OrderBy::NonIncreasing : OrderBy::NonDecreasing;
  DegreeOrdering ord = degree_ordering(inst.graph, by);

  // relabel by ordering position so brute force's id-lexicographic tie rule
  // becomes position-lexicographic
  std::vector<int> pos(inst.graph.n);
  for (int p = 0; p < inst.graph.n; ++p) pos[ord.vertices[p]] = p;
  std::vector<std::pair<int, int>> edges;
  for (auto [u, v] : inst.graph.edges)
    edges.push_back({std::min(pos[u], pos[v]), std::max(pos[u], pos[v])});
  Instance relabeled = make_instance(make_graph(inst.graph.n, edges), inst.k, inst.alpha,
                                     inst.direction);
  ExactResult res = solve_brute_force(relabeled);

  ExchangeWitness w;
  w.j = res.solution.vertices.back() + 1;
  std::vector<char> in_set(w.j, 0);
  for (int p : res.solution.vertices) in_set[p] = 1;
  PrefixSubproblem sp = make_prefix_subproblem(inst.graph, ord, w.j);
  w.dominated = true;
  for (int p = 0; p < w.j && w.dominated; ++p) {
    if (in_set[p]) continue;
    bool hit = false;
    for (int u : sp.prefix_graph.adj[p]) hit = hit || in_set[u];
    w.dominated = hit;
  }
  for (int p : res.solution.vertices) w.solution.push_back(ord.vertices[p]);
  std::sort(w.solution.begin(), w.solution.end());
  return w;
}

struct PrefixDpResult {
  Solution solution;  // prefix-local vertex ids
  std::uint64_t states = 0;
};

// Exact DP over a nice tree decomposition of the prefix graph.  Selected
// vertices pay their boundary weight when introduced; introduced edges pay
// the inside or crossing weight by how many endpoints are selected; joins
// subtract what both sides counted for the shared bag.
inline PrefixDpResult dp_solve_prefix(const PrefixSubproblem& sp, const TreeDecomposition& td,
                                      int k, const Rational& alpha, Direction dir,
                                      int force_vertex = -1) {
  const Graph& g = sp.prefix_graph;
  if (auto err = check_decomposition(td, g)) throw input_error("bad decomposition: " + *err);
  if (k < 1 || k > g.n) throw input_error("k out of range for prefix");
  if (force_vertex < -1 || force_vertex >= g.n) throw input_error("forced vertex out of range");
  const AlphaWeights w = alpha_weights(alpha);
  const bool maximize = dir == Direction::Max;
  constexpr long long kNone = LLONG_MIN;
  auto better = [&](long long a, long long b) {
    if (b == kNone) return a != kNone;
    if (a == kNone) return false;
    return maximize ? a > b : a < b;
  };

  const auto order = postorder_nodes(td);
  const int nn = static_cast<int>(td.nodes.size());
  std::vector<std::vector<long long>> table(nn);
  std::vector<std::vector<std::uint8_t>> forget_bit(nn);
  std::vector<std::vector<int>> join_left(nn);
  std::uint64_t states = 0;

  auto bag_pos = [&](const std::vector<int>& bag, int v) {
    return static_cast<int>(std::lower_bound(bag.begin(), bag.end(), v) - bag.begin());
  };
  // widen a child mask by a fresh bit at position p
  auto insert_bit = [](unsigned mask, int p, unsigned bit) {
    unsigned low = mask & ((1u << p) - 1);
    return low | (bit << p) | ((mask >> p) << (p + 1));
  };

  for (int x : order) {
    const auto& nd = td.nodes[x];
    const int bs = static_cast<int>(nd.bag.size());
    const std::size_t masks = std::size_t{1} << bs;
    table[x].assign(masks * (k + 1), kNone);
    states += table[x].size();
    auto at = [&](std::vector<long long>& t, unsigned mask, int c) -> long long& {
      return t[mask * (k + 1) + c];
    };

    switch (nd.kind) {
      case NodeKind::Leaf:
        at(table[x], 0, 0) = 0;
        break;
      case NodeKind::IntroduceVertex: {
        int ch = nd.children[0];
        int p = bag_pos(nd.bag, nd.vertex);
        const std::size_t cmasks = table[ch].size() / (k + 1);
        for (unsigned cm = 0; cm < cmasks; ++cm)
          for (int c = 0; c <= k; ++c) {
            long long base = at(table[ch], cm, c);
            if (base == kNone) continue;
            if (nd.vertex != force_vertex) {
              auto& out = at(table[x], insert_bit(cm, p, 0), c);
              if (better(base, out)) out = base;
            }
            if (c < k) {
              long long val = base + w.cross_w * sp.boundary_weight[nd.vertex];
              auto& in = at(table[x], insert_bit(cm, p, 1), c + 1);
              if (better(val, in)) in = val;
            }
          }
        break;
      }
      case NodeKind::IntroduceEdge: {
        int ch = nd.children[0];
        int pu = bag_pos(nd.bag, nd.edge.first);
        int pv = bag_pos(nd.bag, nd.edge.second);
        for (unsigned mask = 0; mask < masks; ++mask) {
          int ends = ((mask >> pu) & 1) + ((mask >> pv) & 1);
          long long add = ends == 2 ? w.inside_w : ends == 1 ? w.cross_w : 0;
          for (int c = 0; c <= k; ++c) {
            long long base = at(table[ch], mask, c);
            at(table[x], mask, c) = base == kNone ? kNone : base + add;
          }
        }
        break;
      }
      case NodeKind::Forget: {
        int ch = nd.children[0];
        int p = bag_pos(td.nodes[ch].bag, nd.vertex);
        forget_bit[x].assign(masks * (k + 1), 0);
        for (unsigned mask = 0; mask < masks; ++mask)
          for (int c = 0; c <= k; ++c) {
            long long keep = at(table[ch], insert_bit(mask, p, 1), c);
            long long drop = at(table[ch], insert_bit(mask, p, 0), c);
            if (better(keep, drop)) {
              at(table[x], mask, c) = keep;
              forget_bit[x][mask * (k + 1) + c] = 1;
            } else {
              at(table[x], mask, c) = drop;
            }
          }
        break;
      }
      case NodeKind::Join: {
        int a = nd.children[0], b = nd.children[1];
        join_left[x].assign(masks * (k + 1), -1);
        for (unsigned mask = 0; mask < masks; ++mask) {
          int shared = __builtin_popcount(mask);
          long long dup = 0;
          for (int p = 0; p < bs; ++p)
            if ((mask >> p) & 1) dup += w.cross_w * sp.boundary_weight[nd.bag[p]];
          for (int ca = shared; ca <= k; ++ca) {
            long long va = at(table[a], mask, ca);
            if (va == kNone) continue;
            for (int cb = shared; ca + cb - shared <= k; ++cb) {
              long long vb = at(table[b], mask, cb);
              if (vb == kNone) continue;
              int c = ca + cb - shared;
              long long val = va + vb - dup;
              if (better(val, at(table[x], mask, c))) {
                at(table[x], mask, c) = val;
                join_left[x][mask * (k + 1) + c] = ca;
              }
            }
          }
        }
        break;
      }
    }
  }

  long long answer = table[td.root][0 * (k + 1) + k];
  if (answer == kNone) throw std::runtime_error("prefix dp found no feasible selection");

  // walk the stored choices back down, collecting introduce-vertex picks
  std::vector<char> picked(g.n, 0);
  struct Frame {
    int node;
    unsigned mask;
    int c;
  };
  std::vector<Frame> stack{{td.root, 0, k}};
  while (!stack.empty()) {
    auto [x, mask, c] = stack.back();
    stack.pop_back();
    const auto& nd = td.nodes[x];
    switch (nd.kind) {
      case NodeKind::Leaf:
        break;
      case NodeKind::IntroduceVertex: {
        int p = bag_pos(nd.bag, nd.vertex);
        unsigned bit = (mask >> p) & 1;
        if (bit) picked[nd.vertex] = 1;
        unsigned low = mask & ((1u << p) - 1);
        unsigned cm = low | ((mask >> (p + 1)) << p);
        stack.push_back({nd.children[0], cm, c - static_cast<int>(bit)});
        break;
      }
      case NodeKind::IntroduceEdge:
        stack.push_back({nd.children[0], mask, c});
        break;
      case NodeKind::Forget: {
        int ch = nd.children[0];
        int p = bag_pos(td.nodes[ch].bag, nd.vertex);
        unsigned bit = forget_bit[x][mask * (k + 1) + c];
        stack.push_back({ch, insert_bit(mask, p, bit), c});
        break;
      }
      case NodeKind::Join: {
        int ca = join_left[x][mask * (k + 1) + c];
        int shared = __builtin_popcount(mask);
        stack.push_back({nd.children[0], mask, ca});
        stack.push_back({nd.children[1], mask, c - ca + shared});
        break;
      }
    }
  }

  PrefixDpResult res;
  for (int v = 0; v < g.n; ++v)
    if (picked[v]) res.solution.vertices.push_back(v);
  res.solution.value = w.to_value(answer);
  res.solution.provenance = {"prefix-dp", "tree-decomposition"};
  res.states = states;
  return res;
}

// width allowance that grows with sqrt(k); below 4 the decomposition DP is
// cheaper than its scaffolding
inline int default_width_budget(int k) {
  int t = 0;
  while (static_cast<long long>(t) * t < 9LL * k) ++t;
  return std::max(t, 4);
}

// Portfolio driver: try every prefix length j that passes the dominating-set
// and width gates, force the prefix's last vertex, and keep the best answer.
inline ExactResult solve_subexponential(const Instance& inst, int width_budget = -1) {
  detail::require_ordering_regime(inst);
  const int k = inst.k;
  const int budget = width_budget < 0 ? default_width_budget(k) : width_budget;
  OrderBy by = inst.direction == Direction::Max ? OrderBy::NonIncreasing : OrderBy::NonDecreasing;
  DegreeOrdering ord = degree_ordering(inst.graph, by);

  ExactResult out;
  out.method = Method::Subexponential;
  out.nodes_explored = 0;
  bool have = false, processed_any = false;
  for (int j = k; j <= inst.graph.n; ++j) {
    PrefixSubproblem sp = make_prefix_subproblem(inst.graph, ord, j);
    if (static_cast<long long>(greedy_dominating_set(sp.prefix_graph).size()) > 2LL * k)
      continue;
    TreeDecomposition td = tree_decomposition_heuristic(sp.prefix_graph);
    if (td.width > budget) continue;
    processed_any = true;
    PrefixDpResult dp = dp_solve_prefix(sp, td, k, inst.alpha, inst.direction, j - 1);
    out.nodes_explored += dp.states;
    std::vector<int> verts;
    for (int p : dp.solution.vertices) verts.push_back(sp.original_ids[p]);
    std::sort(verts.begin(), verts.end());
    Rational value = cov_alpha(inst.graph, verts, inst.alpha);
    if (!have || improves(value, out.solution.value, inst.direction)) {
      have = true;
      out.solution.vertices = std::move(verts);
      out.solution.value = value;
    }
  }
  if (!processed_any)
    throw gate_exhausted_error(
        "every prefix length failed the dominating-set or width gate; "
        "fall back to branch-and-bound");
  out.solution.provenance = {"subexponential", "ordered-prefix-dp"};
  return out;
}

}  // namespace fcgp
