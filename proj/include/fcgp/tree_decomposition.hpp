#pragma once

#include <algorithm>
#include <cstdint>
#include <iterator>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "fcgp/errors.hpp"
#include "fcgp/graph.hpp"

namespace fcgp {

enum class NodeKind { Leaf, IntroduceVertex, IntroduceEdge, Forget, Join };

inline const char* node_kind_name(NodeKind k) {
  switch (k) {
    case NodeKind::Leaf: return "leaf";
    case NodeKind::IntroduceVertex: return "introduce-vertex";
    case NodeKind::IntroduceEdge: return "introduce-edge";
    case NodeKind::Forget: return "forget";
    default: return "join";
  }
}

struct DecompositionNode {
  NodeKind kind = NodeKind::Leaf;
  int parent = -1;
  std::vector<int> children;
  std::vector<int> bag;  // sorted vertex ids
  int vertex = -1;       // subject of IntroduceVertex / Forget
  std::pair<int, int> edge{-1, -1};  // subject of IntroduceEdge
};

// Nice tree decomposition: leaf nodes carry empty bags, the root bag is
// empty, unary nodes introduce a vertex, introduce an edge, or forget a
// vertex, and join nodes merge two children with identical bags.  Every
// graph edge is introduced at exactly one node.
struct TreeDecomposition {
  std::vector<DecompositionNode> nodes;
  int root = -1;
  int width = -1;  // max bag size - 1
};

// plain decomposition before the nice-form rewrite, e.g. straight out of an
// elimination ordering; tree_edges must form a forest over bag indices
struct RawDecomposition {
  std::vector<std::vector<int>> bags;
  std::vector<std::pair<int, int>> tree_edges;
};

// children-before-parent order for bottom-up passes
inline std::vector<int> postorder_nodes(const TreeDecomposition& td) {
  std::vector<int> order;
  order.reserve(td.nodes.size());
  std::vector<int> stack{td.root};
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    order.push_back(x);
    for (int c : td.nodes[x].children) stack.push_back(c);
  }
  std::reverse(order.begin(), order.end());
  return order;
}

// ---- validation ----

// Structural and nice-form invariants; returns a description of the first
// violation, or nothing when the decomposition is sound for g.
inline std::optional<std::string> check_decomposition(const TreeDecomposition& td,
                                                      const Graph& g) {
  const auto& nodes = td.nodes;
  int nn = static_cast<int>(nodes.size());
  if (td.root < 0 || td.root >= nn) return "root out of range";
  if (nodes[td.root].parent != -1) return "root has a parent";

  // parent/children arrays must describe one tree rooted at root
  std::vector<char> seen(nn, 0);
  std::vector<int> stack{td.root};
  int visited = 0;
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    if (x < 0 || x >= nn) return "child index out of range";
    if (seen[x]) return "node reached twice";
    seen[x] = 1;
    ++visited;
    for (int c : nodes[x].children) {
      if (c < 0 || c >= nn) return "child index out of range";
      if (nodes[c].parent != x) return "child/parent mismatch at node " + std::to_string(c);
      stack.push_back(c);
    }
  }
  if (visited != nn) return "unreachable nodes";

  for (int i = 0; i < nn; ++i) {
    const auto& b = nodes[i].bag;
    if (!std::is_sorted(b.begin(), b.end())) return "bag not sorted at node " + std::to_string(i);
    if (std::adjacent_find(b.begin(), b.end()) != b.end())
      return "bag has repeats at node " + std::to_string(i);
    if (!b.empty() && (b.front() < 0 || b.back() >= g.n))
      return "bag member out of range at node " + std::to_string(i);
  }

  auto bag_is = [&](int node, const std::vector<int>& want) {
    return nodes[node].bag == want;
  };

  for (int i = 0; i < nn; ++i) {
    const auto& nd = nodes[i];
    switch (nd.kind) {
      case NodeKind::Leaf:
        if (!nd.children.empty()) return "leaf with children at node " + std::to_string(i);
        if (!nd.bag.empty()) return "leaf bag not empty at node " + std::to_string(i);
        break;
      case NodeKind::IntroduceVertex: {
        if (nd.children.size() != 1) return "introduce-vertex fan-out at node " + std::to_string(i);
        if (nd.vertex < 0 || nd.vertex >= g.n) return "introduced vertex out of range";
        std::vector<int> want = nodes[nd.children[0]].bag;
        if (std::binary_search(want.begin(), want.end(), nd.vertex))
          return "vertex already present below introduce at node " + std::to_string(i);
        want.insert(std::lower_bound(want.begin(), want.end(), nd.vertex), nd.vertex);
        if (!bag_is(i, want)) return "introduce-vertex bag mismatch at node " + std::to_string(i);
        break;
      }
      case NodeKind::IntroduceEdge: {
        if (nd.children.size() != 1) return "introduce-edge fan-out at node " + std::to_string(i);
        auto [u, v] = nd.edge;
        if (u < 0 || v < 0 || u >= v || v >= g.n) return "bad edge subject at node " + std::to_string(i);
        if (!g.has_edge(u, v)) return "introduced edge not in graph at node " + std::to_string(i);
        if (!bag_is(i, nodes[nd.children[0]].bag))
          return "introduce-edge changes bag at node " + std::to_string(i);
        if (!std::binary_search(nd.bag.begin(), nd.bag.end(), u) ||
            !std::binary_search(nd.bag.begin(), nd.bag.end(), v))
          return "edge endpoints missing from bag at node " + std::to_string(i);
        break;
      }
      case NodeKind::Forget: {
        if (nd.children.size() != 1) return "forget fan-out at node " + std::to_string(i);
        if (nd.vertex < 0 || nd.vertex >= g.n) return "forgotten vertex out of range";
        std::vector<int> want = nodes[nd.children[0]].bag;
        auto it = std::lower_bound(want.begin(), want.end(), nd.vertex);
        if (it == want.end() || *it != nd.vertex)
          return "forgotten vertex not in child bag at node " + std::to_string(i);
        want.erase(it);
        if (!bag_is(i, want)) return "forget bag mismatch at node " + std::to_string(i);
        break;
      }
      case NodeKind::Join:
        if (nd.children.size() != 2) return "join fan-out at node " + std::to_string(i);
        if (!bag_is(nd.children[0], nd.bag) || !bag_is(nd.children[1], nd.bag))
          return "join bag mismatch at node " + std::to_string(i);
        break;
    }
  }

  if (!nodes[td.root].bag.empty()) return "root bag not empty";

  // every vertex occurs, and its occurrences form a connected subtree
  std::vector<long long> occur(g.n, 0), links(g.n, 0);
  for (int i = 0; i < nn; ++i)
    for (int v : nodes[i].bag) ++occur[v];
  for (int i = 0; i < nn; ++i) {
    if (i == td.root) continue;
    const auto& a = nodes[i].bag;
    const auto& b = nodes[nodes[i].parent].bag;
    for (int v : a)
      if (std::binary_search(b.begin(), b.end(), v)) ++links[v];
  }
  for (int v = 0; v < g.n; ++v) {
    if (occur[v] == 0) return "vertex " + std::to_string(v) + " in no bag";
    if (links[v] != occur[v] - 1)
      return "occurrences of vertex " + std::to_string(v) + " are disconnected";
  }

  // each graph edge introduced exactly once
  std::vector<int> edge_uses(g.edges.size(), 0);
  for (int i = 0; i < nn; ++i) {
    if (nodes[i].kind != NodeKind::IntroduceEdge) continue;
    auto it = std::lower_bound(g.edges.begin(), g.edges.end(), nodes[i].edge);
    if (it == g.edges.end() || *it != nodes[i].edge)
      return "introduced edge not in graph at node " + std::to_string(i);
    ++edge_uses[it - g.edges.begin()];
  }
  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    if (edge_uses[e] == 0)
      return "edge (" + std::to_string(g.edges[e].first) + "," +
             std::to_string(g.edges[e].second) + ") never introduced";
    if (edge_uses[e] > 1)
      return "edge (" + std::to_string(g.edges[e].first) + "," +
             std::to_string(g.edges[e].second) + ") introduced twice";
  }

  int width = -1;
  for (const auto& nd : nodes) width = std::max(width, static_cast<int>(nd.bag.size()) - 1);
  if (width != td.width) return "stored width is wrong";
  return std::nullopt;
}

// ---- nice-form construction ----

namespace detail {

struct NiceBuilder {
  std::vector<DecompositionNode> nodes;

  int add(NodeKind kind, std::vector<int> bag, int child, int vertex = -1,
          std::pair<int, int> e = {-1, -1}) {
    int id = static_cast<int>(nodes.size());
    DecompositionNode nd;
    nd.kind = kind;
    nd.bag = std::move(bag);
    nd.vertex = vertex;
    nd.edge = e;
    nodes.push_back(std::move(nd));
    if (child >= 0) {
      nodes[id].children.push_back(child);
      nodes[child].parent = id;
    }
    return id;
  }

  int add_join(std::vector<int> bag, int a, int b) {
    int id = add(NodeKind::Join, std::move(bag), a);
    nodes[id].children.push_back(b);
    nodes[b].parent = id;
    return id;
  }

  // chain from `from`'s bag shape up to `to_bag`: forgets first, then introduces
  int morph(int from, const std::vector<int>& to_bag) {
    std::vector<int> cur = nodes[from].bag;
    int top = from;
    std::vector<int> drop, gain;
    std::set_difference(cur.begin(), cur.end(), to_bag.begin(), to_bag.end(),
                        std::back_inserter(drop));
    std::set_difference(to_bag.begin(), to_bag.end(), cur.begin(), cur.end(),
                        std::back_inserter(gain));
    for (int v : drop) {
      cur.erase(std::lower_bound(cur.begin(), cur.end(), v));
      top = add(NodeKind::Forget, cur, top, v);
    }
    for (int v : gain) {
      cur.insert(std::lower_bound(cur.begin(), cur.end(), v), v);
      top = add(NodeKind::IntroduceVertex, cur, top, v);
    }
    return top;
  }
};

}  // namespace detail

// Rewrites a loose decomposition into nice form and places each graph edge
// at exactly one introduce-edge node (directly below the deeper of its two
// endpoints' forget nodes, where both endpoints are still in the bag).
inline TreeDecomposition nice_from_raw(const RawDecomposition& raw, const Graph& g) {
  detail::NiceBuilder b;
  int rn = static_cast<int>(raw.bags.size());

  for (const auto& bag : raw.bags)
    if (!std::is_sorted(bag.begin(), bag.end()) ||
        std::adjacent_find(bag.begin(), bag.end()) != bag.end())
      throw input_error("raw bags must be sorted and duplicate-free");

  // orient the forest, smallest bag index first as the component root
  std::vector<std::vector<int>> nb(rn);
  for (auto [x, y] : raw.tree_edges) {
    if (x < 0 || y < 0 || x >= rn || y >= rn || x == y)
      throw input_error("bad raw tree edge");
    nb[x].push_back(y);
    nb[y].push_back(x);
  }
  std::vector<int> parent(rn, -2), order;
  std::vector<std::vector<int>> kids(rn);
  for (int r = 0; r < rn; ++r) {
    if (parent[r] != -2) continue;
    parent[r] = -1;
    std::vector<int> stack{r};
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      order.push_back(x);
      for (int y : nb[x]) {
        if (parent[y] != -2) continue;
        parent[y] = x;
        kids[x].push_back(y);
        stack.push_back(y);
      }
    }
  }
  if (order.size() != static_cast<std::size_t>(rn))
    throw input_error("raw tree edges contain a cycle");

  // bottom-up: build each raw node's nice subtree, topped by its own bag
  std::vector<int> top(rn, -1);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    int r = *it;
    if (kids[r].empty()) {
      int t = b.add(NodeKind::Leaf, {}, -1);
      top[r] = b.morph(t, raw.bags[r]);
      continue;
    }
    std::vector<int> tops;
    for (int c : kids[r]) tops.push_back(b.morph(top[c], raw.bags[r]));
    int acc = tops[0];
    for (std::size_t i = 1; i < tops.size(); ++i)
      acc = b.add_join(raw.bags[r], acc, tops[i]);
    top[r] = acc;
  }

  // forget everything above each component, then join the components
  std::vector<int> comp_tops;
  for (int r = 0; r < rn; ++r)
    if (parent[r] == -1) comp_tops.push_back(b.morph(top[r], {}));
  int root;
  if (comp_tops.empty()) {
    root = b.add(NodeKind::Leaf, {}, -1);
  } else {
    root = comp_tops[0];
    for (std::size_t i = 1; i < comp_tops.size(); ++i)
      root = b.add_join({}, root, comp_tops[i]);
  }

  // hang introduce-edge nodes below the deeper forget of each edge's endpoints
  int nn = static_cast<int>(b.nodes.size());
  std::vector<int> depth(nn, 0), forget_of(g.n, -1);
  {
    std::vector<int> stack{root};
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (int c : b.nodes[x].children) {
        depth[c] = depth[x] + 1;
        stack.push_back(c);
      }
    }
    for (int i = 0; i < nn; ++i)
      if (b.nodes[i].kind == NodeKind::Forget) {
        if (forget_of[b.nodes[i].vertex] != -1)
          throw input_error("raw decomposition repeats a vertex across components");
        forget_of[b.nodes[i].vertex] = i;
      }
  }
  std::vector<std::vector<std::pair<int, int>>> pending(nn);
  for (auto [u, v] : g.edges) {
    if (forget_of[u] < 0 || forget_of[v] < 0)
      throw input_error("raw decomposition misses a vertex");
    int f = depth[forget_of[u]] >= depth[forget_of[v]] ? forget_of[u] : forget_of[v];
    pending[f].push_back({u, v});
  }
  for (int f = 0; f < nn; ++f) {
    if (pending[f].empty()) continue;
    // insert in descending order so the chain reads ascending from the top
    std::sort(pending[f].rbegin(), pending[f].rend());
    for (auto e : pending[f]) {
      int c = b.nodes[f].children[0];
      const std::vector<int>& bag = b.nodes[c].bag;
      if (!std::binary_search(bag.begin(), bag.end(), e.first) ||
          !std::binary_search(bag.begin(), bag.end(), e.second))
        throw input_error("no raw bag contains both endpoints of an edge");
      int id = b.add(NodeKind::IntroduceEdge, b.nodes[c].bag, -1, -1, e);
      b.nodes[id].children.push_back(c);
      b.nodes[c].parent = id;
      b.nodes[f].children[0] = id;
      b.nodes[id].parent = f;
    }
  }

  TreeDecomposition td;
  td.nodes = std::move(b.nodes);
  td.root = root;
  td.width = -1;
  for (const auto& nd : td.nodes)
    td.width = std::max(td.width, static_cast<int>(nd.bag.size()) - 1);
  return td;
}

// ---- elimination-ordering heuristic ----

namespace detail {

struct BitRows {
  int n = 0, words = 0;
  std::vector<std::uint64_t> bits;

  explicit BitRows(int n_) : n(n_), words((n_ + 63) / 64), bits(static_cast<std::size_t>(n_) * words, 0) {}
  std::uint64_t* row(int v) { return bits.data() + static_cast<std::size_t>(v) * words; }
  const std::uint64_t* row(int v) const { return bits.data() + static_cast<std::size_t>(v) * words; }
  bool get(int u, int v) const { return (row(u)[v >> 6] >> (v & 63)) & 1; }
  void set(int u, int v) {
    row(u)[v >> 6] |= std::uint64_t{1} << (v & 63);
    row(v)[u >> 6] |= std::uint64_t{1} << (u & 63);
  }
};

}  // namespace detail

// Min-fill elimination ordering (ties: fewer current neighbors, then lower
// id), turned into one bag per eliminated vertex.  Quadratic-ish and meant
// for modest graphs; the width is heuristic, the decomposition itself always
// valid.
inline RawDecomposition elimination_decomposition(const Graph& g) {
  const int n = g.n;
  if (n > 32768) throw resource_error("decomposition heuristic capped at 32768 vertices");
  RawDecomposition raw;
  if (n == 0) return raw;

  detail::BitRows adj(n);
  for (auto [u, v] : g.edges) adj.set(u, v);
  std::vector<std::uint64_t> present((n + 63) / 64, 0);
  for (int v = 0; v < n; ++v) present[v >> 6] |= std::uint64_t{1} << (v & 63);
  std::vector<int> cur_deg(n);
  for (int v = 0; v < n; ++v) cur_deg[v] = g.degree(v);

  const int words = adj.words;
  std::vector<std::uint64_t> nbmask(words);
  std::vector<int> nb;
  std::vector<std::vector<int>> bag_of(n);
  std::vector<int> elim_pos(n, -1);

  auto neighbors_present = [&](int v, std::vector<int>& out) {
    const std::uint64_t* r = adj.row(v);
    out.clear();
    for (int w = 0; w < words; ++w) {
      std::uint64_t bitsw = r[w] & present[w];
      while (bitsw) {
        int b = __builtin_ctzll(bitsw);
        out.push_back(w * 64 + b);
        bitsw &= bitsw - 1;
      }
    }
  };

  for (int round = 0; round < n; ++round) {
    long long best_fill = -1;
    int best_deg = -1, best_v = -1;
    for (int v = 0; v < n; ++v) {
      if (!((present[v >> 6] >> (v & 63)) & 1)) continue;
      int d = cur_deg[v];
      // even a fill of zero cannot beat the incumbent: skip without counting
      if (best_fill == 0 && (d > best_deg || (d == best_deg && v > best_v))) continue;
      neighbors_present(v, nb);
      for (int w = 0; w < words; ++w) nbmask[w] = 0;
      for (int u : nb) nbmask[u >> 6] |= std::uint64_t{1} << (u & 63);
      long long missing2 = 0;  // twice the fill-in
      long long cap = best_fill < 0 ? -1 : 2 * best_fill;
      for (int u : nb) {
        const std::uint64_t* ru = adj.row(u);
        int hit = 0;
        for (int w = 0; w < words; ++w) hit += __builtin_popcountll(ru[w] & nbmask[w]);
        missing2 += d - 1 - hit;
        if (cap >= 0 && missing2 > cap) break;
      }
      long long fill = missing2 / 2;
      if (cap >= 0 && missing2 > cap) continue;
      if (best_fill < 0 || fill < best_fill ||
          (fill == best_fill && (d < best_deg || (d == best_deg && v < best_v)))) {
        best_fill = fill;
        best_deg = d;
        best_v = v;
      }
    }

    int v = best_v;
    neighbors_present(v, nb);
    bag_of[v] = nb;
    bag_of[v].push_back(v);
    std::sort(bag_of[v].begin(), bag_of[v].end());
    elim_pos[v] = round;
    raw.bags.push_back(bag_of[v]);

    for (std::size_t i = 0; i < nb.size(); ++i)
      for (std::size_t j = i + 1; j < nb.size(); ++j)
        if (!adj.get(nb[i], nb[j])) {
          adj.set(nb[i], nb[j]);
          ++cur_deg[nb[i]];
          ++cur_deg[nb[j]];
        }
    present[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
    for (int u : nb) --cur_deg[u];
  }

  // bag i belongs to the i-th eliminated vertex; link it to the bag of its
  // earliest-eliminated surviving neighbor
  std::vector<int> vertex_at(n);
  for (int v = 0; v < n; ++v) vertex_at[elim_pos[v]] = v;
  for (int i = 0; i < n; ++i) {
    int v = vertex_at[i];
    int link = -1;
    for (int u : bag_of[v])
      if (u != v && (link == -1 || elim_pos[u] < elim_pos[link])) link = u;
    if (link != -1) raw.tree_edges.push_back({i, elim_pos[link]});
  }
  return raw;
}

inline TreeDecomposition tree_decomposition_heuristic(const Graph& g) {
  TreeDecomposition td = nice_from_raw(elimination_decomposition(g), g);
  if (auto err = check_decomposition(td, g))
    throw input_error("heuristic produced an invalid decomposition: " + *err);
  return td;
}

// one line per node: id kind[:subject] parent bag-members...
inline void dump_decomposition(std::ostream& out, const TreeDecomposition& td) {
  for (std::size_t i = 0; i < td.nodes.size(); ++i) {
    const auto& nd = td.nodes[i];
    out << i << ' ' << node_kind_name(nd.kind);
    if (nd.kind == NodeKind::IntroduceVertex || nd.kind == NodeKind::Forget)
      out << ':' << nd.vertex;
    else if (nd.kind == NodeKind::IntroduceEdge)
      out << ':' << nd.edge.first << '-' << nd.edge.second;
    out << ' ' << nd.parent;
    for (int v : nd.bag) out << ' ' << v;
    out << '\n';
  }
}

}  // namespace fcgp
