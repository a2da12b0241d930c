#pragma once

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "fcgp/errors.hpp"
#include "fcgp/rational.hpp"

namespace fcgp {

// Simple undirected graph on vertices 0..n-1.  Edges are stored once as
// (u, v) with u < v, sorted lexicographically; adjacency lists are sorted.
struct Graph {
  int n = 0;
  std::vector<std::pair<int, int>> edges;
  std::vector<std::vector<int>> adj;

  long long m() const { return static_cast<long long>(edges.size()); }
  int degree(int v) const { return static_cast<int>(adj[v].size()); }

  bool has_edge(int u, int v) const {
    if (u == v) return false;
    const std::vector<int>& a = adj[u].size() <= adj[v].size() ? adj[u] : adj[v];
    int other = (&a == &adj[u]) ? v : u;
    return std::binary_search(a.begin(), a.end(), other);
  }
};

// validates and normalizes an edge list into a Graph
inline Graph make_graph(int n, std::vector<std::pair<int, int>> edges) {
  if (n < 0) throw input_error("negative vertex count");
  for (auto& [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw input_error("edge endpoint out of range");
    if (u == v) throw input_error("self-loop");
    if (u > v) std::swap(u, v);
  }
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
    throw input_error("duplicate edge");
  Graph g;
  g.n = n;
  g.edges = std::move(edges);
  g.adj.assign(n, {});
  for (auto [u, v] : g.edges) {
    g.adj[u].push_back(v);
    g.adj[v].push_back(u);
  }
  for (auto& a : g.adj) std::sort(a.begin(), a.end());
  return g;
}

// ---- edge-list text format ----
//
// line 1:       n m
// lines 2..m+1: u v        with 0 <= u < v < n
//
// Duplicates and self-loops are rejected.  Errors carry the offending line.

inline Graph read_edge_list(std::istream& in) {
  auto read_pair = [](const std::string& line, int lineno, long long& a, long long& b) {
    std::istringstream ss(line);
    if (!(ss >> a >> b)) throw parse_error(lineno, "expected two integers");
    std::string rest;
    if (ss >> rest) throw parse_error(lineno, "trailing content '" + rest + "'");
  };

  std::string line;
  int lineno = 0;
  do {
    if (!std::getline(in, line)) throw parse_error(1, "missing header");
    ++lineno;
  } while (line.find_first_not_of(" \t\r") == std::string::npos);

  long long n, m;
  read_pair(line, lineno, n, m);
  if (n < 0 || m < 0) throw parse_error(lineno, "negative count");
  if (n > (1LL << 30)) throw parse_error(lineno, "vertex count too large");
  if (m > n * (n - 1) / 2) throw parse_error(lineno, "more edges than a simple graph allows");

  std::vector<std::pair<int, int>> edges;
  edges.reserve(static_cast<std::size_t>(m));
  std::set<std::pair<long long, long long>> seen;
  for (long long i = 0; i < m; ++i) {
    if (!std::getline(in, line)) throw parse_error(lineno + 1, "unexpected end of input");
    ++lineno;
    long long u, v;
    read_pair(line, lineno, u, v);
    if (u < 0 || v >= n) throw parse_error(lineno, "endpoint out of range");
    if (u == v) throw parse_error(lineno, "self-loop");
    if (u > v) throw parse_error(lineno, "endpoints must satisfy u < v");
    if (!seen.insert({u, v}).second) throw parse_error(lineno, "duplicate edge");
    edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
  }
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") != std::string::npos)
      throw parse_error(lineno, "content after last edge");
  }
  return make_graph(static_cast<int>(n), std::move(edges));
}

inline void write_edge_list(std::ostream& out, const Graph& g) {
  out << g.n << ' ' << g.m() << '\n';
  for (auto [u, v] : g.edges) out << u << ' ' << v << '\n';
}

inline Graph read_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw input_error("cannot open '" + path + "'");
  return read_edge_list(in);
}

inline void write_edge_list_file(const std::string& path, const Graph& g) {
  std::ofstream out(path);
  if (!out) throw input_error("cannot write '" + path + "'");
  write_edge_list(out, g);
}

inline std::string edge_list_string(const Graph& g) {
  std::ostringstream ss;
  write_edge_list(ss, g);
  return ss.str();
}

// ---- objective pieces ----

struct CutCounts {
  long long inside = 0;    // edges with both ends in the set
  long long boundary = 0;  // edges with exactly one end in the set
};

inline std::vector<char> membership_flags(const Graph& g, const std::vector<int>& s) {
  std::vector<char> in_set(g.n, 0);
  for (int v : s) {
    if (v < 0 || v >= g.n) throw input_error("set member out of range");
    if (in_set[v]) throw input_error("set member repeated");
    in_set[v] = 1;
  }
  return in_set;
}

inline CutCounts cut_counts(const Graph& g, const std::vector<int>& s) {
  std::vector<char> in_set = membership_flags(g, s);
  CutCounts c;
  for (auto [u, v] : g.edges) {
    if (in_set[u] && in_set[v])
      ++c.inside;
    else if (in_set[u] != in_set[v])
      ++c.boundary;
  }
  return c;
}

// cov_alpha(S) = (1 - alpha) * inside(S) + alpha * boundary(S)
inline Rational cov_alpha(const Graph& g, const std::vector<int>& s, const Rational& alpha) {
  if (alpha < Rational(0) || alpha > Rational(1))
    throw input_error("alpha outside [0, 1]");
  CutCounts c = cut_counts(g, s);
  return (Rational(1) - alpha) * Rational(c.inside) + alpha * Rational(c.boundary);
}

// ---- degree orderings ----

enum class OrderBy { NonIncreasing, NonDecreasing };

struct DegreeOrdering {
  OrderBy by = OrderBy::NonIncreasing;
  std::vector<int> vertices;  // permutation of 0..n-1, ties by ascending id
};

inline DegreeOrdering degree_ordering(const Graph& g, OrderBy by) {
  DegreeOrdering ord;
  ord.by = by;
  ord.vertices.resize(g.n);
  for (int v = 0; v < g.n; ++v) ord.vertices[v] = v;
  std::stable_sort(ord.vertices.begin(), ord.vertices.end(), [&](int a, int b) {
    if (g.degree(a) != g.degree(b))
      return by == OrderBy::NonIncreasing ? g.degree(a) > g.degree(b)
                                          : g.degree(a) < g.degree(b);
    return a < b;
  });
  return ord;
}

}  // namespace fcgp
