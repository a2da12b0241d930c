#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fcgp/errors.hpp"
#include "fcgp/graph.hpp"
#include "fcgp/rational.hpp"

namespace fcgp {

enum class Direction { Max, Min };

inline const char* direction_name(Direction d) {
  return d == Direction::Max ? "max" : "min";
}

struct Instance {
  Graph graph;
  int k = 1;
  Rational alpha;
  Direction direction = Direction::Max;
  std::optional<Rational> threshold;  // optional decision bound, informational
};

inline Instance make_instance(Graph g, int k, Rational alpha, Direction dir,
                              std::optional<Rational> threshold = {}) {
  if (k < 1 || k > g.n) throw input_error("k must be in [1, n]");
  if (alpha < Rational(0) || alpha > Rational(1))
    throw input_error("alpha outside [0, 1]");
  if (threshold && threshold->sign() < 0)
    throw input_error("threshold must be non-negative");
  return Instance{std::move(g), k, alpha, dir, threshold};
}

struct Provenance {
  std::string algorithm;
  std::string branch;
};

struct Solution {
  std::vector<int> vertices;  // sorted ascending
  Rational value;
  Provenance provenance;
};

// strict improvement in the given direction
inline bool improves(const Rational& candidate, const Rational& incumbent, Direction dir) {
  return dir == Direction::Max ? candidate > incumbent : candidate < incumbent;
}

// Integer view of the objective for a fixed alpha = p/q: every cov value
// times q is an integer, so solvers can compare exactly in 64-bit space.
//   q * cov(S) = inside_w * m(S) + cross_w * m(S, V\S)
//              = cross_w * degsum(S) + (inside_w - 2 * cross_w) * m(S)
struct AlphaWeights {
  long long p = 0, q = 1;  // alpha reduced
  long long inside_w = 1;  // q - p, weight of an internal edge
  long long cross_w = 0;   // p, weight of a boundary edge

  long long scaled(long long degsum, long long inside) const {
    return cross_w * degsum + (inside_w - 2 * cross_w) * inside;
  }
  Rational to_value(long long scaled_value) const { return Rational(scaled_value, q); }
};

inline AlphaWeights alpha_weights(const Rational& alpha) {
  if (alpha < Rational(0) || alpha > Rational(1))
    throw input_error("alpha outside [0, 1]");
  if (alpha.den > (1LL << 20))
    throw std::overflow_error("alpha denominator too large for the scaled evaluator");
  AlphaWeights w;
  w.p = alpha.num;
  w.q = alpha.den;
  w.inside_w = w.q - w.p;
  w.cross_w = w.p;
  return w;
}

}  // namespace fcgp
