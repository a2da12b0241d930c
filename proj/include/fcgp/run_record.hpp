#pragma once

#include <cstdio>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "fcgp/instance.hpp"
#include "fcgp/rational.hpp"

namespace fcgp {

// One solver invocation, flattened for CSV/JSON emission.  Values stay exact
// rationals ("p/q") end to end; wall_ms is the only inexact field.
struct RunRecord {
  std::string instance;  // file stem or generator descriptor
  std::string algorithm;
  int k = 0;
  Rational alpha;
  std::optional<Rational> epsilon;
  std::string mode;  // "max" or "min"
  Rational value;
  std::vector<int> vertices;
  double wall_ms = 0.0;
  std::string branch;
  std::optional<Rational> oracle;
  std::optional<Rational> ratio;
};

// ratio convention: value/oracle when maximizing, oracle/value when
// minimizing, so 1 is ideal and smaller is worse in both directions
inline Rational performance_ratio(const Rational& value, const Rational& oracle,
                                  Direction dir) {
  if (value.sign() == 0 && oracle.sign() == 0) return Rational(1);
  return dir == Direction::Max ? value / oracle : oracle / value;
}

struct SuiteSummary {
  long long violations = 0;
  std::optional<Rational> worst_ratio;
};

namespace detail {

inline std::string csv_quote(const std::string& field) {
  if (field.find_first_of(",\"\n") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

inline std::string fixed_ms(double ms) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3f", ms);
  return buf;
}

inline std::string vertices_field(const std::vector<int>& vs) {
  std::string out;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(vs[i]);
  }
  return out;
}

}  // namespace detail

inline constexpr const char* kCsvColumns =
    "instance,algorithm,k,alpha,epsilon,mode,value,vertices,wall_ms,branch,oracle,ratio,"
    "violations,worst_ratio";

inline void write_csv_row(std::ostream& out, const RunRecord& r) {
  out << detail::csv_quote(r.instance) << ',' << detail::csv_quote(r.algorithm) << ','
      << r.k << ',' << r.alpha.str() << ',' << (r.epsilon ? r.epsilon->str() : "") << ','
      << r.mode << ',' << r.value.str() << ','
      << detail::csv_quote(detail::vertices_field(r.vertices)) << ','
      << detail::fixed_ms(r.wall_ms) << ',' << detail::csv_quote(r.branch) << ','
      << (r.oracle ? r.oracle->str() : "") << ',' << (r.ratio ? r.ratio->str() : "")
      << ",,\n";
}

inline void write_csv(std::ostream& out, const std::vector<RunRecord>& rows,
                      const std::optional<SuiteSummary>& summary = std::nullopt) {
  out << "# fcgp-csv v1\n";
  out << "# ratio = value/oracle (max) or oracle/value (min); 1/1 when both sides are zero\n";
  out << kCsvColumns << '\n';
  for (const auto& r : rows) write_csv_row(out, r);
  if (summary) {
    out << "summary,,,,,,,,,,,," << summary->violations << ','
        << (summary->worst_ratio ? summary->worst_ratio->str() : "") << '\n';
  }
}

}  // namespace fcgp
