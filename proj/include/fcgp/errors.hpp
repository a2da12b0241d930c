#pragma once

#include <stdexcept>
#include <string>

namespace fcgp {

// bad data handed to the library: malformed files, out-of-range arguments,
// structurally invalid inputs
struct input_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// malformed instance text; keeps the 1-based line it came from
struct parse_error : input_error {
  int line;
  parse_error(int line_, const std::string& msg)
      : input_error("line " + std::to_string(line_) + ": " + msg), line(line_) {}
};

// the requested computation would blow a configured budget
struct resource_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// parameter combination outside the algorithm's supported range
struct unsupported_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// every candidate prefix was rejected by the decomposition gates
struct gate_exhausted_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace fcgp
