#pragma once

#include <stdexcept>
#include <string>

namespace mwist {

struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct parse_error : error {
  int line;
  parse_error(int line_no, const std::string& what)
      : error("line " + std::to_string(line_no) + ": " + what), line(line_no) {}
};

struct invalid_graph_error : error {
  using error::error;
};

struct disconnected_error : error {
  using error::error;
};

struct invalid_tree_error : error {
  using error::error;
};

struct budget_exceeded_error : error {
  using error::error;
};

struct not_claw_free_error : error {
  using error::error;
};

// A structural property that claw-freeness (or a maximality argument) guarantees
// was observed to fail. Carries a short tag naming the property.
struct claw_violation_error : error {
  std::string tag;
  claw_violation_error(std::string t, const std::string& what)
      : error(t + ": " + what), tag(std::move(t)) {}
};

// No construction of a settle branch produced an acceptable tree.
struct case_exhaustion_error : error {
  std::string branch;
  case_exhaustion_error(std::string b, const std::string& what)
      : error("case " + b + ": " + what), branch(std::move(b)) {}
};

struct certificate_violation_error : error {
  using error::error;
};

struct retries_exhausted_error : error {
  using error::error;
};

}  // namespace mwist
