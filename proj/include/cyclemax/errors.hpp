#pragma once

#include <stdexcept>
#include <string>

namespace cyclemax {

enum class ErrorCode {
  negative_weight,
  non_finite_weight,
  self_loop,
  duplicate_edge,
  vertex_out_of_range,
  zero_total_weight,
  vertex_not_in_graph,
  edge_not_in_graph,
  bad_path_length,
  bad_cycle_length,
  identical_edges,
  identical_vertices,
  negative_mass,
  not_normalized,
  empty_support,
  too_few_vertices,
  parse_error,
  internal_error,
};

// Coarse classes used by the CLI to pick exit codes.
enum class ErrorClass { validation, parse, internal };

inline ErrorClass classify(ErrorCode code) {
  switch (code) {
    case ErrorCode::parse_error:
      return ErrorClass::parse;
    case ErrorCode::internal_error:
      return ErrorClass::internal;
    default:
      return ErrorClass::validation;
  }
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const { return code_; }
  ErrorClass klass() const { return classify(code_); }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace cyclemax
