#pragma once

#include <stdexcept>
#include <string>

namespace metric_graphs {

// Error kinds, grouped by how the CLI maps them to exit codes:
// parse -> 2, validation -> 3, infeasible request -> 4, internal bug -> 5.
enum class errc {
  parse,
  dimension_mismatch,
  duplicate_point,
  not_symmetric,
  negative_distance,
  zero_off_diagonal,
  nonzero_diagonal,
  triangle_violation,
  degenerate_distance_set,
  not_connected,
  size_mismatch,
  norm_mismatch,
  missing_provenance,
  too_large,
  exhausted_attempts,
  infeasible_model,
  internal_invariant,
};

class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& msg) : std::runtime_error(msg), code_(code) {}
  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& msg) { throw Error(code, msg); }

const char* errc_name(errc code);

}  // namespace metric_graphs
