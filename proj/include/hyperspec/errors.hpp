#pragma once

#include <stdexcept>
#include <string>

namespace hyperspec {

enum class errc {
  edge_arity,
  vertex_range,
  duplicate_edge,
  bad_params,
  too_short,
  odd_uniformity,
  empty_side,
  cap_exceeded,
  not_odd_bipartite,
  length_mismatch,
  zero_vector,
  not_connected,
  no_convergence,
  too_large,
  invalid_partition,
  uncertified_input,
  bad_shape,
  parse_error,
};

// Stable machine-readable code, e.g. errc::edge_arity -> "EDGE_ARITY".
const char* errc_name(errc c) noexcept;

class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& msg)
      : std::runtime_error(std::string(errc_name(code)) + ": " + msg), code_(code) {}

  errc code() const noexcept { return code_; }
  const char* code_name() const noexcept { return errc_name(code_); }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& msg) { throw Error(code, msg); }

}  // namespace hyperspec
