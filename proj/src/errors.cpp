#include "hyperspec/errors.hpp"

namespace hyperspec {

const char* errc_name(errc c) noexcept {
  switch (c) {
    case errc::edge_arity: return "EDGE_ARITY";
    case errc::vertex_range: return "VERTEX_RANGE";
    case errc::duplicate_edge: return "DUPLICATE_EDGE";
    case errc::bad_params: return "BAD_PARAMS";
    case errc::too_short: return "TOO_SHORT";
    case errc::odd_uniformity: return "ODD_UNIFORMITY";
    case errc::empty_side: return "EMPTY_SIDE";
    case errc::cap_exceeded: return "CAP_EXCEEDED";
    case errc::not_odd_bipartite: return "NOT_ODD_BIPARTITE";
    case errc::length_mismatch: return "LENGTH_MISMATCH";
    case errc::zero_vector: return "ZERO_VECTOR";
    case errc::not_connected: return "NOT_CONNECTED";
    case errc::no_convergence: return "NO_CONVERGENCE";
    case errc::too_large: return "TOO_LARGE";
    case errc::invalid_partition: return "INVALID_PARTITION";
    case errc::uncertified_input: return "UNCERTIFIED_INPUT";
    case errc::bad_shape: return "BAD_SHAPE";
    case errc::parse_error: return "PARSE_ERROR";
  }
  return "UNKNOWN";
}

}  // namespace hyperspec
