#pragma once

#include <optional>
#include <vector>

#include "hyperspec/hypergraph.hpp"

namespace hyperspec {

// A claimed odd-bipartition: v1 is a nonempty proper subset of 1..n and the
// complement is the other side. Meaningful only for even uniformity.
struct OddBipartition {
  std::vector<Vertex> v1;  // ascending
};

// True iff |e ∩ v1| is odd for every edge.
bool verify_odd_bipartition(const Hypergraph& g, const OddBipartition& p);

// Exhaustive scan over all bipartitions up to swapping sides. Deterministic:
// subsets avoiding vertex 1 are tried in ascending bitmask order and the
// first valid one is returned. n must not exceed `cap`.
std::optional<OddBipartition> find_odd_bipartition_exhaustive(const Hypergraph& g, int cap = 28);

}  // namespace hyperspec
