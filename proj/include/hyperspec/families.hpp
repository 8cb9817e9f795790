#pragma once

#include <optional>
#include <string>

#include "hyperspec/bipartite.hpp"
#include "hyperspec/hypergraph.hpp"

namespace hyperspec {

// s-path on n = s + m(k-s) vertices: edge j (0-based) is
// {1+j(k-s), ..., s+(j+1)(k-s)}; consecutive edges overlap in s vertices.
struct PathParams {
  int k = 0;
  int s = 0;
  int m = 0;
};

// s-cycle on n = m(k-s) vertices: edge j is {j(k-s)+1, ..., j(k-s)+k} with
// ids wrapped modulo n into 1..n. Valid only when n >= 2k-s.
struct CycleParams {
  int k = 0;
  int s = 0;
  int m = 0;
};

struct CycleClass {
  std::string family;  // loose | generalized-loose | half | generalized-tight | tight
  bool regular = false;
  int q = 0;  // k = q(k-s) + r, 0 <= r < k-s
  int r = 0;
  std::optional<int> t0;  // q = 2^t0 (2*l0+1), set when regular
  std::optional<int> l0;
  int delta = 0;  // max degree: q when regular, q+1 otherwise
};

Hypergraph build_s_path(const PathParams& p);
Hypergraph build_s_cycle(const CycleParams& p);

CycleClass classify_s_cycle(const CycleParams& p);

// Odd-bipartiteness of the s-cycle by arithmetic alone: non-regular cycles
// always are; regular ones exactly when 2^t0 divides m.
bool cycle_odd_bipartite_predicate(const CycleParams& p);

// Constructive witnesses. Paths: multiples of k. Cycles: grid-aligned sets
// whose per-edge intersection count is exactly q, q+1, or q/2^t0 — odd in
// each branch. The returned set always passes verify_odd_bipartition.
OddBipartition construct_odd_bipartition(const PathParams& p);
OddBipartition construct_odd_bipartition(const CycleParams& p);

}  // namespace hyperspec
