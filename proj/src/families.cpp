#include "hyperspec/families.hpp"

#include <string>
#include <vector>

namespace hyperspec {

namespace {

void check_ks(int k, int s) {
  if (k < 2) fail(errc::bad_params, "uniformity k must be >= 2, got " + std::to_string(k));
  if (s < 1 || s > k - 1)
    fail(errc::bad_params,
         "overlap s must satisfy 1 <= s <= k-1, got s=" + std::to_string(s) + " with k=" +
             std::to_string(k));
}

}  // namespace

Hypergraph build_s_path(const PathParams& p) {
  check_ks(p.k, p.s);
  if (p.m < 1) fail(errc::bad_params, "edge count m must be >= 1, got " + std::to_string(p.m));
  const int step = p.k - p.s;
  const int n = p.s + p.m * step;
  std::vector<std::vector<int>> edges;
  edges.reserve(static_cast<size_t>(p.m));
  for (int j = 0; j < p.m; ++j) {
    std::vector<int> e;
    e.reserve(static_cast<size_t>(p.k));
    for (int v = 1 + j * step; v <= p.s + (j + 1) * step; ++v) e.push_back(v);
    edges.push_back(std::move(e));
  }
  return make_hypergraph(p.k, n, edges);
}

Hypergraph build_s_cycle(const CycleParams& p) {
  check_ks(p.k, p.s);
  if (p.m < 1) fail(errc::bad_params, "edge count m must be >= 1, got " + std::to_string(p.m));
  const int step = p.k - p.s;
  const int n = p.m * step;
  if (n < 2 * p.k - p.s)
    fail(errc::too_short, "an s-cycle needs n >= 2k-s: n=" + std::to_string(n) + " < " +
                              std::to_string(2 * p.k - p.s));
  std::vector<std::vector<int>> edges;
  edges.reserve(static_cast<size_t>(p.m));
  for (int j = 0; j < p.m; ++j) {
    std::vector<int> e;
    e.reserve(static_cast<size_t>(p.k));
    for (int t = 1; t <= p.k; ++t) {
      const int raw = (j * step + t) % n;  // residue 0 denotes vertex n
      e.push_back(raw == 0 ? n : raw);
    }
    edges.push_back(std::move(e));
  }
  return make_hypergraph(p.k, n, edges);
}

CycleClass classify_s_cycle(const CycleParams& p) {
  check_ks(p.k, p.s);
  if (p.m < 1) fail(errc::bad_params, "edge count m must be >= 1, got " + std::to_string(p.m));
  const int step = p.k - p.s;
  if (p.m * step < 2 * p.k - p.s)
    fail(errc::too_short, "an s-cycle needs n >= 2k-s: n=" + std::to_string(p.m * step) + " < " +
                              std::to_string(2 * p.k - p.s));

  CycleClass c;
  c.q = p.k / step;
  c.r = p.k % step;
  c.regular = c.r == 0;
  c.delta = c.regular ? c.q : c.q + 1;
  if (p.s == 1)
    c.family = "loose";
  else if (p.s == p.k - 1)
    c.family = "tight";
  else if (2 * p.s < p.k)
    c.family = "generalized-loose";
  else if (2 * p.s == p.k)
    c.family = "half";
  else
    c.family = "generalized-tight";
  if (c.regular) {
    int t0 = 0, odd = c.q;
    while (odd % 2 == 0) {
      odd /= 2;
      ++t0;
    }
    c.t0 = t0;
    c.l0 = (odd - 1) / 2;
  }
  return c;
}

bool cycle_odd_bipartite_predicate(const CycleParams& p) {
  if (p.k % 2 != 0)
    fail(errc::odd_uniformity,
         "odd-bipartiteness needs even uniformity, got k=" + std::to_string(p.k));
  const CycleClass c = classify_s_cycle(p);
  if (!c.regular) return true;
  const int pow2 = 1 << *c.t0;
  return p.m % pow2 == 0;
}

OddBipartition construct_odd_bipartition(const PathParams& p) {
  check_ks(p.k, p.s);
  if (p.m < 1) fail(errc::bad_params, "edge count m must be >= 1, got " + std::to_string(p.m));
  if (p.k % 2 != 0)
    fail(errc::odd_uniformity,
         "odd-bipartiteness needs even uniformity, got k=" + std::to_string(p.k));
  const int n = p.s + p.m * (p.k - p.s);
  OddBipartition b;
  // Each edge is a window of k consecutive integers, so it holds exactly one
  // multiple of k.
  for (int v = p.k; v <= n; v += p.k) b.v1.push_back(v);
  return b;
}

OddBipartition construct_odd_bipartition(const CycleParams& p) {
  if (p.k % 2 != 0)
    fail(errc::odd_uniformity,
         "odd-bipartiteness needs even uniformity, got k=" + std::to_string(p.k));
  const CycleClass c = classify_s_cycle(p);
  const int step = p.k - p.s;
  const int n = p.m * step;
  OddBipartition b;
  if (!c.regular) {
    if (c.q % 2 == 1) {
      // Window (j*step, j*step+k] holds exactly q multiples of step.
      for (int i = 1; i <= p.m; ++i) b.v1.push_back(i * step);
    } else {
      // Offset grid: exactly q+1 members of {1 + i*step} per window.
      for (int i = 1; i <= p.m; ++i) b.v1.push_back(1 + (i - 1) * step);
    }
    return b;
  }
  const int pow2 = 1 << *c.t0;
  if (p.m % pow2 != 0)
    fail(errc::not_odd_bipartite, "regular cycle with q=" + std::to_string(c.q) + " needs m divisible by " +
                                      std::to_string(pow2) + ", got m=" + std::to_string(p.m));
  // Multiples of q0 = 2^t0 * step: q0 divides n, and each edge holds
  // k/q0 = q/2^t0 = 2*l0+1 of them.
  const int q0 = pow2 * step;
  for (int v = q0; v <= n; v += q0) b.v1.push_back(v);
  return b;
}

}  // namespace hyperspec
