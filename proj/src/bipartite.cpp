#include "hyperspec/bipartite.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>

namespace hyperspec {

namespace {

void require_even_k(const Hypergraph& g) {
  if (g.k() % 2 != 0)
    fail(errc::odd_uniformity,
         "odd-bipartiteness needs even uniformity, got k=" + std::to_string(g.k()));
}

}  // namespace

bool verify_odd_bipartition(const Hypergraph& g, const OddBipartition& p) {
  require_even_k(g);
  if (p.v1.empty()) fail(errc::empty_side, "v1 is empty");
  std::vector<char> side(static_cast<size_t>(g.n()) + 1, 0);
  for (Vertex v : p.v1) {
    if (v < 1 || v > g.n())
      fail(errc::vertex_range, "v1 contains vertex " + std::to_string(v) + " outside 1.." +
                                   std::to_string(g.n()));
    side[static_cast<size_t>(v)] = 1;
  }
  int distinct = 0;
  for (Vertex v = 1; v <= g.n(); ++v) distinct += side[static_cast<size_t>(v)];
  if (distinct == g.n()) fail(errc::empty_side, "v1 covers every vertex, v2 would be empty");

  for (const Edge& e : g.edges()) {
    int cnt = 0;
    for (Vertex v : e) cnt += side[static_cast<size_t>(v)];
    if (cnt % 2 == 0) return false;
  }
  return true;
}

std::optional<OddBipartition> find_odd_bipartition_exhaustive(const Hypergraph& g, int cap) {
  require_even_k(g);
  const int n = g.n();
  if (n > cap)
    fail(errc::cap_exceeded, "n=" + std::to_string(n) + " exceeds the exhaustive-search cap " +
                                 std::to_string(cap));
  if (n > 62) fail(errc::cap_exceeded, "bitmask scan supports n <= 62, got n=" + std::to_string(n));

  std::vector<std::uint64_t> edge_masks;
  edge_masks.reserve(static_cast<size_t>(g.m()));
  for (const Edge& e : g.edges()) {
    std::uint64_t m = 0;
    for (Vertex v : e) m |= std::uint64_t{1} << (v - 1);
    edge_masks.push_back(m);
  }

  // Fix vertex 1 on the v2 side: every unordered bipartition is visited once.
  const std::uint64_t limit = std::uint64_t{1} << (n - 1);
  for (std::uint64_t sub = 1; sub < limit; ++sub) {
    const std::uint64_t v1 = sub << 1;  // subset of {2..n}
    bool ok = true;
    for (std::uint64_t em : edge_masks) {
      if ((std::popcount(v1 & em) & 1) == 0) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    OddBipartition p;
    for (int v = 2; v <= n; ++v)
      if (v1 & (std::uint64_t{1} << (v - 1))) p.v1.push_back(v);
    return p;
  }
  return std::nullopt;
}

}  // namespace hyperspec
