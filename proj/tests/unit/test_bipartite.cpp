#include <vector>

#include "doctest.h"

#include "checks.hpp"
#include "hyperspec/bipartite.hpp"
#include "hyperspec/families.hpp"

using namespace hyperspec;
using testutil::code_of;

TEST_CASE("verify counts per-edge overlaps") {
  Hypergraph g = build_s_cycle({6, 3, 4});
  CHECK(verify_odd_bipartition(g, {{6, 12}}));
  CHECK(verify_odd_bipartition(g, {{2, 7}}));
  CHECK_FALSE(verify_odd_bipartition(g, {{1}}));        // misses edges 1 and 2
  CHECK_FALSE(verify_odd_bipartition(g, {{1, 2}}));     // even overlap with edge 0
  CHECK_FALSE(verify_odd_bipartition(g, {{6, 7, 12}})); // edge 1 sees two

  // complementing v1 preserves validity when n - |v1| keeps every overlap odd:
  // here each edge meets {6,12} once, so the complement meets it k-1 = 5 times.
  std::vector<Vertex> comp;
  for (int v = 1; v <= g.n(); ++v)
    if (v != 6 && v != 12) comp.push_back(v);
  CHECK(verify_odd_bipartition(g, {comp}));
}

TEST_CASE("verify rejects malformed partitions") {
  Hypergraph g = build_s_cycle({4, 2, 4});
  CHECK(code_of([&] { verify_odd_bipartition(g, {{}}); }) == errc::empty_side);
  CHECK(code_of([&] { verify_odd_bipartition(g, {{1, 2, 3, 4, 5, 6, 7, 8}}); }) == errc::empty_side);
  CHECK(code_of([&] { verify_odd_bipartition(g, {{0}}); }) == errc::vertex_range);
  CHECK(code_of([&] { verify_odd_bipartition(g, {{9}}); }) == errc::vertex_range);
  CHECK(code_of([] { verify_odd_bipartition(build_s_cycle({3, 2, 4}), {{1}}); }) ==
        errc::odd_uniformity);
}

TEST_CASE("exhaustive search returns the first witness in mask order") {
  Hypergraph g = build_s_cycle({6, 3, 4});
  auto w = find_odd_bipartition_exhaustive(g);
  REQUIRE(w.has_value());
  CHECK(w->v1 == std::vector<Vertex>{2, 7});
  CHECK(verify_odd_bipartition(g, *w));
  // deterministic across calls
  CHECK(find_odd_bipartition_exhaustive(g)->v1 == w->v1);
}

TEST_CASE("exhaustive search is sound and complete on small cycles") {
  // regular cycles with m not divisible by 2^t0: no bipartition exists
  CHECK_FALSE(find_odd_bipartition_exhaustive(build_s_cycle({4, 2, 3})).has_value());
  CHECK_FALSE(find_odd_bipartition_exhaustive(build_s_cycle({4, 3, 6})).has_value());
  // cycles the arithmetic predicate admits
  for (auto p : {CycleParams{4, 1, 3}, CycleParams{8, 5, 4}, CycleParams{6, 4, 5}}) {
    Hypergraph g = build_s_cycle(p);
    auto w = find_odd_bipartition_exhaustive(g);
    REQUIRE(w.has_value());
    CHECK(verify_odd_bipartition(g, *w));
  }
}

TEST_CASE("search respects the cap") {
  Hypergraph g = build_s_cycle({4, 2, 10});  // n = 20
  CHECK(code_of([&] { find_odd_bipartition_exhaustive(g, 12); }) == errc::cap_exceeded);
  CHECK(find_odd_bipartition_exhaustive(g, 20).has_value());
}

TEST_CASE("search rejects odd uniformity") {
  CHECK(code_of([] { find_odd_bipartition_exhaustive(build_s_cycle({3, 1, 3})); }) ==
        errc::odd_uniformity);
}
