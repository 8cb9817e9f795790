#include "hyperspec/hypergraph.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace hyperspec {

Hypergraph::Hypergraph(int k, int n, std::vector<Edge> edges) : k_(k), n_(n) {
  if (k < 2) fail(errc::bad_params, "uniformity k must be >= 2, got " + std::to_string(k));
  if (n < k)
    fail(errc::bad_params,
         "vertex count n must be >= k, got n=" + std::to_string(n) + " with k=" + std::to_string(k));

  edges_.reserve(edges.size());
  std::set<Edge> seen;
  for (size_t j = 0; j < edges.size(); ++j) {
    Edge e = edges[j];
    const std::string where = "edge " + std::to_string(j + 1);
    if (static_cast<int>(e.size()) != k)
      fail(errc::edge_arity, where + " has " + std::to_string(e.size()) + " entries, expected " +
                                 std::to_string(k));
    for (Vertex v : e) {
      if (v < 1 || v > n)
        fail(errc::vertex_range, where + " references vertex " + std::to_string(v) +
                                     " outside 1.." + std::to_string(n));
    }
    std::sort(e.begin(), e.end());
    if (std::adjacent_find(e.begin(), e.end()) != e.end())
      fail(errc::edge_arity, where + " repeats a vertex (edges need k distinct vertices)");
    if (!seen.insert(e).second) fail(errc::duplicate_edge, where + " duplicates an earlier edge");
    edges_.push_back(std::move(e));
  }

  incidence_.assign(static_cast<size_t>(n), {});
  for (int j = 0; j < m(); ++j)
    for (Vertex v : edges_[static_cast<size_t>(j)]) incidence_[static_cast<size_t>(v - 1)].push_back(j);
}

const std::vector<int>& Hypergraph::incident(Vertex i) const {
  if (i < 1 || i > n_)
    fail(errc::vertex_range, "vertex " + std::to_string(i) + " outside 1.." + std::to_string(n_));
  return incidence_[static_cast<size_t>(i - 1)];
}

Hypergraph make_hypergraph(int k, int n, const std::vector<std::vector<int>>& edges) {
  return Hypergraph(k, n, edges);
}

DegreeProfile degrees(const Hypergraph& g) {
  DegreeProfile p;
  p.degrees.reserve(static_cast<size_t>(g.n()));
  for (Vertex i = 1; i <= g.n(); ++i) p.degrees.push_back(g.degree(i));
  p.max = *std::max_element(p.degrees.begin(), p.degrees.end());
  p.min = *std::min_element(p.degrees.begin(), p.degrees.end());
  return p;
}

std::pair<bool, std::optional<int>> is_regular(const Hypergraph& g) {
  const DegreeProfile p = degrees(g);
  if (p.max == p.min) return {true, p.max};
  return {false, std::nullopt};
}

bool is_connected(const Hypergraph& g) {
  const int n = g.n();
  if (n == 1) return true;
  std::vector<char> vseen(static_cast<size_t>(n), 0);
  std::vector<char> eseen(static_cast<size_t>(g.m()), 0);
  std::vector<Vertex> stack{1};
  vseen[0] = 1;
  int covered = 1;
  while (!stack.empty()) {
    const Vertex v = stack.back();
    stack.pop_back();
    for (int j : g.incident(v)) {
      if (eseen[static_cast<size_t>(j)]) continue;
      eseen[static_cast<size_t>(j)] = 1;
      for (Vertex w : g.edge(j)) {
        if (!vseen[static_cast<size_t>(w - 1)]) {
          vseen[static_cast<size_t>(w - 1)] = 1;
          ++covered;
          stack.push_back(w);
        }
      }
    }
  }
  return covered == n;
}

CoreAnalysis core_analysis(const Hypergraph& g) {
  CoreAnalysis r;
  std::vector<char> is_core(static_cast<size_t>(g.n()) + 1, 0);
  for (Vertex i = 1; i <= g.n(); ++i) {
    if (g.degree(i) == 1) {
      r.core_vertices.push_back(i);
      is_core[static_cast<size_t>(i)] = 1;
    }
  }
  r.is_cored = g.m() > 0;
  for (const Edge& e : g.edges()) {
    bool has_core = false;
    for (Vertex v : e) has_core = has_core || is_core[static_cast<size_t>(v)];
    if (!has_core) {
      r.is_cored = false;
      break;
    }
  }
  return r;
}

SupervertexPartition supervertices(const Hypergraph& g) {
  SupervertexPartition part;
  std::vector<char> assigned(static_cast<size_t>(g.n()) + 1, 0);
  for (Vertex i = 1; i <= g.n(); ++i) {
    if (assigned[static_cast<size_t>(i)]) continue;
    SupervertexBlock blk;
    blk.edge_set = g.incident(i);
    blk.degree = static_cast<int>(blk.edge_set.size());
    blk.core = blk.degree == 1;
    blk.vertices.push_back(i);
    assigned[static_cast<size_t>(i)] = 1;
    // Isolated vertices stay singletons; only nonempty edge sets group.
    if (blk.degree > 0) {
      for (Vertex j = i + 1; j <= g.n(); ++j) {
        if (!assigned[static_cast<size_t>(j)] && g.incident(j) == blk.edge_set) {
          blk.vertices.push_back(j);
          assigned[static_cast<size_t>(j)] = 1;
        }
      }
    }
    part.blocks.push_back(std::move(blk));
  }
  return part;
}

}  // namespace hyperspec
