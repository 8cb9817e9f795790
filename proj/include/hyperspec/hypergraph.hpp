#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "hyperspec/errors.hpp"

namespace hyperspec {

using Vertex = int;  // 1-based everywhere in the public interface
using Edge = std::vector<Vertex>;

// Immutable k-uniform hypergraph on vertices 1..n. Edges are stored sorted
// ascending; edge identity is set identity. Incidence lists are built at
// construction; every query below is read-only and thread-safe.
class Hypergraph {
 public:
  Hypergraph(int k, int n, std::vector<Edge> edges);

  int k() const noexcept { return k_; }
  int n() const noexcept { return n_; }
  int m() const noexcept { return static_cast<int>(edges_.size()); }

  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const Edge& edge(int j) const { return edges_.at(static_cast<size_t>(j)); }

  // Edge indices incident to vertex i (ascending).
  const std::vector<int>& incident(Vertex i) const;
  int degree(Vertex i) const { return static_cast<int>(incident(i).size()); }

 private:
  int k_;
  int n_;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> incidence_;
};

Hypergraph make_hypergraph(int k, int n, const std::vector<std::vector<int>>& edges);

struct DegreeProfile {
  std::vector<int> degrees;  // degrees[i-1] = d_i
  int max = 0;
  int min = 0;
};

DegreeProfile degrees(const Hypergraph& g);

// (flag, common degree when flag is true)
std::pair<bool, std::optional<int>> is_regular(const Hypergraph& g);

// True iff the vertex-edge incidence graph has one component covering all
// vertices. Isolated vertices disconnect any graph with n > 1.
bool is_connected(const Hypergraph& g);

struct CoreAnalysis {
  std::vector<Vertex> core_vertices;  // degree-1 vertices, ascending
  bool is_cored = false;              // every edge contains a core vertex
};

CoreAnalysis core_analysis(const Hypergraph& g);

struct SupervertexBlock {
  std::vector<Vertex> vertices;  // ascending
  std::vector<int> edge_set;     // common incident edge indices, ascending
  int degree = 0;
  bool core = false;  // degree == 1
};

struct SupervertexPartition {
  std::vector<SupervertexBlock> blocks;  // ordered by smallest member vertex
};

// Groups vertices with identical incident-edge sets. Isolated vertices are
// kept as singleton blocks of degree 0 rather than being merged.
SupervertexPartition supervertices(const Hypergraph& g);

}  // namespace hyperspec
