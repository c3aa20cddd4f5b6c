#pragma once

#include <optional>
#include <vector>

#include "sqstable/graph.hpp"

namespace sqstable {

// Hop distance; std::nullopt means the endpoints lie in different
// components. Never encoded as a large integer.
using Distance = std::optional<int>;

class DistanceMatrix {
 public:
  explicit DistanceMatrix(int n);

  int order() const { return n_; }
  Distance at(int u, int v) const;
  void set(int u, int v, int d);

 private:
  static constexpr int kUnreachable = -1;
  int n_;
  std::vector<int> d_;
};

// G^2: u ~ v iff 1 <= dist(u, v) <= 2.
Graph square(const Graph& g);

DistanceMatrix distance_matrix(const Graph& g);

// Connected components sorted by smallest member.
std::vector<VertexSet> components(const Graph& g);
bool is_connected(const Graph& g);

Graph complement(const Graph& g);

struct InducedSubgraph {
  Graph graph;
  // original[i] is the vertex of the parent graph relabelled to i.
  std::vector<int> original;

  VertexSet to_original(VertexSet local) const;
};

// Members of x relabelled 0..|x|-1 in increasing order.
InducedSubgraph induced_subgraph(const Graph& g, VertexSet x);

// G[(s1 - s2) u (s2 - s1)].
InducedSubgraph symmetric_difference_subgraph(const Graph& g, VertexSet s1, VertexSet s2);

// Length of a shortest cycle; std::nullopt for forests.
std::optional<int> girth(const Graph& g);

struct ChordalityResult {
  bool chordal = false;
  // Perfect elimination ordering when chordal, otherwise the maximum
  // cardinality search order that failed.
  std::vector<int> elimination_order;
};

ChordalityResult is_chordal(const Graph& g);

bool is_tree(const Graph& g);
bool is_complete(const Graph& g);
bool is_bipartite(const Graph& g);
// Connected and 2-regular on exactly k vertices.
bool is_cycle_of_length(const Graph& g, int k);

}  // namespace sqstable
