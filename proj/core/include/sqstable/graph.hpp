#pragma once

#include <compare>
#include <span>
#include <vector>

#include "sqstable/vertex_set.hpp"

namespace sqstable {

// Unordered vertex pair, stored with u < v.
struct Edge {
  int u = 0;
  int v = 0;

  static Edge of(int a, int b) { return a < b ? Edge{a, b} : Edge{b, a}; }
  auto operator<=>(const Edge&) const = default;
};

// Immutable simple undirected graph on vertices 0..n-1 (n <= 64).
class Graph {
 public:
  static constexpr int kMaxOrder = VertexSet::kCapacity;

  Graph() = default;
  // Edgeless graph on n vertices.
  explicit Graph(int n);

  // Duplicate edges collapse; self-loops and out-of-range endpoints throw
  // InputError.
  static Graph from_edges(int n, std::span<const Edge> edges);
  static Graph from_edges(int n, std::initializer_list<Edge> edges) {
    return from_edges(n, std::span<const Edge>(edges.begin(), edges.size()));
  }
  // Adjacency rows must be symmetric and loop-free; throws InputError otherwise.
  static Graph from_adjacency(std::vector<VertexSet> rows);

  int order() const { return n_; }
  int size() const { return m_; }
  VertexSet vertices() const { return VertexSet::range(n_); }

  VertexSet neighbors(int v) const { return adj_[static_cast<std::size_t>(v)]; }
  VertexSet closed_neighbors(int v) const { return neighbors(v) | VertexSet::single(v); }
  bool adjacent(int u, int v) const { return neighbors(u).contains(v); }
  int degree(int v) const { return neighbors(v).size(); }
  const std::vector<VertexSet>& adjacency() const { return adj_; }

  // N(S): union of the open neighbourhoods of the members of s.
  VertexSet neighborhood(VertexSet s) const;
  bool is_stable(VertexSet s) const;
  bool is_clique(VertexSet s) const;

  // Edges in increasing (u, v) order.
  std::vector<Edge> edges() const;

  Graph with_edge_removed(Edge e) const;
  Graph with_edge_added(Edge e) const;

  bool operator==(const Graph&) const = default;

 private:
  int n_ = 0;
  int m_ = 0;
  std::vector<VertexSet> adj_;
};

}  // namespace sqstable
