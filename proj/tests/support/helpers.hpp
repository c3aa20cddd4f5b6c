#pragma once

#include <random>
#include <vector>

#include "sqstable/generate.hpp"
#include "sqstable/graph.hpp"
#include "sqstable/structure.hpp"

namespace testing_support {

using sqstable::Edge;
using sqstable::Family;
using sqstable::FamilySpec;
using sqstable::Graph;

inline Graph family(Family f, int n) {
  FamilySpec spec;
  spec.family = f;
  spec.n = n;
  return sqstable::make_family(spec);
}

inline Graph path(int n) { return family(Family::kPath, n); }
inline Graph cycle(int n) { return family(Family::kCycle, n); }
inline Graph complete(int n) { return family(Family::kComplete, n); }
inline Graph star(int leaves) { return family(Family::kStar, leaves); }
inline Graph edgeless(int n) { return Graph(n); }
inline Graph fixture(const char* name) { return sqstable::named_fixture(name); }

inline Graph disjoint_union(const Graph& a, const Graph& b) {
  std::vector<Edge> edges = a.edges();
  for (const Edge& e : b.edges()) edges.push_back(Edge{e.u + a.order(), e.v + a.order()});
  return Graph::from_edges(a.order() + b.order(), edges);
}

// Erdos-Renyi G(n, p) from a test-local generator.
inline Graph random_graph(std::mt19937_64& rng, int n, double p) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (int v = 0; v < n; ++v) {
    for (int w = v + 1; w < n; ++w) {
      if (coin(rng)) edges.push_back(Edge{v, w});
    }
  }
  return Graph::from_edges(n, edges);
}

inline Graph random_connected_graph(std::mt19937_64& rng, int n, double p) {
  for (;;) {
    Graph g = random_graph(rng, n, p);
    if (sqstable::is_connected(g)) return g;
  }
}

}  // namespace testing_support
