#pragma once

#include <optional>
#include <vector>

#include "sqstable/graph.hpp"
#include "sqstable/solvers.hpp"

namespace sqstable {

// Pairwise non-incident edges of some graph, kept sorted.
struct Matching {
  std::vector<Edge> edges;

  int size() const { return static_cast<int>(edges.size()); }
  VertexSet covered() const;
  bool operator==(const Matching&) const = default;
};

// Every pair is an edge of g and no vertex is used twice.
bool is_valid_matching(const Graph& g, const Matching& m);

// Edmonds' blossom algorithm; exact mu(g) = result.size().
Matching maximum_matching(const Graph& g);

enum class PerfectMatchingKind { kNone, kUnique, kMultiple };

struct PerfectMatchingResult {
  PerfectMatchingKind kind = PerfectMatchingKind::kNone;
  // A perfect matching when kind != kNone (the unique one for kUnique).
  std::optional<Matching> matching;
};

PerfectMatchingResult unique_perfect_matching(const Graph& g);

// The forced matching {vw : v pendant} when it is a perfect matching.
std::optional<Matching> pendant_perfect_matching(const Graph& g);

// Degree-1 vertices.
VertexSet pendant_vertices(const Graph& g);

// Pendant vertices counted once per pendant edge: in a K2 component both
// endpoints have degree 1 but they share one edge, so only the smaller
// endpoint is kept. Equals pendant_vertices(g) when g has no K2 component.
VertexSet pendant_representatives(const Graph& g);

bool is_induced_matching(const Graph& g, const Matching& m);

struct MatchIntoResult {
  // Number of matchings in (A, S) saturating A, saturated at 2.
  int count = 0;
  std::optional<Matching> witness;
};

// Requires a and s disjoint (PreconditionError otherwise).
MatchIntoResult match_into(const Graph& g, VertexSet a, VertexSet s);

// Whether every stable set disjoint from s can be matched into s. Requires s
// stable. By Berge's theorem this holds exactly when s is a maximum stable set.
bool berge_check(const Graph& g, VertexSet s, const SolverConfig& config = {});

}  // namespace sqstable
