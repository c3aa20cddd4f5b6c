#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sqstable/graph.hpp"
#include "sqstable/solvers.hpp"

namespace sqstable {

// Graph-class predicates. Disconnected graphs are handled directly: alpha,
// Omega and maximal stable sets all decompose over components, so every
// predicate below equals the conjunction of its per-component values except
// alpha_plus_class (the core is the union of component cores) and
// omega_is_matroid (which is stated for arbitrary graphs).

struct SquareStability {
  bool square_stable = false;
  int alpha = 0;
  int alpha_sq = 0;
  // Lexicographically smallest S in Omega(G^2); when square-stable it is also
  // in Omega(G) and its members are pairwise at distance >= 3.
  std::optional<VertexSet> witness;
};

SquareStability is_square_stable(const Graph& g, const SolverConfig& config = {});

struct WellCoverage {
  bool well_covered = false;
  // Set when the verdict is false because of an isolated vertex.
  std::optional<int> isolated_vertex;
  // Smallest maximal stable set that is not maximum.
  std::optional<VertexSet> counterexample;
};

// False whenever g has an isolated vertex (or no vertices at all).
WellCoverage is_well_covered(const Graph& g, const SolverConfig& config = {});
bool is_very_well_covered(const Graph& g, const SolverConfig& config = {});
bool is_koenig_egervary(const Graph& g, const SolverConfig& config = {});

// Vertices whose open neighbourhood is a clique (isolated ones included).
VertexSet simplicial_vertices(const Graph& g);

struct Simplex {
  VertexSet clique;
  VertexSet simplicial_members;
  bool operator==(const Simplex&) const = default;
};

// Maximal cliques holding at least one simplicial vertex, in lex order.
std::vector<Simplex> simplexes(const Graph& g);

// Every vertex lies in exactly one simplex.
bool simplex_partition_check(const Graph& g);

// Every vertex is simplicial or adjacent to a simplicial vertex.
bool is_simplicial_graph(const Graph& g);

struct AlphaMinus {
  bool stable = false;
  // False when Omega exceeded the enumeration cap and only the edge-deletion
  // route ran.
  bool cross_checked = false;
  // An edge whose deletion raises alpha.
  std::optional<Edge> breaking_edge;
};

// alpha(G - e) = alpha(G) for every edge e. Evaluated by deleting each edge
// and, independently, by requiring |N(v) n S| >= 2 for every S in Omega(G)
// and v outside S. Disagreement throws InternalError.
AlphaMinus alpha_minus_stable(const Graph& g, const SolverConfig& config = {});

enum class AlphaPlusClass { kNotPlus, kPlus0, kPlus1 };

const char* to_string(AlphaPlusClass c);

struct AlphaPlus {
  AlphaPlusClass cls = AlphaPlusClass::kNotPlus;
  VertexSet core;
  // Whether the edge-addition definition was also evaluated.
  bool cross_checked = false;
};

// Classified by |core(Omega(G))|: 0 -> kPlus0, 1 -> kPlus1, more -> kNotPlus.
// On graphs with n <= 16 the verdict is cross-checked against adding every
// non-edge; disagreement throws InternalError.
AlphaPlus alpha_plus_class(const Graph& g, const SolverConfig& config = {});

// P1 by definition: every stable A disjoint from s has exactly one matching
// into s saturating A. No precondition on s; exhaustive over such A.
bool satisfies_p1(const Graph& g, VertexSet s, const SolverConfig& config = {});

// P2 by definition: every non-empty stable A disjoint from s extends some
// S* subset of s to a member of Omega(G) (|A u S*| = alpha). Empty A is
// vacuous. No precondition on s.
bool satisfies_p2(const Graph& g, VertexSet s, int alpha, const SolverConfig& config = {});

// Requires s0 in Omega(G) (PreconditionError otherwise). Combines the
// exhaustive route with the neighbour-count route (every v outside s0 has
// exactly one neighbour in s0); disagreement throws InternalError.
bool property_p1(const Graph& g, VertexSet s0, const SolverConfig& config = {});

// Requires s0 in Omega(G). Tries S* = s0 - N(A) first and falls back to a
// search over subsets of s0; both must agree.
bool property_p2(const Graph& g, VertexSet s0, const SolverConfig& config = {});

struct MatroidCheck {
  bool matroid = false;
  // Basis exchange over Omega alone. A single maximum stable set passes this
  // trivially, so it is not the whole test.
  bool omega_exchange = false;
  // First failing exchange (B1, x, B2) rendered as text.
  std::optional<std::string> exchange_failure;
  // A maximal stable set outside Omega: the stable sets are then not the
  // independent sets of the matroid spanned by Omega.
  std::optional<VertexSet> unextendable_stable_set;
};

// Omega(G) is the set of bases of a matroid whose independent sets are the
// stable sets of G. Evaluated as basis exchange over Omega plus "every
// maximal stable set is in Omega", and independently as "every component is
// a clique"; the two must agree.
MatroidCheck omega_is_matroid(const Graph& g, const SolverConfig& config = {});

struct ClassificationWitnesses {
  std::optional<VertexSet> square_stable_set;
  std::optional<VertexSet> non_maximum_maximal_stable_set;
  std::optional<int> isolated_vertex;
  std::vector<Simplex> simplexes;
  std::optional<Edge> alpha_minus_breaking_edge;
  VertexSet omega_core;
  std::vector<int> elimination_order;
  std::optional<std::string> matroid_exchange_failure;
};

struct ClassificationReport {
  bool square_stable = false;
  bool well_covered = false;
  bool very_well_covered = false;
  bool koenig_egervary = false;
  bool simplicial_graph = false;
  bool chordal = false;
  bool simplex_partition = false;
  bool alpha_minus = false;
  bool alpha_minus_cross_checked = false;
  AlphaPlusClass alpha_plus_class = AlphaPlusClass::kNotPlus;
  bool omega_matroid = false;
  ClassificationWitnesses witnesses;
};

// Runs every predicate and enforces the report-level implications:
// very well-covered implies well-covered, and for graphs without isolated
// vertices square-stable implies well-covered, alpha_0^+ and not alpha^-.
ClassificationReport classify(const Graph& g, const SolverConfig& config = {});

}  // namespace sqstable
