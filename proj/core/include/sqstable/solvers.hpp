#pragma once

#include <vector>

#include "sqstable/graph.hpp"

namespace sqstable {

// Size limits for the exponential routines.
struct SolverConfig {
  // Exact optimisation (alpha, gamma, theta, mu-dependent checks).
  int cap_n = 64;
  // Enumeration of stable-set families; Omega(G) can be exponentially large
  // even when alpha is cheap.
  int cap_omega = 24;

  // Defaults, with SQSTABLE_CAP_N overriding cap_n when set.
  static SolverConfig from_environment();
};

// Throws CapExceeded("exact solver cap", ...) when n > cap_n.
void require_exact_cap(const Graph& g, const SolverConfig& config);
// Throws CapExceeded("omega enumeration cap", ...) when n > cap_omega.
void require_enumeration_cap(const Graph& g, const SolverConfig& config);

struct StabilityResult {
  int alpha = 0;
  // Lexicographically smallest maximum stable set.
  VertexSet witness;
};

StabilityResult stability_number(const Graph& g, const SolverConfig& config = {});

// alpha(G[candidates]) without cap checks or witness.
int stability_number_within(const Graph& g, VertexSet candidates);

struct StableSetFamily {
  // Sorted by lex_less; for Omega(G) every member has cardinality alpha.
  std::vector<VertexSet> sets;
  // Intersection of all members (empty when the family is empty).
  VertexSet core;

  int alpha() const { return sets.empty() ? 0 : sets.front().size(); }
  bool contains(VertexSet s) const;
};

// Omega(G).
StableSetFamily enumerate_maximum_stable_sets(const Graph& g, const SolverConfig& config = {});

// Inclusion-maximal stable sets, sorted by lex_less.
std::vector<VertexSet> enumerate_maximal_stable_sets(const Graph& g, const SolverConfig& config = {});

// Inclusion-maximal cliques, sorted by lex_less. Uncapped.
std::vector<VertexSet> maximal_cliques(const Graph& g);

// i(G): smallest maximal stable set.
int independent_domination_number(const Graph& g, const SolverConfig& config = {});

// gamma(G): smallest dominating set.
int domination_number(const Graph& g, const SolverConfig& config = {});

struct CliqueCover {
  int size = 0;
  // Disjoint cliques covering V, ordered by smallest member.
  std::vector<VertexSet> cliques;
};

// theta(G), computed as the chromatic number of the complement.
CliqueCover clique_cover_number(const Graph& g, const SolverConfig& config = {});

struct InvariantRecord {
  int n = 0;
  int mu = 0;
  int alpha = 0;
  int alpha_sq = 0;
  int theta = 0;
  int theta_sq = 0;
  int gamma = 0;
  int idom = 0;

  // alpha(G^2) <= theta(G^2) <= gamma <= i <= alpha <= theta
  bool chain_holds() const {
    return alpha_sq <= theta_sq && theta_sq <= gamma && gamma <= idom && idom <= alpha && alpha <= theta;
  }
  bool all_equal() const {
    return alpha_sq == theta_sq && theta_sq == gamma && gamma == idom && idom == alpha && alpha == theta;
  }
  bool operator==(const InvariantRecord&) const = default;
};

// Computes every field without judging the chain.
InvariantRecord compute_invariants(const Graph& g, const SolverConfig& config = {});

// compute_invariants plus the chain assertion; a violated chain throws
// InternalError since it can only come from a solver bug.
InvariantRecord invariant_chain(const Graph& g, const SolverConfig& config = {});

}  // namespace sqstable
