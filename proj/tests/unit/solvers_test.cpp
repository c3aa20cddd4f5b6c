#include <gtest/gtest.h>

#include <random>

#include "helpers.hpp"
#include "oracle.hpp"
#include "sqstable/errors.hpp"
#include "sqstable/io.hpp"
#include "sqstable/solvers.hpp"
#include "sqstable/structure.hpp"

using namespace sqstable;
using namespace testing_support;

namespace {

std::vector<VertexSet> sets(std::initializer_list<std::initializer_list<int>> members) {
  std::vector<VertexSet> out;
  for (auto m : members) out.push_back(VertexSet(m));
  return out;
}

}  // namespace

TEST(StabilityNumber, Examples) {
  EXPECT_EQ(stability_number(cycle(12)).alpha, 6);
  EXPECT_EQ(stability_number(square(cycle(12))).alpha, 4);
  for (int n = 1; n <= 8; ++n) EXPECT_EQ(stability_number(complete(n)).alpha, 1);
  EXPECT_EQ(stability_number(Graph(0)).alpha, 0);
  EXPECT_EQ(stability_number(Graph(5)).alpha, 5);
}

TEST(StabilityNumber, WitnessIsLexSmallestMaximum) {
  EXPECT_EQ(stability_number(path(4)).witness, (VertexSet{0, 2}));
  EXPECT_EQ(stability_number(cycle(12)).witness, (VertexSet{0, 2, 4, 6, 8, 10}));
  std::mt19937_64 rng(101);
  for (int i = 0; i < 150; ++i) {
    const Graph g = random_graph(rng, 1 + static_cast<int>(rng() % 12), 0.35);
    const StabilityResult r = stability_number(g);
    const auto all = oracle::omega(oracle::Adj(g));
    VertexSet best = oracle::to_set(all.front());
    for (auto m : all) {
      if (lex_less(oracle::to_set(m), best)) best = oracle::to_set(m);
    }
    EXPECT_EQ(r.witness, best) << to_graph6(g);
  }
}

TEST(StabilityNumber, CapRefusal) {
  SolverConfig config;
  config.cap_n = 5;
  try {
    stability_number(cycle(12), config);
    FAIL() << "expected CapExceeded";
  } catch (const CapExceeded& e) {
    EXPECT_EQ(e.cap_name(), "exact solver cap");
    EXPECT_EQ(e.limit(), 5);
    EXPECT_EQ(e.actual(), 12);
  }
}

TEST(StabilityNumber, HandlesSixtyFourVertices) {
  EXPECT_EQ(stability_number(cycle(64)).alpha, 32);
  EXPECT_EQ(stability_number(Graph(64)).alpha, 64);
  EXPECT_EQ(stability_number(complete(64)).alpha, 1);
}

TEST(MaximumStableSets, Examples) {
  const StableSetFamily k4 = enumerate_maximum_stable_sets(complete(4));
  EXPECT_EQ(k4.sets, sets({{0}, {1}, {2}, {3}}));
  EXPECT_TRUE(k4.core.empty());
  EXPECT_EQ(enumerate_maximum_stable_sets(cycle(4)).sets, sets({{0, 2}, {1, 3}}));
  const StableSetFamily p4 = enumerate_maximum_stable_sets(path(4));
  EXPECT_EQ(p4.sets, sets({{0, 2}, {0, 3}, {1, 3}}));
  EXPECT_TRUE(p4.contains(VertexSet{0, 3}));
  EXPECT_FALSE(p4.contains(VertexSet{1, 2}));
  EXPECT_EQ(enumerate_maximum_stable_sets(star(3)).core, (VertexSet{1, 2, 3}));
}

TEST(MaximumStableSets, CapRefusalIsNotEmptyFamily) {
  SolverConfig config;
  config.cap_omega = 10;
  EXPECT_THROW(enumerate_maximum_stable_sets(cycle(12), config), CapExceeded);
  EXPECT_THROW(enumerate_maximal_stable_sets(cycle(12), config), CapExceeded);
}

TEST(MaximalStableSets, Examples) {
  EXPECT_EQ(enumerate_maximal_stable_sets(path(3)), sets({{0, 2}, {1}}));
  EXPECT_EQ(enumerate_maximal_stable_sets(complete(3)), sets({{0}, {1}, {2}}));
  const auto c5 = enumerate_maximal_stable_sets(cycle(5));
  ASSERT_EQ(c5.size(), 5U);
  for (VertexSet s : c5) EXPECT_EQ(s.size(), 2);
}

TEST(StableFamilies, MatchOracleOnRandomGraphs) {
  std::mt19937_64 rng(202);
  for (int i = 0; i < 150; ++i) {
    const Graph g = random_graph(rng, 1 + static_cast<int>(rng() % 11), 0.3);
    const oracle::Adj a(g);
    std::vector<VertexSet> omega;
    for (auto m : oracle::omega(a)) omega.push_back(oracle::to_set(m));
    std::sort(omega.begin(), omega.end(), LexLess{});
    EXPECT_EQ(enumerate_maximum_stable_sets(g).sets, omega) << to_graph6(g);

    std::vector<VertexSet> maximal;
    for (auto m : oracle::maximal_stable_sets(a)) maximal.push_back(oracle::to_set(m));
    std::sort(maximal.begin(), maximal.end(), LexLess{});
    EXPECT_EQ(enumerate_maximal_stable_sets(g), maximal) << to_graph6(g);
  }
}

TEST(MaximalCliques, Examples) {
  EXPECT_EQ(maximal_cliques(path(4)), sets({{0, 1}, {1, 2}, {2, 3}}));
  EXPECT_EQ(maximal_cliques(complete(4)), sets({{0, 1, 2, 3}}));
  EXPECT_EQ(maximal_cliques(fixture("diamond")).size(), 2U);
  EXPECT_EQ(maximal_cliques(Graph(2)), sets({{0}, {1}}));
}

TEST(IndependentDomination, Examples) {
  EXPECT_EQ(independent_domination_number(cycle(12)), 4);
  EXPECT_EQ(independent_domination_number(complete(6)), 1);
  EXPECT_EQ(independent_domination_number(path(4)), 2);
}

TEST(Domination, Examples) {
  EXPECT_EQ(domination_number(complete(6)), 1);
  EXPECT_EQ(domination_number(cycle(12)), 4);
  EXPECT_EQ(domination_number(Graph(5)), 5);
  EXPECT_EQ(domination_number(star(6)), 1);
}

TEST(CliqueCover, Examples) {
  EXPECT_EQ(clique_cover_number(complete(5)).size, 1);
  EXPECT_EQ(clique_cover_number(cycle(5)).size, 3);
  const CliqueCover p4 = clique_cover_number(path(4));
  EXPECT_EQ(p4.size, 2);
  EXPECT_EQ(p4.cliques, sets({{0, 1}, {2, 3}}));
  EXPECT_EQ(clique_cover_number(Graph(4)).size, 4);
}

TEST(CliqueCover, CliquesAreDisjointAndCover) {
  std::mt19937_64 rng(303);
  for (int i = 0; i < 100; ++i) {
    const Graph g = random_graph(rng, 1 + static_cast<int>(rng() % 12), 0.5);
    const CliqueCover c = clique_cover_number(g);
    ASSERT_EQ(c.size, static_cast<int>(c.cliques.size()));
    VertexSet seen;
    for (VertexSet q : c.cliques) {
      EXPECT_TRUE(g.is_clique(q));
      EXPECT_FALSE(seen.intersects(q));
      seen |= q;
    }
    EXPECT_EQ(seen, g.vertices());
  }
}

TEST(InvariantChain, Examples) {
  const InvariantRecord c12 = invariant_chain(cycle(12));
  EXPECT_EQ(c12.alpha_sq, 4);
  EXPECT_EQ(c12.theta_sq, 4);
  EXPECT_EQ(c12.gamma, 4);
  EXPECT_EQ(c12.idom, 4);
  EXPECT_EQ(c12.alpha, 6);
  EXPECT_EQ(c12.theta, 6);
  EXPECT_EQ(c12.mu, 6);
  EXPECT_TRUE(c12.chain_holds());
  EXPECT_FALSE(c12.all_equal());

  const InvariantRecord k5 = invariant_chain(complete(5));
  EXPECT_TRUE(k5.all_equal());
  EXPECT_EQ(k5.alpha, 1);

  const InvariantRecord p4 = invariant_chain(path(4));
  EXPECT_TRUE(p4.all_equal());
  EXPECT_EQ(p4.alpha, 2);

  const InvariantRecord c6 = invariant_chain(cycle(6));
  EXPECT_TRUE(c6.chain_holds());
  EXPECT_EQ(c6.alpha, 3);
}

TEST(Solvers, MatchOracleOnRandomGraphs) {
  std::mt19937_64 rng(404);
  for (int i = 0; i < 250; ++i) {
    const int n = 1 + static_cast<int>(rng() % 11);
    const Graph g = random_graph(rng, n, std::uniform_real_distribution<double>(0.1, 0.7)(rng));
    const oracle::Adj a(g);
    const InvariantRecord r = compute_invariants(g);
    const oracle::Adj sq = oracle::square(a);
    EXPECT_EQ(r.alpha, oracle::alpha(a)) << to_graph6(g);
    EXPECT_EQ(r.mu, oracle::matching(a)) << to_graph6(g);
    EXPECT_EQ(r.gamma, oracle::domination(a)) << to_graph6(g);
    EXPECT_EQ(r.idom, oracle::independent_domination(a)) << to_graph6(g);
    EXPECT_EQ(r.theta, oracle::clique_cover(a)) << to_graph6(g);
    EXPECT_EQ(r.alpha_sq, oracle::alpha(sq)) << to_graph6(g);
    EXPECT_EQ(r.theta_sq, oracle::clique_cover(sq)) << to_graph6(g);
    EXPECT_TRUE(r.chain_holds());
  }
}

TEST(StabilityWithin, MatchesInducedSubgraph) {
  std::mt19937_64 rng(505);
  for (int i = 0; i < 100; ++i) {
    const Graph g = random_graph(rng, 2 + static_cast<int>(rng() % 14), 0.3);
    const VertexSet x(rng() & g.vertices().bits());
    EXPECT_EQ(stability_number_within(g, x), oracle::alpha(oracle::Adj(induced_subgraph(g, x).graph)));
  }
}

TEST(SolverConfig, EnvironmentOverride) {
  ::setenv("SQSTABLE_CAP_N", "7", 1);
  EXPECT_EQ(SolverConfig::from_environment().cap_n, 7);
  ::unsetenv("SQSTABLE_CAP_N");
  EXPECT_EQ(SolverConfig::from_environment().cap_n, 64);
}
