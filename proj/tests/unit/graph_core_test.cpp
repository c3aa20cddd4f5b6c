#include <gtest/gtest.h>

#include <random>

#include "helpers.hpp"
#include "oracle.hpp"
#include "sqstable/errors.hpp"
#include "sqstable/io.hpp"
#include "sqstable/structure.hpp"

using namespace sqstable;
using namespace testing_support;

TEST(VertexSet, BasicOperations) {
  VertexSet s{0, 2, 5};
  EXPECT_EQ(s.size(), 3);
  EXPECT_TRUE(s.contains(2));
  EXPECT_FALSE(s.contains(1));
  EXPECT_EQ(s.front(), 0);
  EXPECT_EQ(s.to_vector(), (std::vector<int>{0, 2, 5}));
  EXPECT_EQ(s.to_string(), "{0,2,5}");
  EXPECT_EQ((s - VertexSet{2}).to_string(), "{0,5}");
  EXPECT_TRUE(VertexSet{2}.is_subset_of(s));
  EXPECT_EQ(VertexSet::range(4).size(), 4);
  EXPECT_EQ(VertexSet::range(64).size(), 64);
}

TEST(VertexSet, LexOrderComparesSortedMemberLists) {
  EXPECT_TRUE(lex_less(VertexSet{0, 3}, VertexSet{1, 2}));
  EXPECT_TRUE(lex_less(VertexSet{0, 2}, VertexSet{0, 3}));
  EXPECT_TRUE(lex_less(VertexSet{0}, VertexSet{0, 1}));
  EXPECT_FALSE(lex_less(VertexSet{1}, VertexSet{0, 5}));
  EXPECT_FALSE(lex_less(VertexSet{2}, VertexSet{2}));
}

TEST(VertexSet, LexOrderMatchesVectorOrderOnRandomSets) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 2000; ++i) {
    const VertexSet a(rng() & 0xFFFF);
    const VertexSet b(rng() & 0xFFFF);
    EXPECT_EQ(lex_less(a, b), a.to_vector() < b.to_vector()) << a.to_string() << " " << b.to_string();
  }
}

TEST(Graph, ConstructionAndQueries) {
  const Graph g = Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}});
  EXPECT_EQ(g.order(), 4);
  EXPECT_EQ(g.size(), 3);
  EXPECT_TRUE(g.adjacent(1, 0));
  EXPECT_FALSE(g.adjacent(0, 2));
  EXPECT_EQ(g.degree(1), 2);
  EXPECT_EQ(g.neighborhood(VertexSet{0, 3}), (VertexSet{1, 2}));
  EXPECT_TRUE(g.is_stable(VertexSet{0, 2}));
  EXPECT_FALSE(g.is_stable(VertexSet{0, 1}));
  EXPECT_TRUE(g.is_clique(VertexSet{1, 2}));
  EXPECT_EQ(g.with_edge_removed(Edge{1, 2}).size(), 2);
  EXPECT_EQ(g.with_edge_added(Edge{0, 3}), cycle(4));
}

TEST(Graph, RejectsBadEdges) {
  EXPECT_THROW(Graph::from_edges(3, {{0, 0}}), InputError);
  EXPECT_THROW(Graph::from_edges(3, {{0, 3}}), InputError);
  EXPECT_THROW(Graph(65), InputError);
}

TEST(EdgeList, ParsesPathAndHeader) {
  const Graph p4 = parse_edge_list("0 1\n1 2\n2 3");
  EXPECT_EQ(p4, path(4));
  const Graph empty3 = parse_edge_list("n 3\n");
  EXPECT_EQ(empty3.order(), 3);
  EXPECT_EQ(empty3.size(), 0);
  EXPECT_EQ(parse_edge_list("# comment\nn 5\n0 4 # trailing\n").size(), 1);
}

TEST(EdgeList, RejectsMalformedInput) {
  EXPECT_THROW(parse_edge_list("0 0"), InputError);
  EXPECT_THROW(parse_edge_list(""), InputError);
  EXPECT_THROW(parse_edge_list("0 x"), InputError);
  EXPECT_THROW(parse_edge_list("n 2\n0 2"), InputError);
  EXPECT_THROW(parse_edge_list("0 1\nn 3"), InputError);
  EXPECT_THROW(parse_edge_list("0 1 2"), InputError);
}

TEST(EdgeList, RoundTrips) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 50; ++i) {
    const Graph g = random_graph(rng, 1 + static_cast<int>(rng() % 12), 0.4);
    EXPECT_EQ(parse_edge_list(to_edge_list(g)), g);
  }
}

// Reference graph6 decoder written straight from the format description:
// N(n) in one byte for n <= 62, then the upper triangle in column order,
// six bits per byte, offset by 63.
Graph reference_graph6(const std::string& s) {
  const int n = s[0] - 63;
  std::vector<int> bits;
  for (std::size_t i = 1; i < s.size(); ++i) {
    const int x = s[i] - 63;
    for (int b = 5; b >= 0; --b) bits.push_back((x >> b) & 1);
  }
  std::vector<Edge> edges;
  std::size_t k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      if (bits[k]) edges.push_back(Edge{i, j});
    }
  }
  return Graph::from_edges(n, edges);
}

TEST(Graph6, DecodesKnownStrings) {
  EXPECT_EQ(parse_graph6("C~"), complete(4));
  EXPECT_EQ(parse_graph6("C~"), reference_graph6("C~"));
  EXPECT_EQ(parse_graph6("A_"), complete(2));
  EXPECT_EQ(parse_graph6("A_"), reference_graph6("A_"));
  EXPECT_EQ(parse_graph6("@"), Graph(1));
  EXPECT_EQ(parse_graph6("?"), Graph(0));
  EXPECT_EQ(parse_graph6(">>graph6<<C~\n"), complete(4));
}

TEST(Graph6, EncodesAndRoundTripsIncludingLongForm) {
  EXPECT_EQ(to_graph6(complete(4)), "C~");
  std::mt19937_64 rng(8);
  for (int n : {0, 1, 2, 5, 13, 62, 63, 64}) {
    const Graph g = random_graph(rng, n, 0.3);
    const std::string s = to_graph6(g);
    EXPECT_EQ(parse_graph6(s), g) << s;
    if (n <= 62 && n > 0) {
      EXPECT_EQ(reference_graph6(s), g);
    }
  }
}

TEST(Graph6, RejectsMalformed) {
  EXPECT_THROW(parse_graph6(""), InputError);
  EXPECT_THROW(parse_graph6("C"), InputError);     // payload too short
  EXPECT_THROW(parse_graph6("C~~"), InputError);   // payload too long
  EXPECT_THROW(parse_graph6("A`"), InputError);    // non-zero padding
}

TEST(ParseGraph, AutoDetectsFormat) {
  EXPECT_EQ(parse_graph("C~"), complete(4));
  EXPECT_EQ(parse_graph("0 1\n1 2\n2 3\n"), path(4));
  EXPECT_EQ(parse_graph("# c\nC~\n"), complete(4));
  EXPECT_THROW(parse_graph("0 1", TextFormat::kGraph6), InputError);
}

TEST(Square, PaperExamples) {
  EXPECT_EQ(square(complete(5)), complete(5));
  EXPECT_EQ(square(star(4)), complete(5));
  const Graph p4sq = square(path(4));
  EXPECT_EQ(p4sq, path(4).with_edge_added(Edge{0, 2}).with_edge_added(Edge{1, 3}));
}

TEST(Square, MatchesOracleOnRandomGraphs) {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 200; ++i) {
    const Graph g = random_graph(rng, 1 + static_cast<int>(rng() % 14), 0.25);
    const oracle::Adj sq = oracle::square(oracle::Adj(g));
    EXPECT_EQ(oracle::Adj(square(g)).row, sq.row);
  }
}

TEST(Distances, ExamplesAndOracle) {
  EXPECT_EQ(distance_matrix(path(4)).at(0, 3), 3);
  const Graph k2k1 = disjoint_union(complete(2), Graph(1));
  EXPECT_FALSE(distance_matrix(k2k1).at(0, 2).has_value());
  EXPECT_EQ(distance_matrix(cycle(6)).at(0, 3), 3);

  std::mt19937_64 rng(3);
  for (int i = 0; i < 100; ++i) {
    const Graph g = random_graph(rng, 1 + static_cast<int>(rng() % 12), 0.2);
    const auto d = oracle::distances(oracle::Adj(g));
    const DistanceMatrix m = distance_matrix(g);
    for (int u = 0; u < g.order(); ++u) {
      for (int v = 0; v < g.order(); ++v) EXPECT_EQ(m.at(u, v).value_or(-1), d[u][v]);
    }
  }
}

TEST(Components, Examples) {
  const auto comps = components(disjoint_union(complete(3), complete(2)));
  ASSERT_EQ(comps.size(), 2U);
  EXPECT_EQ(comps[0], (VertexSet{0, 1, 2}));
  EXPECT_EQ(comps[1], (VertexSet{3, 4}));
  EXPECT_EQ(components(cycle(5)).size(), 1U);
  EXPECT_EQ(components(Graph(3)).size(), 3U);
  EXPECT_TRUE(is_connected(cycle(5)));
  EXPECT_FALSE(is_connected(Graph(2)));
}

TEST(Complement, Examples) {
  EXPECT_EQ(complement(complete(4)), Graph(4));
  const Graph c5c = complement(cycle(5));
  EXPECT_TRUE(is_cycle_of_length(c5c, 5));
  std::mt19937_64 rng(21);
  for (int i = 0; i < 50; ++i) {
    const Graph g = random_graph(rng, 1 + static_cast<int>(rng() % 20), 0.5);
    EXPECT_EQ(complement(complement(g)), g);
  }
}

TEST(InducedSubgraph, Examples) {
  EXPECT_EQ(induced_subgraph(cycle(5), VertexSet{}).graph.order(), 0);
  const InducedSubgraph sub = induced_subgraph(cycle(6), VertexSet{0, 1, 2});
  EXPECT_EQ(sub.graph, path(3));
  EXPECT_EQ(sub.to_original(VertexSet{0, 2}), (VertexSet{0, 2}));
  const InducedSubgraph shifted = induced_subgraph(cycle(6), VertexSet{3, 4, 5});
  EXPECT_EQ(shifted.original, (std::vector<int>{3, 4, 5}));
  EXPECT_EQ(shifted.to_original(VertexSet{1}), VertexSet{4});
}

TEST(SymmetricDifference, Examples) {
  EXPECT_EQ(symmetric_difference_subgraph(path(4), VertexSet{0, 2}, VertexSet{0, 2}).graph.order(), 0);
  const InducedSubgraph d = symmetric_difference_subgraph(path(4), VertexSet{0, 3}, VertexSet{0, 2});
  EXPECT_EQ(d.graph, complete(2));
  EXPECT_EQ(d.original, (std::vector<int>{2, 3}));
  const InducedSubgraph u = symmetric_difference_subgraph(cycle(6), VertexSet{0}, VertexSet{1, 3});
  EXPECT_EQ(u.graph, induced_subgraph(cycle(6), VertexSet{0, 1, 3}).graph);
}

TEST(Girth, Examples) {
  EXPECT_EQ(girth(cycle(6)), 6);
  EXPECT_FALSE(girth(path(7)).has_value());
  EXPECT_FALSE(girth(star(5)).has_value());
  EXPECT_EQ(girth(fixture("diamond")), 3);
  EXPECT_EQ(girth(disjoint_union(cycle(7), cycle(5))), 5);
}

TEST(Chordal, ExamplesAndEliminationOrder) {
  EXPECT_TRUE(is_chordal(path(6)).chordal);
  EXPECT_TRUE(is_chordal(star(4)).chordal);
  EXPECT_FALSE(is_chordal(cycle(4)).chordal);
  const ChordalityResult d = is_chordal(fixture("diamond"));
  ASSERT_TRUE(d.chordal);
  ASSERT_EQ(d.elimination_order.size(), 4U);
  // Each vertex's later neighbours form a clique.
  const Graph g = fixture("diamond");
  for (std::size_t i = 0; i < d.elimination_order.size(); ++i) {
    VertexSet later;
    for (std::size_t j = i + 1; j < d.elimination_order.size(); ++j) later.insert(d.elimination_order[j]);
    EXPECT_TRUE(g.is_clique(g.neighbors(d.elimination_order[i]) & later));
  }
}

TEST(Chordal, AgreesWithInducedCycleSearch) {
  // Brute force: a graph is chordal iff no induced cycle of length >= 4.
  std::mt19937_64 rng(31);
  for (int i = 0; i < 300; ++i) {
    const Graph g = random_graph(rng, 1 + static_cast<int>(rng() % 8), 0.45);
    bool hole = false;
    for (VertexSet::Word mask = 0; mask < (VertexSet::Word{1} << g.order()) && !hole; ++mask) {
      const VertexSet s(mask);
      if (s.size() >= 4 && is_cycle_of_length(induced_subgraph(g, s).graph, s.size())) hole = true;
    }
    EXPECT_EQ(is_chordal(g).chordal, !hole) << to_graph6(g);
  }
}

TEST(Predicates, TreeCompleteBipartite) {
  EXPECT_TRUE(is_tree(path(4)));
  EXPECT_FALSE(is_tree(cycle(4)));
  EXPECT_TRUE(is_tree(Graph(1)));
  EXPECT_FALSE(is_tree(Graph(2)));
  EXPECT_TRUE(is_complete(complete(5)));
  EXPECT_TRUE(is_complete(Graph(1)));
  EXPECT_FALSE(is_complete(path(3)));
  EXPECT_TRUE(is_bipartite(cycle(6)));
  EXPECT_FALSE(is_bipartite(cycle(5)));
  EXPECT_TRUE(is_cycle_of_length(cycle(7), 7));
  EXPECT_FALSE(is_cycle_of_length(path(7), 7));
}
