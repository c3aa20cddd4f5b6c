#include "sqstable/structure.hpp"

#include <algorithm>
#include <deque>

namespace sqstable {

DistanceMatrix::DistanceMatrix(int n)
    : n_(n), d_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), kUnreachable) {}

Distance DistanceMatrix::at(int u, int v) const {
  const int d = d_[static_cast<std::size_t>(u * n_ + v)];
  if (d == kUnreachable) return std::nullopt;
  return d;
}

void DistanceMatrix::set(int u, int v, int d) { d_[static_cast<std::size_t>(u * n_ + v)] = d; }

Graph square(const Graph& g) {
  std::vector<VertexSet> rows(static_cast<std::size_t>(g.order()));
  for (int v = 0; v < g.order(); ++v) {
    VertexSet reach = g.neighbors(v);
    for (int w : g.neighbors(v)) reach |= g.neighbors(w);
    reach.erase(v);
    rows[static_cast<std::size_t>(v)] = reach;
  }
  return Graph::from_adjacency(std::move(rows));
}

DistanceMatrix distance_matrix(const Graph& g) {
  const int n = g.order();
  DistanceMatrix dm(n);
  for (int s = 0; s < n; ++s) {
    // Level-synchronous BFS over bitsets.
    VertexSet seen = VertexSet::single(s);
    VertexSet frontier = seen;
    int level = 0;
    while (!frontier.empty()) {
      for (int v : frontier) dm.set(s, v, level);
      VertexSet next;
      for (int v : frontier) next |= g.neighbors(v);
      next -= seen;
      seen |= next;
      frontier = next;
      ++level;
    }
  }
  return dm;
}

std::vector<VertexSet> components(const Graph& g) {
  std::vector<VertexSet> out;
  VertexSet left = g.vertices();
  while (!left.empty()) {
    VertexSet comp = VertexSet::single(left.front());
    VertexSet frontier = comp;
    while (!frontier.empty()) {
      VertexSet next = g.neighborhood(frontier) - comp;
      comp |= next;
      frontier = next;
    }
    out.push_back(comp);
    left -= comp;
  }
  return out;
}

bool is_connected(const Graph& g) { return components(g).size() <= 1; }

Graph complement(const Graph& g) {
  const VertexSet all = g.vertices();
  std::vector<VertexSet> rows(static_cast<std::size_t>(g.order()));
  for (int v = 0; v < g.order(); ++v) {
    rows[static_cast<std::size_t>(v)] = all - g.neighbors(v) - VertexSet::single(v);
  }
  return Graph::from_adjacency(std::move(rows));
}

VertexSet InducedSubgraph::to_original(VertexSet local) const {
  VertexSet out;
  for (int v : local) out.insert(original[static_cast<std::size_t>(v)]);
  return out;
}

InducedSubgraph induced_subgraph(const Graph& g, VertexSet x) {
  InducedSubgraph out;
  out.original = (x & g.vertices()).to_vector();
  std::vector<int> local(static_cast<std::size_t>(g.order()), -1);
  for (std::size_t i = 0; i < out.original.size(); ++i) local[static_cast<std::size_t>(out.original[i])] = static_cast<int>(i);
  std::vector<VertexSet> rows(out.original.size());
  for (std::size_t i = 0; i < out.original.size(); ++i) {
    for (int w : g.neighbors(out.original[i]) & x) rows[i].insert(local[static_cast<std::size_t>(w)]);
  }
  out.graph = Graph::from_adjacency(std::move(rows));
  return out;
}

InducedSubgraph symmetric_difference_subgraph(const Graph& g, VertexSet s1, VertexSet s2) {
  return induced_subgraph(g, s1 ^ s2);
}

std::optional<int> girth(const Graph& g) {
  const int n = g.order();
  std::optional<int> best;
  std::vector<int> dist(static_cast<std::size_t>(n));
  std::vector<int> parent(static_cast<std::size_t>(n));
  for (int s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), -1);
    dist[static_cast<std::size_t>(s)] = 0;
    parent[static_cast<std::size_t>(s)] = -1;
    std::deque<int> queue{s};
    while (!queue.empty()) {
      const int v = queue.front();
      queue.pop_front();
      for (int w : g.neighbors(v)) {
        if (dist[static_cast<std::size_t>(w)] < 0) {
          dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(v)] + 1;
          parent[static_cast<std::size_t>(w)] = v;
          queue.push_back(w);
        } else if (parent[static_cast<std::size_t>(v)] != w) {
          const int len = dist[static_cast<std::size_t>(v)] + dist[static_cast<std::size_t>(w)] + 1;
          if (!best || len < *best) best = len;
        }
      }
    }
  }
  return best;
}

ChordalityResult is_chordal(const Graph& g) {
  const int n = g.order();
  // Maximum cardinality search; its reverse visiting order is a perfect
  // elimination ordering iff the graph is chordal.
  std::vector<int> weight(static_cast<std::size_t>(n), 0);
  std::vector<int> visit;
  VertexSet unvisited = g.vertices();
  while (!unvisited.empty()) {
    int pick = unvisited.front();
    for (int v : unvisited) {
      if (weight[static_cast<std::size_t>(v)] > weight[static_cast<std::size_t>(pick)]) pick = v;
    }
    visit.push_back(pick);
    unvisited.erase(pick);
    for (int w : g.neighbors(pick) & unvisited) ++weight[static_cast<std::size_t>(w)];
  }
  ChordalityResult result;
  result.elimination_order.assign(visit.rbegin(), visit.rend());

  std::vector<int> position(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) position[static_cast<std::size_t>(result.elimination_order[static_cast<std::size_t>(i)])] = i;
  for (int i = 0; i < n; ++i) {
    const int v = result.elimination_order[static_cast<std::size_t>(i)];
    VertexSet later;
    for (int w : g.neighbors(v)) {
      if (position[static_cast<std::size_t>(w)] > i) later.insert(w);
    }
    if (!g.is_clique(later)) return result;
  }
  result.chordal = true;
  return result;
}

bool is_tree(const Graph& g) {
  return g.order() >= 1 && g.size() == g.order() - 1 && is_connected(g);
}

bool is_complete(const Graph& g) {
  return 2 * g.size() == g.order() * (g.order() - 1);
}

bool is_bipartite(const Graph& g) {
  std::vector<int> side(static_cast<std::size_t>(g.order()), -1);
  for (int s = 0; s < g.order(); ++s) {
    if (side[static_cast<std::size_t>(s)] >= 0) continue;
    side[static_cast<std::size_t>(s)] = 0;
    std::deque<int> queue{s};
    while (!queue.empty()) {
      const int v = queue.front();
      queue.pop_front();
      for (int w : g.neighbors(v)) {
        if (side[static_cast<std::size_t>(w)] < 0) {
          side[static_cast<std::size_t>(w)] = 1 - side[static_cast<std::size_t>(v)];
          queue.push_back(w);
        } else if (side[static_cast<std::size_t>(w)] == side[static_cast<std::size_t>(v)]) {
          return false;
        }
      }
    }
  }
  return true;
}

bool is_cycle_of_length(const Graph& g, int k) {
  if (g.order() != k || k < 3 || g.size() != k) return false;
  for (int v = 0; v < k; ++v) {
    if (g.degree(v) != 2) return false;
  }
  return is_connected(g);
}

}  // namespace sqstable
