#include "sqstable/graph.hpp"

#include <string>

#include "sqstable/errors.hpp"

namespace sqstable {

namespace {

void check_order(int n) {
  if (n < 0 || n > Graph::kMaxOrder) {
    throw InputError("graph order " + std::to_string(n) + " outside [0, " +
                     std::to_string(Graph::kMaxOrder) + "]");
  }
}

}  // namespace

Graph::Graph(int n) : n_(n) {
  check_order(n);
  adj_.assign(static_cast<std::size_t>(n), VertexSet{});
}

Graph Graph::from_edges(int n, std::span<const Edge> edges) {
  Graph g(n);
  for (const Edge& e : edges) {
    if (e.u < 0 || e.v < 0 || e.u >= n || e.v >= n) {
      throw InputError("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                       ") out of range for n=" + std::to_string(n));
    }
    if (e.u == e.v) throw InputError("self-loop at vertex " + std::to_string(e.u));
    if (!g.adj_[static_cast<std::size_t>(e.u)].contains(e.v)) ++g.m_;
    g.adj_[static_cast<std::size_t>(e.u)].insert(e.v);
    g.adj_[static_cast<std::size_t>(e.v)].insert(e.u);
  }
  return g;
}

Graph Graph::from_adjacency(std::vector<VertexSet> rows) {
  const int n = static_cast<int>(rows.size());
  Graph g(n);
  const VertexSet all = VertexSet::range(n);
  int degree_sum = 0;
  for (int v = 0; v < n; ++v) {
    const VertexSet row = rows[static_cast<std::size_t>(v)];
    if (!row.is_subset_of(all)) throw InputError("adjacency row out of range");
    if (row.contains(v)) throw InputError("self-loop at vertex " + std::to_string(v));
    for (int w : row) {
      if (!rows[static_cast<std::size_t>(w)].contains(v)) {
        throw InputError("adjacency is not symmetric");
      }
    }
    degree_sum += row.size();
  }
  g.adj_ = std::move(rows);
  g.m_ = degree_sum / 2;
  return g;
}

VertexSet Graph::neighborhood(VertexSet s) const {
  VertexSet out;
  for (int v : s) out |= neighbors(v);
  return out;
}

bool Graph::is_stable(VertexSet s) const {
  for (int v : s) {
    if (neighbors(v).intersects(s)) return false;
  }
  return true;
}

bool Graph::is_clique(VertexSet s) const {
  for (int v : s) {
    if (!(s - VertexSet::single(v)).is_subset_of(neighbors(v))) return false;
  }
  return true;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(static_cast<std::size_t>(m_));
  for (int u = 0; u < n_; ++u) {
    for (int v : neighbors(u)) {
      if (v > u) out.push_back(Edge{u, v});
    }
  }
  return out;
}

Graph Graph::with_edge_removed(Edge e) const {
  Graph g = *this;
  if (g.adjacent(e.u, e.v)) {
    g.adj_[static_cast<std::size_t>(e.u)].erase(e.v);
    g.adj_[static_cast<std::size_t>(e.v)].erase(e.u);
    --g.m_;
  }
  return g;
}

Graph Graph::with_edge_added(Edge e) const {
  if (e.u == e.v) throw InputError("self-loop at vertex " + std::to_string(e.u));
  Graph g = *this;
  if (!g.adjacent(e.u, e.v)) {
    g.adj_[static_cast<std::size_t>(e.u)].insert(e.v);
    g.adj_[static_cast<std::size_t>(e.v)].insert(e.u);
    ++g.m_;
  }
  return g;
}

}  // namespace sqstable
