#include "sqstable/matching.hpp"

#include <algorithm>
#include <deque>

#include "sqstable/errors.hpp"
#include "sqstable/structure.hpp"

namespace sqstable {

VertexSet Matching::covered() const {
  VertexSet out;
  for (const Edge& e : edges) {
    out.insert(e.u);
    out.insert(e.v);
  }
  return out;
}

bool is_valid_matching(const Graph& g, const Matching& m) {
  VertexSet used;
  for (const Edge& e : m.edges) {
    if (e.u < 0 || e.v >= g.order() || e.u == e.v || !g.adjacent(e.u, e.v)) return false;
    if (used.contains(e.u) || used.contains(e.v)) return false;
    used.insert(e.u);
    used.insert(e.v);
  }
  return true;
}

namespace {

// Edmonds' algorithm with blossom contraction via base labels.
class Blossom {
 public:
  explicit Blossom(const Graph& g) : g_(g), n_(g.order()), match_(n_, -1) {}

  Matching run() {
    for (int v = 0; v < n_; ++v) {
      if (match_[v] != -1) continue;
      int u = find_path(v);
      while (u != -1) {
        const int pv = parent_[u];
        const int ppv = match_[pv];
        match_[u] = pv;
        match_[pv] = u;
        u = ppv;
      }
    }
    Matching m;
    for (int v = 0; v < n_; ++v) {
      if (match_[v] > v) m.edges.push_back(Edge{v, match_[v]});
    }
    return m;
  }

 private:
  int lca(int a, int b) const {
    std::vector<bool> seen(n_, false);
    for (;;) {
      a = base_[a];
      seen[a] = true;
      if (match_[a] == -1) break;
      a = parent_[match_[a]];
    }
    for (;;) {
      b = base_[b];
      if (seen[b]) return b;
      b = parent_[match_[b]];
    }
  }

  void mark_path(int v, int b, int child) {
    while (base_[v] != b) {
      in_blossom_[base_[v]] = true;
      in_blossom_[base_[match_[v]]] = true;
      parent_[v] = child;
      child = match_[v];
      v = parent_[match_[v]];
    }
  }

  int find_path(int root) {
    used_.assign(n_, false);
    parent_.assign(n_, -1);
    base_.resize(n_);
    for (int i = 0; i < n_; ++i) base_[i] = i;
    used_[root] = true;
    std::deque<int> queue{root};
    while (!queue.empty()) {
      const int v = queue.front();
      queue.pop_front();
      for (int to : g_.neighbors(v)) {
        if (base_[v] == base_[to] || match_[v] == to) continue;
        if (to == root || (match_[to] != -1 && parent_[match_[to]] != -1)) {
          const int cur = lca(v, to);
          in_blossom_.assign(n_, false);
          mark_path(v, cur, to);
          mark_path(to, cur, v);
          for (int i = 0; i < n_; ++i) {
            if (in_blossom_[base_[i]]) {
              base_[i] = cur;
              if (!used_[i]) {
                used_[i] = true;
                queue.push_back(i);
              }
            }
          }
        } else if (parent_[to] == -1) {
          parent_[to] = v;
          if (match_[to] == -1) return to;
          used_[match_[to]] = true;
          queue.push_back(match_[to]);
        }
      }
    }
    return -1;
  }

  const Graph& g_;
  int n_;
  std::vector<int> match_;
  std::vector<int> parent_;
  std::vector<int> base_;
  std::vector<bool> used_;
  std::vector<bool> in_blossom_;
};

// Kuhn's augmenting paths from A into S, optionally with one edge banned.
class BipartiteMatcher {
 public:
  BipartiteMatcher(const Graph& g, VertexSet a, VertexSet s, std::optional<Edge> banned)
      : g_(g), a_(a), s_(s), banned_(banned), owner_(g.order(), -1) {}

  // Size of a maximum matching of (A, S).
  int run() {
    int size = 0;
    for (int v : a_) {
      visited_ = VertexSet{};
      if (augment(v)) ++size;
    }
    return size;
  }

  Matching matching() const {
    Matching m;
    for (int w : s_) {
      if (owner_[w] != -1) m.edges.push_back(Edge::of(owner_[w], w));
    }
    std::sort(m.edges.begin(), m.edges.end());
    return m;
  }

 private:
  bool augment(int v) {
    for (int w : g_.neighbors(v) & s_) {
      if (banned_ && Edge::of(v, w) == *banned_) continue;
      if (visited_.contains(w)) continue;
      visited_.insert(w);
      if (owner_[w] == -1 || augment(owner_[w])) {
        owner_[w] = v;
        return true;
      }
    }
    return false;
  }

  const Graph& g_;
  VertexSet a_;
  VertexSet s_;
  std::optional<Edge> banned_;
  std::vector<int> owner_;
  VertexSet visited_;
};

}  // namespace

Matching maximum_matching(const Graph& g) { return Blossom(g).run(); }

PerfectMatchingResult unique_perfect_matching(const Graph& g) {
  PerfectMatchingResult result;
  Matching m = maximum_matching(g);
  if (2 * m.size() != g.order()) return result;
  // Any other perfect matching misses at least one edge of m.
  result.kind = PerfectMatchingKind::kUnique;
  for (const Edge& e : m.edges) {
    if (2 * maximum_matching(g.with_edge_removed(e)).size() == g.order()) {
      result.kind = PerfectMatchingKind::kMultiple;
      break;
    }
  }
  result.matching = std::move(m);
  return result;
}

VertexSet pendant_vertices(const Graph& g) {
  VertexSet out;
  for (int v = 0; v < g.order(); ++v) {
    if (g.degree(v) == 1) out.insert(v);
  }
  return out;
}

VertexSet pendant_representatives(const Graph& g) {
  VertexSet out = pendant_vertices(g);
  for (int v : out) {
    const int w = g.neighbors(v).front();
    if (w < v && g.degree(w) == 1) out.erase(v);
  }
  return out;
}

std::optional<Matching> pendant_perfect_matching(const Graph& g) {
  Matching m;
  for (int v : pendant_vertices(g)) m.edges.push_back(Edge::of(v, g.neighbors(v).front()));
  std::sort(m.edges.begin(), m.edges.end());
  m.edges.erase(std::unique(m.edges.begin(), m.edges.end()), m.edges.end());
  if (!is_valid_matching(g, m) || m.covered() != g.vertices()) return std::nullopt;
  return m;
}

bool is_induced_matching(const Graph& g, const Matching& m) {
  for (std::size_t i = 0; i < m.edges.size(); ++i) {
    const VertexSet ends_i{m.edges[i].u, m.edges[i].v};
    for (std::size_t j = i + 1; j < m.edges.size(); ++j) {
      const VertexSet ends_j{m.edges[j].u, m.edges[j].v};
      if (g.neighborhood(ends_i).intersects(ends_j)) return false;
    }
  }
  return true;
}

MatchIntoResult match_into(const Graph& g, VertexSet a, VertexSet s) {
  if (a.intersects(s)) throw PreconditionError("match_into: A and S overlap on " + (a & s).to_string());
  MatchIntoResult result;
  BipartiteMatcher matcher(g, a, s, std::nullopt);
  if (matcher.run() < a.size()) return result;
  result.count = 1;
  result.witness = matcher.matching();
  for (const Edge& e : result.witness->edges) {
    if (BipartiteMatcher(g, a, s, e).run() == a.size()) {
      result.count = 2;
      break;
    }
  }
  return result;
}

bool berge_check(const Graph& g, VertexSet s, const SolverConfig& config) {
  if (!g.is_stable(s)) throw PreconditionError("berge_check: " + s.to_string() + " is not stable");
  require_enumeration_cap(g, config);
  // Subsets of a matchable set are matchable, so the maximal stable sets of
  // G - S are the only candidates that need checking.
  const InducedSubgraph rest = induced_subgraph(g, g.vertices() - s);
  for (VertexSet local : enumerate_maximal_stable_sets(rest.graph, config)) {
    if (match_into(g, rest.to_original(local), s).count == 0) return false;
  }
  return true;
}

}  // namespace sqstable
