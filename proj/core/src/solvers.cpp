#include "sqstable/solvers.hpp"

#include <algorithm>
#include <array>
#include <climits>
#include <cstdlib>
#include <string>

#include "sqstable/errors.hpp"
#include "sqstable/matching.hpp"
#include "sqstable/structure.hpp"

namespace sqstable {

SolverConfig SolverConfig::from_environment() {
  SolverConfig config;
  if (const char* env = std::getenv("SQSTABLE_CAP_N"); env != nullptr && *env != '\0') {
    char* end = nullptr;
    const long value = std::strtol(env, &end, 10);
    if (*end != '\0' || value < 0) throw InputError(std::string("SQSTABLE_CAP_N is not a non-negative integer: ") + env);
    config.cap_n = static_cast<int>(std::min<long>(value, Graph::kMaxOrder));
  }
  return config;
}

void require_exact_cap(const Graph& g, const SolverConfig& config) {
  if (g.order() > config.cap_n) throw CapExceeded("exact solver cap", config.cap_n, g.order());
}

void require_enumeration_cap(const Graph& g, const SolverConfig& config) {
  if (g.order() > config.cap_omega) throw CapExceeded("omega enumeration cap", config.cap_omega, g.order());
}

bool StableSetFamily::contains(VertexSet s) const {
  return std::binary_search(sets.begin(), sets.end(), s, LexLess{});
}

namespace {

// Greedy partition of `cand` into cliques of g, in the style of the colouring
// bound used by max-clique solvers (a colour class of the complement is a
// clique of g). bound[i] is the number of cliques used by order[0..i].
struct CliqueBound {
  std::array<int, 64> order{};
  std::array<int, 64> bound{};
  int count = 0;

  CliqueBound(const Graph& g, VertexSet cand) {
    int k = 0;
    VertexSet uncovered = cand;
    while (!uncovered.empty()) {
      ++k;
      VertexSet q = uncovered;
      while (!q.empty()) {
        const int v = q.front();
        q &= g.neighbors(v);
        uncovered.erase(v);
        order[count] = v;
        bound[count] = k;
        ++count;
      }
    }
  }

  int total() const { return count == 0 ? 0 : bound[count - 1]; }
};

// Branch and bound for a largest stable subset of a candidate set.
class StableSearch {
 public:
  explicit StableSearch(const Graph& g) : g_(g) {}

  // Stops as soon as a stable set of size `target` is found.
  int run(VertexSet cand, int target = INT_MAX) {
    best_ = 0;
    target_ = target;
    expand(cand, 0);
    return best_;
  }

 private:
  void expand(VertexSet cand, int size) {
    if (cand.empty()) {
      best_ = std::max(best_, size);
      return;
    }
    const CliqueBound cb(g_, cand);
    for (int i = cb.count - 1; i >= 0; --i) {
      if (size + cb.bound[i] <= best_ || best_ >= target_) return;
      const int v = cb.order[i];
      expand(cand - g_.closed_neighbors(v), size + 1);
      cand.erase(v);
    }
  }

  const Graph& g_;
  int best_ = 0;
  int target_ = INT_MAX;
};

void enumerate_at_level(const Graph& g, VertexSet chosen, VertexSet cand, int alpha, std::vector<VertexSet>& out) {
  if (chosen.size() == alpha) {
    out.push_back(chosen);
    return;
  }
  if (chosen.size() + CliqueBound(g, cand).total() < alpha) return;
  const int v = cand.front();
  enumerate_at_level(g, chosen | VertexSet::single(v), cand - g.closed_neighbors(v), alpha, out);
  enumerate_at_level(g, chosen, cand - VertexSet::single(v), alpha, out);
}

void bron_kerbosch(const Graph& g, VertexSet r, VertexSet p, VertexSet x, std::vector<VertexSet>& out) {
  if (p.empty() && x.empty()) {
    out.push_back(r);
    return;
  }
  int pivot = -1;
  int pivot_hits = -1;
  for (int u : p | x) {
    const int hits = (p & g.neighbors(u)).size();
    if (hits > pivot_hits) {
      pivot = u;
      pivot_hits = hits;
    }
  }
  for (int v : p - g.neighbors(pivot)) {
    bron_kerbosch(g, r | VertexSet::single(v), p & g.neighbors(v), x & g.neighbors(v), out);
    p.erase(v);
    x.insert(v);
  }
}

class DominationSearch {
 public:
  explicit DominationSearch(const Graph& g) : g_(g), best_(g.order()) {}

  int run() {
    search(g_.vertices(), 0);
    return best_;
  }

 private:
  void search(VertexSet undominated, int count) {
    if (undominated.empty()) {
      best_ = std::min(best_, count);
      return;
    }
    if (count + 1 >= best_) return;

    int max_cover = 0;
    for (int v = 0; v < g_.order(); ++v) {
      max_cover = std::max(max_cover, (g_.closed_neighbors(v) & undominated).size());
    }
    const int lower = (undominated.size() + max_cover - 1) / max_cover;
    if (count + lower >= best_) return;

    // Branch on the undominated vertex with the fewest possible dominators.
    int u = undominated.front();
    for (int v : undominated) {
      if (g_.closed_neighbors(v).size() < g_.closed_neighbors(u).size()) u = v;
    }
    std::vector<int> options = g_.closed_neighbors(u).to_vector();
    std::stable_sort(options.begin(), options.end(), [&](int a, int b) {
      return (g_.closed_neighbors(a) & undominated).size() > (g_.closed_neighbors(b) & undominated).size();
    });
    for (int w : options) search(undominated - g_.closed_neighbors(w), count + 1);
  }

  const Graph& g_;
  int best_;
};

// DSATUR branch and bound on the complement: colour classes are cliques of g.
class CliqueCoverSearch {
 public:
  CliqueCoverSearch(const Graph& g, int lower) : g_(g), n_(g.order()), lower_(lower) {
    for (int v = 0; v < n_; ++v) non_adj_.push_back(g.vertices() - g.closed_neighbors(v));
  }

  CliqueCover run() {
    best_ = n_ + 1;
    classes_.clear();
    colored_ = VertexSet{};
    search(0);
    CliqueCover cover;
    cover.size = best_;
    cover.cliques = best_classes_;
    std::sort(cover.cliques.begin(), cover.cliques.end(),
              [](VertexSet a, VertexSet b) { return a.front() < b.front(); });
    return cover;
  }

 private:
  int pick_vertex() const {
    int pick = -1;
    int pick_sat = -1;
    int pick_deg = -1;
    for (int v : g_.vertices() - colored_) {
      int sat = 0;
      for (VertexSet cls : classes_) sat += cls.intersects(non_adj_[v]) ? 1 : 0;
      const int deg = (non_adj_[v] - colored_).size();
      if (sat > pick_sat || (sat == pick_sat && deg > pick_deg)) {
        pick = v;
        pick_sat = sat;
        pick_deg = deg;
      }
    }
    return pick;
  }

  void search(int colored_count) {
    const int used = static_cast<int>(classes_.size());
    if (used >= best_ || done_) return;
    if (colored_count == n_) {
      best_ = used;
      best_classes_ = classes_;
      done_ = best_ <= lower_;
      return;
    }
    const int v = pick_vertex();
    colored_.insert(v);
    for (int c = 0; c < used && !done_; ++c) {
      if (classes_[c].intersects(non_adj_[v])) continue;
      classes_[c].insert(v);
      search(colored_count + 1);
      classes_[c].erase(v);
    }
    if (!done_ && used + 1 < best_) {
      classes_.push_back(VertexSet::single(v));
      search(colored_count + 1);
      classes_.pop_back();
    }
    colored_.erase(v);
  }

  const Graph& g_;
  int n_;
  int lower_;
  std::vector<VertexSet> non_adj_;
  std::vector<VertexSet> classes_;
  std::vector<VertexSet> best_classes_;
  VertexSet colored_;
  int best_ = 0;
  bool done_ = false;
};

}  // namespace

int stability_number_within(const Graph& g, VertexSet candidates) {
  return StableSearch(g).run(candidates & g.vertices());
}

StabilityResult stability_number(const Graph& g, const SolverConfig& config) {
  require_exact_cap(g, config);
  StableSearch search(g);
  StabilityResult result;
  result.alpha = search.run(g.vertices());

  // Smallest vertex first: keep v whenever the rest can still be completed.
  int need = result.alpha;
  VertexSet avail = g.vertices();
  for (int v = 0; v < g.order() && need > 0; ++v) {
    if (!avail.contains(v)) continue;
    const VertexSet above = VertexSet(~VertexSet::Word{0} << v << 1);
    const VertexSet rest = (avail - g.closed_neighbors(v)) & above;
    if (need == 1 || search.run(rest, need - 1) >= need - 1) {
      result.witness.insert(v);
      --need;
      avail = rest;
    } else {
      avail.erase(v);
    }
  }
  return result;
}

StableSetFamily enumerate_maximum_stable_sets(const Graph& g, const SolverConfig& config) {
  require_exact_cap(g, config);
  require_enumeration_cap(g, config);
  const int alpha = StableSearch(g).run(g.vertices());
  StableSetFamily family;
  enumerate_at_level(g, VertexSet{}, g.vertices(), alpha, family.sets);
  std::sort(family.sets.begin(), family.sets.end(), LexLess{});
  if (!family.sets.empty()) {
    family.core = family.sets.front();
    for (VertexSet s : family.sets) family.core &= s;
  }
  return family;
}

std::vector<VertexSet> maximal_cliques(const Graph& g) {
  std::vector<VertexSet> out;
  bron_kerbosch(g, VertexSet{}, g.vertices(), VertexSet{}, out);
  std::sort(out.begin(), out.end(), LexLess{});
  return out;
}

std::vector<VertexSet> enumerate_maximal_stable_sets(const Graph& g, const SolverConfig& config) {
  require_enumeration_cap(g, config);
  return maximal_cliques(complement(g));
}

int independent_domination_number(const Graph& g, const SolverConfig& config) {
  const auto sets = enumerate_maximal_stable_sets(g, config);
  int best = INT_MAX;
  for (VertexSet s : sets) best = std::min(best, s.size());
  return best;
}

int domination_number(const Graph& g, const SolverConfig& config) {
  require_exact_cap(g, config);
  return DominationSearch(g).run();
}

CliqueCover clique_cover_number(const Graph& g, const SolverConfig& config) {
  require_exact_cap(g, config);
  // theta is additive over components; solve each separately.
  CliqueCover cover;
  for (VertexSet comp : components(g)) {
    const InducedSubgraph sub = induced_subgraph(g, comp);
    const int lower = stability_number_within(sub.graph, sub.graph.vertices());
    const CliqueCover part = CliqueCoverSearch(sub.graph, lower).run();
    cover.size += part.size;
    for (VertexSet clique : part.cliques) cover.cliques.push_back(sub.to_original(clique));
  }
  std::sort(cover.cliques.begin(), cover.cliques.end(),
            [](VertexSet a, VertexSet b) { return a.front() < b.front(); });
  return cover;
}

InvariantRecord compute_invariants(const Graph& g, const SolverConfig& config) {
  require_exact_cap(g, config);
  const Graph sq = square(g);
  InvariantRecord r;
  r.n = g.order();
  r.mu = maximum_matching(g).size();
  r.alpha = stability_number(g, config).alpha;
  r.alpha_sq = stability_number(sq, config).alpha;
  r.theta = clique_cover_number(g, config).size;
  r.theta_sq = clique_cover_number(sq, config).size;
  r.gamma = domination_number(g, config);
  r.idom = independent_domination_number(g, config);
  return r;
}

InvariantRecord invariant_chain(const Graph& g, const SolverConfig& config) {
  const InvariantRecord r = compute_invariants(g, config);
  if (!r.chain_holds()) {
    throw InternalError("invariant chain violated: alpha_sq=" + std::to_string(r.alpha_sq) +
                        " theta_sq=" + std::to_string(r.theta_sq) + " gamma=" + std::to_string(r.gamma) +
                        " idom=" + std::to_string(r.idom) + " alpha=" + std::to_string(r.alpha) +
                        " theta=" + std::to_string(r.theta));
  }
  if (r.alpha + r.mu > r.n) throw InternalError("alpha + mu exceeds n");
  return r;
}

}  // namespace sqstable
