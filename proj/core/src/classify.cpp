#include "sqstable/classify.hpp"

#include <algorithm>

#include "sqstable/errors.hpp"
#include "sqstable/matching.hpp"
#include "sqstable/structure.hpp"

namespace sqstable {

namespace {

constexpr int kAlphaPlusCrossCheckOrder = 16;

// Visits every stable subset of `cand` (the empty set included) until the
// visitor returns false. Returns false iff the visit was cut short.
template <typename Visitor>
bool for_each_stable_subset(const Graph& g, VertexSet chosen, VertexSet cand, Visitor& visit) {
  if (cand.empty()) return visit(chosen);
  const int v = cand.front();
  const VertexSet rest = cand - VertexSet::single(v);
  if (!for_each_stable_subset(g, chosen | VertexSet::single(v), rest - g.neighbors(v), visit)) return false;
  return for_each_stable_subset(g, chosen, rest, visit);
}

// Calls visit on every subset of `pool` with exactly k members, in
// increasing bit order, until it returns false.
template <typename Visitor>
bool for_each_k_subset(VertexSet pool, int k, Visitor& visit) {
  const std::vector<int> members = pool.to_vector();
  const int m = static_cast<int>(members.size());
  if (k < 0 || k > m) return true;
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  for (;;) {
    VertexSet s;
    for (int i : idx) s.insert(members[i]);
    if (!visit(s)) return false;
    int i = k - 1;
    while (i >= 0 && idx[i] == m - k + i) --i;
    if (i < 0) return true;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

std::optional<int> first_isolated_vertex(const Graph& g) {
  for (int v = 0; v < g.order(); ++v) {
    if (g.degree(v) == 0) return v;
  }
  return std::nullopt;
}

void require_maximum_stable(const Graph& g, VertexSet s, const SolverConfig& config, const char* what) {
  if (!g.is_stable(s) || s.size() != stability_number(g, config).alpha) {
    throw PreconditionError(std::string(what) + ": " + s.to_string() + " is not a maximum stable set");
  }
}

// Literal P2 check for one A: some S* subset of s with |S*| = alpha - |A|
// and A u S* stable.
bool p2_by_subsets(const Graph& g, VertexSet a, VertexSet s, int alpha) {
  bool found = false;
  auto visit = [&](VertexSet star) {
    if (g.is_stable(a | star)) {
      found = true;
      return false;
    }
    return true;
  };
  for_each_k_subset(s, alpha - a.size(), visit);
  return found;
}

}  // namespace

const char* to_string(AlphaPlusClass c) {
  switch (c) {
    case AlphaPlusClass::kNotPlus:
      return "NOT_PLUS";
    case AlphaPlusClass::kPlus0:
      return "PLUS_0";
    case AlphaPlusClass::kPlus1:
      return "PLUS_1";
  }
  return "?";
}

SquareStability is_square_stable(const Graph& g, const SolverConfig& config) {
  SquareStability result;
  const StabilityResult base = stability_number(g, config);
  const StabilityResult sq = stability_number(square(g), config);
  result.alpha = base.alpha;
  result.alpha_sq = sq.alpha;
  result.square_stable = base.alpha == sq.alpha;
  if (result.square_stable) result.witness = sq.witness;
  return result;
}

WellCoverage is_well_covered(const Graph& g, const SolverConfig& config) {
  WellCoverage result;
  require_enumeration_cap(g, config);
  if (g.order() == 0) return result;
  if (auto v = first_isolated_vertex(g)) {
    result.isolated_vertex = v;
    return result;
  }
  const int alpha = stability_number(g, config).alpha;
  for (VertexSet s : enumerate_maximal_stable_sets(g, config)) {
    if (s.size() != alpha) {
      result.counterexample = s;
      return result;
    }
  }
  result.well_covered = true;
  return result;
}

bool is_very_well_covered(const Graph& g, const SolverConfig& config) {
  return is_well_covered(g, config).well_covered && g.order() == 2 * stability_number(g, config).alpha;
}

bool is_koenig_egervary(const Graph& g, const SolverConfig& config) {
  return stability_number(g, config).alpha + maximum_matching(g).size() == g.order();
}

VertexSet simplicial_vertices(const Graph& g) {
  VertexSet out;
  for (int v = 0; v < g.order(); ++v) {
    if (g.is_clique(g.neighbors(v))) out.insert(v);
  }
  return out;
}

std::vector<Simplex> simplexes(const Graph& g) {
  const VertexSet simplicial = simplicial_vertices(g);
  std::vector<Simplex> out;
  for (VertexSet clique : maximal_cliques(g)) {
    if (clique.intersects(simplicial)) out.push_back(Simplex{clique, clique & simplicial});
  }
  return out;
}

bool simplex_partition_check(const Graph& g) {
  VertexSet seen;
  for (const Simplex& s : simplexes(g)) {
    if (seen.intersects(s.clique)) return false;
    seen |= s.clique;
  }
  return seen == g.vertices();
}

bool is_simplicial_graph(const Graph& g) {
  const VertexSet simplicial = simplicial_vertices(g);
  return (simplicial | g.neighborhood(simplicial)) == g.vertices();
}

AlphaMinus alpha_minus_stable(const Graph& g, const SolverConfig& config) {
  AlphaMinus result;
  const int alpha = stability_number(g, config).alpha;
  result.stable = true;
  for (const Edge& e : g.edges()) {
    if (stability_number(g.with_edge_removed(e), config).alpha != alpha) {
      result.stable = false;
      result.breaking_edge = e;
      break;
    }
  }
  if (g.order() > config.cap_omega) return result;

  bool by_omega = true;
  for (VertexSet s : enumerate_maximum_stable_sets(g, config).sets) {
    for (int v : g.vertices() - s) {
      if ((g.neighbors(v) & s).size() < 2) by_omega = false;
    }
  }
  if (by_omega != result.stable) {
    throw InternalError("alpha^- routes disagree: edge deletion says " + std::string(result.stable ? "true" : "false") +
                        ", neighbour counts over Omega say " + (by_omega ? "true" : "false"));
  }
  result.cross_checked = true;
  return result;
}

AlphaPlus alpha_plus_class(const Graph& g, const SolverConfig& config) {
  AlphaPlus result;
  const StableSetFamily omega = enumerate_maximum_stable_sets(g, config);
  result.core = omega.core;
  switch (result.core.size()) {
    case 0:
      result.cls = AlphaPlusClass::kPlus0;
      break;
    case 1:
      result.cls = AlphaPlusClass::kPlus1;
      break;
    default:
      result.cls = AlphaPlusClass::kNotPlus;
  }
  if (g.order() <= kAlphaPlusCrossCheckOrder) {
    bool by_definition = true;
    const Graph co = complement(g);
    for (const Edge& e : co.edges()) {
      if (stability_number(g.with_edge_added(e), config).alpha != omega.alpha()) {
        by_definition = false;
        break;
      }
    }
    if (by_definition != (result.cls != AlphaPlusClass::kNotPlus)) {
      throw InternalError("alpha^+ routes disagree on core " + result.core.to_string());
    }
    result.cross_checked = true;
  }
  return result;
}

bool satisfies_p1(const Graph& g, VertexSet s, const SolverConfig& config) {
  require_enumeration_cap(g, config);
  auto visit = [&](VertexSet a) { return match_into(g, a, s).count == 1; };
  return for_each_stable_subset(g, VertexSet{}, g.vertices() - s, visit);
}

bool satisfies_p2(const Graph& g, VertexSet s, int alpha, const SolverConfig& config) {
  require_enumeration_cap(g, config);
  auto visit = [&](VertexSet a) { return a.empty() || p2_by_subsets(g, a, s, alpha); };
  return for_each_stable_subset(g, VertexSet{}, g.vertices() - s, visit);
}

bool property_p1(const Graph& g, VertexSet s0, const SolverConfig& config) {
  require_maximum_stable(g, s0, config, "property_p1");
  const bool exhaustive = satisfies_p1(g, s0, config);
  // Berge already guarantees some matching for a maximum s0, so uniqueness
  // reduces to each outside vertex having a single neighbour in s0.
  bool by_counts = true;
  for (int v : g.vertices() - s0) {
    if ((g.neighbors(v) & s0).size() != 1) by_counts = false;
  }
  if (exhaustive != by_counts) {
    throw InternalError("P1 routes disagree on " + s0.to_string());
  }
  return exhaustive;
}

bool property_p2(const Graph& g, VertexSet s0, const SolverConfig& config) {
  require_maximum_stable(g, s0, config, "property_p2");
  require_enumeration_cap(g, config);
  const int alpha = s0.size();
  auto visit = [&](VertexSet a) {
    if (a.empty()) return true;
    const VertexSet star = s0 - g.neighborhood(a);
    const bool constructed = a.size() + star.size() == alpha;
    const bool searched = p2_by_subsets(g, a, s0, alpha);
    if (constructed != searched) {
      throw InternalError("P2 routes disagree on S0=" + s0.to_string() + " A=" + a.to_string());
    }
    return constructed;
  };
  return for_each_stable_subset(g, VertexSet{}, g.vertices() - s0, visit);
}

MatroidCheck omega_is_matroid(const Graph& g, const SolverConfig& config) {
  MatroidCheck result;
  const StableSetFamily omega = enumerate_maximum_stable_sets(g, config);
  result.matroid = true;
  for (VertexSet b1 : omega.sets) {
    for (VertexSet b2 : omega.sets) {
      for (int x : b1 - b2) {
        bool exchanged = false;
        for (int y : b2 - b1) {
          VertexSet swapped = b1;
          swapped.erase(x);
          swapped.insert(y);
          if (omega.contains(swapped)) {
            exchanged = true;
            break;
          }
        }
        if (!exchanged) {
          result.matroid = false;
          result.exchange_failure = "B1=" + b1.to_string() + " x=" + std::to_string(x) + " B2=" + b2.to_string();
          break;
        }
      }
      if (!result.matroid) break;
    }
    if (!result.matroid) break;
  }

  result.omega_exchange = result.matroid;
  for (VertexSet s : enumerate_maximal_stable_sets(g, config)) {
    if (s.size() != omega.alpha()) {
      result.unextendable_stable_set = s;
      result.matroid = false;
      break;
    }
  }

  bool cliques = true;
  for (VertexSet comp : components(g)) cliques = cliques && g.is_clique(comp);
  if (cliques != result.matroid) {
    throw InternalError("matroid routes disagree: exchange route says " + std::string(result.matroid ? "true" : "false") +
                        ", component structure says " + (cliques ? "true" : "false"));
  }
  return result;
}

ClassificationReport classify(const Graph& g, const SolverConfig& config) {
  require_exact_cap(g, config);
  require_enumeration_cap(g, config);
  ClassificationReport r;
  ClassificationWitnesses& w = r.witnesses;

  const SquareStability ss = is_square_stable(g, config);
  r.square_stable = ss.square_stable;
  w.square_stable_set = ss.witness;

  const WellCoverage wc = is_well_covered(g, config);
  r.well_covered = wc.well_covered;
  w.isolated_vertex = wc.isolated_vertex;
  w.non_maximum_maximal_stable_set = wc.counterexample;
  r.very_well_covered = r.well_covered && g.order() == 2 * ss.alpha;
  r.koenig_egervary = ss.alpha + maximum_matching(g).size() == g.order();

  r.simplicial_graph = is_simplicial_graph(g);
  const ChordalityResult chordal = is_chordal(g);
  r.chordal = chordal.chordal;
  w.elimination_order = chordal.elimination_order;
  w.simplexes = simplexes(g);
  r.simplex_partition = simplex_partition_check(g);

  const AlphaMinus minus = alpha_minus_stable(g, config);
  r.alpha_minus = minus.stable;
  r.alpha_minus_cross_checked = minus.cross_checked;
  w.alpha_minus_breaking_edge = minus.breaking_edge;

  const AlphaPlus plus = alpha_plus_class(g, config);
  r.alpha_plus_class = plus.cls;
  w.omega_core = plus.core;

  const MatroidCheck matroid = omega_is_matroid(g, config);
  r.omega_matroid = matroid.matroid;
  w.matroid_exchange_failure = matroid.exchange_failure;

  if (r.very_well_covered && !r.well_covered) throw InternalError("very well-covered but not well-covered");
  if (r.square_stable && g.order() > 0 && !first_isolated_vertex(g)) {
    if (!r.well_covered) throw InternalError("square-stable but not well-covered");
    if (r.alpha_plus_class != AlphaPlusClass::kPlus0) throw InternalError("square-stable but not alpha_0^+");
    if (r.alpha_minus) throw InternalError("square-stable and alpha^-");
  }
  return r;
}

}  // namespace sqstable
