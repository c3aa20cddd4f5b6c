#include "sqstable/verify.hpp"

#include <algorithm>
#include <functional>

#include "sqstable/classify.hpp"
#include "sqstable/errors.hpp"
#include "sqstable/generate.hpp"
#include "sqstable/io.hpp"
#include "sqstable/matching.hpp"
#include "sqstable/structure.hpp"

namespace sqstable {

const char* to_string(Truth t) {
  switch (t) {
    case Truth::kFalse: return "false";
    case Truth::kTrue: return "true";
    case Truth::kUnevaluated: return "unevaluated";
  }
  return "?";
}

const char* statement_label(int index) {
  static constexpr const char* kLabels[kStatementCount] = {"i",   "ii", "iii", "iv",  "v",   "vi",  "vii",
                                                           "viii", "ix", "x",   "xi", "xii", "xiii"};
  return index >= 0 && index < kStatementCount ? kLabels[index] : "?";
}

namespace {

std::string yes_no(bool b) { return b ? "true" : "false"; }

struct Evaluation {
  bool value = false;
  std::string detail;
};

// Shared enumerations for one connected component. Each is computed on
// first use so a cap only affects the statements that need it.
class ComponentContext {
 public:
  ComponentContext(const InducedSubgraph& part, const SolverConfig& config)
      : part_(part), config_(config), h_(part.graph) {}

  const Graph& graph() const { return h_; }
  const SolverConfig& config() const { return config_; }

  const Graph& sq() {
    if (!sq_) sq_ = square(h_);
    return *sq_;
  }
  const StableSetFamily& omega() {
    if (!omega_) omega_ = enumerate_maximum_stable_sets(h_, config_);
    return *omega_;
  }
  const StableSetFamily& omega_sq() {
    if (!omega_sq_) omega_sq_ = enumerate_maximum_stable_sets(sq(), config_);
    return *omega_sq_;
  }
  const DistanceMatrix& dist() {
    if (!dist_) dist_ = distance_matrix(h_);
    return *dist_;
  }

  // Renders a component-local set in the caller's labels.
  std::string show(VertexSet local) const { return part_.to_original(local).to_string(); }
  int original(int v) const { return part_.original[v]; }

 private:
  const InducedSubgraph& part_;
  const SolverConfig& config_;
  const Graph& h_;
  std::optional<Graph> sq_;
  std::optional<StableSetFamily> omega_;
  std::optional<StableSetFamily> omega_sq_;
  std::optional<DistanceMatrix> dist_;
};

using StatementRoute = Evaluation (*)(ComponentContext&);

Evaluation st_simplex_partition(ComponentContext& c) {
  const Graph& h = c.graph();
  const bool value = simplex_partition_check(h);
  if (value) return {true, "every vertex lies in exactly one simplex"};
  const std::vector<Simplex> sx = simplexes(h);
  for (int v = 0; v < h.order(); ++v) {
    int count = 0;
    for (const Simplex& s : sx) count += s.clique.contains(v) ? 1 : 0;
    if (count != 1) {
      return {false, "vertex " + std::to_string(c.original(v)) + " lies in " + std::to_string(count) + " simplexes"};
    }
  }
  return {false, "simplex partition fails"};
}

Evaluation st_alpha_equal(ComponentContext& c) {
  const int a = stability_number(c.graph(), c.config()).alpha;
  const int b = stability_number(c.sq(), c.config()).alpha;
  return {a == b, "alpha=" + std::to_string(a) + " alpha_sq=" + std::to_string(b)};
}

Evaluation st_theta_equal(ComponentContext& c) {
  const int a = clique_cover_number(c.graph(), c.config()).size;
  const int b = clique_cover_number(c.sq(), c.config()).size;
  return {a == b, "theta=" + std::to_string(a) + " theta_sq=" + std::to_string(b)};
}

Evaluation st_six_equal(ComponentContext& c) {
  const InvariantRecord r = compute_invariants(c.graph(), c.config());
  return {r.all_equal(), "alpha_sq=" + std::to_string(r.alpha_sq) + " theta_sq=" + std::to_string(r.theta_sq) +
                             " gamma=" + std::to_string(r.gamma) + " i=" + std::to_string(r.idom) +
                             " alpha=" + std::to_string(r.alpha) + " theta=" + std::to_string(r.theta)};
}

Evaluation st_omega_contained(ComponentContext& c) {
  for (VertexSet s : c.omega_sq().sets) {
    if (!c.omega().contains(s)) return {false, "S=" + c.show(s) + " in Omega(G^2) is not in Omega(G)"};
  }
  return {true, std::to_string(c.omega_sq().sets.size()) + " sets of Omega(G^2) all in Omega(G)"};
}

Evaluation st_distance_three(ComponentContext& c) {
  for (VertexSet s : c.omega().sets) {
    bool spread = true;
    for (int u : s) {
      for (int v : s) {
        if (u < v) {
          const Distance d = c.dist().at(u, v);
          if (d && *d < 3) spread = false;
        }
      }
    }
    if (spread) return {true, "S=" + c.show(s) + " pairwise at distance >= 3"};
  }
  return {false, "no member of Omega(G) is pairwise at distance >= 3"};
}

Evaluation st_exists_p1(ComponentContext& c) {
  for (VertexSet s : c.omega().sets) {
    if (property_p1(c.graph(), s, c.config())) return {true, "S0=" + c.show(s) + " has P1"};
  }
  return {false, "no member of Omega(G) has P1"};
}

Evaluation st_all_sq_p1(ComponentContext& c) {
  for (VertexSet s : c.omega_sq().sets) {
    if (!satisfies_p1(c.graph(), s, c.config())) return {false, "S=" + c.show(s) + " in Omega(G^2) lacks P1"};
  }
  return {true, "every member of Omega(G^2) has P1"};
}

// Shared pair loop for the three symmetric-difference statements; `accept`
// judges one G[S1 ^ S2].
Evaluation over_pairs(ComponentContext& c, const std::function<bool(const Graph&)>& accept, const char* what) {
  for (VertexSet s1 : c.omega().sets) {
    for (VertexSet s2 : c.omega_sq().sets) {
      const InducedSubgraph sub = symmetric_difference_subgraph(c.graph(), s1, s2);
      if (!accept(sub.graph)) {
        return {false, "S1=" + c.show(s1) + " S2=" + c.show(s2) + ": G[S1^S2] has no " + what};
      }
    }
  }
  return {true, std::string("every G[S1^S2] has ") + what};
}

Evaluation st_unique_pm(ComponentContext& c) {
  return over_pairs(
      c, [](const Graph& s) { return unique_perfect_matching(s).kind == PerfectMatchingKind::kUnique; },
      "unique perfect matching");
}

Evaluation st_any_pm(ComponentContext& c) {
  return over_pairs(
      c, [](const Graph& s) { return 2 * maximum_matching(s).size() == s.order(); }, "perfect matching");
}

Evaluation st_induced_pm(ComponentContext& c) {
  return over_pairs(
      c,
      [](const Graph& s) {
        // An induced perfect matching is the only perfect matching, so
        // testing the one found is enough.
        const Matching m = maximum_matching(s);
        return 2 * m.size() == s.order() && is_induced_matching(s, m);
      },
      "induced perfect matching");
}

Evaluation st_exists_p2(ComponentContext& c) {
  for (VertexSet s : c.omega().sets) {
    if (property_p2(c.graph(), s, c.config())) return {true, "S0=" + c.show(s) + " has P2"};
  }
  return {false, "no member of Omega(G) has P2"};
}

Evaluation st_all_sq_p2(ComponentContext& c) {
  const int alpha = c.omega().alpha();
  for (VertexSet s : c.omega_sq().sets) {
    if (!satisfies_p2(c.graph(), s, alpha, c.config())) {
      return {false, "S=" + c.show(s) + " in Omega(G^2) lacks P2"};
    }
  }
  return {true, "every member of Omega(G^2) has P2"};
}

constexpr std::array<StatementRoute, kStatementCount> kRoutes = {
    st_simplex_partition, st_alpha_equal, st_theta_equal, st_six_equal,  st_omega_contained,
    st_distance_three,    st_exists_p1,   st_all_sq_p1,   st_unique_pm,  st_any_pm,
    st_induced_pm,        st_exists_p2,   st_all_sq_p2,
};

std::optional<int> first_isolated(const Graph& g) {
  for (int v = 0; v < g.order(); ++v) {
    if (g.degree(v) == 0) return v;
  }
  return std::nullopt;
}

bool has_k2_component(const Graph& g) {
  for (VertexSet comp : components(g)) {
    if (comp.size() == 2) return true;
  }
  return false;
}

// Collects violations for one graph.
class Clauses {
 public:
  explicit Clauses(const std::string& id) : id_(id) {}

  void expect(bool ok, std::string clause, std::string witness) {
    if (!ok) entry_.violations.push_back(Violation{id_, std::move(clause), std::move(witness)});
  }
  void tag(std::string t) { entry_.tags.push_back(std::move(t)); }
  SuiteEntry take() { return std::move(entry_); }

 private:
  const std::string& id_;
  SuiteEntry entry_;
};

SuiteEntry skipped(std::string note) {
  SuiteEntry e;
  e.outcome = Outcome::kSkipped;
  e.note = std::move(note);
  return e;
}

std::string pm_text(const Matching& m) {
  std::string out = "{";
  for (std::size_t i = 0; i < m.edges.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(m.edges[i].u) + "-" + std::to_string(m.edges[i].v);
  }
  return out + "}";
}

}  // namespace

EquivalenceReport verify_equivalences(const Graph& g, const SolverConfig& config, std::string graph_id) {
  EquivalenceReport report;
  report.graph_id = std::move(graph_id);
  report.statements.fill(Truth::kTrue);

  std::vector<InducedSubgraph> parts;
  for (VertexSet comp : components(g)) parts.push_back(induced_subgraph(g, comp));

  for (const InducedSubgraph& part : parts) {
    ComponentContext ctx(part, config);
    for (int k = 0; k < kStatementCount; ++k) {
      if (report.statements[k] == Truth::kFalse) continue;
      Truth value;
      std::string detail;
      try {
        Evaluation e = kRoutes[k](ctx);
        value = e.value ? Truth::kTrue : Truth::kFalse;
        detail = std::move(e.detail);
      } catch (const CapExceeded& ex) {
        value = Truth::kUnevaluated;
        detail = ex.what();
      }
      if (value == Truth::kFalse || (value == Truth::kUnevaluated && report.statements[k] == Truth::kTrue)) {
        report.statements[k] = value;
        report.details[k] = std::move(detail);
      } else if (value == Truth::kTrue && report.statements[k] == Truth::kTrue) {
        if (!report.details[k].empty()) report.details[k] += "; ";
        report.details[k] += detail;
      }
    }
  }

  int reference = -1;
  for (int k = 0; k < kStatementCount; ++k) {
    if (report.statements[k] == Truth::kUnevaluated) continue;
    if (reference < 0) {
      reference = k;
    } else if (report.statements[k] != report.statements[reference]) {
      report.agree = false;
      report.failing_pair = FailingPair{reference, k,
                                        "(" + std::string(statement_label(reference)) + ") " +
                                            to_string(report.statements[reference]) + ": " +
                                            report.details[reference] + " | (" + statement_label(k) + ") " +
                                            to_string(report.statements[k]) + ": " + report.details[k]};
      break;
    }
  }
  return report;
}

SuiteEntry check_equivalences(const Graph& g, const std::string& id, const SolverConfig& config) {
  const EquivalenceReport r = verify_equivalences(g, config, id);
  SuiteEntry entry;
  int unevaluated = 0;
  int trues = 0;
  for (Truth t : r.statements) {
    unevaluated += t == Truth::kUnevaluated ? 1 : 0;
    trues += t == Truth::kTrue ? 1 : 0;
  }
  if (unevaluated == kStatementCount) {
    entry.outcome = Outcome::kUnevaluated;
    entry.note = r.details[0];
    return entry;
  }
  if (!r.agree) {
    const FailingPair& p = *r.failing_pair;
    entry.violations.push_back(Violation{
        id, "statements (" + std::string(statement_label(p.first)) + ") and (" + statement_label(p.second) + ") differ",
        p.witness});
  }
  if (unevaluated > 0) {
    // Agreement among the evaluated statements is still checked above.
    entry.outcome = Outcome::kUnevaluated;
    entry.note = "some statements hit a cap";
    entry.tags.push_back("partially_evaluated");
  } else if (trues == kStatementCount) {
    entry.tags.push_back("all_true");
  } else if (trues == 0) {
    entry.tags.push_back("all_false");
  }
  return entry;
}

SuiteEntry verify_inequality_chain(const Graph& g, const std::string& id, const SolverConfig& config) {
  const InvariantRecord r = compute_invariants(g, config);
  Clauses out(id);
  const std::string values = "alpha_sq=" + std::to_string(r.alpha_sq) + " theta_sq=" + std::to_string(r.theta_sq) +
                             " gamma=" + std::to_string(r.gamma) + " i=" + std::to_string(r.idom) +
                             " alpha=" + std::to_string(r.alpha) + " theta=" + std::to_string(r.theta);
  out.expect(r.chain_holds(), "alpha(G^2) <= theta(G^2) <= gamma <= i <= alpha <= theta", values);
  out.expect(r.alpha + r.mu <= r.n, "alpha + mu <= n",
             "alpha=" + std::to_string(r.alpha) + " mu=" + std::to_string(r.mu) + " n=" + std::to_string(r.n));
  if (r.all_equal()) out.tag("all_equal");
  return out.take();
}

SuiteEntry verify_implications(const Graph& g, const std::string& id, const SolverConfig& config) {
  Clauses out(id);
  const int n = g.order();
  const Graph sq = square(g);
  const SquareStability ss = is_square_stable(g, config);
  const StableSetFamily omega = enumerate_maximum_stable_sets(g, config);
  const StableSetFamily omega_sq = enumerate_maximum_stable_sets(sq, config);
  const DistanceMatrix dist = distance_matrix(g);
  const bool connected = is_connected(g);
  const bool no_isolated = n > 0 && !first_isolated(g);
  const WellCoverage wc = is_well_covered(g, config);
  const bool vwc = is_very_well_covered(g, config);
  const bool ke = is_koenig_egervary(g, config);
  const std::optional<Matching> ppm = pendant_perfect_matching(g);
  if (ss.square_stable) out.tag("square_stable");

  // Containment characterization.
  bool contained = true;
  for (VertexSet s : omega_sq.sets) contained = contained && omega.contains(s);
  out.expect(ss.square_stable == contained, "square-stable iff Omega(G^2) is contained in Omega(G)",
             "square_stable=" + yes_no(ss.square_stable) + " contained=" + yes_no(contained));

  // Members of Omega(G^2) are spread out in G; in the square-stable,
  // connected, non-complete case every member has a partner at distance 3.
  const bool lemma3 = ss.square_stable && connected && !is_complete(g);
  for (VertexSet s : omega_sq.sets) {
    for (int a : s) {
      bool partner = false;
      for (int b : s) {
        if (a == b) continue;
        const Distance d = dist.at(a, b);
        out.expect(!d || *d >= 3, "members of Omega(G^2) are pairwise at distance >= 3 in G",
                   "S=" + s.to_string() + " a=" + std::to_string(a) + " b=" + std::to_string(b));
        partner = partner || (d && *d == 3);
      }
      if (lemma3) {
        out.expect(partner, "square-stable, connected, not complete: each member has a partner at distance 3",
                   "S=" + s.to_string() + " a=" + std::to_string(a));
      }
    }
  }

  if (connected) {
    const bool same = omega.sets == omega_sq.sets;
    out.expect(same == is_complete(g), "Omega(G^2) = Omega(G) iff G is complete",
               "equal=" + yes_no(same) + " complete=" + yes_no(is_complete(g)));
  }

  if (no_isolated && ss.square_stable) {
    const AlphaMinus am = alpha_minus_stable(g, config);
    out.expect(!am.stable, "square-stable => not alpha^- stable", "no edge raises alpha");
    const AlphaPlus ap = alpha_plus_class(g, config);
    out.expect(ap.cls == AlphaPlusClass::kPlus0, "square-stable => alpha_0^+ stable",
               std::string("class=") + to_string(ap.cls) + " core=" + ap.core.to_string());
    out.expect(wc.well_covered, "square-stable => well-covered",
               wc.counterexample ? "maximal " + wc.counterexample->to_string() : std::string("isolated vertex"));
  }

  if (no_isolated) {
    const bool simplicial = is_simplicial_graph(g);
    out.expect(ss.square_stable == (simplicial && wc.well_covered),
               "square-stable iff simplicial and well-covered",
               "square_stable=" + yes_no(ss.square_stable) + " simplicial=" + yes_no(simplicial) +
                   " well_covered=" + yes_no(wc.well_covered));
    if (is_chordal(g).chordal) {
      out.expect(ss.square_stable == wc.well_covered, "chordal: square-stable iff well-covered",
                 "square_stable=" + yes_no(ss.square_stable) + " well_covered=" + yes_no(wc.well_covered));
    }
  }

  if (ppm) {
    const PerfectMatchingResult upm = unique_perfect_matching(g);
    out.expect(upm.kind == PerfectMatchingKind::kUnique && upm.matching && *upm.matching == *ppm,
               "a pendant perfect matching is the unique perfect matching", pm_text(*ppm));
    if (!has_k2_component(g)) {
      const VertexSet pendants = pendant_vertices(g);
      out.expect(omega_sq.sets.size() == 1 && omega_sq.sets.front() == pendants,
                 "pendant perfect matching => Omega(G^2) is the pendant set",
                 "pendants=" + pendants.to_string() + " |Omega(G^2)|=" + std::to_string(omega_sq.sets.size()));
    }
  }

  if (ke) {
    out.tag("koenig_egervary");
    out.expect(wc.well_covered == vwc, "KE: well-covered iff very well-covered",
               "well_covered=" + yes_no(wc.well_covered) + " very_well_covered=" + yes_no(vwc));
    if (connected && n >= 2) {
      const int reps = pendant_representatives(g).size();
      const bool pendant_vwc = vwc && reps == omega.alpha();
      out.expect(ss.square_stable == ppm.has_value() && ppm.has_value() == pendant_vwc,
                 "connected KE: square-stable iff pendant perfect matching iff very well-covered with alpha pendants",
                 "square_stable=" + yes_no(ss.square_stable) + " pendant_pm=" + yes_no(ppm.has_value()) +
                     " vwc=" + yes_no(vwc) + " pendants=" + std::to_string(reps) +
                     " alpha=" + std::to_string(omega.alpha()));
    }
    if (ss.square_stable) {
      out.expect(is_koenig_egervary(sq, config), "square-stable and KE => G^2 is KE", "G^2 not KE");
    }
  }

  bool all_components = true;
  for (VertexSet comp : components(g)) {
    all_components = all_components && is_square_stable(induced_subgraph(g, comp).graph, config).square_stable;
  }
  out.expect(ss.square_stable == all_components, "square-stable iff every component is square-stable",
             "whole=" + yes_no(ss.square_stable) + " components=" + yes_no(all_components));

  if (is_bipartite(g)) out.expect(ke, "bipartite => KE", "alpha + mu != n");

  if (n <= 12) {
    const VertexSet best = omega.sets.front();
    out.expect(berge_check(g, best, config), "Berge: a maximum stable set passes", "S=" + best.to_string());
    for (VertexSet s : enumerate_maximal_stable_sets(g, config)) {
      if (s.size() < omega.alpha()) {
        out.expect(!berge_check(g, s, config), "Berge: a non-maximum stable set fails", "S=" + s.to_string());
        break;
      }
    }
  }
  return out.take();
}

SuiteEntry verify_tree_theorem(const Graph& g, const std::string& id, const SolverConfig& config) {
  if (g.order() < 2 || !is_tree(g)) throw PreconditionError("verify_tree_theorem: not a tree of order >= 2");
  Clauses out(id);
  const bool wc = is_well_covered(g, config).well_covered;
  const bool vwc = is_very_well_covered(g, config);
  const bool ppm = pendant_perfect_matching(g).has_value();
  const bool ss = is_square_stable(g, config).square_stable;
  out.expect(wc == vwc && vwc == ppm && ppm == ss, "tree: well-covered, very well-covered, pendant PM, square-stable agree",
             "wc=" + yes_no(wc) + " vwc=" + yes_no(vwc) + " pendant_pm=" + yes_no(ppm) + " ss=" + yes_no(ss));
  out.tag(ss ? "square_stable" : "not_square_stable");

  if (wc && g.order() > 2) {
    std::optional<Edge> found;
    for (const Edge& e : g.edges()) {
      if (g.degree(e.u) == 1 || g.degree(e.v) == 1) continue;
      const Graph cut = g.with_edge_removed(e);
      const std::vector<VertexSet> parts = components(cut);
      for (std::size_t k = 0; k < parts.size() && !found; ++k) {
        const VertexSet other = parts[1 - k];
        if (parts[k].size() == 2 && is_well_covered(induced_subgraph(cut, other).graph, config).well_covered) {
          found = e;
        }
      }
      if (found) break;
    }
    out.expect(found.has_value(), "well-covered tree splits into a well-covered tree and K2", "no such edge");
    if (found) out.tag("recursion_edge");
  }
  return out.take();
}

SuiteEntry verify_girth6(const Graph& g, const std::string& id, const SolverConfig& config) {
  if (g.order() <= 1) return skipped("K1 excluded");
  if (!is_connected(g)) return skipped("disconnected");
  const std::optional<int> gth = girth(g);
  if (gth && *gth < 6) return skipped("girth below 6");
  if (is_cycle_of_length(g, 7)) return skipped("C7 excluded");

  Clauses out(id);
  const bool wc = is_well_covered(g, config).well_covered;
  const bool ppm = pendant_perfect_matching(g).has_value();
  const bool vwc = is_very_well_covered(g, config);
  const bool ke = is_koenig_egervary(g, config);
  const int alpha = stability_number(g, config).alpha;
  const bool ke_pendants = ke && pendant_representatives(g).size() == alpha;
  const bool ke_ss = ke && is_square_stable(g, config).square_stable;
  const bool agree = wc == ppm && ppm == vwc && vwc == ke_pendants && ke_pendants == ke_ss;
  out.expect(agree, "girth >= 6: the five statements agree",
             "wc=" + yes_no(wc) + " pendant_pm=" + yes_no(ppm) + " vwc=" + yes_no(vwc) +
                 " ke_alpha_pendants=" + yes_no(ke_pendants) + " ke_square_stable=" + yes_no(ke_ss));
  out.tag(wc ? "all_true" : "all_false");
  return out.take();
}

SuiteEntry verify_matroid(const Graph& g, const std::string& id, const SolverConfig& config) {
  Clauses out(id);
  try {
    const MatroidCheck m = omega_is_matroid(g, config);
    out.tag(m.matroid ? "matroid" : "not_matroid");
  } catch (const InternalError& e) {
    out.expect(false, "basis exchange agrees with disjoint union of cliques", e.what());
  }
  return out.take();
}

namespace {

struct Caption {
  const char* key;
  void (*check)(const Graph&, Clauses&, const SolverConfig&);
};

void expect_flag(Clauses& out, bool actual, bool wanted, const char* what) {
  out.expect(actual == wanted, std::string(what) + " should be " + yes_no(wanted), "got " + yes_no(actual));
}

bool is_unique_pm(const Graph& g) { return unique_perfect_matching(g).kind == PerfectMatchingKind::kUnique; }

const std::vector<Caption>& captions() {
  static const std::vector<Caption> table = {
      {"k3_plus_e",
       [](const Graph& g, Clauses& out, const SolverConfig& c) {
         expect_flag(out, is_koenig_egervary(g, c), true, "KE");
         expect_flag(out, is_unique_pm(g), true, "unique perfect matching");
         expect_flag(out, is_square_stable(g, c).square_stable, false, "square-stable");
         out.expect(alpha_plus_class(g, c).cls == AlphaPlusClass::kPlus1, "alpha_1^+ stable", "class differs");
       }},
      {"diamond",
       [](const Graph& g, Clauses& out, const SolverConfig& c) {
         expect_flag(out, alpha_minus_stable(g, c).stable, true, "alpha^- stable");
       }},
      {"fig_ss_not_vwc",
       [](const Graph& g, Clauses& out, const SolverConfig& c) {
         expect_flag(out, is_square_stable(g, c).square_stable, true, "square-stable");
         expect_flag(out, is_very_well_covered(g, c), false, "very well-covered");
       }},
      {"fig_upm_not_pendant",
       [](const Graph& g, Clauses& out, const SolverConfig& c) {
         expect_flag(out, is_square_stable(g, c).square_stable, true, "square-stable");
         const PerfectMatchingResult upm = unique_perfect_matching(g);
         expect_flag(out, upm.kind == PerfectMatchingKind::kUnique, true, "unique perfect matching");
         bool non_pendant = false;
         if (upm.matching) {
           for (const Edge& e : upm.matching->edges) non_pendant = non_pendant || (g.degree(e.u) > 1 && g.degree(e.v) > 1);
         }
         expect_flag(out, non_pendant, true, "perfect matching has a non-pendant edge");
         expect_flag(out, is_koenig_egervary(g, c), false, "KE");
       }},
      {"fig_bip_vwc_not_ss",
       [](const Graph& g, Clauses& out, const SolverConfig& c) {
         expect_flag(out, is_bipartite(g), true, "bipartite");
         expect_flag(out, is_very_well_covered(g, c), true, "very well-covered");
         expect_flag(out, is_square_stable(g, c).square_stable, false, "square-stable");
         expect_flag(out, is_koenig_egervary(square(g), c), false, "square KE");
       }},
      {"C4",
       [](const Graph& g, Clauses& out, const SolverConfig& c) {
         expect_flag(out, is_very_well_covered(g, c), true, "very well-covered");
         expect_flag(out, is_square_stable(g, c).square_stable, false, "square-stable");
       }},
      {"C5",
       [](const Graph& g, Clauses& out, const SolverConfig& c) {
         expect_flag(out, is_well_covered(g, c).well_covered, true, "well-covered");
         expect_flag(out, is_square_stable(g, c).square_stable, false, "square-stable");
       }},
      {"C6",
       [](const Graph& g, Clauses& out, const SolverConfig& c) {
         expect_flag(out, alpha_minus_stable(g, c).stable, true, "alpha^- stable");
       }},
      {"C7",
       [](const Graph& g, Clauses& out, const SolverConfig& c) {
         expect_flag(out, is_koenig_egervary(g, c), false, "KE");
       }},
      {"P6",
       [](const Graph& g, Clauses& out, const SolverConfig& c) {
         expect_flag(out, is_koenig_egervary(g, c), true, "KE");
         expect_flag(out, is_unique_pm(g), true, "unique perfect matching");
         expect_flag(out, is_square_stable(g, c).square_stable, false, "square-stable");
       }},
  };
  return table;
}

}  // namespace

std::vector<std::string> caption_keys() {
  std::vector<std::string> out;
  for (const Caption& c : captions()) out.emplace_back(c.key);
  return out;
}

SuiteEntry verify_caption(const Graph& g, const std::string& id, const SolverConfig& config) {
  for (const Caption& c : captions()) {
    if (id == c.key) {
      Clauses out(id);
      c.check(g, out, config);
      out.tag("captioned");
      return out.take();
    }
  }
  return skipped("no caption for this graph");
}

const char* to_string(SuiteKind kind) {
  switch (kind) {
    case SuiteKind::kEquivalences: return "equivalences";
    case SuiteKind::kChain: return "chain";
    case SuiteKind::kImplications: return "implications";
    case SuiteKind::kTrees: return "trees";
    case SuiteKind::kGirth6: return "girth6";
    case SuiteKind::kMatroid: return "matroid";
    case SuiteKind::kCaptions: return "captions";
  }
  return "?";
}

std::vector<SuiteKind> all_suites() {
  return {SuiteKind::kEquivalences, SuiteKind::kChain,  SuiteKind::kImplications, SuiteKind::kTrees,
          SuiteKind::kGirth6,       SuiteKind::kMatroid, SuiteKind::kCaptions};
}

std::optional<SuiteKind> parse_suite_kind(std::string_view name) {
  for (SuiteKind k : all_suites()) {
    if (name == to_string(k)) return k;
  }
  return std::nullopt;
}

std::string graph_id_of(const Graph& g) { return to_graph6(g); }

SuiteRunner::SuiteRunner(std::vector<SuiteKind> suites, SolverConfig config, bool keep_reports)
    : suites_(std::move(suites)), config_(config), keep_reports_(keep_reports) {
  for (SuiteKind k : suites_) {
    SuiteResult r;
    r.suite_name = to_string(k);
    results_.push_back(std::move(r));
  }
}

void SuiteRunner::add(const CorpusItem& item) {
  ++graphs_seen_;
  const Graph& g = item.graph;
  for (std::size_t i = 0; i < suites_.size(); ++i) {
    SuiteEntry entry;
    try {
      switch (suites_[i]) {
        case SuiteKind::kEquivalences:
          if (keep_reports_) {
            reports_.push_back(verify_equivalences(g, config_, item.id));
          }
          entry = check_equivalences(g, item.id, config_);
          break;
        case SuiteKind::kChain: entry = verify_inequality_chain(g, item.id, config_); break;
        case SuiteKind::kImplications: entry = verify_implications(g, item.id, config_); break;
        case SuiteKind::kTrees:
          entry = g.order() >= 2 && is_tree(g) ? verify_tree_theorem(g, item.id, config_) : skipped("not a tree");
          break;
        case SuiteKind::kGirth6: entry = verify_girth6(g, item.id, config_); break;
        case SuiteKind::kMatroid: entry = verify_matroid(g, item.id, config_); break;
        case SuiteKind::kCaptions: entry = verify_caption(g, item.id, config_); break;
      }
    } catch (const CapExceeded& e) {
      entry = SuiteEntry{};
      entry.outcome = Outcome::kUnevaluated;
      entry.note = e.what();
    } catch (const InternalError& e) {
      entry = SuiteEntry{};
      entry.violations.push_back(Violation{item.id, "internal consistency", e.what()});
    } catch (const PreconditionError& e) {
      entry = SuiteEntry{};
      entry.violations.push_back(Violation{item.id, "internal consistency", e.what()});
    }

    SuiteResult& r = results_[i];
    switch (entry.outcome) {
      case Outcome::kChecked: ++r.graphs_checked; break;
      case Outcome::kSkipped: ++r.skipped; break;
      case Outcome::kUnevaluated: ++r.unevaluated; break;
    }
    for (const std::string& t : entry.tags) ++r.counters[t];
    for (Violation& v : entry.violations) r.violations.push_back(std::move(v));
  }
}

std::vector<SuiteResult> SuiteRunner::results() const {
  std::vector<SuiteResult> out = results_;
  for (SuiteResult& r : out) {
    std::stable_sort(r.violations.begin(), r.violations.end(), [](const Violation& a, const Violation& b) {
      return std::tie(a.graph_id, a.clause) < std::tie(b.graph_id, b.clause);
    });
  }
  return out;
}

std::vector<SuiteResult> run_suite(std::span<const CorpusItem> corpus, std::span<const SuiteKind> suites,
                                   const SolverConfig& config) {
  SuiteRunner runner(std::vector<SuiteKind>(suites.begin(), suites.end()), config);
  for (const CorpusItem& item : corpus) runner.add(item);
  return runner.results();
}

}  // namespace sqstable
