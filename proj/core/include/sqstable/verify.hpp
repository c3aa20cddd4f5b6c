#pragma once

#include <array>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sqstable/graph.hpp"
#include "sqstable/solvers.hpp"

namespace sqstable {

enum class Truth { kFalse, kTrue, kUnevaluated };

const char* to_string(Truth t);

// The thirteen equivalent characterizations of square-stability, in order:
//   (i)    every vertex lies in exactly one simplex
//   (ii)   alpha(G) = alpha(G^2)
//   (iii)  theta(G) = theta(G^2)
//   (iv)   alpha(G^2) = theta(G^2) = gamma = i = alpha = theta
//   (v)    Omega(G^2) is contained in Omega(G)
//   (vi)   some S in Omega(G) has its vertices pairwise at distance >= 3
//   (vii)  some S0 in Omega(G) has P1
//   (viii) every S in Omega(G^2) has P1
//   (ix)   G[S1 ^ S2] has a unique perfect matching   } for every S1 in Omega(G)
//   (x)    G[S1 ^ S2] has a perfect matching          } and S2 in Omega(G^2)
//   (xi)   G[S1 ^ S2] is an induced perfect matching  }
//   (xii)  some S0 in Omega(G) has P2
//   (xiii) every S in Omega(G^2) has P2
inline constexpr int kStatementCount = 13;

// Roman label "i" .. "xiii" for a zero-based statement index.
const char* statement_label(int index);

struct FailingPair {
  int first = 0;
  int second = 0;
  std::string witness;
};

struct EquivalenceReport {
  std::string graph_id;
  std::array<Truth, kStatementCount> statements{};
  // One line per statement: the witness or counterexample behind its value.
  std::array<std::string, kStatementCount> details;
  // All evaluated statements share one value. Unevaluated ones are ignored.
  bool agree = true;
  std::optional<FailingPair> failing_pair;
};

// Evaluates each statement by its own route. Disconnected graphs are
// evaluated per component and combined by conjunction. A statement whose
// route hits a cap is kUnevaluated.
EquivalenceReport verify_equivalences(const Graph& g, const SolverConfig& config = {},
                                      std::string graph_id = {});

struct Violation {
  std::string graph_id;
  std::string clause;
  std::string witness;
  bool operator==(const Violation&) const = default;
};

enum class Outcome { kChecked, kSkipped, kUnevaluated };

// One graph's contribution to a suite.
struct SuiteEntry {
  Outcome outcome = Outcome::kChecked;
  std::vector<Violation> violations;
  // Counter names bumped for this graph, e.g. "all_true" or "square_stable".
  std::vector<std::string> tags;
  // Why the entry was skipped or left unevaluated.
  std::string note;
};

// Per-graph checks. Each returns kSkipped when the graph falls outside the
// check's hypotheses and kUnevaluated when a cap was hit.
SuiteEntry check_equivalences(const Graph& g, const std::string& id, const SolverConfig& config = {});
SuiteEntry verify_inequality_chain(const Graph& g, const std::string& id, const SolverConfig& config = {});
SuiteEntry verify_implications(const Graph& g, const std::string& id, const SolverConfig& config = {});
// Throws PreconditionError unless g is a tree of order >= 2.
SuiteEntry verify_tree_theorem(const Graph& g, const std::string& id, const SolverConfig& config = {});
SuiteEntry verify_girth6(const Graph& g, const std::string& id, const SolverConfig& config = {});
SuiteEntry verify_matroid(const Graph& g, const std::string& id, const SolverConfig& config = {});
// Checks the documented classification of a named example graph. The keys
// are the fixture names plus "C4", "C5", "C6", "C7" and "P6".
SuiteEntry verify_caption(const Graph& g, const std::string& id, const SolverConfig& config = {});
std::vector<std::string> caption_keys();

enum class SuiteKind { kEquivalences, kChain, kImplications, kTrees, kGirth6, kMatroid, kCaptions };

const char* to_string(SuiteKind kind);
std::optional<SuiteKind> parse_suite_kind(std::string_view name);
std::vector<SuiteKind> all_suites();

struct SuiteResult {
  std::string suite_name;
  int graphs_checked = 0;
  int skipped = 0;
  int unevaluated = 0;
  std::vector<Violation> violations;
  std::map<std::string, int> counters;
};

struct CorpusItem {
  std::string id;
  Graph graph;
};

// Graph id used for corpus members: the graph6 string of the labelling given.
std::string graph_id_of(const Graph& g);

// Streams graphs through a fixed set of suites. Results come out in suite
// order with violations sorted by (graph_id, clause), so identical corpora
// give identical results.
class SuiteRunner {
 public:
  SuiteRunner(std::vector<SuiteKind> suites, SolverConfig config, bool keep_reports = false);

  void add(const CorpusItem& item);
  std::vector<SuiteResult> results() const;
  // Equivalence reports in corpus order; only filled when keep_reports.
  const std::vector<EquivalenceReport>& reports() const { return reports_; }
  int graphs_seen() const { return graphs_seen_; }

 private:
  std::vector<SuiteKind> suites_;
  SolverConfig config_;
  bool keep_reports_;
  std::vector<SuiteResult> results_;
  std::vector<EquivalenceReport> reports_;
  int graphs_seen_ = 0;
};

std::vector<SuiteResult> run_suite(std::span<const CorpusItem> corpus, std::span<const SuiteKind> suites,
                                   const SolverConfig& config = {});

}  // namespace sqstable
