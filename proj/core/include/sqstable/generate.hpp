#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sqstable/graph.hpp"

namespace sqstable {

enum class Family {
  kPath,               // n >= 1
  kCycle,              // n >= 3
  kComplete,           // n >= 1
  kStar,               // n >= 1 leaves, centre is vertex 0
  kCompleteBipartite,  // n, m >= 1
  kRandomTree,         // n >= 1, seed
  kRandomConnected,    // n >= 1, n-1 <= m <= n(n-1)/2, seed
  kCoronaK1,           // base family
  kNamed,              // fixture name
};

struct FamilySpec {
  Family family = Family::kPath;
  int n = 0;
  int m = 0;
  std::uint64_t seed = 0;
  std::string name;
  std::shared_ptr<const FamilySpec> base;
};

// Throws InputError on out-of-range parameters.
Graph make_family(const FamilySpec& spec);

// Parses command-line style tokens, e.g. {"cycle", "12"},
// {"complete-bipartite", "2", "3"}, {"random-tree", "10", "7"},
// {"random-connected", "8", "10", "3"}, {"corona", "cycle", "5"},
// {"named", "diamond"}.
FamilySpec parse_family_spec(std::span<const std::string> tokens);

// Attaches a new pendant vertex n + v to every base vertex v.
Graph corona_k1(const Graph& base);

// Uniform labelled tree from a Prufer sequence (entries in [0, n)).
Graph tree_from_prufer(int n, std::span<const int> sequence);

// Named example graphs, transcribed from their source figures into the
// edge-list files under core/fixtures/.
std::vector<std::string> fixture_names();
Graph named_fixture(std::string_view name);
// Raw edge-list text of a fixture, comments included.
std::string_view fixture_text(std::string_view name);

// Deterministic 64-bit generator shared by every random family, so streams
// are reproducible across platforms given a seed.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next();
  // Uniform in [0, bound).
  std::uint64_t below(std::uint64_t bound);

 private:
  std::uint64_t state_;
};

struct CorpusOptions {
  int max_n = 0;
  bool connected_only = true;
};

// Largest order supported by exhaustive enumeration.
inline constexpr int kExhaustiveMaxOrder = 9;

// Every graph with 1 <= n <= max_n, once per isomorphism class, in canonical
// labelling, ordered by n then canonical code. Throws InputError above
// kExhaustiveMaxOrder.
void for_each_graph(const CorpusOptions& options, const std::function<void(const Graph&)>& visit);
std::vector<Graph> enumerate_corpus(int max_n, bool connected_only);

struct SampleOptions {
  int count = 0;
  int min_n = 2;
  int max_n = 12;
  std::uint64_t seed = 0;
};

// Seeded random connected graphs: a mix of sparse random connected graphs,
// random trees and coronas of random connected graphs.
std::vector<Graph> sample_corpus(const SampleOptions& options);

// Canonical labelling under vertex permutation for n <= 11. Codes are equal
// exactly for isomorphic graphs of the same order.
struct CanonicalForm {
  std::uint64_t code = 0;
  // labeling[v] is the canonical position of vertex v.
  std::vector<int> labeling;
};

CanonicalForm canonical_form(const Graph& g);
Graph relabel(const Graph& g, std::span<const int> labeling);

}  // namespace sqstable
