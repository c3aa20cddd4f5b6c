#pragma once

#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "sqstable/classify.hpp"
#include "sqstable/graph.hpp"
#include "sqstable/solvers.hpp"

namespace sqstable::cli {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchema = "squarestable/1";

// Exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitViolation = 1;
inline constexpr int kExitInput = 2;
inline constexpr int kExitCap = 3;

struct OmegaListing {
  int alpha = 0;
  VertexSet core;
  std::vector<VertexSet> sets;
};

struct AnalyzeOutput {
  Graph graph;
  std::optional<std::string> name;
  InvariantRecord invariants;
  ClassificationReport classification;
  std::optional<OmegaListing> omega;
  // Analysis of G^2 when requested.
  std::shared_ptr<const AnalyzeOutput> square;
};

struct AnalyzeOptions {
  bool omega = false;
  bool square = false;
};

AnalyzeOutput analyze(const Graph& g, const SolverConfig& config, const AnalyzeOptions& options);

Json to_json(const AnalyzeOutput& a);
// Inverse of to_json; throws InputError on schema mismatch.
AnalyzeOutput analyze_from_json(const Json& j);

// Full command line, argv[0] included. Streams replace stdin/stdout/stderr.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace sqstable::cli
