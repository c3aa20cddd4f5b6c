#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "sqstable/errors.hpp"
#include "sqstable/generate.hpp"
#include "sqstable/io.hpp"
#include "sqstable/structure.hpp"
#include "sqstable/verify.hpp"

namespace sqstable::cli {

namespace {

Json set_json(VertexSet s) {
  Json a = Json::array();
  for (int v : s) a.push_back(v);
  return a;
}

VertexSet set_from(const Json& j) {
  if (!j.is_array()) throw InputError("expected a vertex list");
  VertexSet s;
  for (const Json& v : j) {
    const int x = v.get<int>();
    if (x < 0 || x >= VertexSet::kCapacity) throw InputError("vertex out of range in JSON");
    s.insert(x);
  }
  return s;
}

Json edge_json(Edge e) { return Json::array({e.u, e.v}); }

Edge edge_from(const Json& j) {
  if (!j.is_array() || j.size() != 2) throw InputError("expected an edge [u, v]");
  return Edge::of(j[0].get<int>(), j[1].get<int>());
}

template <typename T>
Json optional_json(const std::optional<T>& value, Json (*convert)(T)) {
  return value ? convert(*value) : Json(nullptr);
}

Json body_json(const AnalyzeOutput& a) {
  Json j;
  if (a.name) j["name"] = *a.name;
  Json edges = Json::array();
  for (const Edge& e : a.graph.edges()) edges.push_back(edge_json(e));
  j["graph"] = {{"n", a.graph.order()}, {"m", a.graph.size()}, {"graph6", to_graph6(a.graph)}, {"edges", edges}};

  const InvariantRecord& r = a.invariants;
  j["invariants"] = {{"n", r.n},         {"mu", r.mu},           {"alpha", r.alpha}, {"alpha_sq", r.alpha_sq},
                     {"theta", r.theta}, {"theta_sq", r.theta_sq}, {"gamma", r.gamma}, {"idom", r.idom},
                     {"chain_holds", r.chain_holds()}};

  const ClassificationReport& c = a.classification;
  j["classification"] = {{"square_stable", c.square_stable},
                         {"well_covered", c.well_covered},
                         {"very_well_covered", c.very_well_covered},
                         {"koenig_egervary", c.koenig_egervary},
                         {"simplicial_graph", c.simplicial_graph},
                         {"chordal", c.chordal},
                         {"simplex_partition", c.simplex_partition},
                         {"alpha_minus", c.alpha_minus},
                         {"alpha_minus_cross_checked", c.alpha_minus_cross_checked},
                         {"alpha_plus_class", to_string(c.alpha_plus_class)},
                         {"omega_matroid", c.omega_matroid}};

  const ClassificationWitnesses& w = c.witnesses;
  Json simplex_list = Json::array();
  for (const Simplex& s : w.simplexes) {
    simplex_list.push_back({{"clique", set_json(s.clique)}, {"simplicial", set_json(s.simplicial_members)}});
  }
  j["witnesses"] = {
      {"square_stable_set", optional_json<VertexSet>(w.square_stable_set, set_json)},
      {"non_maximum_maximal_stable_set", optional_json<VertexSet>(w.non_maximum_maximal_stable_set, set_json)},
      {"isolated_vertex", w.isolated_vertex ? Json(*w.isolated_vertex) : Json(nullptr)},
      {"simplexes", simplex_list},
      {"alpha_minus_breaking_edge", optional_json<Edge>(w.alpha_minus_breaking_edge, edge_json)},
      {"omega_core", set_json(w.omega_core)},
      {"elimination_order", w.elimination_order},
      {"matroid_exchange_failure",
       w.matroid_exchange_failure ? Json(*w.matroid_exchange_failure) : Json(nullptr)},
  };

  if (a.omega) {
    Json sets = Json::array();
    for (VertexSet s : a.omega->sets) sets.push_back(set_json(s));
    j["omega"] = {{"alpha", a.omega->alpha},
                  {"count", a.omega->sets.size()},
                  {"core", set_json(a.omega->core)},
                  {"sets", sets}};
  }
  if (a.square) j["square"] = body_json(*a.square);
  return j;
}

template <typename T>
std::optional<T> optional_from(const Json& j, T (*convert)(const Json&)) {
  if (j.is_null()) return std::nullopt;
  return convert(j);
}

AnalyzeOutput body_from_json(const Json& j) {
  AnalyzeOutput a;
  if (j.contains("name")) a.name = j.at("name").get<std::string>();
  const Json& graph = j.at("graph");
  a.graph = parse_graph6(graph.at("graph6").get<std::string>());
  std::vector<Edge> edges;
  for (const Json& e : graph.at("edges")) edges.push_back(edge_from(e));
  if (Graph::from_edges(graph.at("n").get<int>(), edges) != a.graph) {
    throw InputError("graph6 and edge list disagree");
  }

  const Json& r = j.at("invariants");
  a.invariants.n = r.at("n").get<int>();
  a.invariants.mu = r.at("mu").get<int>();
  a.invariants.alpha = r.at("alpha").get<int>();
  a.invariants.alpha_sq = r.at("alpha_sq").get<int>();
  a.invariants.theta = r.at("theta").get<int>();
  a.invariants.theta_sq = r.at("theta_sq").get<int>();
  a.invariants.gamma = r.at("gamma").get<int>();
  a.invariants.idom = r.at("idom").get<int>();

  const Json& c = j.at("classification");
  ClassificationReport& k = a.classification;
  k.square_stable = c.at("square_stable").get<bool>();
  k.well_covered = c.at("well_covered").get<bool>();
  k.very_well_covered = c.at("very_well_covered").get<bool>();
  k.koenig_egervary = c.at("koenig_egervary").get<bool>();
  k.simplicial_graph = c.at("simplicial_graph").get<bool>();
  k.chordal = c.at("chordal").get<bool>();
  k.simplex_partition = c.at("simplex_partition").get<bool>();
  k.alpha_minus = c.at("alpha_minus").get<bool>();
  k.alpha_minus_cross_checked = c.at("alpha_minus_cross_checked").get<bool>();
  const std::string cls = c.at("alpha_plus_class").get<std::string>();
  bool known = false;
  for (AlphaPlusClass candidate : {AlphaPlusClass::kNotPlus, AlphaPlusClass::kPlus0, AlphaPlusClass::kPlus1}) {
    if (cls == to_string(candidate)) {
      k.alpha_plus_class = candidate;
      known = true;
    }
  }
  if (!known) throw InputError("unknown alpha_plus_class '" + cls + "'");
  k.omega_matroid = c.at("omega_matroid").get<bool>();

  const Json& w = j.at("witnesses");
  ClassificationWitnesses& kw = k.witnesses;
  kw.square_stable_set = optional_from<VertexSet>(w.at("square_stable_set"), set_from);
  kw.non_maximum_maximal_stable_set = optional_from<VertexSet>(w.at("non_maximum_maximal_stable_set"), set_from);
  if (!w.at("isolated_vertex").is_null()) kw.isolated_vertex = w.at("isolated_vertex").get<int>();
  for (const Json& s : w.at("simplexes")) {
    kw.simplexes.push_back(Simplex{set_from(s.at("clique")), set_from(s.at("simplicial"))});
  }
  kw.alpha_minus_breaking_edge = optional_from<Edge>(w.at("alpha_minus_breaking_edge"), edge_from);
  kw.omega_core = set_from(w.at("omega_core"));
  kw.elimination_order = w.at("elimination_order").get<std::vector<int>>();
  if (!w.at("matroid_exchange_failure").is_null()) {
    kw.matroid_exchange_failure = w.at("matroid_exchange_failure").get<std::string>();
  }

  if (j.contains("omega")) {
    const Json& o = j.at("omega");
    OmegaListing listing;
    listing.alpha = o.at("alpha").get<int>();
    listing.core = set_from(o.at("core"));
    for (const Json& s : o.at("sets")) listing.sets.push_back(set_from(s));
    if (o.at("count").get<std::size_t>() != listing.sets.size()) throw InputError("omega count mismatch");
    a.omega = std::move(listing);
  }
  if (j.contains("square")) a.square = std::make_shared<const AnalyzeOutput>(body_from_json(j.at("square")));
  return a;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

void write_text(std::ostream& out, const AnalyzeOutput& a, const std::string& indent = "") {
  const InvariantRecord& r = a.invariants;
  const ClassificationReport& c = a.classification;
  if (a.name) out << indent << "name               " << *a.name << "\n";
  out << indent << "graph              n=" << a.graph.order() << " m=" << a.graph.size() << " graph6=" << to_graph6(a.graph)
      << "\n";
  out << indent << "alpha(G^2)         " << r.alpha_sq << "\n"
      << indent << "theta(G^2)         " << r.theta_sq << "\n"
      << indent << "gamma              " << r.gamma << "\n"
      << indent << "i                  " << r.idom << "\n"
      << indent << "alpha              " << r.alpha << "\n"
      << indent << "theta              " << r.theta << "\n"
      << indent << "mu                 " << r.mu << "\n";
  out << indent << "square-stable      " << yes_no(c.square_stable) << "\n"
      << indent << "well-covered       " << yes_no(c.well_covered) << "\n"
      << indent << "very well-covered  " << yes_no(c.very_well_covered) << "\n"
      << indent << "Koenig-Egervary    " << yes_no(c.koenig_egervary) << "\n"
      << indent << "simplicial graph   " << yes_no(c.simplicial_graph) << "\n"
      << indent << "chordal            " << yes_no(c.chordal) << "\n"
      << indent << "simplex partition  " << yes_no(c.simplex_partition) << "\n"
      << indent << "alpha^- stable     " << yes_no(c.alpha_minus) << "\n"
      << indent << "alpha^+ class      " << to_string(c.alpha_plus_class) << "\n"
      << indent << "Omega is matroid   " << yes_no(c.omega_matroid) << "\n";
  if (c.witnesses.square_stable_set) {
    out << indent << "witness S          " << c.witnesses.square_stable_set->to_string() << "\n";
  }
  if (a.omega) {
    out << indent << "Omega              " << a.omega->sets.size() << " sets, core " << a.omega->core.to_string() << "\n";
    for (VertexSet s : a.omega->sets) out << indent << "  " << s.to_string() << "\n";
  }
  if (a.square) {
    out << indent << "square:\n";
    write_text(out, *a.square, indent + "  ");
  }
}

std::string read_all(std::istream& in) {
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::string read_input(const std::string& path, std::istream& in) {
  if (path == "-") return read_all(in);
  std::ifstream file(path, std::ios::binary);
  if (!file) throw InputError("cannot open '" + path + "'");
  return read_all(file);
}

TextFormat parse_format(const std::string& name) {
  if (name == "auto") return TextFormat::kAuto;
  if (name == "graph6") return TextFormat::kGraph6;
  if (name == "edges") return TextFormat::kEdgeList;
  throw InputError("unknown format '" + name + "'");
}

std::vector<std::string_view> content_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t')) line.remove_suffix(1);
    while (!line.empty() && (line.front() == ' ' || line.front() == '\t')) line.remove_prefix(1);
    if (line.empty() || line.front() == '#') continue;
    lines.push_back(line);
  }
  return lines;
}

bool looks_like_graph6(std::string_view line) {
  if (line.starts_with(">>graph6<<")) return true;
  return std::all_of(line.begin(), line.end(), [](char ch) { return ch >= 63 && ch <= 126; });
}

// A graph6 stream holds one graph per line; an edge list is one graph.
std::vector<Graph> parse_inputs(const std::string& text, TextFormat format) {
  const std::vector<std::string_view> lines = content_lines(text);
  if (lines.empty()) throw InputError("empty input");
  if (format == TextFormat::kAuto) format = looks_like_graph6(lines.front()) ? TextFormat::kGraph6 : TextFormat::kEdgeList;
  if (format == TextFormat::kEdgeList) return {parse_edge_list(text)};
  std::vector<Graph> graphs;
  for (std::string_view line : lines) graphs.push_back(parse_graph6(line));
  return graphs;
}

SolverConfig make_config(std::optional<int> cap_n, std::optional<int> cap_omega) {
  SolverConfig config = SolverConfig::from_environment();
  if (cap_n) {
    if (*cap_n < 0) throw InputError("--cap-n must be non-negative");
    config.cap_n = std::min(*cap_n, Graph::kMaxOrder);
  }
  if (cap_omega) {
    if (*cap_omega < 0) throw InputError("--cap-omega must be non-negative");
    config.cap_omega = std::min(*cap_omega, Graph::kMaxOrder);
  }
  return config;
}

std::string family_graph_id(const FamilySpec& spec, const std::vector<std::string>& tokens) {
  switch (spec.family) {
    case Family::kPath: return "P" + std::to_string(spec.n);
    case Family::kCycle: return "C" + std::to_string(spec.n);
    case Family::kComplete: return "K" + std::to_string(spec.n);
    case Family::kNamed: return spec.name;
    default: break;
  }
  std::string id;
  for (const std::string& t : tokens) id += (id.empty() ? "" : " ") + t;
  return id;
}

// ---- subcommands ----------------------------------------------------------

struct AnalyzeArgs {
  std::string input = "-";
  std::string format = "auto";
  std::string fixture;
  bool omega = false;
  bool square = false;
  bool text = false;
  std::optional<int> cap_n;
  std::optional<int> cap_omega;
};

int cmd_analyze(const AnalyzeArgs& args, std::istream& in, std::ostream& out) {
  const SolverConfig config = make_config(args.cap_n, args.cap_omega);
  std::vector<Graph> graphs;
  std::optional<std::string> name;
  if (!args.fixture.empty()) {
    graphs.push_back(named_fixture(args.fixture));
    name = args.fixture;
  } else {
    graphs = parse_inputs(read_input(args.input, in), parse_format(args.format));
  }
  const AnalyzeOptions options{args.omega, args.square};
  for (const Graph& g : graphs) {
    AnalyzeOutput a = analyze(g, config, options);
    a.name = name;
    if (args.text) {
      write_text(out, a);
      if (graphs.size() > 1) out << "\n";
    } else if (graphs.size() == 1) {
      out << to_json(a).dump(2) << "\n";
    } else {
      out << to_json(a).dump() << "\n";
    }
  }
  return kExitOk;
}

struct VerifyArgs {
  std::optional<int> exhaustive;
  bool all_graphs = false;
  bool fixtures = false;
  std::vector<std::string> family;
  std::vector<std::uint64_t> sample;
  int sample_min_n = 2;
  int sample_max_n = 12;
  std::string input;
  std::string format = "auto";
  std::vector<std::string> suites{"all"};
  bool strict = false;
  bool details = false;
  bool text = false;
  std::optional<int> cap_n;
  std::optional<int> cap_omega;
};

Json report_json(const EquivalenceReport& r) {
  Json statements;
  for (int k = 0; k < kStatementCount; ++k) statements[statement_label(k)] = to_string(r.statements[k]);
  Json j = {{"graph_id", r.graph_id}, {"statements", statements}, {"agree", r.agree}};
  if (r.failing_pair) {
    j["failing_pair"] = {{"first", statement_label(r.failing_pair->first)},
                         {"second", statement_label(r.failing_pair->second)},
                         {"witness", r.failing_pair->witness}};
  } else {
    j["failing_pair"] = nullptr;
  }
  return j;
}

int cmd_verify(const VerifyArgs& args, std::istream& in, std::ostream& out) {
  const SolverConfig config = make_config(args.cap_n, args.cap_omega);

  std::vector<SuiteKind> suites;
  for (const std::string& name : args.suites) {
    if (name == "all") {
      for (SuiteKind k : all_suites()) {
        if (std::find(suites.begin(), suites.end(), k) == suites.end()) suites.push_back(k);
      }
      continue;
    }
    const std::optional<SuiteKind> k = parse_suite_kind(name);
    if (!k) throw InputError("unknown suite '" + name + "'");
    if (std::find(suites.begin(), suites.end(), *k) == suites.end()) suites.push_back(*k);
  }

  const bool any_corpus =
      args.exhaustive || args.fixtures || !args.family.empty() || !args.sample.empty() || !args.input.empty();
  if (!any_corpus) throw InputError("no corpus selected (use --exhaustive, --fixtures, --family, --sample or --input)");

  SuiteRunner runner(suites, config, args.details);
  Json sources = Json::array();

  if (args.fixtures) {
    for (const std::string& name : fixture_names()) runner.add(CorpusItem{name, named_fixture(name)});
    sources.push_back({{"kind", "fixtures"}});
  }
  if (!args.family.empty()) {
    const FamilySpec spec = parse_family_spec(args.family);
    runner.add(CorpusItem{family_graph_id(spec, args.family), make_family(spec)});
    sources.push_back({{"kind", "family"}, {"tokens", args.family}});
  }
  if (args.exhaustive) {
    if (*args.exhaustive < 1) throw InputError("--exhaustive needs N >= 1");
    for_each_graph(CorpusOptions{*args.exhaustive, !args.all_graphs},
                   [&](const Graph& g) { runner.add(CorpusItem{graph_id_of(g), g}); });
    sources.push_back({{"kind", "exhaustive"}, {"max_n", *args.exhaustive}, {"connected_only", !args.all_graphs}});
  }
  if (!args.sample.empty()) {
    if (args.sample.size() != 2) throw InputError("--sample needs COUNT SEED");
    const SampleOptions options{static_cast<int>(args.sample[0]), args.sample_min_n, args.sample_max_n, args.sample[1]};
    for (const Graph& g : sample_corpus(options)) runner.add(CorpusItem{graph_id_of(g), g});
    sources.push_back({{"kind", "sample"},
                       {"count", options.count},
                       {"seed", options.seed},
                       {"min_n", options.min_n},
                       {"max_n", options.max_n}});
  }
  if (!args.input.empty()) {
    for (const Graph& g : parse_inputs(read_input(args.input, in), parse_format(args.format))) {
      runner.add(CorpusItem{graph_id_of(g), g});
    }
    sources.push_back({{"kind", "input"}, {"path", args.input}});
  }

  const std::vector<SuiteResult> results = runner.results();
  int violations = 0;
  int unevaluated = 0;
  Json suites_json = Json::array();
  for (const SuiteResult& r : results) {
    violations += static_cast<int>(r.violations.size());
    unevaluated += r.unevaluated;
    Json v = Json::array();
    for (const Violation& x : r.violations) v.push_back({{"graph_id", x.graph_id}, {"clause", x.clause}, {"witness", x.witness}});
    Json counters = Json::object();
    for (const auto& [key, count] : r.counters) counters[key] = count;
    suites_json.push_back({{"name", r.suite_name},
                           {"graphs_checked", r.graphs_checked},
                           {"skipped", r.skipped},
                           {"unevaluated", r.unevaluated},
                           {"counters", counters},
                           {"violations", v}});
  }

  if (args.text) {
    out << "graphs " << runner.graphs_seen() << "\n";
    out << std::left << std::setw(14) << "suite" << std::right << std::setw(9) << "checked" << std::setw(9) << "skipped"
        << std::setw(13) << "unevaluated" << std::setw(12) << "violations" << "\n";
    for (const SuiteResult& r : results) {
      out << std::left << std::setw(14) << r.suite_name << std::right << std::setw(9) << r.graphs_checked
          << std::setw(9) << r.skipped << std::setw(13) << r.unevaluated << std::setw(12) << r.violations.size()
          << "\n";
    }
    for (const SuiteResult& r : results) {
      for (const Violation& x : r.violations) {
        out << r.suite_name << ": " << x.graph_id << ": " << x.clause << " [" << x.witness << "]\n";
      }
    }
  } else {
    Json report;
    report["schema"] = kSchema;
    report["corpus"] = {{"sources", sources}, {"graphs", runner.graphs_seen()}};
    report["config"] = {{"cap_n", config.cap_n}, {"cap_omega", config.cap_omega}, {"strict", args.strict}};
    report["suites"] = suites_json;
    report["violations_total"] = violations;
    report["unevaluated_total"] = unevaluated;
    if (args.details) {
      Json reports = Json::array();
      for (const EquivalenceReport& r : runner.reports()) reports.push_back(report_json(r));
      report["equivalence_reports"] = reports;
    }
    out << report.dump(2) << "\n";
  }

  if (violations > 0) return kExitViolation;
  if (args.strict && unevaluated > 0) return kExitCap;
  return kExitOk;
}

struct GenerateArgs {
  std::vector<std::string> family;
  std::vector<std::string> base;
  std::optional<std::uint64_t> seed;
  std::string format = "graph6";
  std::optional<int> exhaustive;
  bool all_graphs = false;
  std::vector<std::uint64_t> sample;
  int sample_min_n = 2;
  int sample_max_n = 12;
  bool list_fixtures = false;
};

int cmd_generate(const GenerateArgs& args, std::ostream& out) {
  if (args.format != "graph6" && args.format != "edges") throw InputError("unknown format '" + args.format + "'");
  const bool graph6 = args.format == "graph6";
  if (args.list_fixtures) {
    for (const std::string& name : fixture_names()) out << name << "\n";
    return kExitOk;
  }
  const bool corpus = args.exhaustive || !args.sample.empty();
  if (corpus) {
    if (!args.family.empty()) throw InputError("give either a family or a corpus option, not both");
    if (!graph6) throw InputError("corpora are written as graph6 lines; use --format graph6");
    if (args.exhaustive) {
      if (*args.exhaustive < 1) throw InputError("--exhaustive needs N >= 1");
      for_each_graph(CorpusOptions{*args.exhaustive, !args.all_graphs},
                     [&](const Graph& g) { out << to_graph6(g) << "\n"; });
    }
    if (!args.sample.empty()) {
      if (args.sample.size() != 2) throw InputError("--sample needs COUNT SEED");
      const SampleOptions options{static_cast<int>(args.sample[0]), args.sample_min_n, args.sample_max_n,
                                  args.sample[1]};
      for (const Graph& g : sample_corpus(options)) out << to_graph6(g) << "\n";
    }
    return kExitOk;
  }

  std::vector<std::string> tokens = args.family;
  if (tokens.empty()) throw InputError("missing family (e.g. 'cycle 12', 'named diamond')");
  if (!args.base.empty()) {
    if (tokens.size() != 1 || tokens[0] != "corona") throw InputError("--base only applies to 'corona'");
    tokens.insert(tokens.end(), args.base.begin(), args.base.end());
  }
  if (args.seed) tokens.push_back(std::to_string(*args.seed));
  const Graph g = make_family(parse_family_spec(tokens));
  if (graph6) {
    out << to_graph6(g) << "\n";
  } else {
    out << to_edge_list(g);
  }
  return kExitOk;
}

}  // namespace

AnalyzeOutput analyze(const Graph& g, const SolverConfig& config, const AnalyzeOptions& options) {
  AnalyzeOutput a;
  a.graph = g;
  a.invariants = compute_invariants(g, config);
  a.classification = classify(g, config);
  if (options.omega) {
    const StableSetFamily family = enumerate_maximum_stable_sets(g, config);
    a.omega = OmegaListing{family.alpha(), family.core, family.sets};
  }
  if (options.square) {
    a.square = std::make_shared<const AnalyzeOutput>(analyze(square(g), config, AnalyzeOptions{options.omega, false}));
  }
  return a;
}

Json to_json(const AnalyzeOutput& a) {
  const Json body = body_json(a);
  Json j;
  j["schema"] = kSchema;
  j.update(body);
  return j;
}

AnalyzeOutput analyze_from_json(const Json& j) {
  try {
    if (!j.is_object() || !j.contains("schema") || j.at("schema") != kSchema) {
      throw InputError(std::string("expected schema ") + kSchema);
    }
    return body_from_json(j);
  } catch (const Json::exception& e) {
    throw InputError(std::string("malformed analysis JSON: ") + e.what());
  }
}

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Stability, covering and domination invariants of a graph and its square."};
  app.name(args.empty() ? "sqstable" : args.front());
  app.require_subcommand(1);

  AnalyzeArgs analyze_args;
  CLI::App* analyze_cmd = app.add_subcommand("analyze", "Invariants and classification of one graph (or a graph6 stream)");
  analyze_cmd->add_option("input", analyze_args.input, "Input file, '-' for stdin")->capture_default_str();
  analyze_cmd->add_option("--format", analyze_args.format, "auto | graph6 | edges")->capture_default_str();
  analyze_cmd->add_option("--fixture", analyze_args.fixture, "Analyze a named fixture instead of reading input");
  analyze_cmd->add_flag("--omega", analyze_args.omega, "Include the list of maximum stable sets");
  analyze_cmd->add_flag("--square", analyze_args.square, "Also analyze the square graph");
  analyze_cmd->add_flag("--text", analyze_args.text, "Plain-text table instead of JSON");
  analyze_cmd->add_option("--cap-n", analyze_args.cap_n, "Exact solver cap on n");
  analyze_cmd->add_option("--cap-omega", analyze_args.cap_omega, "Stable-set enumeration cap on n");

  VerifyArgs verify_args;
  CLI::App* verify_cmd = app.add_subcommand("verify", "Run verification suites over a corpus");
  verify_cmd->add_option("--exhaustive", verify_args.exhaustive, "All graphs with n <= N up to isomorphism");
  verify_cmd->add_flag("--all-graphs", verify_args.all_graphs, "Include disconnected graphs in --exhaustive");
  verify_cmd->add_flag("--fixtures", verify_args.fixtures, "The named fixtures");
  verify_cmd->add_option("--family", verify_args.family, "One family member, e.g. --family cycle 5");
  verify_cmd->add_option("--sample", verify_args.sample, "COUNT SEED: seeded random connected graphs")->expected(2);
  verify_cmd->add_option("--sample-min-n", verify_args.sample_min_n, "Smallest sampled order")->capture_default_str();
  verify_cmd->add_option("--sample-max-n", verify_args.sample_max_n, "Largest sampled order")->capture_default_str();
  verify_cmd->add_option("--input", verify_args.input, "graph6 stream or edge-list file, '-' for stdin");
  verify_cmd->add_option("--format", verify_args.format, "auto | graph6 | edges for --input")->capture_default_str();
  verify_cmd->add_option("--suite", verify_args.suites,
                         "equivalences, chain, implications, trees, girth6, matroid, captions or all")
      ->delimiter(',')
      ->capture_default_str();
  verify_cmd->add_flag("--strict", verify_args.strict, "Exit 3 when any check hit a cap");
  verify_cmd->add_flag("--details", verify_args.details, "Include per-graph equivalence reports");
  verify_cmd->add_flag("--text", verify_args.text, "Plain-text summary instead of JSON");
  verify_cmd->add_option("--cap-n", verify_args.cap_n, "Exact solver cap on n");
  verify_cmd->add_option("--cap-omega", verify_args.cap_omega, "Stable-set enumeration cap on n");

  GenerateArgs generate_args;
  CLI::App* generate_cmd = app.add_subcommand("generate", "Write a family member, fixture or corpus");
  generate_cmd->add_option("family", generate_args.family, "Family and parameters, e.g. 'cycle 12'");
  generate_cmd->add_option("--base", generate_args.base, "Base family for corona, e.g. --base cycle 5");
  generate_cmd->add_option("--seed", generate_args.seed, "Seed appended to a random family");
  generate_cmd->add_option("--format", generate_args.format, "graph6 | edges")->capture_default_str();
  generate_cmd->add_option("--exhaustive", generate_args.exhaustive, "All graphs with n <= N as graph6 lines");
  generate_cmd->add_flag("--all-graphs", generate_args.all_graphs, "Include disconnected graphs in --exhaustive");
  generate_cmd->add_option("--sample", generate_args.sample, "COUNT SEED")->expected(2);
  generate_cmd->add_option("--sample-min-n", generate_args.sample_min_n, "Smallest sampled order")->capture_default_str();
  generate_cmd->add_option("--sample-max-n", generate_args.sample_max_n, "Largest sampled order")->capture_default_str();
  generate_cmd->add_flag("--list-fixtures", generate_args.list_fixtures, "List fixture names");

  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  if (args.empty()) argv.push_back("sqstable");
  for (const std::string& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    if (analyze_cmd->parsed()) return cmd_analyze(analyze_args, in, out);
    if (verify_cmd->parsed()) return cmd_verify(verify_args, in, out);
    if (generate_cmd->parsed()) return cmd_generate(generate_args, out);
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const CapExceeded& e) {
    err << "error: " << e.what() << "\n";
    return kExitCap;
  } catch (const InternalError& e) {
    err << "internal consistency failure: " << e.what() << "\n";
    return kExitViolation;
  }
  return kExitInput;
}

}  // namespace sqstable::cli
