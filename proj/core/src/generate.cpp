#include "sqstable/generate.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <unordered_set>

#include "fixtures_data.hpp"
#include "sqstable/errors.hpp"
#include "sqstable/io.hpp"
#include "sqstable/structure.hpp"

namespace sqstable {

std::uint64_t SplitMix64::next() {
  std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t SplitMix64::below(std::uint64_t bound) {
  // Rejection sampling keeps the draw unbiased.
  const std::uint64_t limit = bound == 0 ? 0 : (~std::uint64_t{0} - (~std::uint64_t{0} % bound));
  for (;;) {
    const std::uint64_t x = next();
    if (x < limit) return x % bound;
  }
}

namespace {

void require(bool ok, const std::string& message) {
  if (!ok) throw InputError(message);
}

int max_edges(int n) { return n * (n - 1) / 2; }

Graph random_tree(int n, SplitMix64& rng) {
  require(n >= 1, "random tree needs n >= 1");
  if (n == 1) return Graph(1);
  std::vector<int> seq(static_cast<std::size_t>(n - 2));
  for (int& x : seq) x = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
  return tree_from_prufer(n, seq);
}

Graph random_connected(int n, int m, SplitMix64& rng) {
  require(n >= 1 && n <= Graph::kMaxOrder, "random connected graph needs 1 <= n <= 64");
  require(m >= n - 1 && m <= max_edges(n), "random connected graph needs n-1 <= m <= n(n-1)/2");
  const Graph tree = random_tree(n, rng);
  std::vector<Edge> edges = tree.edges();
  std::vector<Edge> missing = complement(tree).edges();
  for (std::size_t i = 0; i < missing.size(); ++i) {
    const std::size_t j = i + static_cast<std::size_t>(rng.below(missing.size() - i));
    std::swap(missing[i], missing[j]);
  }
  edges.insert(edges.end(), missing.begin(), missing.begin() + (m - (n - 1)));
  return Graph::from_edges(n, edges);
}

int parse_int(const std::string& token, const char* what) {
  int value = 0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size()) {
    throw InputError(std::string("expected an integer for ") + what + ", got '" + token + "'");
  }
  return value;
}

std::uint64_t parse_seed(const std::string& token) {
  std::uint64_t value = 0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size()) {
    throw InputError("expected a non-negative integer seed, got '" + token + "'");
  }
  return value;
}

// ---- canonical labelling ------------------------------------------------

// Colour refinement starting from degrees; colours are ranks of sorted
// signatures, so the resulting ordered partition is isomorphism invariant.
std::vector<int> refined_colors(const Graph& g) {
  const int n = g.order();
  std::vector<int> color(n);
  for (int v = 0; v < n; ++v) color[v] = g.degree(v);
  int classes = -1;
  for (;;) {
    std::vector<std::vector<int>> signature(n);
    for (int v = 0; v < n; ++v) {
      signature[v].push_back(color[v]);
      std::vector<int> around;
      for (int w : g.neighbors(v)) around.push_back(color[w]);
      std::sort(around.begin(), around.end());
      signature[v].insert(signature[v].end(), around.begin(), around.end());
    }
    std::vector<std::vector<int>> distinct = signature;
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    for (int v = 0; v < n; ++v) {
      color[v] = static_cast<int>(std::lower_bound(distinct.begin(), distinct.end(), signature[v]) - distinct.begin());
    }
    const int now = static_cast<int>(distinct.size());
    if (now == classes) break;
    classes = now;
  }
  return color;
}

class CanonicalSearch {
 public:
  explicit CanonicalSearch(const Graph& g) : g_(g), n_(g.order()), total_(n_ * (n_ - 1) / 2) {
    const std::vector<int> color = refined_colors(g);
    std::vector<int> by_color(n_);
    for (int v = 0; v < n_; ++v) by_color[v] = v;
    std::stable_sort(by_color.begin(), by_color.end(), [&](int a, int b) { return color[a] < color[b]; });
    cell_.resize(n_);
    for (int p = 0; p < n_; ++p) {
      VertexSet cell;
      for (int v = 0; v < n_; ++v) {
        if (color[v] == color[by_color[p]]) cell.insert(v);
      }
      cell_[p] = cell;
    }
    perm_.resize(n_);
  }

  CanonicalForm run() {
    place(0, 0, VertexSet{});
    CanonicalForm out;
    out.code = best_;
    out.labeling.resize(n_);
    for (int p = 0; p < n_; ++p) out.labeling[best_perm_[p]] = p;
    return out;
  }

 private:
  void place(int p, std::uint64_t code, VertexSet used) {
    if (p == n_) {
      if (!found_ || code > best_) {
        found_ = true;
        best_ = code;
        best_perm_ = perm_;
      }
      return;
    }
    const int prefix_bits = p * (p + 1) / 2;
    VertexSet tried;
    for (int v : cell_[p] - used) {
      // Twins (equal neighbourhoods apart from each other) are interchangeable.
      bool twin = false;
      for (int w : tried) {
        if ((g_.neighbors(v) - VertexSet::single(w)) == (g_.neighbors(w) - VertexSet::single(v))) {
          twin = true;
          break;
        }
      }
      if (twin) continue;
      tried.insert(v);

      std::uint64_t next = code;
      for (int i = 0; i < p; ++i) {
        if (g_.adjacent(perm_[i], v)) next |= std::uint64_t{1} << (total_ - 1 - (p * (p - 1) / 2 + i));
      }
      if (found_ && prefix_bits > 0) {
        const int shift = total_ - prefix_bits;
        if ((next >> shift) < (best_ >> shift)) continue;
      }
      perm_[p] = v;
      place(p + 1, next, used | VertexSet::single(v));
    }
  }

  const Graph& g_;
  int n_;
  int total_;
  std::vector<VertexSet> cell_;
  std::vector<int> perm_;
  std::vector<int> best_perm_;
  std::uint64_t best_ = 0;
  bool found_ = false;
};

Graph decode_canonical(int n, std::uint64_t code) {
  const int total = n * (n - 1) / 2;
  std::vector<Edge> edges;
  int b = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++b) {
      if ((code >> (total - 1 - b)) & 1U) edges.push_back(Edge{i, j});
    }
  }
  return Graph::from_edges(n, edges);
}

}  // namespace

Graph corona_k1(const Graph& base) {
  const int n = base.order();
  require(2 * n <= Graph::kMaxOrder, "corona would exceed 64 vertices");
  std::vector<Edge> edges = base.edges();
  for (int v = 0; v < n; ++v) edges.push_back(Edge{v, n + v});
  return Graph::from_edges(2 * n, edges);
}

Graph tree_from_prufer(int n, std::span<const int> sequence) {
  require(n >= 2, "Prufer decoding needs n >= 2");
  require(static_cast<int>(sequence.size()) == n - 2, "Prufer sequence must have n-2 entries");
  std::vector<int> degree(n, 1);
  for (int x : sequence) {
    require(x >= 0 && x < n, "Prufer entry out of range");
    ++degree[x];
  }
  std::vector<Edge> edges;
  for (int x : sequence) {
    for (int leaf = 0; leaf < n; ++leaf) {
      if (degree[leaf] == 1) {
        edges.push_back(Edge::of(leaf, x));
        --degree[leaf];
        --degree[x];
        break;
      }
    }
  }
  int u = -1;
  for (int v = 0; v < n; ++v) {
    if (degree[v] == 1) {
      if (u < 0) {
        u = v;
      } else {
        edges.push_back(Edge::of(u, v));
        break;
      }
    }
  }
  return Graph::from_edges(n, edges);
}

Graph make_family(const FamilySpec& spec) {
  const int n = spec.n;
  std::vector<Edge> edges;
  switch (spec.family) {
    case Family::kPath:
      require(n >= 1 && n <= Graph::kMaxOrder, "path needs 1 <= n <= 64");
      for (int v = 0; v + 1 < n; ++v) edges.push_back(Edge{v, v + 1});
      return Graph::from_edges(n, edges);
    case Family::kCycle:
      require(n >= 3 && n <= Graph::kMaxOrder, "cycle needs 3 <= n <= 64");
      for (int v = 0; v + 1 < n; ++v) edges.push_back(Edge{v, v + 1});
      edges.push_back(Edge{0, n - 1});
      return Graph::from_edges(n, edges);
    case Family::kComplete:
      require(n >= 1 && n <= Graph::kMaxOrder, "complete graph needs 1 <= n <= 64");
      for (int v = 0; v < n; ++v) {
        for (int w = v + 1; w < n; ++w) edges.push_back(Edge{v, w});
      }
      return Graph::from_edges(n, edges);
    case Family::kStar:
      require(n >= 1 && n < Graph::kMaxOrder, "star needs 1 <= leaves <= 63");
      for (int v = 1; v <= n; ++v) edges.push_back(Edge{0, v});
      return Graph::from_edges(n + 1, edges);
    case Family::kCompleteBipartite:
      require(n >= 1 && spec.m >= 1 && n + spec.m <= Graph::kMaxOrder, "complete bipartite needs n, m >= 1, n + m <= 64");
      for (int v = 0; v < n; ++v) {
        for (int w = n; w < n + spec.m; ++w) edges.push_back(Edge{v, w});
      }
      return Graph::from_edges(n + spec.m, edges);
    case Family::kRandomTree: {
      require(n >= 1 && n <= Graph::kMaxOrder, "random tree needs 1 <= n <= 64");
      SplitMix64 rng(spec.seed);
      return random_tree(n, rng);
    }
    case Family::kRandomConnected: {
      SplitMix64 rng(spec.seed);
      return random_connected(n, spec.m, rng);
    }
    case Family::kCoronaK1:
      require(spec.base != nullptr, "corona needs a base family");
      return corona_k1(make_family(*spec.base));
    case Family::kNamed:
      return named_fixture(spec.name);
  }
  throw InputError("unknown family");
}

FamilySpec parse_family_spec(std::span<const std::string> tokens) {
  require(!tokens.empty(), "missing family name");
  const std::string& name = tokens[0];
  const auto args = tokens.subspan(1);
  const auto expect = [&](std::size_t count, const char* usage) {
    require(args.size() == count, std::string("usage: ") + usage);
  };
  FamilySpec spec;
  if (name == "path" || name == "cycle" || name == "complete" || name == "star") {
    expect(1, (name + " N").c_str());
    spec.family = name == "path" ? Family::kPath
                  : name == "cycle" ? Family::kCycle
                  : name == "complete" ? Family::kComplete
                                       : Family::kStar;
    spec.n = parse_int(args[0], "N");
  } else if (name == "complete-bipartite") {
    expect(2, "complete-bipartite N M");
    spec.family = Family::kCompleteBipartite;
    spec.n = parse_int(args[0], "N");
    spec.m = parse_int(args[1], "M");
  } else if (name == "random-tree") {
    expect(2, "random-tree N SEED");
    spec.family = Family::kRandomTree;
    spec.n = parse_int(args[0], "N");
    spec.seed = parse_seed(args[1]);
  } else if (name == "random-connected") {
    expect(3, "random-connected N M SEED");
    spec.family = Family::kRandomConnected;
    spec.n = parse_int(args[0], "N");
    spec.m = parse_int(args[1], "M");
    spec.seed = parse_seed(args[2]);
  } else if (name == "corona") {
    require(!args.empty(), "usage: corona BASE-FAMILY ARGS...");
    spec.family = Family::kCoronaK1;
    spec.base = std::make_shared<const FamilySpec>(parse_family_spec(args));
  } else if (name == "named") {
    expect(1, "named FIXTURE");
    spec.family = Family::kNamed;
    spec.name = args[0];
    named_fixture(spec.name);
  } else {
    throw InputError("unknown family '" + name + "'");
  }
  return spec;
}

std::vector<std::string> fixture_names() {
  std::vector<std::string> out;
  for (const auto& f : detail::fixture_sources()) out.emplace_back(f.name);
  return out;
}

std::string_view fixture_text(std::string_view name) {
  for (const auto& f : detail::fixture_sources()) {
    if (f.name == name) return f.text;
  }
  throw InputError("unknown fixture '" + std::string(name) + "'");
}

Graph named_fixture(std::string_view name) { return parse_edge_list(fixture_text(name)); }

CanonicalForm canonical_form(const Graph& g) {
  require(g.order() <= 11, "canonical form supports n <= 11");
  return CanonicalSearch(g).run();
}

Graph relabel(const Graph& g, std::span<const int> labeling) {
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) edges.push_back(Edge::of(labeling[e.u], labeling[e.v]));
  return Graph::from_edges(g.order(), edges);
}

void for_each_graph(const CorpusOptions& options, const std::function<void(const Graph&)>& visit) {
  require(options.max_n <= kExhaustiveMaxOrder,
          "exhaustive enumeration supports n <= " + std::to_string(kExhaustiveMaxOrder));
  // Level n is built by adding vertex n-1 with every possible neighbourhood
  // to each level n-1 representative, then deduplicating canonical codes.
  std::vector<std::uint64_t> level;
  for (int n = 1; n <= options.max_n; ++n) {
    std::unordered_set<std::uint64_t> seen;
    if (n == 1) {
      seen.insert(0);
    } else {
      for (std::uint64_t code : level) {
        const Graph parent = decode_canonical(n - 1, code);
        std::vector<VertexSet> rows = parent.adjacency();
        rows.emplace_back();
        for (VertexSet::Word mask = 0; mask < (VertexSet::Word{1} << (n - 1)); ++mask) {
          std::vector<VertexSet> child = rows;
          child[n - 1] = VertexSet(mask);
          for (int v : VertexSet(mask)) child[v].insert(n - 1);
          seen.insert(canonical_form(Graph::from_adjacency(std::move(child))).code);
        }
      }
    }
    level.assign(seen.begin(), seen.end());
    std::sort(level.begin(), level.end());
    for (std::uint64_t code : level) {
      const Graph g = decode_canonical(n, code);
      if (!options.connected_only || is_connected(g)) visit(g);
    }
  }
}

std::vector<Graph> enumerate_corpus(int max_n, bool connected_only) {
  std::vector<Graph> out;
  for_each_graph(CorpusOptions{max_n, connected_only}, [&](const Graph& g) { out.push_back(g); });
  return out;
}

std::vector<Graph> sample_corpus(const SampleOptions& options) {
  require(options.min_n >= 1 && options.min_n <= options.max_n && options.max_n <= Graph::kMaxOrder,
          "sample needs 1 <= min_n <= max_n <= 64");
  SplitMix64 rng(options.seed);
  std::vector<Graph> out;
  out.reserve(static_cast<std::size_t>(options.count));
  for (int i = 0; i < options.count; ++i) {
    const int span = options.max_n - options.min_n + 1;
    const int n = options.min_n + static_cast<int>(rng.below(static_cast<std::uint64_t>(span)));
    switch (i % 3) {
      case 0: {
        const int extra = std::min(max_edges(n) - (n - 1), n);
        const int m = n - 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(extra + 1)));
        out.push_back(random_connected(n, m, rng));
        break;
      }
      case 1:
        out.push_back(random_tree(n, rng));
        break;
      default: {
        const int k = std::max(1, n / 2);
        const int extra = std::min(max_edges(k) - (k - 1), k);
        const int m = k - 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(extra + 1)));
        out.push_back(corona_k1(random_connected(k, m, rng)));
      }
    }
  }
  return out;
}

}  // namespace sqstable
