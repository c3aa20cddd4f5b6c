#include "sqstable/io.hpp"

#include <algorithm>
#include <charconv>
#include <optional>
#include <vector>

#include "sqstable/errors.hpp"

namespace sqstable {

namespace {

std::string_view trim(std::string_view s) {
  const auto is_space = [](char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n'; };
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split_tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

int parse_index(std::string_view token, int line_no) {
  int value = 0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size() || value < 0) {
    throw InputError("line " + std::to_string(line_no) + ": expected a non-negative integer, got '" +
                     std::string(token) + "'");
  }
  return value;
}

constexpr std::string_view kGraph6Header = ">>graph6<<";

bool is_graph6_char(char c) { return c >= 63 && c <= 126; }

}  // namespace

Graph parse_edge_list(std::string_view text) {
  std::optional<int> header_n;
  std::vector<Edge> edges;
  int max_index = -1;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto tokens = split_tokens(line);
    if (tokens.size() == 2 && tokens[0] == "n") {
      if (header_n || !edges.empty()) {
        throw InputError("line " + std::to_string(line_no) + ": 'n' header must come first and only once");
      }
      header_n = parse_index(tokens[1], line_no);
      continue;
    }
    if (tokens.size() != 2) {
      throw InputError("line " + std::to_string(line_no) + ": expected 'u v', got '" + std::string(line) + "'");
    }
    const int u = parse_index(tokens[0], line_no);
    const int v = parse_index(tokens[1], line_no);
    if (u == v) throw InputError("line " + std::to_string(line_no) + ": self-loop " + std::to_string(u) + " " + std::to_string(v));
    if (header_n && std::max(u, v) >= *header_n) {
      throw InputError("line " + std::to_string(line_no) + ": vertex index exceeds header n=" + std::to_string(*header_n));
    }
    if (std::max(u, v) >= Graph::kMaxOrder) {
      throw InputError("line " + std::to_string(line_no) + ": vertex index exceeds the " +
                       std::to_string(Graph::kMaxOrder) + "-vertex limit");
    }
    max_index = std::max({max_index, u, v});
    edges.push_back(Edge::of(u, v));
  }
  if (!header_n && edges.empty()) throw InputError("empty edge list (no header and no edges)");
  const int n = header_n ? *header_n : max_index + 1;
  return Graph::from_edges(n, edges);
}

std::string to_edge_list(const Graph& g) {
  std::string out = "n " + std::to_string(g.order()) + "\n";
  for (const Edge& e : g.edges()) {
    out += std::to_string(e.u) + " " + std::to_string(e.v) + "\n";
  }
  return out;
}

Graph parse_graph6(std::string_view text) {
  text = trim(text);
  if (text.substr(0, kGraph6Header.size()) == kGraph6Header) text.remove_prefix(kGraph6Header.size());
  if (text.empty()) throw InputError("graph6: empty input");
  for (char c : text) {
    if (!is_graph6_char(c)) throw InputError("graph6: invalid character '" + std::string(1, c) + "'");
  }

  std::size_t i = 0;
  long n = 0;
  if (text[0] != 126) {
    n = text[0] - 63;
    i = 1;
  } else {
    if (text.size() < 4) throw InputError("graph6: truncated size field");
    if (text[1] == 126) throw InputError("graph6: orders above 258047 are not supported");
    n = (static_cast<long>(text[1] - 63) << 12) | (static_cast<long>(text[2] - 63) << 6) | (text[3] - 63);
    if (n < 63) throw InputError("graph6: long size form used for n < 63");
    i = 4;
  }
  if (n > Graph::kMaxOrder) {
    throw InputError("graph6: n=" + std::to_string(n) + " exceeds the " + std::to_string(Graph::kMaxOrder) +
                     "-vertex limit");
  }

  const long bits = n * (n - 1) / 2;
  const long bytes = (bits + 5) / 6;
  if (static_cast<long>(text.size() - i) != bytes) {
    throw InputError("graph6: payload has " + std::to_string(text.size() - i) + " bytes, expected " +
                     std::to_string(bytes));
  }

  std::vector<Edge> edges;
  long k = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u, ++k) {
      const int byte = text[i + static_cast<std::size_t>(k / 6)] - 63;
      if ((byte >> (5 - k % 6)) & 1) edges.push_back(Edge{u, v});
    }
  }
  for (; k < bytes * 6; ++k) {
    const int byte = text[i + static_cast<std::size_t>(k / 6)] - 63;
    if ((byte >> (5 - k % 6)) & 1) throw InputError("graph6: non-zero padding bits");
  }
  return Graph::from_edges(static_cast<int>(n), edges);
}

std::string to_graph6(const Graph& g) {
  const int n = g.order();
  std::string out;
  if (n <= 62) {
    out += static_cast<char>(n + 63);
  } else {
    out += static_cast<char>(126);
    out += static_cast<char>(((n >> 12) & 63) + 63);
    out += static_cast<char>(((n >> 6) & 63) + 63);
    out += static_cast<char>((n & 63) + 63);
  }
  int acc = 0;
  int filled = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u) {
      acc = (acc << 1) | (g.adjacent(u, v) ? 1 : 0);
      if (++filled == 6) {
        out += static_cast<char>(acc + 63);
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out += static_cast<char>((acc << (6 - filled)) + 63);
  return out;
}

Graph parse_graph(std::string_view text, TextFormat format) {
  if (format == TextFormat::kGraph6) return parse_graph6(text);
  if (format == TextFormat::kEdgeList) return parse_edge_list(text);

  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const bool looks_graph6 = line.substr(0, kGraph6Header.size()) == kGraph6Header ||
                              std::all_of(line.begin(), line.end(), is_graph6_char);
    return looks_graph6 ? parse_graph6(line) : parse_edge_list(text);
  }
  throw InputError("empty input");
}

}  // namespace sqstable
