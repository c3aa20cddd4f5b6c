#pragma once

#include <string>
#include <string_view>

#include "sqstable/graph.hpp"

namespace sqstable {

// Edge-list text: optional "n <count>" header, one "u v" pair per line,
// '#' starts a comment. Without a header n = 1 + largest index. Input with
// neither a header nor an edge is rejected. Errors carry the line number.
Graph parse_edge_list(std::string_view text);

// Edge list with an explicit header, one edge per line, sorted.
std::string to_edge_list(const Graph& g);

// graph6 (McKay). Accepts an optional ">>graph6<<" prefix and a trailing
// newline; short (n <= 62) and long (n = 63, 64) size forms.
Graph parse_graph6(std::string_view text);

// graph6 without header or newline.
std::string to_graph6(const Graph& g);

enum class TextFormat { kAuto, kGraph6, kEdgeList };

// kAuto picks graph6 when the first non-comment line consists only of
// graph6 payload characters ('?'..'~') or carries the ">>graph6<<" header.
Graph parse_graph(std::string_view text, TextFormat format = TextFormat::kAuto);

}  // namespace sqstable
