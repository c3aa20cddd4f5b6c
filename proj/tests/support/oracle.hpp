#pragma once

// Naive exponential reference computations. Everything here works on plain
// adjacency bitmasks and subset scans, sharing no code with the library
// solvers beyond reading the adjacency rows.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <vector>

#include "sqstable/graph.hpp"

namespace oracle {

using Mask = std::uint32_t;

struct Adj {
  int n = 0;
  std::vector<Mask> row;

  explicit Adj(const sqstable::Graph& g) : n(g.order()), row(g.order(), 0) {
    for (int v = 0; v < n; ++v) {
      for (int w = 0; w < n; ++w) {
        if (g.adjacent(v, w)) row[v] |= Mask{1} << w;
      }
    }
  }
  Mask all() const { return n == 32 ? ~Mask{0} : (Mask{1} << n) - 1; }
};

inline int popcount(Mask m) { return std::popcount(m); }

inline bool stable(const Adj& a, Mask s) {
  for (int v = 0; v < a.n; ++v) {
    if ((s >> v & 1U) && (a.row[v] & s)) return false;
  }
  return true;
}

inline bool clique(const Adj& a, Mask s) {
  for (int v = 0; v < a.n; ++v) {
    if ((s >> v & 1U) && ((s & ~(Mask{1} << v)) & ~a.row[v])) return false;
  }
  return true;
}

inline int alpha(const Adj& a) {
  int best = 0;
  for (Mask s = 0; s <= a.all(); ++s) {
    if (popcount(s) > best && stable(a, s)) best = popcount(s);
    if (s == a.all()) break;
  }
  return best;
}

// Every maximum stable set, in increasing mask order.
inline std::vector<Mask> omega(const Adj& a) {
  const int best = alpha(a);
  std::vector<Mask> out;
  for (Mask s = 0; s <= a.all(); ++s) {
    if (popcount(s) == best && stable(a, s)) out.push_back(s);
    if (s == a.all()) break;
  }
  return out;
}

inline bool maximal_stable(const Adj& a, Mask s) {
  if (!stable(a, s)) return false;
  for (int v = 0; v < a.n; ++v) {
    if (!(s >> v & 1U) && !(a.row[v] & s)) return false;
  }
  return true;
}

inline std::vector<Mask> maximal_stable_sets(const Adj& a) {
  std::vector<Mask> out;
  for (Mask s = 0; s <= a.all(); ++s) {
    if (maximal_stable(a, s)) out.push_back(s);
    if (s == a.all()) break;
  }
  return out;
}

inline int independent_domination(const Adj& a) {
  int best = a.n;
  for (Mask s : maximal_stable_sets(a)) best = std::min(best, popcount(s));
  return best;
}

inline int domination(const Adj& a) {
  int best = a.n;
  for (Mask s = 0; s <= a.all(); ++s) {
    Mask covered = s;
    for (int v = 0; v < a.n; ++v) {
      if (s >> v & 1U) covered |= a.row[v];
    }
    if (covered == a.all()) best = std::min(best, popcount(s));
    if (s == a.all()) break;
  }
  return best;
}

// Matching number by memoised recursion over vertex subsets.
inline int matching(const Adj& a) {
  std::vector<int> memo(std::size_t{1} << a.n, -1);
  auto solve = [&](auto&& self, Mask m) -> int {
    if (m == 0) return 0;
    int& slot = memo[m];
    if (slot >= 0) return slot;
    const int v = std::countr_zero(m);
    const Mask rest = m & ~(Mask{1} << v);
    int best = self(self, rest);
    for (Mask nb = a.row[v] & rest; nb; nb &= nb - 1) {
      const int w = std::countr_zero(nb);
      best = std::max(best, 1 + self(self, rest & ~(Mask{1} << w)));
    }
    return slot = best;
  };
  return solve(solve, a.all());
}

// Number of perfect matchings, saturated at `cap`.
inline int perfect_matchings(const Adj& a, int cap = 1 << 30) {
  auto count = [&](auto&& self, Mask m) -> int {
    if (m == 0) return 1;
    const int v = std::countr_zero(m);
    const Mask rest = m & ~(Mask{1} << v);
    int total = 0;
    for (Mask nb = a.row[v] & rest; nb && total < cap; nb &= nb - 1) {
      total += self(self, rest & ~(Mask{1} << std::countr_zero(nb)));
    }
    return std::min(total, cap);
  };
  return count(count, a.all());
}

// Minimum number of cliques covering all vertices, by subset DP.
inline int clique_cover(const Adj& a) {
  const std::size_t size = std::size_t{1} << a.n;
  std::vector<char> is_clique(size);
  for (Mask s = 0; s < size; ++s) is_clique[s] = clique(a, s);
  std::vector<int> best(size, a.n + 1);
  best[0] = 0;
  for (Mask m = 1; m < size; ++m) {
    const Mask low = m & (~m + 1);
    const Mask rest = m & ~low;
    // Cliques containing the lowest vertex of m.
    for (Mask sub = rest;; sub = (sub - 1) & rest) {
      const Mask c = sub | low;
      if (is_clique[c]) best[m] = std::min(best[m], 1 + best[m & ~c]);
      if (sub == 0) break;
    }
  }
  return best[size - 1];
}

// All-pairs distances by Floyd-Warshall; -1 means unreachable.
inline std::vector<std::vector<int>> distances(const Adj& a) {
  const int inf = 1 << 20;
  std::vector<std::vector<int>> d(a.n, std::vector<int>(a.n, inf));
  for (int v = 0; v < a.n; ++v) {
    d[v][v] = 0;
    for (int w = 0; w < a.n; ++w) {
      if (a.row[v] >> w & 1U) d[v][w] = 1;
    }
  }
  for (int k = 0; k < a.n; ++k) {
    for (int i = 0; i < a.n; ++i) {
      for (int j = 0; j < a.n; ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
    }
  }
  for (auto& r : d) {
    for (int& x : r) x = x >= inf ? -1 : x;
  }
  return d;
}

inline Adj square(const Adj& a) {
  Adj out = a;
  const auto d = distances(a);
  for (int v = 0; v < a.n; ++v) {
    out.row[v] = 0;
    for (int w = 0; w < a.n; ++w) {
      if (v != w && d[v][w] > 0 && d[v][w] <= 2) out.row[v] |= Mask{1} << w;
    }
  }
  return out;
}

inline sqstable::VertexSet to_set(Mask m) {
  sqstable::VertexSet s;
  for (int v = 0; v < 32; ++v) {
    if (m >> v & 1U) s.insert(v);
  }
  return s;
}

}  // namespace oracle
