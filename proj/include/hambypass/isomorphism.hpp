#pragma once

// Brute-force digraph isomorphism for small orders: permutation backtracking
// restricted to vertices with matching (out, in) degree, checking arcs to
// every already-mapped vertex at each step.

#include <algorithm>
#include <optional>
#include <vector>

#include "hambypass/digraph.hpp"

namespace hambypass {

inline constexpr int kIsomorphismCap = 10;

namespace detail {

struct IsoSearch {
  const Digraph& a;
  const Digraph& b;
  std::vector<VertexId> order;   // a-vertices in assignment order
  std::vector<VertexId> image;   // image[a-vertex] or -1
  VertexSet used = 0;

  bool extend(std::size_t depth) {
    if (depth == order.size()) return true;
    const VertexId u = order[depth];
    for (VertexId w = 0; w < b.order(); ++w) {
      if (contains(used, w)) continue;
      if (a.out_degree(u) != b.out_degree(w) || a.in_degree(u) != b.in_degree(w)) continue;
      bool ok = true;
      for (std::size_t i = 0; i < depth && ok; ++i) {
        const VertexId p = order[i];
        ok = a.has_arc(u, p) == b.has_arc(w, image[p]) && a.has_arc(p, u) == b.has_arc(image[p], w);
      }
      if (!ok) continue;
      image[u] = w;
      used |= bit(w);
      if (extend(depth + 1)) return true;
      used &= ~bit(w);
      image[u] = -1;
    }
    return false;
  }
};

}  // namespace detail

// Returns perm with arcs u->v of `a` mapping exactly to perm[u]->perm[v] of `b`.
inline std::optional<std::vector<VertexId>> find_isomorphism(const Digraph& a, const Digraph& b,
                                                              int cap = kIsomorphismCap) {
  if (a.order() != b.order()) return std::nullopt;
  if (a.order() > cap) {
    throw capability_error("isomorphism test capped at order " + std::to_string(cap));
  }
  if (a.arc_count() != b.arc_count()) return std::nullopt;
  const int n = a.order();

  auto signature = [](const Digraph& d) {
    std::vector<std::pair<int, int>> s;
    for (int v = 0; v < d.order(); ++v) s.emplace_back(d.out_degree(v), d.in_degree(v));
    std::sort(s.begin(), s.end());
    return s;
  };
  if (signature(a) != signature(b)) return std::nullopt;

  detail::IsoSearch search{a, b, {}, std::vector<VertexId>(n, -1), 0};
  // Visit vertices in BFS-like order over the underlying graph so that each new
  // vertex is constrained by already-placed neighbours.
  VertexSet placed = 0;
  while (count(placed) < n) {
    VertexId start = std::countr_zero(~placed & all_vertices(n));
    VertexSet frontier = bit(start);
    placed |= frontier;
    while (frontier != 0) {
      VertexSet next = 0;
      for_each_vertex(frontier, [&](VertexId v) {
        search.order.push_back(v);
        next |= a.neighbours(v);
      });
      next &= ~placed;
      placed |= next;
      frontier = next;
    }
  }
  if (!search.extend(0)) return std::nullopt;
  return search.image;
}

inline bool are_isomorphic(const Digraph& a, const Digraph& b, int cap = kIsomorphismCap) {
  return find_isomorphism(a, b, cap).has_value();
}

}  // namespace hambypass
