#pragma once

// Loop-free simple digraphs on vertices 0..n-1, stored as out/in bitset rows.
//
// Vertex x_i of the usual 1-based notation is index i-1 here.

#include <algorithm>
#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <numeric>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hambypass/errors.hpp"

namespace hambypass {

using VertexId = int;
using VertexSet = std::uint64_t;

inline constexpr int kMaxOrder = 64;

constexpr VertexSet bit(VertexId v) { return VertexSet{1} << v; }
constexpr bool contains(VertexSet s, VertexId v) { return (s >> v) & 1U; }
constexpr int count(VertexSet s) { return std::popcount(s); }
constexpr VertexSet all_vertices(int n) {
  return n >= kMaxOrder ? ~VertexSet{0} : (VertexSet{1} << n) - 1;
}

// Calls f(v) for every member of s in ascending order.
template <class F>
void for_each_vertex(VertexSet s, F&& f) {
  while (s != 0) {
    const int v = std::countr_zero(s);
    s &= s - 1;
    f(v);
  }
}

inline std::vector<VertexId> to_vector(VertexSet s) {
  std::vector<VertexId> out;
  out.reserve(count(s));
  for_each_vertex(s, [&](VertexId v) { out.push_back(v); });
  return out;
}

struct Arc {
  VertexId from = 0;
  VertexId to = 0;

  friend auto operator<=>(const Arc&, const Arc&) = default;
};

class Digraph {
 public:
  // Duplicate arcs collapse; loops and out-of-range endpoints throw.
  Digraph(int n, std::span<const Arc> arcs) : n_(n), out_(check_order(n)), in_(n) {
    for (const Arc& a : arcs) {
      if (a.from < 0 || a.from >= n || a.to < 0 || a.to >= n) {
        throw construction_error("arc (" + std::to_string(a.from) + "," + std::to_string(a.to) +
                                 ") has an endpoint outside [0," + std::to_string(n - 1) + "]");
      }
      if (a.from == a.to) {
        throw construction_error("loop at vertex " + std::to_string(a.from));
      }
      out_[a.from] |= bit(a.to);
      in_[a.to] |= bit(a.from);
    }
  }

  Digraph(int n, std::initializer_list<Arc> arcs)
      : Digraph(n, std::span<const Arc>(arcs.begin(), arcs.size())) {}

  explicit Digraph(int n) : Digraph(n, std::span<const Arc>{}) {}

  // Builds from out-neighbourhood rows; the diagonal must be clear.
  static Digraph from_out_rows(std::span<const VertexSet> rows) {
    const int n = static_cast<int>(rows.size());
    Digraph d(n);
    for (int u = 0; u < n; ++u) {
      if ((rows[u] & ~all_vertices(n)) != 0) throw construction_error("row references vertex >= n");
      if (contains(rows[u], u)) throw construction_error("loop at vertex " + std::to_string(u));
      d.out_[u] = rows[u];
      for_each_vertex(rows[u], [&](VertexId v) { d.in_[v] |= bit(u); });
    }
    return d;
  }

  // Bit j of `mask` is the j-th ordered pair (u,v), u != v, in lexicographic order.
  static Digraph from_pair_mask(int n, std::uint64_t mask) {
    Digraph d(n);
    int j = 0;
    for (int u = 0; u < n; ++u) {
      for (int v = 0; v < n; ++v) {
        if (u == v) continue;
        if ((mask >> j) & 1U) {
          d.out_[u] |= bit(v);
          d.in_[v] |= bit(u);
        }
        ++j;
      }
    }
    return d;
  }

  int order() const noexcept { return n_; }

  bool has_arc(VertexId u, VertexId v) const { return contains(out_[u], v); }
  VertexSet out_set(VertexId u) const { return out_[u]; }
  VertexSet in_set(VertexId u) const { return in_[u]; }
  VertexSet neighbours(VertexId u) const { return out_[u] | in_[u]; }

  int out_degree(VertexId u) const { return count(out_[u]); }
  int in_degree(VertexId u) const { return count(in_[u]); }
  int degree(VertexId u) const { return out_degree(u) + in_degree(u); }

  // a(x,y): number of arcs with end vertices x and y.
  int arcs_between(VertexId x, VertexId y) const {
    return static_cast<int>(has_arc(x, y)) + static_cast<int>(has_arc(y, x));
  }
  bool adjacent(VertexId x, VertexId y) const { return arcs_between(x, y) > 0; }

  // d(x, S): arcs between x and members of S.
  int degree_into(VertexId x, VertexSet s) const {
    return count(out_[x] & s) + count(in_[x] & s);
  }

  int arc_count() const {
    int m = 0;
    for (VertexSet row : out_) m += count(row);
    return m;
  }

  // Lexicographically sorted.
  std::vector<Arc> arcs() const {
    std::vector<Arc> result;
    for (int u = 0; u < n_; ++u) {
      for_each_vertex(out_[u], [&](VertexId v) { result.push_back({u, v}); });
    }
    return result;
  }

  std::span<const VertexSet> out_rows() const { return out_; }

  friend bool operator==(const Digraph& a, const Digraph& b) {
    return a.n_ == b.n_ && a.out_ == b.out_;
  }

 private:
  static int check_order(int n) {
    if (n < 1 || n > kMaxOrder) {
      throw construction_error("order must lie in [1," + std::to_string(kMaxOrder) + "], got " +
                               std::to_string(n));
    }
    return n;
  }

  int n_;
  std::vector<VertexSet> out_;
  std::vector<VertexSet> in_;
};

inline Digraph build_digraph(int n, std::span<const Arc> arcs) { return Digraph(n, arcs); }

struct DegreeProfile {
  std::vector<int> out;
  std::vector<int> in;
  std::vector<int> total;
  int min_out = 0;
  int min_in = 0;
  int min_total = 0;

  int min_semi() const { return std::min(min_out, min_in); }
};

inline DegreeProfile degree_profile(const Digraph& d) {
  const int n = d.order();
  DegreeProfile p;
  p.out.resize(n);
  p.in.resize(n);
  p.total.resize(n);
  for (int v = 0; v < n; ++v) {
    p.out[v] = d.out_degree(v);
    p.in[v] = d.in_degree(v);
    p.total[v] = p.out[v] + p.in[v];
  }
  p.min_out = *std::min_element(p.out.begin(), p.out.end());
  p.min_in = *std::min_element(p.in.begin(), p.in.end());
  p.min_total = *std::min_element(p.total.begin(), p.total.end());
  return p;
}

// Vertices reachable from `source` inside `within` (source included).
inline VertexSet reachable_from(const Digraph& d, VertexId source, VertexSet within, bool forward = true) {
  VertexSet seen = bit(source);
  VertexSet frontier = seen;
  while (frontier != 0) {
    VertexSet next = 0;
    for_each_vertex(frontier, [&](VertexId v) { next |= forward ? d.out_set(v) : d.in_set(v); });
    next &= within & ~seen;
    seen |= next;
    frontier = next;
  }
  return seen;
}

// Strong connectivity of the subdigraph induced by `within` (must be nonempty).
inline bool is_strong_within(const Digraph& d, VertexSet within) {
  const VertexId root = std::countr_zero(within);
  return reachable_from(d, root, within, true) == within &&
         reachable_from(d, root, within, false) == within;
}

inline bool is_strong(const Digraph& d) { return is_strong_within(d, all_vertices(d.order())); }

// Strong after deleting any single vertex.
inline bool is_two_strong(const Digraph& d) {
  const int n = d.order();
  if (n < 3 || !is_strong(d)) return false;
  const VertexSet all = all_vertices(n);
  for (int v = 0; v < n; ++v) {
    if (!is_strong_within(d, all & ~bit(v))) return false;
  }
  return true;
}

inline Digraph reverse(const Digraph& d) {
  std::vector<VertexSet> rows(d.order());
  for (int v = 0; v < d.order(); ++v) rows[v] = d.in_set(v);
  return Digraph::from_out_rows(rows);
}

// Image of d under v -> perm[v].
inline Digraph relabel(const Digraph& d, std::span<const VertexId> perm) {
  const int n = d.order();
  if (static_cast<int>(perm.size()) != n) throw usage_error("permutation size differs from order");
  std::vector<VertexSet> rows(n, 0);
  for (int u = 0; u < n; ++u) {
    for_each_vertex(d.out_set(u), [&](VertexId v) { rows[perm[u]] |= bit(perm[v]); });
  }
  return Digraph::from_out_rows(rows);
}

// Subdigraph induced by `vertices`; vertex i of the result is vertices[i].
inline Digraph induced_subdigraph(const Digraph& d, std::span<const VertexId> vertices) {
  const int k = static_cast<int>(vertices.size());
  std::vector<VertexSet> rows(k, 0);
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      if (i != j && d.has_arc(vertices[i], vertices[j])) rows[i] |= bit(j);
    }
  }
  return Digraph::from_out_rows(rows);
}

enum class DominationMode { in, out, either };

struct DominatedPair {
  VertexId x = 0;
  VertexId y = 0;
  std::vector<VertexId> common_in;
  std::vector<VertexId> common_out;
  int adjacency_count = 0;

  friend bool operator==(const DominatedPair&, const DominatedPair&) = default;
};

// Non-adjacent pairs {x,y}, x < y, sharing an in- and/or out-neighbour per `mode`.
inline std::vector<DominatedPair> dominated_nonadjacent_pairs(const Digraph& d, DominationMode mode) {
  std::vector<DominatedPair> pairs;
  const int n = d.order();
  for (int x = 0; x < n; ++x) {
    for (int y = x + 1; y < n; ++y) {
      if (d.adjacent(x, y)) continue;
      const VertexSet ci = d.in_set(x) & d.in_set(y);
      const VertexSet co = d.out_set(x) & d.out_set(y);
      const bool hit = (mode == DominationMode::in && ci != 0) || (mode == DominationMode::out && co != 0) ||
                       (mode == DominationMode::either && (ci | co) != 0);
      if (hit) pairs.push_back({x, y, to_vector(ci), to_vector(co), 0});
    }
  }
  return pairs;
}

// Directed cycle 0 -> 1 -> ... -> n-1 -> 0.
inline Digraph directed_cycle(int n) {
  std::vector<Arc> arcs;
  for (int i = 0; i < n; ++i) arcs.push_back({i, (i + 1) % n});
  if (n == 1) arcs.clear();
  return Digraph(n, arcs);
}

// K*_n: every ordered pair of distinct vertices is an arc.
inline Digraph complete_digraph(int n) {
  std::vector<VertexSet> rows(n);
  for (int v = 0; v < n; ++v) rows[v] = all_vertices(n) & ~bit(v);
  return Digraph::from_out_rows(rows);
}

}  // namespace hambypass
