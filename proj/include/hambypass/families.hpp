#pragma once

// Named digraph families that appear as extremal or exceptional cases.
//
// Vertex numbering (1-based names -> 0-based indices):
//   d0     A = {0..(n-1)/2} independent, B = {(n+1)/2..n-1}; every A-B pair
//          joined in both directions; b_arcs lists the arcs inside B.
//   d1     K*_{n-k} on {0, 1..n-k-1} and K*_{k+1} on {0, n-k..n-1}, sharing 0.
//   t5     x1..x4 -> 0..3, y -> 4.
//   d7     x1..x6 -> 0..5, y -> 6.
//   dn     x1..xn -> 0..n-1, Hamiltonian cycle 0->1->...->n-1->0 plus chords
//          x1x3, x3x5, ... (chain: up to the last odd-named vertex; wrap: up to
//          the last odd-named vertex before x_n, then back to x1).
//   kpq    parts {0..p-1} and {p..p+q-1}; kpq-minus-arc drops 0->p (or p->0).
//   c3/cn  0->1->...->n-1->0.   kstar  K*_n.

#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "hambypass/digraph.hpp"
#include "hambypass/isomorphism.hpp"

namespace hambypass {

enum class FamilyId { d0, d1, t5, c3, cn, kstar_pq, kstar_pq_minus_arc, d7, dn_chords, complete };

enum class ChordVariant { chain, wrap };

struct FamilySpec {
  FamilyId family = FamilyId::complete;
  int n = 0;
  int k = 0;
  int p = 0;
  int q = 0;
  std::vector<Arc> b_arcs;        // d0 only
  ChordVariant variant = ChordVariant::chain;
  bool removed_arc_reversed = false;  // kpq-minus-arc: drop p->0 instead of 0->p

  friend bool operator==(const FamilySpec&, const FamilySpec&) = default;
};

inline std::string_view to_token(FamilyId f) {
  switch (f) {
    case FamilyId::d0: return "d0";
    case FamilyId::d1: return "d1";
    case FamilyId::t5: return "t5";
    case FamilyId::c3: return "c3";
    case FamilyId::cn: return "cn";
    case FamilyId::kstar_pq: return "kpq";
    case FamilyId::kstar_pq_minus_arc: return "kpq-minus-arc";
    case FamilyId::d7: return "d7";
    case FamilyId::dn_chords: return "dn";
    case FamilyId::complete: return "kstar";
  }
  return "?";
}

inline FamilyId parse_family(std::string_view token) {
  for (FamilyId f : {FamilyId::d0, FamilyId::d1, FamilyId::t5, FamilyId::c3, FamilyId::cn, FamilyId::kstar_pq,
                     FamilyId::kstar_pq_minus_arc, FamilyId::d7, FamilyId::dn_chords, FamilyId::complete}) {
    if (token == to_token(f)) return f;
  }
  throw usage_error("unknown family '" + std::string(token) + "'");
}

inline std::string to_string(const FamilySpec& s) {
  std::ostringstream out;
  out << to_token(s.family);
  switch (s.family) {
    case FamilyId::d0:
      out << "(n=" << s.n;
      if (!s.b_arcs.empty()) {
        out << ",b-arcs=";
        for (std::size_t i = 0; i < s.b_arcs.size(); ++i) {
          out << (i ? ";" : "") << s.b_arcs[i].from << '-' << s.b_arcs[i].to;
        }
      }
      out << ')';
      break;
    case FamilyId::d1: out << "(n=" << s.n << ",k=" << s.k << ')'; break;
    case FamilyId::cn:
    case FamilyId::complete: out << "(n=" << s.n << ')'; break;
    case FamilyId::kstar_pq: out << "(p=" << s.p << ",q=" << s.q << ')'; break;
    case FamilyId::kstar_pq_minus_arc:
      out << "(p=" << s.p << ",q=" << s.q << (s.removed_arc_reversed ? ",reversed" : "") << ')';
      break;
    case FamilyId::dn_chords:
      out << "(n=" << s.n << ",variant=" << (s.variant == ChordVariant::chain ? "chain" : "wrap") << ')';
      break;
    case FamilyId::t5:
    case FamilyId::c3:
    case FamilyId::d7: break;
  }
  return out.str();
}

namespace detail {

inline void require(bool ok, const std::string& what) {
  if (!ok) throw parameter_error(what);
}

inline void add_clique(std::vector<Arc>& arcs, const std::vector<VertexId>& vs) {
  for (VertexId a : vs) {
    for (VertexId b : vs) {
      if (a != b) arcs.push_back({a, b});
    }
  }
}

}  // namespace detail

// Order of the digraph a spec describes (p+q for the bipartite families).
inline int family_order(const FamilySpec& s) {
  switch (s.family) {
    case FamilyId::t5: return 5;
    case FamilyId::c3: return 3;
    case FamilyId::d7: return 7;
    case FamilyId::kstar_pq:
    case FamilyId::kstar_pq_minus_arc: return s.p + s.q;
    default: return s.n;
  }
}

inline Digraph generate(const FamilySpec& s) {
  using detail::require;
  std::vector<Arc> arcs;
  switch (s.family) {
    case FamilyId::d0: {
      require(s.n >= 5 && s.n % 2 == 1, "d0 needs odd n >= 5");
      const int a = (s.n + 1) / 2;
      for (int u = 0; u < a; ++u) {
        for (int v = a; v < s.n; ++v) {
          arcs.push_back({u, v});
          arcs.push_back({v, u});
        }
      }
      for (const Arc& b : s.b_arcs) {
        require(b.from >= a && b.from < s.n && b.to >= a && b.to < s.n && b.from != b.to,
                "d0 b-arcs must join distinct vertices of B = [" + std::to_string(a) + "," +
                    std::to_string(s.n - 1) + "]");
        arcs.push_back(b);
      }
      return Digraph(s.n, arcs);
    }
    case FamilyId::d1: {
      require(s.n >= 4, "d1 needs n >= 4");
      require(s.k >= 1 && s.k <= s.n - 2, "d1 needs k in [1, n-2]");
      std::vector<VertexId> first{0}, second{0};
      for (int v = 1; v < s.n - s.k; ++v) first.push_back(v);
      for (int v = s.n - s.k; v < s.n; ++v) second.push_back(v);
      detail::add_clique(arcs, first);
      detail::add_clique(arcs, second);
      return Digraph(s.n, arcs);
    }
    case FamilyId::t5:
      require(s.n == 0 || s.n == 5, "t5 has order 5");
      return Digraph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 4}, {2, 4}, {4, 1}, {4, 3}, {0, 2}, {1, 3}});
    case FamilyId::c3:
      require(s.n == 0 || s.n == 3, "c3 has order 3");
      return directed_cycle(3);
    case FamilyId::cn:
      require(s.n >= 2, "cn needs n >= 2");
      return directed_cycle(s.n);
    case FamilyId::complete:
      require(s.n >= 1, "kstar needs n >= 1");
      return complete_digraph(s.n);
    case FamilyId::kstar_pq:
    case FamilyId::kstar_pq_minus_arc: {
      require(s.p >= 1 && s.q >= 1, "kpq needs p, q >= 1");
      const int n = s.p + s.q;
      for (int u = 0; u < s.p; ++u) {
        for (int v = s.p; v < n; ++v) {
          arcs.push_back({u, v});
          arcs.push_back({v, u});
        }
      }
      if (s.family == FamilyId::kstar_pq_minus_arc) {
        const Arc drop = s.removed_arc_reversed ? Arc{s.p, 0} : Arc{0, s.p};
        std::erase(arcs, drop);
      }
      return Digraph(n, arcs);
    }
    case FamilyId::d7: {
      require(s.n == 0 || s.n == 7, "d7 has order 7");
      for (int i = 0; i < 6; ++i) arcs.push_back({i, (i + 1) % 6});
      for (int x : {0, 2, 4}) arcs.push_back({6, x});
      for (int x : {1, 3, 5}) arcs.push_back({x, 6});
      arcs.insert(arcs.end(), {{0, 2}, {2, 4}, {4, 0}});
      return Digraph(7, arcs);
    }
    case FamilyId::dn_chords: {
      require(s.n >= 5, "dn needs n >= 5");
      for (int i = 0; i < s.n; ++i) arcs.push_back({i, (i + 1) % s.n});
      if (s.variant == ChordVariant::chain) {
        for (int i = 0; i + 2 <= s.n - 1; i += 2) arcs.push_back({i, i + 2});
      } else {
        int head = 0;
        for (int i = 0; i + 2 <= s.n - 2; i += 2) {
          arcs.push_back({i, i + 2});
          head = i + 2;
        }
        arcs.push_back({head, 0});
      }
      return Digraph(s.n, arcs);
    }
  }
  throw parameter_error("unknown family");
}

// Every D0 on n vertices, one per arc subset inside B.
inline std::vector<FamilySpec> d0_variants(int n) {
  detail::require(n >= 5 && n % 2 == 1, "d0 needs odd n >= 5");
  const int a = (n + 1) / 2;
  std::vector<Arc> pairs;
  for (int u = a; u < n; ++u) {
    for (int v = a; v < n; ++v) {
      if (u != v) pairs.push_back({u, v});
    }
  }
  detail::require(pairs.size() < 20, "too many d0 variants");
  std::vector<FamilySpec> out;
  for (std::uint32_t mask = 0; mask < (1U << pairs.size()); ++mask) {
    FamilySpec s{FamilyId::d0, n};
    for (std::size_t j = 0; j < pairs.size(); ++j) {
      if ((mask >> j) & 1U) s.b_arcs.push_back(pairs[j]);
    }
    out.push_back(std::move(s));
  }
  return out;
}

// Parameter choices of `f` at order n, excluding d0 (handled structurally).
inline std::vector<FamilySpec> instantiations(FamilyId f, int n) {
  std::vector<FamilySpec> out;
  switch (f) {
    case FamilyId::d0: break;
    case FamilyId::d1:
      for (int k = 1; n >= 4 && k <= n - 2; ++k) out.push_back({FamilyId::d1, n, k});
      break;
    case FamilyId::t5:
      if (n == 5) out.push_back({FamilyId::t5, 5});
      break;
    case FamilyId::c3:
      if (n == 3) out.push_back({FamilyId::c3, 3});
      break;
    case FamilyId::cn:
      if (n >= 2) out.push_back({FamilyId::cn, n});
      break;
    case FamilyId::complete:
      if (n >= 1) out.push_back({FamilyId::complete, n});
      break;
    case FamilyId::kstar_pq:
      for (int p = 1; 2 * p <= n; ++p) out.push_back({FamilyId::kstar_pq, 0, 0, p, n - p});
      break;
    case FamilyId::kstar_pq_minus_arc:
      for (int p = 1; 2 * p <= n; ++p) {
        out.push_back({FamilyId::kstar_pq_minus_arc, 0, 0, p, n - p});
        FamilySpec r{FamilyId::kstar_pq_minus_arc, 0, 0, p, n - p};
        r.removed_arc_reversed = true;
        out.push_back(r);
      }
      break;
    case FamilyId::d7:
      if (n == 7) out.push_back({FamilyId::d7, 7});
      break;
    case FamilyId::dn_chords:
      if (n >= 5) {
        out.push_back({FamilyId::dn_chords, n, 0, 0, 0, {}, ChordVariant::chain});
        out.push_back({FamilyId::dn_chords, n, 0, 0, 0, {}, ChordVariant::wrap});
      }
      break;
  }
  return out;
}

namespace detail {

// D0 test: some independent set A of size (n+1)/2 whose complement B is
// completely joined to A in both directions.
inline std::optional<FamilySpec> match_d0(const Digraph& d) {
  const int n = d.order();
  if (n < 5 || n % 2 == 0) return std::nullopt;
  const int a = (n + 1) / 2;
  const VertexSet all = all_vertices(n);
  for (VertexSet sa = 0; sa <= all; ++sa) {
    if (count(sa) != a) continue;
    const VertexSet sb = all & ~sa;
    bool ok = true;
    for_each_vertex(sa, [&](VertexId v) {
      ok = ok && (d.out_set(v) == sb) && (d.in_set(v) == sb);
    });
    if (!ok) continue;
    std::vector<VertexId> relabel(n);
    int next = 0;
    for_each_vertex(sa, [&](VertexId v) { relabel[v] = next++; });
    for_each_vertex(sb, [&](VertexId v) { relabel[v] = next++; });
    FamilySpec s{FamilyId::d0, n};
    for_each_vertex(sb, [&](VertexId u) {
      for_each_vertex(d.out_set(u) & sb, [&](VertexId v) { s.b_arcs.push_back({relabel[u], relabel[v]}); });
    });
    std::sort(s.b_arcs.begin(), s.b_arcs.end());
    return s;
  }
  return std::nullopt;
}

}  // namespace detail

// Instantiation of `f` at d's order that d is isomorphic to, if any.
inline std::optional<FamilySpec> match_family(const Digraph& d, FamilyId f) {
  if (d.order() > kIsomorphismCap) {
    throw capability_error("family recognition capped at order " + std::to_string(kIsomorphismCap));
  }
  if (f == FamilyId::d0) return detail::match_d0(d);
  for (const FamilySpec& s : instantiations(f, d.order())) {
    if (are_isomorphic(d, generate(s))) return s;
  }
  return std::nullopt;
}

inline bool is_member(const Digraph& d, FamilyId f) { return match_family(d, f).has_value(); }

inline constexpr FamilyId kRecognitionOrder[] = {
    FamilyId::complete, FamilyId::c3,       FamilyId::cn,
    FamilyId::t5,       FamilyId::d7,       FamilyId::d1,
    FamilyId::kstar_pq, FamilyId::kstar_pq_minus_arc, FamilyId::dn_chords,
    FamilyId::d0,
};

// First family (in kRecognitionOrder) that d belongs to.
inline std::optional<FamilySpec> recognize_exception(const Digraph& d) {
  if (d.order() > kIsomorphismCap) {
    throw capability_error("family recognition capped at order " + std::to_string(kIsomorphismCap));
  }
  for (FamilyId f : kRecognitionOrder) {
    if (auto s = match_family(d, f)) return s;
  }
  return std::nullopt;
}

}  // namespace hambypass
