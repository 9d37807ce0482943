#pragma once

// Path insertion machinery: partners of a vertex or subpath on a path,
// multi-insertion through a collection of partners, cycle extension by an
// external vertex, good-cycle detection, and a staged bypass builder that
// combines them before falling back to exact search.

#include <algorithm>
#include <optional>
#include <string_view>
#include <vector>

#include "hambypass/certificate.hpp"
#include "hambypass/digraph.hpp"
#include "hambypass/search.hpp"

namespace hambypass {

using Path = std::vector<VertexId>;

// Q can be placed between path[arc_index] and path[arc_index + 1].
struct Partner {
  Path path;
  int arc_index = 0;
  Path inserted;
};

// Segment k of Q is Q[breakpoints[k], breakpoints[k+1]); the last breakpoint is |Q|.
struct PartnerCollection {
  std::vector<int> breakpoints;
  std::vector<Partner> partners;
};

namespace detail {

inline VertexSet checked_vertex_set(const Digraph& d, const Path& p, const char* name) {
  VertexSet s = 0;
  for (VertexId v : p) {
    if (v < 0 || v >= d.order()) throw usage_error(std::string(name) + " has a vertex out of range");
    if (contains(s, v)) throw usage_error(std::string(name) + " repeats a vertex");
    s |= bit(v);
  }
  return s;
}

inline bool is_path(const Digraph& d, const Path& p) {
  for (std::size_t i = 0; i + 1 < p.size(); ++i) {
    if (!d.has_arc(p[i], p[i + 1])) return false;
  }
  return true;
}

inline void check_path_pair(const Digraph& d, const Path& p, const Path& q) {
  if (p.size() < 2) throw usage_error("host path needs at least two vertices");
  if (q.empty()) throw usage_error("inserted path is empty");
  const VertexSet ps = checked_vertex_set(d, p, "host path");
  const VertexSet qs = checked_vertex_set(d, q, "inserted path");
  if ((ps & qs) != 0) throw usage_error("host and inserted paths share a vertex");
  if (!is_path(d, p)) throw usage_error("host sequence is not a path");
  if (!is_path(d, q)) throw usage_error("inserted sequence is not a path");
}

inline std::optional<int> partner_index(const Digraph& d, const Path& p, VertexId head, VertexId tail) {
  for (std::size_t i = 0; i + 1 < p.size(); ++i) {
    if (d.has_arc(p[i], head) && d.has_arc(tail, p[i + 1])) return static_cast<int>(i);
  }
  return std::nullopt;
}

// Segmentation of q[from..) where every segment has a partner on p.
inline std::optional<std::vector<int>> segment_greedy(const Digraph& d, const Path& p, const Path& q,
                                                      bool longest_first) {
  const int s = static_cast<int>(q.size());
  std::vector<int> cuts{0};
  int pos = 0;
  while (pos < s) {
    int chosen = 0;
    for (int step = 0; step < s - pos; ++step) {
      const int len = longest_first ? s - pos - step : step + 1;
      if (partner_index(d, p, q[pos], q[pos + len - 1])) {
        chosen = len;
        break;
      }
    }
    if (chosen == 0) return std::nullopt;
    pos += chosen;
    cuts.push_back(pos);
  }
  return cuts;
}

}  // namespace detail

// Smallest i with path[i] -> Q.front() and Q.back() -> path[i+1].
inline std::optional<Partner> find_partner(const Digraph& d, const Path& path, const Path& q) {
  detail::check_path_pair(d, path, q);
  auto i = detail::partner_index(d, path, q.front(), q.back());
  if (!i) return std::nullopt;
  return Partner{path, *i, q};
}

inline Path apply_partner(const Partner& p) {
  Path out(p.path.begin(), p.path.begin() + p.arc_index + 1);
  out.insert(out.end(), p.inserted.begin(), p.inserted.end());
  out.insert(out.end(), p.path.begin() + p.arc_index + 1, p.path.end());
  return out;
}

// Longest-prefix greedy segmentation first, then shortest-prefix greedy.
inline std::optional<PartnerCollection> find_partner_collection(const Digraph& d, const Path& path, const Path& q) {
  detail::check_path_pair(d, path, q);
  for (bool longest_first : {true, false}) {
    if (auto cuts = detail::segment_greedy(d, path, q, longest_first)) {
      PartnerCollection c;
      c.breakpoints = *cuts;
      for (std::size_t k = 0; k + 1 < cuts->size(); ++k) {
        Path seg(q.begin() + (*cuts)[k], q.begin() + (*cuts)[k + 1]);
        const int i = *detail::partner_index(d, path, seg.front(), seg.back());
        c.partners.push_back(Partner{path, i, std::move(seg)});
      }
      return c;
    }
  }
  return std::nullopt;
}

// An (x_1, x_t)-path on V(P) u V(Q), built from a partner collection of Q on P.
inline std::optional<Path> multi_insert(const Digraph& d, const Path& path, const Path& q) {
  auto collection = find_partner_collection(d, path, q);
  if (!collection) return std::nullopt;

  // Segments sharing a partner arc are fused together with everything between
  // them: the fused block enters from the first segment's partner tail and
  // leaves through the last segment's partner head, and Q's own arcs join the
  // pieces.
  struct Block {
    int begin, end, arc;
  };
  std::vector<Block> blocks;
  for (std::size_t k = 0; k < collection->partners.size(); ++k) {
    blocks.push_back({collection->breakpoints[k], collection->breakpoints[k + 1], collection->partners[k].arc_index});
  }
  for (bool merged = true; merged;) {
    merged = false;
    for (std::size_t r = 0; r < blocks.size() && !merged; ++r) {
      for (std::size_t t = blocks.size(); t-- > r + 1;) {
        if (blocks[t].arc == blocks[r].arc) {
          blocks[r].end = blocks[t].end;
          blocks.erase(blocks.begin() + r + 1, blocks.begin() + t + 1);
          merged = true;
          break;
        }
      }
    }
  }

  Path out;
  out.reserve(path.size() + q.size());
  for (std::size_t i = 0; i < path.size(); ++i) {
    out.push_back(path[i]);
    for (const Block& b : blocks) {
      if (b.arc == static_cast<int>(i)) out.insert(out.end(), q.begin() + b.begin, q.begin() + b.end);
    }
  }
  if (!detail::is_path(d, out) || out.size() != path.size() + q.size()) return std::nullopt;
  return out;
}

namespace detail {

inline Certificate normalized_cycle(Path cycle) {
  std::rotate(cycle.begin(), std::min_element(cycle.begin(), cycle.end()), cycle.end());
  const int k = static_cast<int>(cycle.size());
  return Certificate{CertificateKind::cycle, k, std::move(cycle), 0};
}

inline void check_cycle(const Digraph& d, const Path& c) {
  checked_vertex_set(d, c, "cycle");
  if (c.size() < 2) throw usage_error("cycle needs at least two vertices");
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (!d.has_arc(c[i], c[(i + 1) % c.size()])) throw usage_error("sequence is not a cycle");
  }
}

}  // namespace detail

// Cycles of every length 2..m+1 realisable on V(C) u {x}, ascending by length.
// The length-m entry is C itself and the length-(m+1) entry prefers inserting
// x into C through a partner arc.
inline std::vector<Certificate> extend_cycle_ladder(const Digraph& d, const Path& cycle, VertexId x) {
  detail::check_cycle(d, cycle);
  if (x < 0 || x >= d.order()) throw usage_error("external vertex out of range");
  if (std::find(cycle.begin(), cycle.end(), x) != cycle.end()) throw usage_error("vertex lies on the cycle");

  const int m = static_cast<int>(cycle.size());
  Path support = cycle;
  support.push_back(x);
  std::sort(support.begin(), support.end());
  const Digraph local = induced_subdigraph(d, support);

  std::vector<Certificate> ladder;
  for (int k = 2; k <= m + 1; ++k) {
    if (k == m) {
      ladder.push_back(detail::normalized_cycle(cycle));
      continue;
    }
    if (k == m + 1) {
      std::optional<Path> extended;
      for (int i = 0; i < m && !extended; ++i) {
        if (d.has_arc(cycle[i], x) && d.has_arc(x, cycle[(i + 1) % m])) {
          Path c(cycle.begin() + i + 1, cycle.end());
          c.insert(c.end(), cycle.begin(), cycle.begin() + i + 1);
          c.push_back(x);
          extended = std::move(c);
        }
      }
      if (extended) {
        ladder.push_back(detail::normalized_cycle(*extended));
        continue;
      }
    }
    const SearchResult r = find_cycle_of_length(local, k);
    if (!r.found()) continue;
    Path mapped;
    for (VertexId v : r.certificate->order) mapped.push_back(support[v]);
    ladder.push_back(detail::normalized_cycle(std::move(mapped)));
  }
  return ladder;
}

namespace detail {

// Hamiltonian cycles of the subdigraph induced by `allowed`, rooted at its
// smallest vertex, in DFS order; stops after `limit` cycles.
inline std::vector<Path> cycles_through(const Digraph& d, VertexSet allowed, std::size_t limit,
                                        std::uint64_t node_budget) {
  std::vector<Path> found;
  if (allowed == 0) return found;
  const VertexId root = std::countr_zero(allowed);
  const int len = count(allowed);
  Path seq{root};
  std::uint64_t expansions = 0;
  auto dfs = [&](auto&& self, VertexSet mask) -> void {
    if (found.size() >= limit || (node_budget != 0 && expansions >= node_budget)) return;
    ++expansions;
    const VertexId last = seq.back();
    if (static_cast<int>(seq.size()) == len) {
      if (d.has_arc(last, root)) found.push_back(seq);
      return;
    }
    for_each_vertex(d.out_set(last) & allowed & ~mask, [&](VertexId v) {
      seq.push_back(v);
      self(self, mask | bit(v));
      seq.pop_back();
    });
  };
  if (len >= 2) dfs(dfs, bit(root));
  return found;
}

// Bypass from an (n-1)-cycle and external y having two consecutive cycle
// vertices both out-neighbours or both in-neighbours of y.
inline std::optional<Certificate> bypass_from_consecutive_pair(const Digraph& d, const Path& c, VertexId y) {
  const int m = static_cast<int>(c.size());
  auto around = [&](int from) {
    Path p;
    for (int j = 0; j < m; ++j) p.push_back(c[(from + j) % m]);
    return p;
  };
  for (int i = 0; i < m; ++i) {
    const VertexId a = c[i], b = c[(i + 1) % m];
    if (d.has_arc(y, a) && d.has_arc(y, b)) {
      Path order{y};
      const Path rest = around(i + 1);
      order.insert(order.end(), rest.begin(), rest.end());
      return Certificate{CertificateKind::bypass, 2, std::move(order), 0};
    }
  }
  for (int i = 0; i < m; ++i) {
    const VertexId a = c[i], b = c[(i + 1) % m];
    if (d.has_arc(a, y) && d.has_arc(b, y)) {
      Path order = around(i + 1);
      order.push_back(y);
      return Certificate{CertificateKind::bypass, 2, std::move(order), 0};
    }
  }
  return std::nullopt;
}

// A Hamiltonian cycle with one arc also present in reverse is a bypass.
inline std::optional<Certificate> bypass_from_hamiltonian_cycle(const Digraph& d, const Path& h) {
  const int n = static_cast<int>(h.size());
  for (int j = 0; j < n; ++j) {
    const VertexId a = h[j], b = h[(j + 1) % n];
    if (d.has_arc(b, a)) {
      Path order;
      for (int t = 0; t < n; ++t) order.push_back(h[(j + 1 + t) % n]);
      return Certificate{CertificateKind::bypass, 2, std::move(order), 0};
    }
  }
  return std::nullopt;
}

}  // namespace detail

// Bypass built from a good cycle: an (n-1)-cycle whose external vertex y has
// d(y) >= n. Such y sends arcs to, or receives arcs from, two consecutive cycle
// vertices by pigeonhole.
inline std::optional<Certificate> good_cycle_scan(const Digraph& d, SearchOptions options = {}) {
  const int n = d.order();
  if (n < 4) return std::nullopt;
  for (VertexId y = 0; y < n; ++y) {
    if (d.degree(y) < n) continue;
    Path rest;
    for (VertexId v = 0; v < n; ++v) {
      if (v != y) rest.push_back(v);
    }
    const SearchResult r = find_ham_cycle(induced_subdigraph(d, rest), options);
    if (!r.found()) continue;
    Path cycle;
    for (VertexId v : r.certificate->order) cycle.push_back(rest[v]);
    if (auto cert = detail::bypass_from_consecutive_pair(d, cycle, y)) return cert;
  }
  return std::nullopt;
}

enum class BypassMethod { good_cycle, insertion, fallback_exact };

inline std::string_view to_token(BypassMethod m) {
  switch (m) {
    case BypassMethod::good_cycle: return "good-cycle";
    case BypassMethod::insertion: return "insertion";
    case BypassMethod::fallback_exact: return "fallback-exact";
  }
  return "?";
}

struct ConstructiveOptions {
  SearchOptions search;
  std::size_t combination_budget = 256;  // (cycle, external vertex) pairs tried in stage 2
  std::size_t cycles_per_vertex = 8;
};

struct ConstructiveResult {
  SearchStatus status = SearchStatus::absent;
  std::optional<Certificate> certificate;
  BypassMethod method = BypassMethod::fallback_exact;
};

namespace detail {

// Insertion moves on one (n-1)-cycle c with external vertex y.
inline std::optional<Certificate> insertion_moves(const Digraph& d, const Path& c, VertexId y) {
  const int m = static_cast<int>(c.size());
  auto as_bypass = [&](const Path& p) -> std::optional<Certificate> {
    Certificate cert{CertificateKind::bypass, 2, p, 0};
    if (verify_certificate(d, cert)) return cert;
    return std::nullopt;
  };

  if (auto cert = bypass_from_consecutive_pair(d, c, y)) return cert;

  // y has a partner on the cycle: a Hamiltonian cycle, useful when one of its
  // arcs is a 2-cycle.
  for (int i = 0; i < m; ++i) {
    if (d.has_arc(c[i], y) && d.has_arc(y, c[(i + 1) % m])) {
      Path h(c.begin(), c.begin() + i + 1);
      h.push_back(y);
      h.insert(h.end(), c.begin() + i + 1, c.end());
      if (auto cert = bypass_from_hamiltonian_cycle(d, h)) return cert;
    }
  }

  // Cut the cycle open after c[j] and insert y when the cut arc is reversible.
  for (int j = 0; j < m; ++j) {
    Path p;
    for (int t = 1; t <= m; ++t) p.push_back(c[(j + t) % m]);
    if (!d.has_arc(p.front(), p.back())) continue;
    if (auto path = multi_insert(d, p, Path{y})) {
      if (auto cert = as_bypass(*path)) return cert;
    }
  }

  // Remove a cycle segment Q, attach y to an end of the remainder R, and put Q
  // back in by multi-insertion; the closing arc joins the endpoints of y+R or R+y.
  for (int len = 1; len + 1 < m; ++len) {
    for (int j = 0; j < m; ++j) {
      Path q, r;
      for (int t = 0; t < len; ++t) q.push_back(c[(j + t) % m]);
      for (int t = len; t < m; ++t) r.push_back(c[(j + t) % m]);
      if (d.has_arc(y, r.front())) {
        Path p{y};
        p.insert(p.end(), r.begin(), r.end());
        if (d.has_arc(p.front(), p.back())) {
          if (auto path = multi_insert(d, p, q)) {
            if (auto cert = as_bypass(*path)) return cert;
          }
        }
      }
      if (d.has_arc(r.back(), y)) {
        Path p = r;
        p.push_back(y);
        if (d.has_arc(p.front(), p.back())) {
          if (auto path = multi_insert(d, p, q)) {
            if (auto cert = as_bypass(*path)) return cert;
          }
        }
      }
    }
  }
  return std::nullopt;
}

}  // namespace detail

// Staged bypass construction: good cycle, then insertion moves around every
// (n-1)-cycle found (up to the configured budget), then exact search. Stages
// 1 and 2 need n >= 4 and are skipped below that.
inline ConstructiveResult constructive_bypass(const Digraph& d, ConstructiveOptions options = {}) {
  const int n = d.order();
  if (n < 3) throw usage_error("Hamiltonian bypass needs order >= 3");
  if (n >= 4) {
    if (auto cert = good_cycle_scan(d, options.search)) {
      return {SearchStatus::found, std::move(cert), BypassMethod::good_cycle};
    }
    std::size_t tried = 0;
    for (VertexId y = 0; y < n && tried < options.combination_budget; ++y) {
      const auto cycles = detail::cycles_through(d, all_vertices(n) & ~bit(y), options.cycles_per_vertex,
                                                 options.search.node_budget);
      for (const Path& c : cycles) {
        if (tried++ >= options.combination_budget) break;
        if (auto cert = detail::insertion_moves(d, c, y)) {
          return {SearchStatus::found, std::move(cert), BypassMethod::insertion};
        }
      }
    }
  }
  SearchResult exact = find_ham_bypass(d, options.search);
  return {exact.status, std::move(exact.certificate), BypassMethod::fallback_exact};
}

}  // namespace hambypass
