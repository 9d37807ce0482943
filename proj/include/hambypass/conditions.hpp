#pragma once

// Degree hypotheses of the classical Hamiltonicity theorems as checkable
// predicates. A failing report carries the lexicographically first witness
// (a vertex or a vertex pair) together with both sides of the violated
// inequality, so it can be re-checked without trusting the checker.

#include <algorithm>
#include <charconv>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "hambypass/digraph.hpp"

namespace hambypass {

enum class ConditionKind {
  nash_williams,      // d+(x) >= n/2 and d-(x) >= n/2 for all x
  ghouila_houri,      // d(x) >= n for all x
  woodall,            // d+(x) + d-(y) >= n whenever x->y is absent
  meyniel,            // d(x) + d(y) >= 2n-1 on non-adjacent pairs
  meyniel_minus_one,  // d(x) + d(y) >= 2n-2 on non-adjacent pairs
  thm5,               // min degree >= n-1, min semi-degree >= n/2 - 1
  bgl_star,           // condition (*) on non-adjacent pairs with a common in-neighbour
  thm12_hypothesis,   // strong, min out-degree 2, min in-degree 3, (*)
  thm13,
  thm14,
  min_semi,
  min_out,
  min_in,
  oriented,
  strong,
};

struct ConditionId {
  ConditionKind kind = ConditionKind::strong;
  int k = 0;  // threshold for min_semi / min_out / min_in

  friend bool operator==(const ConditionId&, const ConditionId&) = default;
};

inline std::string to_token(ConditionId c) {
  switch (c.kind) {
    case ConditionKind::nash_williams: return "nash-williams";
    case ConditionKind::ghouila_houri: return "ghouila-houri";
    case ConditionKind::woodall: return "woodall";
    case ConditionKind::meyniel: return "meyniel";
    case ConditionKind::meyniel_minus_one: return "meyniel-minus-one";
    case ConditionKind::thm5: return "thm5";
    case ConditionKind::bgl_star: return "bgl-star";
    case ConditionKind::thm12_hypothesis: return "thm12-hypothesis";
    case ConditionKind::thm13: return "thm13";
    case ConditionKind::thm14: return "thm14";
    case ConditionKind::min_semi: return "min-semi:" + std::to_string(c.k);
    case ConditionKind::min_out: return "min-out:" + std::to_string(c.k);
    case ConditionKind::min_in: return "min-in:" + std::to_string(c.k);
    case ConditionKind::oriented: return "oriented";
    case ConditionKind::strong: return "strong";
  }
  return "?";
}

inline ConditionId parse_condition(std::string_view token) {
  static constexpr std::pair<std::string_view, ConditionKind> plain[] = {
      {"nash-williams", ConditionKind::nash_williams},
      {"ghouila-houri", ConditionKind::ghouila_houri},
      {"woodall", ConditionKind::woodall},
      {"meyniel", ConditionKind::meyniel},
      {"meyniel-minus-one", ConditionKind::meyniel_minus_one},
      {"thm5", ConditionKind::thm5},
      {"bgl-star", ConditionKind::bgl_star},
      {"thm12-hypothesis", ConditionKind::thm12_hypothesis},
      {"thm13", ConditionKind::thm13},
      {"thm14", ConditionKind::thm14},
      {"oriented", ConditionKind::oriented},
      {"strong", ConditionKind::strong},
  };
  for (const auto& [name, kind] : plain) {
    if (token == name) return {kind, 0};
  }
  static constexpr std::pair<std::string_view, ConditionKind> parametric[] = {
      {"min-semi:", ConditionKind::min_semi},
      {"min-out:", ConditionKind::min_out},
      {"min-in:", ConditionKind::min_in},
  };
  for (const auto& [prefix, kind] : parametric) {
    if (token.starts_with(prefix)) {
      const std::string_view digits = token.substr(prefix.size());
      int k = 0;
      const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), k);
      if (ec != std::errc{} || ptr != digits.data() + digits.size() || digits.empty() || k < 0) {
        throw usage_error("bad threshold in condition '" + std::string(token) + "'");
      }
      return {kind, k};
    }
  }
  throw usage_error("unknown condition '" + std::string(token) + "'");
}

// Comma-separated list of condition tokens.
inline std::vector<ConditionId> parse_condition_list(std::string_view tokens) {
  std::vector<ConditionId> out;
  while (!tokens.empty()) {
    const auto comma = tokens.find(',');
    out.push_back(parse_condition(tokens.substr(0, comma)));
    if (comma == std::string_view::npos) break;
    tokens.remove_prefix(comma + 1);
  }
  return out;
}

enum class Inequality {
  out_half,           // 2 d+(x) >= n
  in_half,            // 2 d-(x) >= n
  degree_n,           // d(x) >= n
  degree_n_minus_1,   // d(x) >= n-1
  semi_half_minus_1,  // 2 min(d+(x), d-(x)) >= n-2
  woodall_sum,        // d+(x) + d-(y) >= n
  degree_sum,         // d(x) + d(y) >= 2n-1
  degree_sum_minus_1, // d(x) + d(y) >= 2n-2
  min_degree_pair,    // min(d(x), d(y)) >= n-1
  cross_sum,          // min(d+(x)+d-(y), d-(x)+d+(y)) >= n
  cross_sum_minus_1,  // min(d+(x)+d-(y), d-(x)+d+(y)) >= n-1
  min_out_k,          // d+(x) >= k
  min_in_k,           // d-(x) >= k
  min_semi_k,         // min(d+(x), d-(x)) >= k
  single_arc,         // a(x,y) <= 1
  reachable,          // y reachable from x
};

inline std::string_view describe(Inequality q) {
  switch (q) {
    case Inequality::out_half: return "2d+(x)>=n";
    case Inequality::in_half: return "2d-(x)>=n";
    case Inequality::degree_n: return "d(x)>=n";
    case Inequality::degree_n_minus_1: return "d(x)>=n-1";
    case Inequality::semi_half_minus_1: return "2min(d+(x),d-(x))>=n-2";
    case Inequality::woodall_sum: return "d+(x)+d-(y)>=n";
    case Inequality::degree_sum: return "d(x)+d(y)>=2n-1";
    case Inequality::degree_sum_minus_1: return "d(x)+d(y)>=2n-2";
    case Inequality::min_degree_pair: return "min(d(x),d(y))>=n-1";
    case Inequality::cross_sum: return "min(d+(x)+d-(y),d-(x)+d+(y))>=n";
    case Inequality::cross_sum_minus_1: return "min(d+(x)+d-(y),d-(x)+d+(y))>=n-1";
    case Inequality::min_out_k: return "d+(x)>=k";
    case Inequality::min_in_k: return "d-(x)>=k";
    case Inequality::min_semi_k: return "min(d+(x),d-(x))>=k";
    case Inequality::single_arc: return "a(x,y)<=1";
    case Inequality::reachable: return "reach(x,y)>=1";
  }
  return "?";
}

struct Witness {
  Inequality inequality = Inequality::reachable;
  VertexId x = 0;
  std::optional<VertexId> y;
  long long lhs = 0;
  long long rhs = 0;
  int k = 0;

  friend bool operator==(const Witness&, const Witness&) = default;
};

struct ConditionReport {
  ConditionId condition;
  bool holds = true;
  std::optional<Witness> witness;
};

// Both sides of `q` at (x, y). Every inequality reads lhs >= rhs except
// single_arc, which reads lhs <= rhs.
inline std::pair<long long, long long> evaluate(const Digraph& d, Inequality q, VertexId x, VertexId y, int k) {
  const long long n = d.order();
  const long long op = d.out_degree(x), im = d.in_degree(x);
  auto cross = [&] {
    return std::min<long long>(d.out_degree(x) + d.in_degree(y), d.in_degree(x) + d.out_degree(y));
  };
  switch (q) {
    case Inequality::out_half: return {2 * op, n};
    case Inequality::in_half: return {2 * im, n};
    case Inequality::degree_n: return {op + im, n};
    case Inequality::degree_n_minus_1: return {op + im, n - 1};
    case Inequality::semi_half_minus_1: return {2 * std::min(op, im), n - 2};
    case Inequality::woodall_sum: return {op + d.in_degree(y), n};
    case Inequality::degree_sum: return {d.degree(x) + d.degree(y), 2 * n - 1};
    case Inequality::degree_sum_minus_1: return {d.degree(x) + d.degree(y), 2 * n - 2};
    case Inequality::min_degree_pair: return {std::min(d.degree(x), d.degree(y)), n - 1};
    case Inequality::cross_sum: return {cross(), n};
    case Inequality::cross_sum_minus_1: return {cross(), n - 1};
    case Inequality::min_out_k: return {op, k};
    case Inequality::min_in_k: return {im, k};
    case Inequality::min_semi_k: return {std::min(op, im), k};
    case Inequality::single_arc: return {d.arcs_between(x, y), 1};
    case Inequality::reachable:
      return {contains(reachable_from(d, x, all_vertices(d.order())), y) ? 1 : 0, 1};
  }
  return {0, 0};
}

inline bool satisfied(Inequality q, long long lhs, long long rhs) {
  return q == Inequality::single_arc ? lhs <= rhs : lhs >= rhs;
}

// True iff the witness's inequality still fails on `d`.
inline bool witness_fails(const Digraph& d, const Witness& w) {
  const auto [lhs, rhs] = evaluate(d, w.inequality, w.x, w.y.value_or(w.x), w.k);
  return !satisfied(w.inequality, lhs, rhs);
}

namespace detail {

class ConditionChecker {
 public:
  explicit ConditionChecker(const Digraph& d) : d_(d), n_(d.order()) {}

  std::optional<Witness> run(ConditionId c) {
    switch (c.kind) {
      case ConditionKind::nash_williams:
        return per_vertex({Inequality::out_half, Inequality::in_half});
      case ConditionKind::ghouila_houri:
        return per_vertex({Inequality::degree_n});
      case ConditionKind::thm5:
        return per_vertex({Inequality::degree_n_minus_1, Inequality::semi_half_minus_1});
      case ConditionKind::min_out:
        return per_vertex({Inequality::min_out_k}, c.k);
      case ConditionKind::min_in:
        return per_vertex({Inequality::min_in_k}, c.k);
      case ConditionKind::min_semi:
        return per_vertex({Inequality::min_semi_k}, c.k);
      case ConditionKind::woodall:
        return woodall();
      case ConditionKind::meyniel:
        return per_pair(PairScope::non_adjacent, {Inequality::degree_sum});
      case ConditionKind::meyniel_minus_one:
        return per_pair(PairScope::non_adjacent, {Inequality::degree_sum_minus_1});
      case ConditionKind::bgl_star:
        return per_pair(PairScope::common_in, {Inequality::min_degree_pair, Inequality::degree_sum});
      case ConditionKind::thm13:
        return per_pair(PairScope::common_either, {Inequality::cross_sum});
      case ConditionKind::thm14:
        return per_pair(PairScope::common_either, {Inequality::degree_sum, Inequality::cross_sum_minus_1});
      case ConditionKind::oriented:
        return oriented();
      case ConditionKind::strong:
        return strong();
      case ConditionKind::thm12_hypothesis:
        for (ConditionId part : {ConditionId{ConditionKind::strong, 0}, ConditionId{ConditionKind::min_out, 2},
                                 ConditionId{ConditionKind::min_in, 3}, ConditionId{ConditionKind::bgl_star, 0}}) {
          if (auto w = run(part)) return w;
        }
        return std::nullopt;
    }
    throw usage_error("unknown condition id");
  }

 private:
  enum class PairScope { non_adjacent, common_in, common_either };

  std::optional<Witness> check(Inequality q, VertexId x, std::optional<VertexId> y, int k = 0) const {
    const auto [lhs, rhs] = evaluate(d_, q, x, y.value_or(x), k);
    if (satisfied(q, lhs, rhs)) return std::nullopt;
    return Witness{q, x, y, lhs, rhs, k};
  }

  std::optional<Witness> per_vertex(std::initializer_list<Inequality> qs, int k = 0) const {
    for (VertexId x = 0; x < n_; ++x) {
      for (Inequality q : qs) {
        if (auto w = check(q, x, std::nullopt, k)) return w;
      }
    }
    return std::nullopt;
  }

  std::optional<Witness> per_pair(PairScope scope, std::initializer_list<Inequality> qs) const {
    for (VertexId x = 0; x < n_; ++x) {
      for (VertexId y = x + 1; y < n_; ++y) {
        if (d_.adjacent(x, y)) continue;
        const bool in_common = (d_.in_set(x) & d_.in_set(y)) != 0;
        const bool out_common = (d_.out_set(x) & d_.out_set(y)) != 0;
        if (scope == PairScope::common_in && !in_common) continue;
        if (scope == PairScope::common_either && !in_common && !out_common) continue;
        for (Inequality q : qs) {
          if (auto w = check(q, x, y)) return w;
        }
      }
    }
    return std::nullopt;
  }

  std::optional<Witness> woodall() const {
    for (VertexId x = 0; x < n_; ++x) {
      for (VertexId y = 0; y < n_; ++y) {
        if (x == y || d_.has_arc(x, y)) continue;
        if (auto w = check(Inequality::woodall_sum, x, y)) return w;
      }
    }
    return std::nullopt;
  }

  std::optional<Witness> oriented() const {
    for (VertexId x = 0; x < n_; ++x) {
      for (VertexId y = x + 1; y < n_; ++y) {
        if (auto w = check(Inequality::single_arc, x, y)) return w;
      }
    }
    return std::nullopt;
  }

  std::optional<Witness> strong() const {
    const VertexSet all = all_vertices(n_);
    for (VertexId x = 0; x < n_; ++x) {
      const VertexSet reach = reachable_from(d_, x, all);
      if (reach == all) continue;
      const VertexId y = std::countr_zero(all & ~reach);
      return Witness{Inequality::reachable, x, y, 0, 1, 0};
    }
    return std::nullopt;
  }

  const Digraph& d_;
  int n_;
};

}  // namespace detail

inline ConditionReport check_condition(const Digraph& d, ConditionId c) {
  ConditionReport report{c, true, detail::ConditionChecker(d).run(c)};
  report.holds = !report.witness.has_value();
  return report;
}

inline bool holds(const Digraph& d, ConditionId c) { return check_condition(d, c).holds; }

inline bool holds_all(const Digraph& d, const std::vector<ConditionId>& cs) {
  return std::all_of(cs.begin(), cs.end(), [&](ConditionId c) { return holds(d, c); });
}

inline std::string format_report(const ConditionReport& r) {
  std::ostringstream out;
  out << "condition=" << to_token(r.condition) << " holds=" << (r.holds ? "true" : "false");
  if (r.witness) {
    const Witness& w = *r.witness;
    out << " witness=" << w.x;
    if (w.y) out << ',' << *w.y;
    out << " inequality=" << describe(w.inequality);
    if (w.inequality == Inequality::min_out_k || w.inequality == Inequality::min_in_k ||
        w.inequality == Inequality::min_semi_k) {
      out << " k=" << w.k;
    }
    out << " lhs=" << w.lhs << " rhs=" << w.rhs;
  }
  return out.str();
}

}  // namespace hambypass
