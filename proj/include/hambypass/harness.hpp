#pragma once

// Theorem verification and counterexample hunting over small digraphs.
//
// Exhaustive mode walks every labeled strong digraph of each order (arc-set
// bitmask ascending); sampled mode draws seeded random digraphs. Each instance
// passing a hypothesis has its conclusion checked by exact search, and every
// failure is kept as a serialisable violation.

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <string_view>
#include <type_traits>
#include <vector>

#include "json.hpp"

#include "hambypass/conditions.hpp"
#include "hambypass/digraph.hpp"
#include "hambypass/families.hpp"
#include "hambypass/io.hpp"
#include "hambypass/isomorphism.hpp"
#include "hambypass/search.hpp"

namespace hambypass {

inline constexpr int kExhaustiveCap = 5;

// Calls visit(d) for every strong labeled digraph of order n passing all
// filters; visit may return false to stop early. Returns the number visited.
template <class Visitor>
std::uint64_t enumerate_strong_digraphs(int n, const std::vector<ConditionId>& filter, Visitor&& visit) {
  if (n < 1) throw usage_error("order must be positive");
  if (n > kExhaustiveCap) {
    throw capability_error("exhaustive enumeration is capped at order " + std::to_string(kExhaustiveCap) +
                           "; use sampled mode");
  }
  const int pairs = n * (n - 1);
  const std::uint64_t total = std::uint64_t{1} << pairs;
  std::uint64_t visited = 0;
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    const Digraph d = Digraph::from_pair_mask(n, mask);
    if (!is_strong(d) || !holds_all(d, filter)) continue;
    ++visited;
    if constexpr (std::is_same_v<std::invoke_result_t<Visitor, const Digraph&>, bool>) {
      if (!visit(d)) break;
    } else {
      visit(d);
    }
  }
  return visited;
}

inline std::vector<Digraph> collect_strong_digraphs(int n, const std::vector<ConditionId>& filter = {}) {
  std::vector<Digraph> out;
  enumerate_strong_digraphs(n, filter, [&](const Digraph& d) { out.push_back(d); });
  return out;
}

struct SampleProfile {
  double arc_probability = 0.5;
  std::optional<double> arc_probability_max;  // if set, p ~ U[arc_probability, max] per draw
  std::vector<ConditionId> conditions;        // rejection-sample until all hold
  std::uint64_t rejection_budget = 1'000'000;  // attempts per emitted digraph
};

struct SampleBatch {
  std::vector<Digraph> digraphs;
  std::uint64_t attempts = 0;
  bool budget_exhausted = false;

  double acceptance_rate() const {
    return attempts == 0 ? 0.0 : static_cast<double>(digraphs.size()) / static_cast<double>(attempts);
  }
};

namespace detail {

inline double unit_draw(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

inline Digraph draw_digraph(std::mt19937_64& rng, int n, const SampleProfile& profile) {
  double p = profile.arc_probability;
  if (profile.arc_probability_max) p += (*profile.arc_probability_max - p) * unit_draw(rng);
  std::vector<VertexSet> rows(n, 0);
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      if (u != v && unit_draw(rng) < p) rows[u] |= bit(v);
    }
  }
  return Digraph::from_out_rows(rows);
}

}  // namespace detail

inline SampleBatch sample_digraphs(int n, std::uint64_t count, std::uint64_t seed, const SampleProfile& profile = {}) {
  if (count < 1) throw usage_error("sample count must be at least 1");
  if (n < 1 || n > kMaxOrder) throw usage_error("order out of range");
  std::mt19937_64 rng(seed);
  SampleBatch batch;
  while (batch.digraphs.size() < count) {
    bool accepted = false;
    for (std::uint64_t tries = 0; tries < profile.rejection_budget; ++tries) {
      ++batch.attempts;
      Digraph d = detail::draw_digraph(rng, n, profile);
      if (holds_all(d, profile.conditions)) {
        batch.digraphs.push_back(std::move(d));
        accepted = true;
        break;
      }
    }
    if (!accepted) {
      batch.budget_exhausted = true;
      break;
    }
  }
  return batch;
}

enum class TheoremId { thm1, thm2, thm3, thm4, thm6, thm7, thm8, thm10, thm11, thm12, thm13, thm14, thm15, thm16 };

inline constexpr TheoremId kAllTheorems[] = {TheoremId::thm1,  TheoremId::thm2,  TheoremId::thm3,  TheoremId::thm4,
                                            TheoremId::thm6,  TheoremId::thm7,  TheoremId::thm8,  TheoremId::thm10,
                                            TheoremId::thm11, TheoremId::thm12, TheoremId::thm13, TheoremId::thm14,
                                            TheoremId::thm15, TheoremId::thm16};

inline std::string to_token(TheoremId t) {
  static constexpr int numbers[] = {1, 2, 3, 4, 6, 7, 8, 10, 11, 12, 13, 14, 15, 16};
  return "thm" + std::to_string(numbers[static_cast<int>(t)]);
}

inline TheoremId parse_theorem(std::string_view token) {
  for (TheoremId t : kAllTheorems) {
    if (token == to_token(t)) return t;
  }
  throw usage_error("unknown theorem '" + std::string(token) + "'");
}

enum class Outcome { holds, fails, unknown };

struct InstanceCheck {
  bool hypothesis = false;
  Outcome conclusion = Outcome::holds;
  std::vector<Certificate> certificates;  // everything the conclusion check found
};

namespace detail {

inline Outcome outcome_of(const SearchResult& r, InstanceCheck& check) {
  if (r.found()) {
    check.certificates.push_back(*r.certificate);
    return Outcome::holds;
  }
  return r.unknown() ? Outcome::unknown : Outcome::fails;
}

inline bool is_directed_cycle(const Digraph& d) { return is_strong(d) && d.arc_count() == d.order(); }

inline bool is_balanced_bipartite(const Digraph& d, bool allow_missing_arc) {
  const int n = d.order();
  if (n % 2 != 0) return false;
  const int h = n / 2;
  if (are_isomorphic(d, generate({FamilyId::kstar_pq, 0, 0, h, h}))) return true;
  return allow_missing_arc && are_isomorphic(d, generate({FamilyId::kstar_pq_minus_arc, 0, 0, h, h}));
}

inline bool has(const Digraph& d, ConditionKind kind, int k = 0) { return holds(d, ConditionId{kind, k}); }

inline bool theorem_hypothesis(TheoremId t, const Digraph& d) {
  const int n = d.order();
  using K = ConditionKind;
  switch (t) {
    case TheoremId::thm1: return n >= 2 && has(d, K::nash_williams);
    case TheoremId::thm2: return n >= 2 && has(d, K::strong) && has(d, K::ghouila_houri);
    case TheoremId::thm3: return n >= 2 && has(d, K::woodall);
    case TheoremId::thm4: return n >= 2 && has(d, K::strong) && has(d, K::meyniel);
    case TheoremId::thm6: return n >= 3 && is_two_strong(d) && degree_profile(d).min_total >= n - 1;
    case TheoremId::thm7: return n >= 3 && has(d, K::strong) && has(d, K::meyniel_minus_one);
    case TheoremId::thm8: return n >= 4 && has(d, K::strong) && has(d, K::meyniel);
    case TheoremId::thm10: return n >= 2 && has(d, K::strong) && has(d, K::bgl_star);
    case TheoremId::thm11: return n >= 3 && has(d, K::strong) && has(d, K::min_semi, 2) && has(d, K::bgl_star);
    case TheoremId::thm12: return n >= 4 && has(d, K::thm12_hypothesis);
    case TheoremId::thm13: return n >= 3 && has(d, K::strong) && has(d, K::thm13);
    case TheoremId::thm14: return n >= 3 && has(d, K::strong) && has(d, K::thm14);
    case TheoremId::thm15: return n >= 4 && has(d, K::strong) && !is_directed_cycle(d) && has(d, K::thm13);
    case TheoremId::thm16: return n >= 4 && has(d, K::strong) && !is_directed_cycle(d) && has(d, K::thm14);
  }
  return false;
}

inline Outcome theorem_conclusion(TheoremId t, const Digraph& d, SearchOptions opts, InstanceCheck& check) {
  const int n = d.order();
  auto either = [](Outcome a, auto&& b) {
    if (a == Outcome::holds) return a;
    const Outcome other = b();
    if (other == Outcome::holds) return other;
    return (a == Outcome::unknown || other == Outcome::unknown) ? Outcome::unknown : Outcome::fails;
  };
  auto as_outcome = [](bool ok) { return ok ? Outcome::holds : Outcome::fails; };
  switch (t) {
    case TheoremId::thm1:
    case TheoremId::thm2:
    case TheoremId::thm3:
    case TheoremId::thm4:
    case TheoremId::thm10:
    case TheoremId::thm13:
    case TheoremId::thm14:
      return outcome_of(find_ham_cycle(d, opts), check);
    case TheoremId::thm6:
      return either(outcome_of(find_ham_bypass(d, opts), check),
                    [&] { return as_outcome(is_member(d, FamilyId::d0)); });
    case TheoremId::thm7:
      return either(outcome_of(find_ham_bypass(d, opts), check), [&] {
        for (FamilyId f : {FamilyId::d0, FamilyId::d1, FamilyId::t5, FamilyId::c3}) {
          if (is_member(d, f)) return Outcome::holds;
        }
        return Outcome::fails;
      });
    case TheoremId::thm8:
      return outcome_of(find_dnk(d, 3, opts), check);
    case TheoremId::thm11:
      return either(outcome_of(find_pre_hamiltonian_cycle(d, opts), check),
                    [&] { return as_outcome(is_balanced_bipartite(d, true)); });
    case TheoremId::thm12:
      return outcome_of(find_ham_bypass(d, opts), check);
    case TheoremId::thm15:
      return either(outcome_of(find_pre_hamiltonian_cycle(d, opts), check),
                    [&] { return as_outcome(is_balanced_bipartite(d, false)); });
    case TheoremId::thm16:
      return either(outcome_of(find_pre_hamiltonian_cycle(d, opts), check),
                    [&] { return outcome_of(find_cycle_of_length(d, n - 2, opts), check); });
  }
  return Outcome::unknown;
}

}  // namespace detail

inline InstanceCheck check_theorem_instance(TheoremId t, const Digraph& d, SearchOptions opts = {}) {
  InstanceCheck check;
  check.hypothesis = detail::theorem_hypothesis(t, d);
  if (check.hypothesis) check.conclusion = detail::theorem_conclusion(t, d, opts, check);
  return check;
}

// Hypothesis (conjunction of conditions) that should force a target substructure.
struct HuntSpec {
  std::vector<ConditionId> hypothesis;
  Target conclusion;
};

inline std::string label(const HuntSpec& h) {
  std::string s = "hunt:";
  for (std::size_t i = 0; i < h.hypothesis.size(); ++i) s += (i ? "," : "") + to_token(h.hypothesis[i]);
  return s + "->" + to_token(h.conclusion);
}

// Strong, min out-degree 2, min in-degree 2 and (*), expecting a bypass.
inline HuntSpec conjecture_hunt() {
  return {{{ConditionKind::strong, 0}, {ConditionKind::min_out, 2}, {ConditionKind::min_in, 2}, {ConditionKind::bgl_star, 0}},
          {TargetKind::bypass, 2}};
}

inline HuntSpec problem_hunt(ConditionKind thm13_or_14) {
  return {{{ConditionKind::strong, 0}, {thm13_or_14, 0}}, {TargetKind::bypass, 2}};
}

inline InstanceCheck check_hunt_instance(const HuntSpec& h, const Digraph& d, SearchOptions opts = {}) {
  InstanceCheck check;
  check.hypothesis = holds_all(d, h.hypothesis);
  if (check.hypothesis) check.conclusion = detail::outcome_of(find_target(d, h.conclusion, opts), check);
  return check;
}

struct OrderRange {
  int lo = 1;
  int hi = 1;

  friend bool operator==(const OrderRange&, const OrderRange&) = default;
};

inline OrderRange parse_order_range(std::string_view s) {
  auto parse = [&](std::string_view part) {
    int v = 0;
    const auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), v);
    if (part.empty() || ec != std::errc{} || ptr != part.data() + part.size() || v < 1) {
      throw usage_error("bad order range '" + std::string(s) + "'");
    }
    return v;
  };
  const auto dots = s.find("..");
  if (dots == std::string_view::npos) {
    const int n = parse(s);
    return {n, n};
  }
  OrderRange r{parse(s.substr(0, dots)), parse(s.substr(dots + 2))};
  if (r.lo > r.hi) throw usage_error("empty order range '" + std::string(s) + "'");
  return r;
}

struct RunMode {
  enum class Kind { exhaustive, sampled };
  Kind kind = Kind::exhaustive;
  std::uint64_t count = 0;  // per order
  std::uint64_t seed = 0;
  double p_min = 0.5;
  double p_max = 0.95;

  static RunMode exhaustive() { return {}; }
  static RunMode sampled(std::uint64_t count, std::uint64_t seed) { return {Kind::sampled, count, seed}; }

  friend bool operator==(const RunMode&, const RunMode&) = default;
};

struct RunOptions {
  SearchOptions search;
  std::uint64_t instance_budget = 0;  // 0 = unlimited
  bool dedupe_iso = false;
  // Observer for every certificate produced while checking conclusions.
  std::function<void(const Digraph&, const Certificate&)> on_certificate;
};

struct Verdict {
  std::string label;
  OrderRange orders;
  RunMode mode;
  std::uint64_t instances_checked = 0;
  std::uint64_t hypothesis_hits = 0;
  std::uint64_t unknown = 0;
  std::vector<Digraph> violations;
  bool complete = true;
  std::chrono::milliseconds elapsed{0};

  // Equality of everything except elapsed time.
  bool same_outcome(const Verdict& o) const {
    return label == o.label && orders == o.orders && mode == o.mode && instances_checked == o.instances_checked &&
           hypothesis_hits == o.hypothesis_hits && unknown == o.unknown && violations == o.violations &&
           complete == o.complete;
  }
};

namespace detail {

using InstanceFn = std::function<InstanceCheck(const Digraph&)>;

inline Verdict run_checks(std::string name, OrderRange orders, RunMode mode, const RunOptions& options,
                          const InstanceFn& check_one) {
  const auto started = std::chrono::steady_clock::now();
  Verdict v{std::move(name), orders, mode};
  if (mode.kind == RunMode::Kind::exhaustive && orders.hi > kExhaustiveCap) {
    throw capability_error("exhaustive mode is capped at order " + std::to_string(kExhaustiveCap) +
                           "; use sampled mode");
  }
  if (mode.kind == RunMode::Kind::sampled && mode.count == 0) throw usage_error("sampled mode needs count >= 1");

  bool stop = false;
  auto visit = [&](const Digraph& d) {
    if (options.instance_budget != 0 && v.instances_checked >= options.instance_budget) {
      v.complete = false;
      stop = true;
      return false;
    }
    ++v.instances_checked;
    InstanceCheck c = check_one(d);
    if (!c.hypothesis) return true;
    ++v.hypothesis_hits;
    if (options.on_certificate) {
      for (const Certificate& cert : c.certificates) options.on_certificate(d, cert);
    }
    if (c.conclusion == Outcome::unknown) {
      ++v.unknown;
      v.complete = false;
    } else if (c.conclusion == Outcome::fails) {
      v.violations.push_back(d);
    }
    return true;
  };

  std::mt19937_64 rng(mode.seed);
  SampleProfile profile{mode.p_min, mode.p_max};
  for (int n = orders.lo; n <= orders.hi && !stop; ++n) {
    if (mode.kind == RunMode::Kind::exhaustive) {
      enumerate_strong_digraphs(n, {}, visit);
    } else {
      for (std::uint64_t i = 0; i < mode.count && !stop; ++i) visit(draw_digraph(rng, n, profile));
    }
  }

  if (options.dedupe_iso) {
    std::vector<Digraph> kept;
    for (const Digraph& d : v.violations) {
      const bool dup = d.order() <= 7 && std::any_of(kept.begin(), kept.end(), [&](const Digraph& k) {
                         return are_isomorphic(k, d);
                       });
      if (!dup) kept.push_back(d);
    }
    v.violations = std::move(kept);
  }
  v.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - started);
  return v;
}

}  // namespace detail

inline Verdict run_theorem_suite(TheoremId t, OrderRange orders, RunMode mode, const RunOptions& options = {}) {
  return detail::run_checks(to_token(t), orders, mode, options,
                            [&](const Digraph& d) { return check_theorem_instance(t, d, options.search); });
}

inline Verdict hunt_counterexample(const HuntSpec& h, OrderRange orders, RunMode mode, const RunOptions& options = {}) {
  return detail::run_checks(label(h), orders, mode, options,
                            [&](const Digraph& d) { return check_hunt_instance(h, d, options.search); });
}

// A stored violation still passes the hypothesis and still fails the conclusion.
inline bool replays_as_violation(TheoremId t, const Digraph& d) {
  const InstanceCheck c = check_theorem_instance(t, d);
  return c.hypothesis && c.conclusion == Outcome::fails;
}

inline bool replays_as_violation(const HuntSpec& h, const Digraph& d) {
  const InstanceCheck c = check_hunt_instance(h, d);
  return c.hypothesis && c.conclusion == Outcome::fails;
}

inline std::string format_mode(const RunMode& m) {
  if (m.kind == RunMode::Kind::exhaustive) return "exhaustive";
  return "sample count=" + std::to_string(m.count) + " seed=" + std::to_string(m.seed);
}

inline std::string format_verdict(const Verdict& v) {
  std::ostringstream out;
  out << "label: " << v.label << '\n'
      << "orders: " << v.orders.lo << ".." << v.orders.hi << '\n'
      << "mode: " << format_mode(v.mode) << '\n'
      << "instances: " << v.instances_checked << '\n'
      << "hypothesis_hits: " << v.hypothesis_hits << '\n'
      << "unknown: " << v.unknown << '\n'
      << "complete: " << (v.complete ? "true" : "false") << '\n'
      << "violations: " << v.violations.size() << '\n'
      << "elapsed_ms: " << v.elapsed.count() << '\n';
  for (std::size_t i = 0; i < v.violations.size(); ++i) {
    out << "# violation " << i + 1 << '\n';
    write_digraph(out, v.violations[i]);
  }
  return out.str();
}

inline nlohmann::json verdict_to_json(const Verdict& v) {
  nlohmann::json violations = nlohmann::json::array();
  for (const Digraph& d : v.violations) violations.push_back(to_json(d));
  nlohmann::json mode = {{"kind", v.mode.kind == RunMode::Kind::exhaustive ? "exhaustive" : "sample"}};
  if (v.mode.kind == RunMode::Kind::sampled) {
    mode["count"] = v.mode.count;
    mode["seed"] = v.mode.seed;
  }
  return {{"label", v.label},
          {"orders", {{"lo", v.orders.lo}, {"hi", v.orders.hi}}},
          {"mode", mode},
          {"instances", v.instances_checked},
          {"hypothesis_hits", v.hypothesis_hits},
          {"unknown", v.unknown},
          {"complete", v.complete},
          {"violations", violations},
          {"elapsed_ms", v.elapsed.count()}};
}

}  // namespace hambypass
