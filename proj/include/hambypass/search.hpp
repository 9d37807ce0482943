#pragma once

// Exact searches for cycles, Hamiltonian paths, Hamiltonian bypasses and
// D(n,k) subdigraphs.
//
// Every search is one depth-first walk that lays down distinct vertices
// x_0, x_1, ... taking successors in ascending order. Each step follows either
// an out-arc or an in-arc of the previous vertex (fixed per position), and the
// last vertex must lie in a target set that encodes the closing arc. Failed
// (visited-set, last-vertex) states are memoised, which keeps the walk
// exponential only in n rather than factorial while still returning the
// first certificate in lexicographic DFS order.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "hambypass/certificate.hpp"
#include "hambypass/digraph.hpp"

namespace hambypass {

struct SearchOptions {
  std::uint64_t node_budget = 0;  // 0 = unlimited
};

enum class SearchStatus { found, absent, unknown };

struct SearchResult {
  SearchStatus status = SearchStatus::absent;
  std::optional<Certificate> certificate;
  std::uint64_t expansions = 0;

  bool found() const { return status == SearchStatus::found; }
  bool absent() const { return status == SearchStatus::absent; }
  bool unknown() const { return status == SearchStatus::unknown; }
};

namespace detail {

class SequenceSearch {
 public:
  struct Shape {
    int length = 0;
    VertexSet allowed = 0;
    VertexSet last_targets = 0;
    VertexSet reserved_last = 0;     // may only appear as the final vertex
    int first_reversed_step = 1 << 30;  // steps >= this follow in-arcs
  };

  SequenceSearch(const Digraph& d, SearchOptions options) : d_(d), options_(options) {}

  // Returns the sequence, or nullopt (check aborted() to tell absent from unknown).
  std::optional<std::vector<VertexId>> run(VertexId start, const Shape& shape) {
    shape_ = shape;
    seq_.assign(1, start);
    reset_memo();
    if (!contains(shape.allowed, start)) return std::nullopt;
    if (shape.length == 1) {
      if (contains(shape.last_targets, start)) return seq_;
      return std::nullopt;
    }
    if (dfs(start, bit(start))) return seq_;
    return std::nullopt;
  }

  bool aborted() const { return aborted_; }
  std::uint64_t expansions() const { return expansions_; }

 private:
  bool dfs(VertexId last, VertexSet mask) {
    const int placed = static_cast<int>(seq_.size());
    if (placed == shape_.length) return contains(shape_.last_targets, last);
    if (is_dead(mask, last)) return false;
    if (options_.node_budget != 0 && expansions_ >= options_.node_budget) {
      aborted_ = true;
      return false;
    }
    ++expansions_;
    const int step = placed - 1;
    VertexSet cand = (step >= shape_.first_reversed_step ? d_.in_set(last) : d_.out_set(last)) & shape_.allowed & ~mask;
    cand &= placed + 1 < shape_.length ? ~shape_.reserved_last : shape_.last_targets;
    while (cand != 0) {
      const VertexId v = std::countr_zero(cand);
      cand &= cand - 1;
      seq_.push_back(v);
      if (dfs(v, mask | bit(v))) return true;
      seq_.pop_back();
      if (aborted_) return false;
    }
    mark_dead(mask, last);
    return false;
  }

  void reset_memo() {
    const int n = d_.order();
    dense_.clear();
    sparse_.clear();
    if (n <= kDenseLimit) dense_.assign(((std::size_t{1} << n) * n + 63) / 64, 0);
  }

  std::uint64_t key(VertexSet mask, VertexId last) const {
    return mask * static_cast<std::uint64_t>(d_.order()) + static_cast<std::uint64_t>(last);
  }

  bool is_dead(VertexSet mask, VertexId last) const {
    if (d_.order() <= kDenseLimit) {
      const auto k = key(mask, last);
      return (dense_[k / 64] >> (k % 64)) & 1U;
    }
    return sparse_.count(mask * 64 + static_cast<std::uint64_t>(last)) != 0;
  }

  void mark_dead(VertexSet mask, VertexId last) {
    if (d_.order() <= kDenseLimit) {
      const auto k = key(mask, last);
      dense_[k / 64] |= std::uint64_t{1} << (k % 64);
    } else if (d_.order() < kMaxOrder - 6) {
      sparse_.insert(mask * 64 + static_cast<std::uint64_t>(last));
    }
  }

  static constexpr int kDenseLimit = 16;

  const Digraph& d_;
  SearchOptions options_;
  Shape shape_;
  std::vector<VertexId> seq_;
  std::vector<std::uint64_t> dense_;
  std::unordered_set<std::uint64_t> sparse_;
  bool aborted_ = false;
  std::uint64_t expansions_ = 0;
};

inline SearchResult finish(const detail::SequenceSearch& s, std::optional<Certificate> cert) {
  SearchResult r;
  r.expansions = s.expansions();
  if (cert) {
    r.status = SearchStatus::found;
    r.certificate = std::move(cert);
  } else {
    r.status = s.aborted() ? SearchStatus::unknown : SearchStatus::absent;
  }
  return r;
}

}  // namespace detail

// Directed cycle on exactly k distinct vertices; certificate starts at its
// smallest vertex.
inline SearchResult find_cycle_of_length(const Digraph& d, int k, SearchOptions options = {}) {
  const int n = d.order();
  if (k < 2 || k > n) {
    throw usage_error("cycle length must lie in [2," + std::to_string(n) + "], got " + std::to_string(k));
  }
  detail::SequenceSearch search(d, options);
  for (VertexId s = 0; s + k <= n; ++s) {
    const VertexSet allowed = all_vertices(n) & ~(bit(s) - 1);
    detail::SequenceSearch::Shape shape{k, allowed, d.in_set(s) & allowed, 0};
    if (auto seq = search.run(s, shape)) {
      return detail::finish(search, Certificate{CertificateKind::cycle, k, *seq, 0});
    }
    if (search.aborted()) break;
  }
  return detail::finish(search, std::nullopt);
}

inline SearchResult find_ham_cycle(const Digraph& d, SearchOptions options = {}) {
  if (d.order() < 2) throw usage_error("Hamiltonian cycle needs order >= 2");
  return find_cycle_of_length(d, d.order(), options);
}

// Cycle of length n-1.
inline SearchResult find_pre_hamiltonian_cycle(const Digraph& d, SearchOptions options = {}) {
  if (d.order() < 3) throw usage_error("pre-Hamiltonian cycle needs order >= 3");
  return find_cycle_of_length(d, d.order() - 1, options);
}

inline SearchResult find_ham_path(const Digraph& d, std::optional<VertexId> from = std::nullopt,
                                  std::optional<VertexId> to = std::nullopt, SearchOptions options = {}) {
  const int n = d.order();
  for (auto v : {from, to}) {
    if (v && (*v < 0 || *v >= n)) throw usage_error("path endpoint out of range");
  }
  if (from && to && *from == *to && n > 1) throw usage_error("path endpoints must differ");
  detail::SequenceSearch search(d, options);
  const VertexSet all = all_vertices(n);
  const VertexSet targets = to ? bit(*to) : all;
  const VertexSet reserved = (to && n > 1) ? bit(*to) : 0;
  for (VertexId s = 0; s < n; ++s) {
    if (from && s != *from) continue;
    if (contains(reserved, s)) continue;
    detail::SequenceSearch::Shape shape{n, all, targets, reserved};
    if (auto seq = search.run(s, shape)) {
      return detail::finish(search, Certificate{CertificateKind::ham_path, 0, *seq, 0});
    }
    if (search.aborted()) break;
  }
  return detail::finish(search, std::nullopt);
}

// Hamiltonian path x_1 ... x_n together with the arc x_1 -> x_n.
inline SearchResult find_ham_bypass(const Digraph& d, SearchOptions options = {}) {
  const int n = d.order();
  if (n < 3) throw usage_error("Hamiltonian bypass needs order >= 3");
  detail::SequenceSearch search(d, options);
  for (VertexId s = 0; s < n; ++s) {
    detail::SequenceSearch::Shape shape{n, all_vertices(n), d.out_set(s), 0};
    if (auto seq = search.run(s, shape)) {
      return detail::finish(search, Certificate{CertificateKind::bypass, 2, *seq, 0});
    }
    if (search.aborted()) break;
  }
  return detail::finish(search, std::nullopt);
}

// D(n,k): a Hamiltonian cycle with k-1 consecutive arcs reversed. The
// certificate is normalised so the reversed block occupies the last k-1 cyclic
// positions (offset n-k+1); x_0 is then the common source of both directed
// paths and x_{n-k+1} their common sink.
inline SearchResult find_dnk(const Digraph& d, int k, SearchOptions options = {}) {
  const int n = d.order();
  if (n < 3) throw usage_error("D(n,k) needs order >= 3");
  if (k < 2 || k > n) {
    throw usage_error("D(n,k) parameter must lie in [2," + std::to_string(n) + "], got " + std::to_string(k));
  }
  const int offset = n - k + 1;
  detail::SequenceSearch search(d, options);
  for (VertexId s = 0; s < n; ++s) {
    detail::SequenceSearch::Shape shape{n, all_vertices(n), d.out_set(s), 0, offset};
    if (auto seq = search.run(s, shape)) {
      return detail::finish(search, Certificate{CertificateKind::dnk, k, *seq, offset});
    }
    if (search.aborted()) break;
  }
  return detail::finish(search, std::nullopt);
}

// Substructure selector shared by the CLI and counterexample hunts.
enum class TargetKind { ham_cycle, pre_hamiltonian, ham_path, bypass, cycle, dnk };

struct Target {
  TargetKind kind = TargetKind::bypass;
  int k = 0;

  friend bool operator==(const Target&, const Target&) = default;
};

inline std::string to_token(Target t) {
  switch (t.kind) {
    case TargetKind::ham_cycle: return "hamcycle";
    case TargetKind::pre_hamiltonian: return "prehamiltonian";
    case TargetKind::ham_path: return "hampath";
    case TargetKind::bypass: return "bypass";
    case TargetKind::cycle: return "cycle:" + std::to_string(t.k);
    case TargetKind::dnk: return "dnk:" + std::to_string(t.k);
  }
  return "?";
}

inline Target parse_target(std::string_view token) {
  if (token == "hamcycle") return {TargetKind::ham_cycle, 0};
  if (token == "prehamiltonian") return {TargetKind::pre_hamiltonian, 0};
  if (token == "hampath") return {TargetKind::ham_path, 0};
  if (token == "bypass") return {TargetKind::bypass, 2};
  for (auto [prefix, kind] : {std::pair{std::string_view("cycle:"), TargetKind::cycle},
                              std::pair{std::string_view("dnk:"), TargetKind::dnk}}) {
    if (token.starts_with(prefix)) {
      try {
        return {kind, detail::parse_int(token.substr(prefix.size()), "target parameter")};
      } catch (const parse_error&) {
        throw usage_error("bad target '" + std::string(token) + "'");
      }
    }
  }
  throw usage_error("unknown target '" + std::string(token) + "'");
}

inline SearchResult find_target(const Digraph& d, Target t, SearchOptions options = {}) {
  switch (t.kind) {
    case TargetKind::ham_cycle: return find_ham_cycle(d, options);
    case TargetKind::pre_hamiltonian: return find_pre_hamiltonian_cycle(d, options);
    case TargetKind::ham_path: return find_ham_path(d, std::nullopt, std::nullopt, options);
    case TargetKind::bypass: return find_ham_bypass(d, options);
    case TargetKind::cycle: return find_cycle_of_length(d, t.k, options);
    case TargetKind::dnk: return find_dnk(d, t.k, options);
  }
  throw usage_error("unknown target");
}

}  // namespace hambypass
