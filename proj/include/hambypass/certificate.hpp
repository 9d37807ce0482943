#pragma once

// Certificates for found substructures, with a checker that only looks at
// the host digraph and the certificate itself.
//
// Text form: kind=<bypass|cycle:k|hampath|dnk:k> order=<v0,v1,...> [offset=<i>]
//
//   cycle:k  arcs v_i -> v_{i+1 mod k}
//   hampath  arcs v_i -> v_{i+1}, i < n-1, all n vertices listed
//   bypass   hampath arcs plus v_0 -> v_{n-1}  (the bypass D(n;2) = [x_1 x_n; x_1 ... x_n])
//   dnk:k    cyclic positions j = 0..n-1 join v_j and v_{j+1 mod n}; positions
//            offset .. offset+k-2 (mod n) are reversed (v_{j+1} -> v_j), the rest
//            are forward.

#include <charconv>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "hambypass/digraph.hpp"

namespace hambypass {

enum class CertificateKind { cycle, ham_path, bypass, dnk };

struct Certificate {
  CertificateKind kind = CertificateKind::cycle;
  int k = 0;  // cycle length or D(n,k) parameter
  std::vector<VertexId> order;
  int offset = 0;  // dnk only

  friend bool operator==(const Certificate&, const Certificate&) = default;
};

inline bool verify_certificate(const Digraph& d, const Certificate& c) {
  const int n = d.order();
  const int len = static_cast<int>(c.order.size());
  VertexSet seen = 0;
  for (VertexId v : c.order) {
    if (v < 0 || v >= n || contains(seen, v)) return false;
    seen |= bit(v);
  }
  auto arc = [&](int i, int j) { return d.has_arc(c.order[i], c.order[j]); };
  switch (c.kind) {
    case CertificateKind::cycle:
      if (c.k < 2 || c.k > n || len != c.k) return false;
      for (int i = 0; i < len; ++i) {
        if (!arc(i, (i + 1) % len)) return false;
      }
      return true;
    case CertificateKind::ham_path:
      if (len != n) return false;
      for (int i = 0; i + 1 < len; ++i) {
        if (!arc(i, i + 1)) return false;
      }
      return true;
    case CertificateKind::bypass:
      if (n < 3 || len != n) return false;
      for (int i = 0; i + 1 < len; ++i) {
        if (!arc(i, i + 1)) return false;
      }
      return arc(0, len - 1);
    case CertificateKind::dnk:
      if (n < 3 || len != n || c.k < 2 || c.k > n || c.offset < 0 || c.offset >= n) return false;
      for (int j = 0; j < n; ++j) {
        const int next = (j + 1) % n;
        const bool reversed = (j - c.offset + n) % n < c.k - 1;
        if (reversed ? !arc(next, j) : !arc(j, next)) return false;
      }
      return true;
  }
  return false;
}

inline std::string to_string(const Certificate& c) {
  std::ostringstream out;
  out << "kind=";
  switch (c.kind) {
    case CertificateKind::cycle: out << "cycle:" << c.k; break;
    case CertificateKind::ham_path: out << "hampath"; break;
    case CertificateKind::bypass: out << "bypass"; break;
    case CertificateKind::dnk: out << "dnk:" << c.k; break;
  }
  out << " order=";
  for (std::size_t i = 0; i < c.order.size(); ++i) out << (i ? "," : "") << c.order[i];
  if (c.kind == CertificateKind::dnk) out << " offset=" << c.offset;
  return out.str();
}

namespace detail {

inline int parse_int(std::string_view s, const char* what) {
  int v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) {
    throw parse_error(0, std::string("bad ") + what + " '" + std::string(s) + "'");
  }
  return v;
}

}  // namespace detail

inline Certificate parse_certificate(std::string_view text) {
  Certificate c;
  bool have_kind = false, have_order = false, have_offset = false;
  std::istringstream fields{std::string(text)};
  std::string field;
  while (fields >> field) {
    const auto eq = field.find('=');
    if (eq == std::string::npos) throw parse_error(0, "certificate field without '=': " + field);
    const std::string_view key = std::string_view(field).substr(0, eq);
    const std::string_view value = std::string_view(field).substr(eq + 1);
    if (key == "kind") {
      have_kind = true;
      if (value == "bypass") {
        c.kind = CertificateKind::bypass;
      } else if (value == "hampath") {
        c.kind = CertificateKind::ham_path;
      } else if (value.starts_with("cycle:")) {
        c.kind = CertificateKind::cycle;
        c.k = detail::parse_int(value.substr(6), "cycle length");
      } else if (value.starts_with("dnk:")) {
        c.kind = CertificateKind::dnk;
        c.k = detail::parse_int(value.substr(4), "dnk parameter");
      } else {
        throw parse_error(0, "unknown certificate kind '" + std::string(value) + "'");
      }
    } else if (key == "order") {
      have_order = true;
      std::string_view rest = value;
      while (!rest.empty()) {
        const auto comma = rest.find(',');
        c.order.push_back(detail::parse_int(rest.substr(0, comma), "vertex"));
        if (comma == std::string_view::npos) break;
        rest.remove_prefix(comma + 1);
      }
    } else if (key == "offset") {
      have_offset = true;
      c.offset = detail::parse_int(value, "offset");
    } else {
      throw parse_error(0, "unknown certificate field '" + std::string(key) + "'");
    }
  }
  if (!have_kind || !have_order) throw parse_error(0, "certificate needs kind= and order=");
  if (have_offset != (c.kind == CertificateKind::dnk)) {
    throw parse_error(0, "offset= is required for dnk certificates and forbidden otherwise");
  }
  return c;
}

}  // namespace hambypass
