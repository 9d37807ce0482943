#pragma once

// Digraph text format:
//   n <order>
//   <u> <v>        one arc per line, 0-based
//   # comment
// Writers emit arcs in lexicographic order and no comments.

#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "hambypass/digraph.hpp"

namespace hambypass {

namespace detail {

inline std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

}  // namespace detail

inline Digraph read_digraph(std::istream& in) {
  std::optional<int> order;
  std::vector<Arc> arcs;
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string line = detail::trim(raw);
    if (line.empty() || line.front() == '#') continue;
    std::istringstream fields(line);
    if (!order) {
      std::string tag;
      long long n = 0;
      std::string rest;
      if (!(fields >> tag >> n) || tag != "n" || (fields >> rest)) {
        throw parse_error(line_no, "expected header 'n <order>'");
      }
      if (n < 1 || n > kMaxOrder) throw parse_error(line_no, "order out of range");
      order = static_cast<int>(n);
      continue;
    }
    long long u = 0;
    long long v = 0;
    std::string rest;
    if (!(fields >> u >> v) || (fields >> rest)) throw parse_error(line_no, "expected arc '<u> <v>'");
    if (u < 0 || v < 0 || u >= *order || v >= *order) {
      throw parse_error(line_no, "arc endpoint outside [0," + std::to_string(*order - 1) + "]");
    }
    if (u == v) throw parse_error(line_no, "loop arc");
    arcs.push_back({static_cast<int>(u), static_cast<int>(v)});
  }
  if (!order) throw parse_error(line_no, "missing header 'n <order>'");
  return Digraph(*order, arcs);
}

inline Digraph parse_digraph(const std::string& text) {
  std::istringstream in(text);
  return read_digraph(in);
}

inline void write_digraph(std::ostream& out, const Digraph& d) {
  out << "n " << d.order() << '\n';
  for (const Arc& a : d.arcs()) out << a.from << ' ' << a.to << '\n';
}

inline std::string to_text(const Digraph& d) {
  std::ostringstream out;
  write_digraph(out, d);
  return out.str();
}

inline nlohmann::json to_json(const Digraph& d) {
  nlohmann::json arcs = nlohmann::json::array();
  for (const Arc& a : d.arcs()) arcs.push_back({a.from, a.to});
  return {{"n", d.order()}, {"arcs", arcs}};
}

inline Digraph digraph_from_json(const nlohmann::json& j) {
  try {
    const int n = j.at("n").get<int>();
    std::vector<Arc> arcs;
    for (const auto& a : j.at("arcs")) {
      if (!a.is_array() || a.size() != 2) throw parse_error(0, "arc must be a [u, v] pair");
      arcs.push_back({a[0].get<int>(), a[1].get<int>()});
    }
    return Digraph(n, arcs);
  } catch (const nlohmann::json::exception& e) {
    throw parse_error(0, std::string("bad structured digraph: ") + e.what());
  } catch (const construction_error& e) {
    throw parse_error(0, e.what());
  }
}

}  // namespace hambypass
