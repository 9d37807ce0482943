#pragma once

// Command-line front end. Exit codes:
//   0  found / holds / no violations     1  absent / fails / violations
//   2  usage, capability or input error  3  budget exhausted, result unknown

#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "hambypass/certificate.hpp"
#include "hambypass/conditions.hpp"
#include "hambypass/families.hpp"
#include "hambypass/harness.hpp"
#include "hambypass/insertion.hpp"
#include "hambypass/io.hpp"
#include "hambypass/search.hpp"

namespace hambypass::cli {

enum ExitCode : int { kOk = 0, kNegative = 1, kUsage = 2, kUnknown = 3 };

namespace detail {

struct Streams {
  std::istream& in;
  std::ostream& out;
  std::ostream& err;
};

inline std::string read_all(const std::string& path, std::istream& stdin_stream) {
  if (path == "-") {
    std::ostringstream buf;
    buf << stdin_stream.rdbuf();
    return buf.str();
  }
  std::ifstream file(path);
  if (!file) throw usage_error("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << file.rdbuf();
  return buf.str();
}

// Text or structured (JSON object) digraph.
inline Digraph load_digraph(const std::string& path, std::istream& stdin_stream) {
  const std::string text = read_all(path, stdin_stream);
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
      throw parse_error(0, std::string("bad structured digraph: ") + e.what());
    }
    return digraph_from_json(j);
  }
  return parse_digraph(text);
}

inline std::vector<Arc> parse_arc_list(const std::string& s) {
  std::vector<Arc> arcs;
  std::string item;
  std::istringstream items(s);
  while (std::getline(items, item, ',')) {
    const auto dash = item.find('-');
    if (dash == std::string::npos) throw usage_error("arc '" + item + "' must look like u-v");
    try {
      arcs.push_back({std::stoi(item.substr(0, dash)), std::stoi(item.substr(dash + 1))});
    } catch (const std::exception&) {
      throw usage_error("arc '" + item + "' must look like u-v");
    }
  }
  return arcs;
}

struct RunFlags {
  std::string orders = "4";
  std::string mode = "exhaustive";
  std::uint64_t count = 1000;
  std::optional<std::uint64_t> seed;
  std::uint64_t budget = 0;
  std::uint64_t node_budget = 0;
  bool dedupe_iso = false;
  std::string format = "text";
  double p_min = 0.5;
  double p_max = 0.95;

  void attach(CLI::App& app) {
    app.add_option("--n", orders, "order or range lo..hi")->required();
    app.add_option("--mode", mode, "exhaustive | sample")->check(CLI::IsMember({"exhaustive", "sample"}));
    app.add_option("--count", count, "draws per order in sample mode");
    app.add_option("--seed", seed, "RNG seed (required in sample mode)");
    app.add_option("--budget", budget, "stop after this many instances (0 = no limit)");
    app.add_option("--node-budget", node_budget, "search expansions per check (0 = no limit)");
    app.add_flag("--dedupe-iso", dedupe_iso, "drop isomorphic duplicate violations (order <= 7)");
    app.add_option("--format", format, "text | structured")->check(CLI::IsMember({"text", "structured"}));
    app.add_option("--p-min", p_min, "lowest arc probability in sample mode");
    app.add_option("--p-max", p_max, "highest arc probability in sample mode");
  }

  RunMode run_mode() const {
    if (mode == "exhaustive") return RunMode::exhaustive();
    if (!seed) throw usage_error("sample mode requires an explicit --seed");
    RunMode m = RunMode::sampled(count, *seed);
    m.p_min = p_min;
    m.p_max = p_max;
    return m;
  }

  RunOptions run_options() const {
    RunOptions o;
    o.search.node_budget = node_budget;
    o.instance_budget = budget;
    o.dedupe_iso = dedupe_iso;
    return o;
  }
};

inline int emit_verdict(const Verdict& v, const std::string& format, std::ostream& out) {
  if (format == "structured") {
    out << verdict_to_json(v).dump(2) << '\n';
  } else {
    out << format_verdict(v);
  }
  if (!v.violations.empty()) return kNegative;
  return v.complete ? kOk : kUnknown;
}

}  // namespace detail

inline int dispatch(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Hamiltonian bypass toolkit for small digraphs", "hambypass"};
  app.require_subcommand(1);

  // check
  std::string input = "-";
  std::vector<std::string> conditions;
  auto* check = app.add_subcommand("check", "evaluate degree conditions");
  check->add_option("--input", input, "digraph file ('-' = stdin)");
  check->add_option("--condition", conditions, "condition token (repeatable)")->required();

  // find
  std::string what;
  std::optional<int> from, to;
  std::uint64_t find_budget = 0;
  auto* find = app.add_subcommand("find", "search for a substructure");
  find->add_option("--input", input, "digraph file ('-' = stdin)");
  find->add_option("--what", what, "bypass | hamcycle | prehamiltonian | hampath | cycle:k | dnk:k | constructive")
      ->required();
  find->add_option("--from", from, "hampath start vertex");
  find->add_option("--to", to, "hampath end vertex");
  find->add_option("--budget", find_budget, "search expansions (0 = no limit)");

  // gen
  std::string family;
  FamilySpec spec;
  std::string variant = "chain";
  std::string b_arcs;
  auto* gen = app.add_subcommand("gen", "generate a named family member");
  gen->add_option("--family", family, "d0 | d1 | t5 | c3 | cn | kpq | kpq-minus-arc | d7 | dn | kstar")->required();
  gen->add_option("--n", spec.n, "order");
  gen->add_option("--k", spec.k, "d1 split");
  gen->add_option("--p", spec.p, "first part size");
  gen->add_option("--q", spec.q, "second part size");
  gen->add_option("--variant", variant, "dn chord variant: chain | wrap")->check(CLI::IsMember({"chain", "wrap"}));
  gen->add_option("--b-arcs", b_arcs, "d0 arcs inside B as u-v,u-v,...");
  gen->add_flag("--reversed", spec.removed_arc_reversed, "kpq-minus-arc: drop p->0 instead of 0->p");

  // verify (theorem)
  std::string theorem;
  detail::RunFlags verify_flags;
  auto* verify = app.add_subcommand("verify", "verify a theorem over enumerated or sampled digraphs");
  verify->add_option("--theorem", theorem, "thm1 ... thm16")->required();
  verify_flags.attach(*verify);

  // hunt
  std::string hypothesis, target = "bypass", preset;
  detail::RunFlags hunt_flags;
  auto* hunt = app.add_subcommand("hunt", "search for digraphs meeting a hypothesis but lacking a target");
  hunt->add_option("--hypothesis", hypothesis, "comma-separated condition tokens");
  hunt->add_option("--target", target, "bypass | hamcycle | prehamiltonian | hampath | cycle:k | dnk:k");
  hunt->add_option("--preset", preset, "conjecture | problem-thm13 | problem-thm14")
      ->check(CLI::IsMember({"conjecture", "problem-thm13", "problem-thm14"}));
  hunt_flags.attach(*hunt);

  // verify-cert
  std::string cert_text, cert_file;
  auto* verify_cert = app.add_subcommand("verify-cert", "check a certificate against a digraph");
  verify_cert->add_option("--input", input, "digraph file ('-' = stdin)");
  verify_cert->add_option("--cert", cert_text, "certificate text");
  verify_cert->add_option("--cert-file", cert_file, "file whose first line is a certificate");

  // convert
  std::string to_format = "structured";
  auto* convert = app.add_subcommand("convert", "convert between text and structured digraph formats");
  convert->add_option("--input", input, "digraph file ('-' = stdin)");
  convert->add_option("--to", to_format, "text | structured")->check(CLI::IsMember({"text", "structured"}));

  std::vector<std::string> argv_storage{"hambypass"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_storage) argv.push_back(a.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (*check) {
      const Digraph d = detail::load_digraph(input, in);
      bool all = true;
      for (const std::string& token : conditions) {
        const ConditionReport r = check_condition(d, parse_condition(token));
        out << format_report(r) << '\n';
        all = all && r.holds;
      }
      return all ? kOk : kNegative;
    }

    if (*find) {
      const Digraph d = detail::load_digraph(input, in);
      SearchOptions opts{find_budget};
      if (what == "constructive") {
        ConstructiveOptions copts;
        copts.search = opts;
        const ConstructiveResult r = constructive_bypass(d, copts);
        if (r.certificate) {
          out << to_string(*r.certificate) << '\n';
        } else {
          out << (r.status == SearchStatus::unknown ? "unknown" : "absent") << '\n';
        }
        out << "method=" << to_token(r.method) << '\n';
        return r.status == SearchStatus::found ? kOk : r.status == SearchStatus::unknown ? kUnknown : kNegative;
      }
      const Target t = parse_target(what);
      const SearchResult r = t.kind == TargetKind::ham_path ? find_ham_path(d, from, to, opts) : find_target(d, t, opts);
      if (r.found()) {
        out << to_string(*r.certificate) << '\n';
        return kOk;
      }
      out << (r.unknown() ? "unknown" : "absent") << '\n';
      return r.unknown() ? kUnknown : kNegative;
    }

    if (*gen) {
      spec.family = parse_family(family);
      spec.variant = variant == "wrap" ? ChordVariant::wrap : ChordVariant::chain;
      if (!b_arcs.empty()) spec.b_arcs = detail::parse_arc_list(b_arcs);
      write_digraph(out, generate(spec));
      return kOk;
    }

    if (*verify) {
      const Verdict v = run_theorem_suite(parse_theorem(theorem), parse_order_range(verify_flags.orders),
                                          verify_flags.run_mode(), verify_flags.run_options());
      return detail::emit_verdict(v, verify_flags.format, out);
    }

    if (*hunt) {
      HuntSpec h;
      if (preset == "conjecture") {
        h = conjecture_hunt();
      } else if (preset == "problem-thm13") {
        h = problem_hunt(ConditionKind::thm13);
      } else if (preset == "problem-thm14") {
        h = problem_hunt(ConditionKind::thm14);
      } else {
        if (hypothesis.empty()) throw usage_error("hunt needs --hypothesis or --preset");
        h = HuntSpec{parse_condition_list(hypothesis), parse_target(target)};
      }
      const Verdict v = hunt_counterexample(h, parse_order_range(hunt_flags.orders), hunt_flags.run_mode(),
                                            hunt_flags.run_options());
      return detail::emit_verdict(v, hunt_flags.format, out);
    }

    if (*verify_cert) {
      if (cert_text.empty() == cert_file.empty()) throw usage_error("give exactly one of --cert or --cert-file");
      if (!cert_file.empty()) {
        std::istringstream lines(detail::read_all(cert_file, in));
        std::getline(lines, cert_text);
      }
      const Certificate c = parse_certificate(cert_text);
      const Digraph d = detail::load_digraph(input, in);
      const bool ok = verify_certificate(d, c);
      out << (ok ? "valid" : "invalid") << '\n';
      return ok ? kOk : kNegative;
    }

    if (*convert) {
      const Digraph d = detail::load_digraph(input, in);
      if (to_format == "structured") {
        out << to_json(d).dump() << '\n';
      } else {
        write_digraph(out, d);
      }
      return kOk;
    }
  } catch (const parse_error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const capability_error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace hambypass::cli
