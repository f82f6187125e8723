#include "pmsp/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <functional>
#include <iostream>
#include <json.hpp>
#include <map>
#include <optional>
#include <sstream>

#include "pmsp/closed_forms.hpp"
#include "pmsp/errors.hpp"
#include "pmsp/families.hpp"
#include "pmsp/graph_algos.hpp"

namespace pmsp::cli {

namespace {

using nlohmann::json;

// Inline shell arguments often carry literal "\n"; treat them as newlines.
std::string unescape_newlines(const std::string& s) {
  std::string out;
  for (size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '\\' && i + 1 < s.size() && s[i + 1] == 'n') {
      out.push_back('\n');
      ++i;
    } else {
      out.push_back(s[i]);
    }
  }
  return out;
}

long long parse_ll(const std::string& s, const std::string& what) {
  try {
    size_t used = 0;
    long long v = std::stoll(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw ArgumentError("bad " + what + ": '" + s + "'");
  }
}

json poly_json(const Polynomial& p) { return json(p.to_decimal_strings()); }

json trace_summary_json(const ComputationTrace& trace) {
  std::map<std::string, int> counts;
  for (const auto& node : trace.nodes) ++counts[rule_name(node.rule)];
  json j;
  j["nodes"] = trace.nodes.size();
  j["rule_counts"] = counts;
  if (trace.root >= 0)
    j["root_rule"] = rule_name(trace.nodes[trace.root].rule);
  return j;
}

json trace_json(const ComputationTrace& trace) {
  json nodes = json::array();
  for (size_t i = 0; i < trace.nodes.size(); ++i) {
    const TraceNode& node = trace.nodes[i];
    json j;
    j["id"] = i;
    j["graph"] = node.graph6;
    j["rule"] = rule_name(node.rule);
    j["params"] = node.params;
    j["children"] = node.children;
    j["result"] = poly_json(node.result);
    if (node.rule == Rule::kOpenEar) j["correction"] = poly_json(node.correction);
    nodes.push_back(std::move(j));
  }
  return json{{"root", trace.root}, {"nodes", std::move(nodes)}};
}

void print_trace_text(const ComputationTrace& trace, std::ostream& out) {
  std::function<void(int, int)> rec = [&](int id, int depth) {
    const TraceNode& node = trace.nodes[id];
    out << std::string(2 * depth, ' ') << rule_name(node.rule) << " "
        << node.graph6;
    if (!node.params.empty()) {
      out << " [";
      for (size_t i = 0; i < node.params.size(); ++i)
        out << (i ? "," : "") << node.params[i];
      out << "]";
    }
    out << " -> " << node.result.to_text() << "\n";
    for (int c : node.children) rec(c, depth + 1);
  };
  if (trace.root >= 0) rec(trace.root, 0);
}

int suite_default_max_n(const std::string& suite) {
  if (suite == "lemma") return 6;
  if (suite == "conjecture") return 9;
  if (suite == "volume") return 10;
  if (suite == "oracle") return 10;
  return 0;
}

void print_suite(const SuiteReport& report, bool verbose_entries,
                 std::ostream& out) {
  out << "suite " << report.suite << ": " << report.checks << " checks, "
      << report.failures << " failures\n";
  for (const auto& e : report.entries) {
    if (!verbose_entries && e.match) continue;
    out << (e.match ? "  ok   " : "  FAIL ") << e.label << ": "
        << e.computed.to_text();
    if (!e.match) out << "  (expected " << e.published.to_text() << ")";
    if (!e.note.empty()) out << "  -- " << e.note;
    out << "\n";
  }
}

json suite_json(const SuiteReport& report) {
  json entries = json::array();
  for (const auto& e : report.entries)
    entries.push_back(json{{"label", e.label},
                           {"computed", poly_json(e.computed)},
                           {"published", poly_json(e.published)},
                           {"match", e.match},
                           {"note", e.note}});
  return json{{"suite", report.suite},
              {"checks", report.checks},
              {"failures", report.failures},
              {"pass", report.pass()},
              {"entries", std::move(entries)}};
}

}  // namespace

VerifyConfig RunConfig::verify_config() const {
  if (oracle_limit <= 0 || matching_limit <= 0 || counting_limit <= 0)
    throw ArgumentError("limits must be positive");
  VerifyConfig v;
  v.pms.limits.oracle_vertices = oracle_limit;
  v.pms.limits.matching_vertices = matching_limit;
  v.ehrhart.counting_limit = counting_limit;
  return v;
}

Graph graph_from_family_spec(const std::string& spec) {
  size_t colon = spec.find(':');
  if (colon == std::string::npos)
    throw ArgumentError("family spec needs parameters, e.g. cycle:7");
  std::string name = spec.substr(0, colon);
  std::string rest = spec.substr(colon + 1);
  if (name == "dg") return build_dg(parse_graph6(rest));

  std::vector<std::string> parts;
  std::stringstream ss(rest);
  std::string item;
  while (std::getline(ss, item, ':')) parts.push_back(item);

  auto arg = [&](size_t i) -> long long {
    if (i >= parts.size())
      throw ArgumentError("family " + name + " needs more parameters");
    return parse_ll(parts[i], "family parameter");
  };
  if (name == "path" && parts.size() == 1)
    return make_path(static_cast<int>(arg(0)));
  if (name == "cycle" && parts.size() == 1)
    return make_cycle(static_cast<int>(arg(0)));
  if (name == "cycle-complement" && parts.size() == 1)
    return complement(make_cycle(static_cast<int>(arg(0))));
  if (name == "caterpillar" && parts.size() == 2)
    return make_caterpillar(static_cast<int>(arg(0)), static_cast<int>(arg(1)));
  if (name == "kary" && parts.size() == 2)
    return make_kary_tree(static_cast<int>(arg(0)), static_cast<int>(arg(1)));
  throw ArgumentError("unknown family spec '" + spec + "'");
}

Graph load_graph(const RunConfig& config, std::istream& in) {
  switch (config.input_kind) {
    case InputKind::kInlineEdgeList:
      return parse_edge_list(unescape_newlines(config.input));
    case InputKind::kInlineGraph6:
      return parse_graph6(config.input);
    case InputKind::kFamily:
      return graph_from_family_spec(config.input);
    case InputKind::kFile: {
      std::ifstream f(config.input);
      if (!f) throw ArgumentError("cannot open file '" + config.input + "'");
      std::stringstream buf;
      buf << f.rdbuf();
      return parse_graph(buf.str(), config.format);
    }
    case InputKind::kStdin: {
      std::stringstream buf;
      buf << in.rdbuf();
      return parse_graph(buf.str(), config.format);
    }
    case InputKind::kNone:
      break;
  }
  throw ArgumentError("exactly one input source is required");
}

int cmd_pms(const RunConfig& config, std::istream& in, std::ostream& out,
            std::ostream& err) {
  VerifyConfig vc = config.verify_config();
  Graph g = load_graph(config, in);
  auto [p, trace] = pms_poly(g, vc.pms);
  (void)err;
  if (config.json) {
    json j;
    j["graph"] = write_graph6(g);
    j["pms"] = poly_json(p);
    j["nvol"] = p.evaluate(1).str();
    j["trace_summary"] = trace_summary_json(trace);
    if (config.show_trace) j["trace"] = trace_json(trace);
    out << j.dump(2) << "\n";
  } else {
    out << p.to_text() << "\n";
    out << "p(G; 1) = " << p.evaluate(1).str() << "\n";
    if (config.show_trace) print_trace_text(trace, out);
  }
  return kExitOk;
}

int cmd_hstar(const RunConfig& config, std::istream& in, std::ostream& out,
              std::ostream& err) {
  VerifyConfig vc = config.verify_config();
  Graph g = load_graph(config, in);

  EhrhartData data;
  try {
    data = ehrhart_data_stable_set_polytope(g, vc.ehrhart);
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsageOrPrecondition;
  }

  bool all_match = true;
  Graph comp = complement(g);
  bool comp_bipartite = is_bipartite(comp).bipartite;
  auto comp_cycle = recognize_cycle(comp);

  std::optional<Polynomial> pms_cross;
  if (comp_bipartite) pms_cross = pms_poly(comp, vc.pms).first;
  std::optional<Polynomial> conjecture_predicted;
  if (comp_cycle && *comp_cycle >= 5 && *comp_cycle % 2 == 1)
    conjecture_predicted =
        cycle_poly(*comp_cycle) + Polynomial::monomial(1, (*comp_cycle + 1) / 2);

  if (config.json) {
    json j;
    j["graph"] = write_graph6(g);
    j["hstar"] = poly_json(data.hstar);
    j["nvol"] = data.hstar.evaluate(1).str();
    json counts = json::array();
    for (const auto& c : data.counts) counts.push_back(c.str());
    j["counts"] = std::move(counts);
    if (pms_cross) {
      j["pms"] = poly_json(*pms_cross);
      j["equal"] = (*pms_cross == data.hstar);
      all_match = all_match && *pms_cross == data.hstar;
    }
    if (conjecture_predicted) {
      bool ok = *conjecture_predicted == data.hstar;
      j["conjecture"] = ok ? "match" : "mismatch";
      all_match = all_match && ok;
    }
    out << j.dump(2) << "\n";
  } else {
    out << data.hstar.to_text() << ", NVol "
        << data.hstar.evaluate(1).str() << "\n";
    if (pms_cross) {
      bool ok = *pms_cross == data.hstar;
      all_match = all_match && ok;
      out << "pms cross-check (p(complement) = " << pms_cross->to_text()
          << "): " << (ok ? "match" : "MISMATCH") << "\n";
    }
    if (conjecture_predicted) {
      bool ok = *conjecture_predicted == data.hstar;
      all_match = all_match && ok;
      out << "conjecture: " << (ok ? "match" : "MISMATCH") << "\n";
    }
  }
  return all_match ? kExitOk : kExitVerificationFailure;
}

int cmd_verify(const RunConfig& config, std::ostream& out, std::ostream& err) {
  VerifyConfig vc = config.verify_config();
  int max_n = config.max_n > 0 ? config.max_n : suite_default_max_n(config.suite);

  std::vector<SuiteReport> reports;
  if (config.suite == "tables") {
    reports.push_back(run_table1_suite(vc));
    reports.push_back(run_table2_suite(vc));
    reports.push_back(run_table3_suite(vc));
  } else if (config.suite == "lemma") {
    reports.push_back(run_lemma_suite(max_n, vc));
  } else if (config.suite == "conjecture") {
    reports.push_back(run_conjecture_suite(max_n, vc));
  } else if (config.suite == "volume") {
    reports.push_back(run_volume_suite(max_n));
  } else if (config.suite == "oracle") {
    reports.push_back(run_oracle_suite(config.trials, max_n, config.seed, vc));
  } else {
    err << "error: unknown suite '" << config.suite << "'\n";
    return kExitUsageOrPrecondition;
  }

  bool pass = true;
  for (const auto& r : reports) pass = pass && r.pass();

  if (config.json) {
    json j = json::array();
    for (const auto& r : reports) j.push_back(suite_json(r));
    out << json{{"pass", pass}, {"suites", std::move(j)}}.dump(2) << "\n";
  } else {
    bool tables = config.suite == "tables";
    for (const auto& r : reports) print_suite(r, tables, out);
    if (config.suite == "oracle" && pass)
      out << reports[0].checks << "/" << reports[0].checks << " agree\n";
    if (config.suite == "conjecture" && pass) {
      out << "n=";
      for (int n = 5, first = 1; n <= max_n; n += 2, first = 0)
        out << (first ? "" : ",") << n;
      out << ": match\n";
    }
  }
  return pass ? kExitOk : kExitVerificationFailure;
}

int run(int argc, const char* const* argv, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Perfectly matchable set polynomials and stable-set-polytope "
               "h*-polynomials"};
  app.require_subcommand(1);

  RunConfig config;
  std::string edge_list, graph6, file, family, format = "graph6";
  bool use_stdin = false;

  auto add_input_opts = [&](CLI::App* sub) {
    sub->add_option("--edge-list", edge_list, "inline edge-list text");
    sub->add_option("--graph6", graph6, "inline graph6 string");
    sub->add_option("--file", file, "path to a graph file");
    sub->add_flag("--stdin", use_stdin, "read the graph from standard input");
    sub->add_option("--family", family,
                    "family spec: path:n, cycle:n, caterpillar:n:k, kary:k:r, "
                    "cycle-complement:n, dg:<graph6>");
    sub->add_option("--format", format, "graph6 | edge-list (file/stdin input)")
        ->check(CLI::IsMember({"graph6", "edge-list"}));
    sub->add_flag("--json", config.json, "JSON output");
    sub->add_option("--oracle-limit", config.oracle_limit,
                    "max vertices for the brute-force subset sweep");
    sub->add_option("--matching-limit", config.matching_limit,
                    "max vertices for a single matching test");
    sub->add_option("--counting-limit", config.counting_limit,
                    "max dimension for lattice-point counting");
  };

  CLI::App* pms = app.add_subcommand("pms", "compute p(G; z)");
  add_input_opts(pms);
  pms->add_flag("--trace", config.show_trace, "print the computation trace");

  CLI::App* hstar =
      app.add_subcommand("hstar", "compute h*(P_G; z) by lattice counting");
  add_input_opts(hstar);

  CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("--suite", config.suite,
                     "lemma | conjecture | volume | tables | oracle")
      ->required()
      ->check(CLI::IsMember({"lemma", "conjecture", "volume", "tables",
                             "oracle"}));
  verify->add_option("--max-n", config.max_n, "suite size bound");
  verify->add_option("--trials", config.trials, "randomized suite trial count");
  verify->add_option("--seed", config.seed, "randomized suite seed");
  verify->add_flag("--json", config.json, "JSON output");
  verify->add_option("--oracle-limit", config.oracle_limit,
                     "max vertices for the brute-force subset sweep");
  verify->add_option("--counting-limit", config.counting_limit,
                     "max dimension for lattice-point counting");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsageOrPrecondition;
  }

  try {
    if (verify->parsed()) {
      config.command = "verify";
      return cmd_verify(config, out, err);
    }
    int sources = 0;
    if (!edge_list.empty()) {
      config.input_kind = InputKind::kInlineEdgeList;
      config.input = edge_list;
      ++sources;
    }
    if (!graph6.empty()) {
      config.input_kind = InputKind::kInlineGraph6;
      config.input = graph6;
      ++sources;
    }
    if (!file.empty()) {
      config.input_kind = InputKind::kFile;
      config.input = file;
      ++sources;
    }
    if (use_stdin) {
      config.input_kind = InputKind::kStdin;
      ++sources;
    }
    if (!family.empty()) {
      config.input_kind = InputKind::kFamily;
      config.input = family;
      ++sources;
    }
    if (sources != 1) {
      err << "error: exactly one input source is required "
             "(--edge-list | --graph6 | --file | --stdin | --family)\n";
      return kExitUsageOrPrecondition;
    }
    config.format =
        format == "graph6" ? GraphFormat::kGraph6 : GraphFormat::kEdgeList;

    if (pms->parsed()) {
      config.command = "pms";
      return cmd_pms(config, in, out, err);
    }
    config.command = "hstar";
    return cmd_hstar(config, in, out, err);
  } catch (const ConsistencyError& e) {
    err << "error: " << e.what() << "\n";
    return kExitVerificationFailure;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsageOrPrecondition;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsageOrPrecondition;
  }
}

}  // namespace pmsp::cli
