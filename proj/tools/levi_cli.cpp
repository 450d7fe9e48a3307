// Command line front end: family generators, 2-factor classification,
// structural properties, isomorphism, Martinetti moves, witness pairs and
// the claim suite. JSON goes to stdout one object per line; everything
// human-oriented goes to stderr. Exit codes: 0 success or claim pass,
// 1 failed claim or invalid input, 2 usage.
#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "levi/canonical.hpp"
#include "levi/errors.hpp"
#include "levi/families.hpp"
#include "levi/graph_io.hpp"
#include "levi/martinetti.hpp"
#include "levi/report_json.hpp"
#include "levi/two_factors.hpp"
#include "levi/verify.hpp"
#include "levi/witnesses.hpp"

using nlohmann::ordered_json;

namespace {

struct GlobalOpts {
  int threads = 1;
  bool verbose = false;
};

std::string slurp_stdin() {
  std::ostringstream os;
  os << std::cin.rdbuf();
  return os.str();
}

std::string strip_cr(std::string s) {
  while (!s.empty() && (s.back() == '\r' || s.back() == '\n')) s.pop_back();
  return s;
}

// '-' means stdin. graph6 inputs are one graph per non-empty line; an edge
// list stream is consumed greedily, several graphs back to back.
std::vector<levi::Graph> read_graphs(const std::string& input, const std::string& format) {
  std::vector<levi::Graph> out;
  if (format == "edgelist") {
    std::string text = input == "-" ? slurp_stdin() : input;
    size_t pos = 0;
    out.push_back(levi::read_edgelist(text, pos));
    for (;;) {
      size_t probe = pos;
      while (probe < text.size() && std::isspace(static_cast<unsigned char>(text[probe]))) ++probe;
      if (probe >= text.size()) break;
      out.push_back(levi::read_edgelist(text, pos));
    }
    return out;
  }
  if (input == "-") {
    std::string line;
    while (std::getline(std::cin, line)) {
      line = strip_cr(line);
      if (!line.empty()) out.push_back(levi::from_graph6(line));
    }
    if (out.empty()) levi::fail(levi::errc::parse_error, "no graphs on stdin");
    return out;
  }
  out.push_back(levi::from_graph6(strip_cr(input)));
  return out;
}

void emit_graph(const levi::Graph& g, const std::string& format, bool labels) {
  if (format == "edgelist")
    std::cout << levi::to_edgelist(g);
  else
    std::cout << levi::to_graph6(g) << "\n";
  if (labels) {
    ordered_json j = ordered_json::array();
    for (const auto& l : g.labels()) j.push_back(l);
    std::cout << j.dump() << "\n";
  }
}

std::string hex(const std::string& bytes) {
  static const char* digits = "0123456789abcdef";
  std::string out;
  out.reserve(bytes.size() * 2);
  for (unsigned char c : bytes) {
    out.push_back(digits[c >> 4]);
    out.push_back(digits[c & 15]);
  }
  return out;
}

ordered_json endpoint_pair(const levi::Graph& g, int e) {
  return ordered_json::array({g.edge(e).u, g.edge(e).v});
}

ordered_json site_json(const levi::Graph& g, const levi::ExtensionSite& s) {
  ordered_json j;
  j["e1"] = endpoint_pair(g, s.e1);
  j["e2"] = endpoint_pair(g, s.e2);
  if (g.labeled()) {
    j["e1_labels"] = ordered_json::array({g.label(s.x1), g.label(s.y1)});
    j["e2_labels"] = ordered_json::array({g.label(s.x2), g.label(s.y2)});
  }
  return j;
}

ordered_json site_json(const levi::Graph& g, const levi::ReductionSite& s) {
  ordered_json j;
  j["edge"] = endpoint_pair(g, s.edge);
  j["option"] = s.option == levi::RewireOption::straight ? "straight" : "crossed";
  if (g.labeled()) j["edge_labels"] = ordered_json::array({g.label(s.u), g.label(s.v)});
  return j;
}

ordered_json circuit_json(const levi::Graph& g, const std::vector<int>& circuit) {
  ordered_json c = ordered_json::array();
  for (int v : circuit) {
    if (g.labeled())
      c.push_back(g.label(v));
    else
      c.push_back(v);
  }
  return c;
}

ordered_json two_factor_json(const levi::Graph& g, const levi::TwoFactor& tf) {
  ordered_json j;
  j["circuit_count"] = tf.circuit_count;
  j["lengths"] = tf.decomposition.lengths;
  ordered_json circuits = ordered_json::array();
  for (const auto& c : tf.decomposition.circuits) circuits.push_back(circuit_json(g, c));
  j["circuits"] = circuits;
  return j;
}

levi::EnumBudget make_budget(const std::string& mode, std::uint64_t budget, bool budget_set) {
  levi::EnumBudget b = mode == "parity" ? levi::EnumBudget::parity() : levi::EnumBudget::full();
  if (budget_set) {
    if (budget == 0)
      b.max_matchings = std::nullopt;
    else
      b.max_matchings = budget;
  }
  return b;
}

int run(int argc, char** argv) {
  CLI::App app{"symmetric configurations, Levi graphs and 2-factor parity"};
  app.require_subcommand(1);
  GlobalOpts global;
  if (const char* env = std::getenv("LEVI_THREADS")) global.threads = std::atoi(env);
  app.add_option("--threads", global.threads,
                 "worker cap; 1 is the reference serial order and the evaluation "
                 "order is identical for every value")
      ->check(CLI::PositiveNumber);
  app.add_flag("--verbose", global.verbose, "progress notes on stderr");

  // gen
  auto* gen = app.add_subcommand("gen", "emit a family graph");
  std::string family, base = "0,1,3", format = "graph6";
  int n = 0, variant = 1;
  bool labels = false;
  gen->add_option("--family", family, "k33 | heawood | pappus | d | t | cyclic | chain | tsegment")
      ->required();
  gen->add_option("--n", n, "family size parameter");
  gen->add_option("--variant", variant, "t family closure, 1..3");
  gen->add_option("--base", base, "cyclic base line, e.g. 0,1,3");
  gen->add_option("--format", format)->check(CLI::IsMember({"graph6", "edgelist"}));
  gen->add_flag("--labels", labels, "append one JSON line of vertex labels");

  // classify
  auto* classify_cmd = app.add_subcommand("classify", "2-factor census and parity flags");
  std::string cls_input, cls_format = "graph6", cls_mode = "full";
  std::uint64_t cls_budget = 0;
  classify_cmd->add_option("input", cls_input, "graph6 string or - for stdin")->required();
  classify_cmd->add_option("--format", cls_format)->check(CLI::IsMember({"graph6", "edgelist"}));
  classify_cmd->add_option("--mode", cls_mode)->check(CLI::IsMember({"full", "parity"}));
  auto* budget_opt = classify_cmd->add_option("--budget", cls_budget, "matching cap, 0 = unlimited");
  bool cls_json = true;
  classify_cmd->add_flag("--json", cls_json, "reports are always JSON; accepted for symmetry");

  // props
  auto* props = app.add_subcommand("props", "structural properties");
  std::string props_input, props_format = "graph6";
  props->add_option("input", props_input, "graph6 string or - for stdin")->required();
  props->add_option("--format", props_format)->check(CLI::IsMember({"graph6", "edgelist"}));

  // iso
  auto* iso = app.add_subcommand("iso", "isomorphism test; exit 0 iff isomorphic");
  std::string iso_a, iso_b, iso_format = "graph6";
  iso->add_option("a", iso_a)->required();
  iso->add_option("b", iso_b)->required();
  iso->add_option("--format", iso_format)->check(CLI::IsMember({"graph6", "edgelist"}));

  // martinetti
  auto* mart = app.add_subcommand("martinetti", "extension and reduction moves");
  mart->require_subcommand(1);
  std::string mart_input, mart_format = "graph6";
  int site_index = -1;
  bool up_to_iso = false, allow_disconnected = false;
  auto add_mart_common = [&](CLI::App* sub) {
    sub->add_option("input", mart_input, "graph6 string or - for stdin")->required();
    sub->add_option("--format", mart_format)->check(CLI::IsMember({"graph6", "edgelist"}));
  };
  auto* mart_sites = mart->add_subcommand("sites", "list extension and reduction sites");
  add_mart_common(mart_sites);
  mart_sites->add_flag("--allow-disconnected", allow_disconnected);
  auto* mart_extend = mart->add_subcommand("extend", "apply extension sites");
  add_mart_common(mart_extend);
  mart_extend->add_flag("--up-to-iso", up_to_iso, "one representative per isomorphism class");
  mart_extend->add_option("--site", site_index, "apply only this site index");
  auto* mart_reduce = mart->add_subcommand("reduce", "apply valid reduction sites");
  add_mart_common(mart_reduce);
  mart_reduce->add_option("--site", site_index, "apply only this site index");
  mart_reduce->add_flag("--allow-disconnected", allow_disconnected);
  auto* mart_irr = mart->add_subcommand("irreducible", "print true/false per graph");
  add_mart_common(mart_irr);
  bool mart_json = false;
  for (auto* sub : {mart_sites, mart_extend, mart_reduce})
    sub->add_flag("--json", mart_json, "JSON object per input graph");

  // witnesses
  auto* wit = app.add_subcommand("witnesses", "closed-form parity witness pair");
  std::string wit_family;
  int wit_n = 0, wit_variant = 1;
  wit->add_option("--family", wit_family)->required()->check(CLI::IsMember({"d", "t"}));
  wit->add_option("--n", wit_n)->required();
  wit->add_option("--variant", wit_variant, "t family closure, 1..3");

  // verify-paper
  auto* verify = app.add_subcommand("verify-paper", "run the built-in claim suite");
  int nmax = 15;
  std::string claims_csv;
  bool verify_json = false;
  verify->add_option("--nmax", nmax, "largest family size checked");
  verify->add_option("--claims", claims_csv, "comma separated categories: classify,d,t,martinetti,star");
  verify->add_flag("--json", verify_json);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (gen->parsed()) {
      levi::Graph g;
      if (family == "k33") {
        g = levi::k33();
      } else if (family == "heawood") {
        g = levi::heawood();
      } else if (family == "pappus") {
        g = levi::pappus();
      } else if (family == "d") {
        g = levi::d_graph(n);
      } else if (family == "t") {
        g = levi::t_graph(n, variant);
      } else if (family == "chain") {
        g = levi::segment_chain(n);
      } else if (family == "tsegment") {
        g = levi::t_segment();
      } else if (family == "cyclic") {
        int b = 1, c = 3, zero = 0;
        if (std::sscanf(base.c_str(), "%d,%d,%d", &zero, &b, &c) != 3 || zero != 0)
          levi::fail(levi::errc::invalid_parameter, "--base must look like 0,b,c");
        g = levi::cyclic_levi({n, b, c});
      } else {
        levi::fail(levi::errc::invalid_parameter, "unknown family " + family);
      }
      emit_graph(g, format, labels);
      return 0;
    }

    if (classify_cmd->parsed()) {
      levi::EnumBudget budget = make_budget(cls_mode, cls_budget, budget_opt->count() > 0);
      for (const levi::Graph& g : read_graphs(cls_input, cls_format))
        std::cout << levi::classification_report_json(levi::classify(g, budget)) << "\n";
      return 0;
    }

    if (props->parsed()) {
      for (const levi::Graph& g : read_graphs(props_input, props_format)) {
        ordered_json j;
        j["graph"] = levi::to_graph6(g);
        j["vertices"] = g.vertex_count();
        j["edges"] = g.edge_count();
        bool connected = levi::is_connected(g);
        bool cubic = levi::is_cubic(g);
        j["connected"] = connected;
        j["cubic"] = cubic;
        j["bipartite"] = levi::is_bipartite(g);
        auto gr = levi::girth(g);
        j["girth"] = gr ? ordered_json(*gr) : ordered_json(nullptr);
        j["edge_connectivity"] = connected && g.vertex_count() >= 2
                                     ? ordered_json(levi::edge_connectivity(g))
                                     : ordered_json(nullptr);
        if (cubic && connected) {
          auto cut = levi::essential_4ec_obstruction(g);
          j["essentially_4ec"] = !cut.has_value();
          if (cut) {
            ordered_json edges = ordered_json::array();
            for (int e : cut->edges) edges.push_back(endpoint_pair(g, e));
            j["essential_cut"] = edges;
          }
        } else {
          j["essentially_4ec"] = nullptr;
        }
        j["certificate"] = hex(levi::canonical_form(g));
        std::cout << j.dump() << "\n";
      }
      return 0;
    }

    if (iso->parsed()) {
      std::vector<levi::Graph> pair;
      if (iso_a == "-" && iso_b == "-") {
        pair = read_graphs("-", iso_format);
      } else {
        for (const std::string& in : {iso_a, iso_b}) {
          auto batch = read_graphs(in, iso_format);
          pair.insert(pair.end(), batch.begin(), batch.end());
        }
      }
      if (pair.size() != 2)
        levi::fail(levi::errc::invalid_parameter,
                   "iso needs exactly two graphs, got " + std::to_string(pair.size()));
      auto f = levi::isomorphism(pair[0], pair[1]);
      ordered_json j;
      j["isomorphic"] = f.has_value();
      j["mapping"] = f ? ordered_json(*f) : ordered_json(nullptr);
      std::cout << j.dump() << "\n";
      return f ? 0 : 1;
    }

    if (mart->parsed()) {
      for (const levi::Graph& g : read_graphs(mart_input, mart_format)) {
        if (mart_irr->parsed()) {
          std::cout << (levi::is_irreducible(g) ? "true" : "false") << "\n";
          continue;
        }
        if (mart_sites->parsed()) {
          ordered_json j;
          j["graph"] = levi::to_graph6(g);
          ordered_json ext = ordered_json::array();
          for (const auto& s : levi::extension_sites(g)) ext.push_back(site_json(g, s));
          ordered_json red = ordered_json::array();
          for (const auto& s : levi::reduction_sites(g, allow_disconnected))
            red.push_back(site_json(g, s));
          j["extension_sites"] = ext;
          j["reduction_sites"] = red;
          std::cout << j.dump() << "\n";
          continue;
        }
        if (mart_extend->parsed()) {
          if (up_to_iso) {
            auto classes = levi::extensions_up_to_iso(g);
            if (mart_json) {
              ordered_json j;
              j["graph"] = levi::to_graph6(g);
              ordered_json arr = ordered_json::array();
              for (const auto& c : classes) {
                ordered_json cj;
                cj["site"] = site_json(g, c.representative);
                cj["multiplicity"] = c.multiplicity;
                cj["result"] = levi::to_graph6(levi::extend(g, c.representative));
                arr.push_back(cj);
              }
              j["classes"] = arr;
              std::cout << j.dump() << "\n";
            } else {
              for (const auto& c : classes)
                std::cout << levi::to_graph6(levi::extend(g, c.representative)) << "\n";
            }
            continue;
          }
          auto sites = levi::extension_sites(g);
          if (site_index >= 0) {
            if (static_cast<size_t>(site_index) >= sites.size())
              levi::fail(levi::errc::invalid_site, "site index out of range");
            sites = {sites[static_cast<size_t>(site_index)]};
          }
          if (mart_json) {
            ordered_json j;
            j["graph"] = levi::to_graph6(g);
            ordered_json arr = ordered_json::array();
            for (const auto& s : sites) {
              ordered_json sj = site_json(g, s);
              sj["result"] = levi::to_graph6(levi::extend(g, s));
              arr.push_back(sj);
            }
            j["extensions"] = arr;
            std::cout << j.dump() << "\n";
          } else {
            for (const auto& s : sites) std::cout << levi::to_graph6(levi::extend(g, s)) << "\n";
          }
          continue;
        }
        // reduce
        auto sites = levi::reduction_sites(g, allow_disconnected);
        if (site_index >= 0) {
          if (static_cast<size_t>(site_index) >= sites.size())
            levi::fail(levi::errc::invalid_site, "site index out of range");
          sites = {sites[static_cast<size_t>(site_index)]};
        }
        if (mart_json) {
          ordered_json j;
          j["graph"] = levi::to_graph6(g);
          ordered_json arr = ordered_json::array();
          for (const auto& s : sites) {
            ordered_json sj = site_json(g, s);
            sj["result"] = levi::to_graph6(levi::reduce(g, s, allow_disconnected));
            arr.push_back(sj);
          }
          j["reductions"] = arr;
          std::cout << j.dump() << "\n";
        } else {
          for (const auto& s : sites)
            std::cout << levi::to_graph6(levi::reduce(g, s, allow_disconnected)) << "\n";
        }
      }
      return 0;
    }

    if (wit->parsed()) {
      levi::WitnessPair wp = wit_family == "d" ? levi::d_witness_pair(wit_n)
                                               : levi::t_witness_pair(wit_n, wit_variant);
      ordered_json j;
      j["family"] = wp.family;
      j["n"] = wp.n;
      if (wp.family == "t") j["variant"] = wp.variant;
      j["graph"] = levi::to_graph6(wp.host);
      j["from_template"] = wp.from_template;
      if (!wp.from_template) j["template_error"] = wp.template_error;
      j["hamiltonian"] = two_factor_json(wp.host, wp.hamiltonian);
      j["disconnected"] = two_factor_json(wp.host, wp.disconnected);
      std::cout << j.dump() << "\n";
      return 0;
    }

    if (verify->parsed()) {
      levi::VerifyOptions opt;
      opt.nmax = nmax;
      if (!claims_csv.empty()) {
        std::stringstream ss(claims_csv);
        std::string item;
        while (std::getline(ss, item, ','))
          if (!item.empty()) opt.categories.push_back(item);
      }
      auto results = levi::verify_claim_suite(opt);
      if (verify_json) {
        ordered_json j;
        j["nmax"] = opt.nmax;
        ordered_json arr = ordered_json::array();
        for (const auto& c : results) {
          ordered_json cj;
          cj["id"] = c.id;
          cj["category"] = c.category;
          cj["pass"] = c.pass;
          cj["evidence"] = c.evidence;
          arr.push_back(cj);
        }
        j["claims"] = arr;
        j["all_pass"] = levi::all_pass(results);
        std::cout << j.dump() << "\n";
      } else {
        size_t passed = 0;
        for (const auto& c : results) {
          std::cout << (c.pass ? "PASS" : "FAIL") << "  " << c.id << "  " << c.evidence << "\n";
          if (c.pass) ++passed;
        }
        std::cout << "passed " << passed << " of " << results.size() << " claims\n";
      }
      return levi::all_pass(results) ? 0 : 1;
    }
  } catch (const levi::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
