// Acceptance gate: one line per criterion, wall-clock bounds enforced.
// Returns nonzero when any criterion fails, so ctest can gate on it.
#include <sys/wait.h>

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "levi/canonical.hpp"
#include "levi/errors.hpp"
#include "levi/families.hpp"
#include "levi/graph_io.hpp"
#include "levi/martinetti.hpp"
#include "levi/report_json.hpp"
#include "levi/two_factors.hpp"
#include "levi/verify.hpp"
#include "levi/witnesses.hpp"

using namespace levi;

namespace {

int failures = 0;

// Each criterion reports pass/fail, its evidence and the elapsed time, and
// is charged against a wall-clock allowance in milliseconds.
void criterion(int number, const std::string& name, long limit_ms,
               const std::function<std::string()>& body) {
  auto start = std::chrono::steady_clock::now();
  bool pass = true;
  std::string evidence;
  try {
    evidence = body();
  } catch (const std::exception& e) {
    pass = false;
    evidence = std::string("exception: ") + e.what();
  }
  auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                std::chrono::steady_clock::now() - start)
                .count();
  if (ms > limit_ms) {
    pass = false;
    evidence += " [time limit " + std::to_string(limit_ms) + " ms exceeded]";
  }
  if (!pass) ++failures;
  std::cout << (pass ? "PASS" : "FAIL") << "  criterion-" << number << "  " << name << "  ("
            << ms << " ms, limit " << limit_ms << " ms)  " << evidence << "\n";
}

void expect(bool ok, const std::string& what) {
  if (!ok) throw std::runtime_error("check failed: " + what);
}

std::string show_census(const std::map<int, std::uint64_t>& c) {
  std::string s = "{";
  for (const auto& [k, v] : c) s += std::to_string(k) + ":" + std::to_string(v) + " ";
  if (s.size() > 1) s.pop_back();
  return s + "}";
}

// Every report produced anywhere in this binary funnels through here so the
// flag-implication chain is checked on all of them (criterion 10).
std::vector<ClassificationReport> all_reports;

ClassificationReport classified(const Graph& g, const EnumBudget& b = EnumBudget::full()) {
  ClassificationReport r = classify(g, b);
  all_reports.push_back(r);
  return r;
}

struct NamedGraph {
  std::string name;
  Graph graph;
};

std::vector<NamedGraph> corpus() {
  std::vector<NamedGraph> out;
  out.push_back({"k33", k33()});
  out.push_back({"heawood", heawood()});
  out.push_back({"pappus", pappus()});
  for (int n = 7; n <= 15; ++n) out.push_back({"d(" + std::to_string(n) + ")", d_graph(n)});
  for (int n : {1, 2})
    for (int v : {1, 2, 3})
      out.push_back({"t" + std::to_string(v) + "(" + std::to_string(n) + ")", t_graph(n, v)});
  Graph p = pappus();
  out.push_back({"pappus-ext", extend(p, extension_sites(p)[0])});
  Graph h = heawood();
  for (int k = 0; k < 6; ++k) {
    constexpr std::array<std::array<int, 3>, 6> perms{
        {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};
    out.push_back({"h0*h0/" + std::to_string(k), star_product(h, 7, h, 0, perms[static_cast<size_t>(k)])});
  }
  return out;
}

std::string run_cli(const std::string& args, int& exit_code) {
  std::string cmd = std::string(LEVI_CLI_PATH) + " " + args;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) throw std::runtime_error("popen failed");
  std::string out;
  std::array<char, 4096> buf;
  size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
  int status = pclose(pipe);
  exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return out;
}

}  // namespace

int main() {
  criterion(1, "k33 census", 100, [] {
    ClassificationReport r = classified(k33());
    expect(r.total == 6, "6 two-factors");
    expect(r.by_circuit_count == std::map<int, std::uint64_t>{{1, 6}}, "all single circuits");
    for (const auto& [profile, cnt] : r.by_profile)
      expect(profile == std::vector<int>{6}, "every circuit a hexagon");
    expect(r.two_factor_hamiltonian && r.two_factor_isomorphic && r.pseudo_two_factor_isomorphic,
           "all flags true");
    return "total=6 " + show_census(r.by_circuit_count);
  });

  criterion(2, "heawood 2-factor hamiltonian", 500, [] {
    ClassificationReport r = classified(heawood());
    expect(r.total == 24, "24 two-factors");
    expect(r.by_circuit_count == std::map<int, std::uint64_t>{{1, 24}}, "every 2-factor one 14-circuit");
    expect(r.two_factor_hamiltonian, "2FH flag");
    expect(naive_permanent(heawood()) == 24, "independent permanent count");
    return "total=24 permanent=24";
  });

  criterion(3, "pappus pseudo but not 2FI", 2000, [] {
    ClassificationReport r = classified(pappus());
    expect(r.pseudo_two_factor_isomorphic, "pseudo-2FI");
    expect(!r.two_factor_isomorphic, "not 2FI");
    for (const auto& [count, cnt] : r.by_circuit_count)
      expect(count == 1 || count == 3, "circuit counts within {1,3}");
    return show_census(r.by_circuit_count);
  });

  criterion(4, "d witness pairs n=8..15", 10000, [] {
    for (int n = 8; n <= 15; ++n) {
      WitnessPair w = d_witness_pair(n);
      expect(w.from_template, "closed-form templates at n=" + std::to_string(n));
      expect(w.hamiltonian.circuit_count == 1, "hamiltonian member");
      expect(w.disconnected.circuit_count == 2, "two circuits at n=" + std::to_string(n));
      ClassificationReport r = classified(w.host, EnumBudget::parity());
      expect(r.conclusive && !r.pseudo_two_factor_isomorphic,
             "early-exit verdict not pseudo at n=" + std::to_string(n));
    }
    return "8 sizes, all template-built, parity witnessed";
  });

  criterion(5, "t witness pairs and pairwise non-isomorphism", 10000, [] {
    for (int n : {1, 2}) {
      for (int v : {1, 2, 3}) {
        WitnessPair w = t_witness_pair(n, v);
        expect(w.from_template, "closed-form templates");
        std::vector<int> ham{20 * n};
        expect(w.hamiltonian.decomposition.lengths == ham, "profile {20n}");
        std::vector<int> dis{10, 20 * n - 10};
        expect(w.disconnected.decomposition.lengths == dis, "profile {10, 20n-10}");
      }
      expect(!are_isomorphic(t_graph(n, 1), t_graph(n, 2)), "t1 vs t2");
      expect(!are_isomorphic(t_graph(n, 1), t_graph(n, 3)), "t1 vs t3");
      expect(!are_isomorphic(t_graph(n, 2), t_graph(n, 3)), "t2 vs t3");
    }
    return "6 pairs validated, variants pairwise distinct";
  });

  criterion(6, "d(n) is the cyclic {0,1,3} levi graph", 5000, [] {
    for (int n = 7; n <= 15; ++n)
      expect(are_isomorphic(d_graph(n), cyclic_levi({n, 1, 3})),
             "isomorphism at n=" + std::to_string(n));
    return "n=7..15 all isomorphic";
  });

  criterion(7, "martinetti moves", 30000, [] {
    expect(extension_sites(heawood()).empty(), "heawood not extendible");
    auto classes = extensions_up_to_iso(pappus());
    expect(classes.size() == 1, "unique pappus extension");
    Graph ext = extend(pappus(), classes[0].representative);
    ClassificationReport r = classified(ext);
    expect(!r.pseudo_two_factor_isomorphic, "extension not pseudo-2FI");

    // extend anywhere in the corpus, then find a reduction leading back
    std::vector<Graph> pool;
    for (int n = 8; n <= 12; ++n) pool.push_back(d_graph(n));
    pool.push_back(t_graph(1, 1));
    pool.push_back(pappus());
    std::mt19937 rng(20250815);
    int done = 0;
    while (done < 50) {
      const Graph& g = pool[rng() % pool.size()];
      auto sites = extension_sites(g);
      if (sites.empty()) continue;
      const ExtensionSite& s = sites[rng() % sites.size()];
      Graph bigger = extend(g, s);
      std::string want = canonical_form(g);
      bool recovered = false;
      for (const auto& red : reduction_sites(bigger))
        if (red.after_certificate == want) {
          recovered = are_isomorphic(reduce(bigger, red), g);
          break;
        }
      expect(recovered, "round trip " + std::to_string(done));
      ++done;
    }
    return "heawood=0 sites, pappus unique, 50 round trips recovered";
  });

  criterion(8, "irreducibility verdicts", 60000, [] {
    for (int n = 7; n <= 12; ++n)
      expect(is_irreducible(d_graph(n)), "d(" + std::to_string(n) + ")");
    for (int v : {1, 2, 3}) expect(is_irreducible(t_graph(1, v)), "t variant");
    expect(is_irreducible(pappus()), "pappus");
    Graph ext = extend(pappus(), extension_sites(pappus())[0]);
    expect(!is_irreducible(ext), "pappus extension reducible");
    return "d(7..12), t(1), pappus irreducible; extension reducible";
  });

  criterion(9, "star product of two heawood copies", 60000, [] {
    Graph h = heawood();
    constexpr std::array<std::array<int, 3>, 6> perms{
        {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};
    for (const auto& perm : perms) {
      Graph s = star_product(h, 7, h, 0, perm);
      expect(s.vertex_count() == 26, "26 vertices");
      ClassificationReport r = classified(s);
      expect(r.two_factor_hamiltonian && r.total == 192, "192 hamiltonian 2-factors");
      auto cut = essential_4ec_obstruction(s);
      expect(cut.has_value() && cut->edges.size() == 3, "non-trivial 3-cut");
      std::set<int> join(cut->edges.begin(), cut->edges.end());
      // the only join edges run between the halves
      for (int e : cut->edges)
        expect(s.edge(e).u < 13 && s.edge(e).v >= 13, "cut equals the three join edges");
      auto sites = reduction_sites(s);
      expect(!sites.empty(), "reducible");
      for (const auto& site : sites) {
        expect(join.count(site.edge) == 1, "reduction only through the cut");
        ClassificationReport rr = classified(reduce(s, site));
        expect(rr.conclusive && !rr.pseudo_two_factor_isomorphic,
               "reduction not pseudo-2FI");
      }
    }
    return "6 pairings: 2FH, cut=join edges, reductions leave the class";
  });

  criterion(10, "property suites", 60000, [] {
    int permanent_checked = 0, parity_checked = 0;
    for (const NamedGraph& ng : corpus()) {
      if (ng.graph.vertex_count() <= 14) {
        std::uint64_t count =
            enumerate_perfect_matchings(ng.graph, [](const PerfectMatching&) { return true; }).count;
        expect(count == naive_permanent(ng.graph), "permanent match on " + ng.name);
        ++permanent_checked;
      }
      if (ng.graph.vertex_count() <= 26) {
        ClassificationReport full = classified(ng.graph);
        ClassificationReport fast = classified(ng.graph, EnumBudget::parity());
        expect(full.conclusive && fast.conclusive, "both conclusive on " + ng.name);
        expect(full.pseudo_two_factor_isomorphic == fast.pseudo_two_factor_isomorphic,
               "verdicts agree on " + ng.name);
        std::string a = classification_report_json(full);
        std::string b = classification_report_json(classified(ng.graph));
        expect(a == b, "byte-identical reports on " + ng.name);
        ++parity_checked;
      }
    }
    int cli_exit = 0;
    std::string t1 = run_cli("classify M???E\\`gL?sP_P_g_?", cli_exit);
    std::string t2 = run_cli("--threads 7 classify M???E\\`gL?sP_P_g_?", cli_exit);
    expect(t1 == t2 && !t1.empty(), "reports identical across --threads");
    for (const ClassificationReport& r : all_reports) {
      expect(!r.two_factor_hamiltonian || r.two_factor_isomorphic, "2FH implies 2FI");
      expect(!r.two_factor_isomorphic || r.pseudo_two_factor_isomorphic, "2FI implies pseudo");
    }
    return "permanent x" + std::to_string(permanent_checked) + ", parity x" +
           std::to_string(parity_checked) + ", implications on " +
           std::to_string(all_reports.size()) + " reports";
  });

  criterion(11, "verify-paper --nmax 12 exits clean", 180000, [] {
    int exit_code = -1;
    std::string out = run_cli("verify-paper --nmax 12", exit_code);
    expect(exit_code == 0, "exit code 0, got " + std::to_string(exit_code));
    expect(out.find("FAIL") == std::string::npos, "no failed claims");
    std::istringstream is(out);
    std::string line, last;
    while (std::getline(is, line))
      if (!line.empty()) last = line;
    return last.empty() ? std::string("no output") : last;
  });

  std::cout << (failures == 0 ? "ACCEPTANCE PASS" : "ACCEPTANCE FAIL") << "  (" << failures
            << " failing criteria)\n";
  return failures == 0 ? 0 : 1;
}
