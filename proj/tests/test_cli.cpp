#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <algorithm>
#include <array>
#include <cstdio>
#include <string>

#include <json.hpp>

using nlohmann::json;

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

// Runs the installed CLI through the shell; stderr is left alone so test
// logs show diagnostics from failing invocations.
RunResult run(const std::string& args, const std::string& stdin_text = {}) {
  std::string cmd;
  if (!stdin_text.empty()) {
    std::string quoted = stdin_text;
    size_t pos = 0;
    while ((pos = quoted.find('\'', pos)) != std::string::npos) {
      quoted.replace(pos, 1, "'\\''");
      pos += 4;
    }
    cmd = "printf '%s' '" + quoted + "' | ";
  }
  cmd += std::string(LEVI_CLI_PATH) + " " + args;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult r;
  std::array<char, 4096> buf;
  size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

}  // namespace

TEST_CASE("gen emits frozen graph6 strings") {
  CHECK(run("gen --family k33").out == "EFz_\n");
  CHECK(run("gen --family heawood").out == "M???E`gL?sP_P_g_?\n");
  CHECK(run("gen --family heawood").exit_code == 0);
  CHECK(run("gen --family cyclic --n 7 --base 0,1,3").out == run("gen --family heawood").out);
  RunResult d7_as_cyclic = run("iso - -", run("gen --family d --n 7").out + run("gen --family heawood").out);
  CHECK(d7_as_cyclic.exit_code == 0);
}

TEST_CASE("gen labels sidecar") {
  RunResult r = run("gen --family heawood --labels");
  auto nl = r.out.find('\n');
  REQUIRE(nl != std::string::npos);
  json labels = json::parse(r.out.substr(nl + 1));
  REQUIRE(labels.is_array());
  CHECK(labels.size() == 14);
  CHECK(labels[0] == "p0");
  CHECK(labels[13] == "l6");
}

TEST_CASE("classify consumes stdin and emits one json line per graph") {
  RunResult gen = run("gen --family pappus");
  RunResult r = run("classify -", gen.out);
  CHECK(r.exit_code == 0);
  json j = json::parse(r.out);
  CHECK(j["vertices"] == 18);
  CHECK(j["total_two_factors"] == 42);
  CHECK(j["by_circuit_count"]["1"] == 36);
  CHECK(j["by_circuit_count"]["3"] == 6);
  CHECK(j["flags"]["pseudo_two_factor_isomorphic"] == true);
  CHECK(j["flags"]["two_factor_isomorphic"] == false);
  CHECK(j["conclusive"] == true);

  // two graphs on stdin give two lines
  RunResult two = run("classify -", gen.out + gen.out);
  CHECK(std::count(two.out.begin(), two.out.end(), '\n') == 2);
}

TEST_CASE("classify edgelist pipeline") {
  RunResult gen = run("gen --family heawood --format edgelist");
  RunResult r = run("classify - --format edgelist", gen.out);
  CHECK(r.exit_code == 0);
  json j = json::parse(r.out);
  CHECK(j["total_two_factors"] == 24);
}

TEST_CASE("classify budget and mode controls") {
  RunResult gen = run("gen --family pappus");
  json truncated = json::parse(run("classify - --budget 5", gen.out).out);
  CHECK(truncated["total_two_factors"] == 5);
  CHECK(truncated["conclusive"] == false);
  json parity = json::parse(run("classify - --mode parity", gen.out).out);
  CHECK(parity["conclusive"] == true);
  CHECK(parity["flags"]["pseudo_two_factor_isomorphic"] == true);
}

TEST_CASE("props reports structural facts") {
  json j = json::parse(run("props -", run("gen --family heawood").out).out);
  CHECK(j["vertices"] == 14);
  CHECK(j["cubic"] == true);
  CHECK(j["bipartite"] == true);
  CHECK(j["girth"] == 6);
  CHECK(j["edge_connectivity"] == 3);
  CHECK(j["essentially_4ec"] == true);
  CHECK(j["certificate"].is_string());
}

TEST_CASE("iso exit codes follow the verdict") {
  std::string d7 = run("gen --family d --n 7").out;
  std::string hw = run("gen --family heawood").out;
  RunResult same = run("iso - -", d7 + hw);
  CHECK(same.exit_code == 0);
  json j = json::parse(same.out);
  CHECK(j["isomorphic"] == true);
  REQUIRE(j["mapping"].is_array());
  CHECK(j["mapping"].size() == 14);

  std::string k33 = run("gen --family k33").out;
  // same parity of sizes is not needed; verdict false gives exit 1
  RunResult diff = run("iso '" + k33.substr(0, k33.size() - 1) + "' '" +
                       hw.substr(0, hw.size() - 1) + "'");
  CHECK(diff.exit_code == 1);
  CHECK(json::parse(diff.out)["isomorphic"] == false);
}

TEST_CASE("martinetti subcommands") {
  std::string pappus = run("gen --family pappus").out;
  RunResult ext = run("martinetti extend - --up-to-iso", pappus);
  CHECK(ext.exit_code == 0);
  CHECK(std::count(ext.out.begin(), ext.out.end(), '\n') == 1);

  json sites = json::parse(run("martinetti sites -", pappus).out);
  CHECK(sites["extension_sites"].size() == 54);
  CHECK(sites["reduction_sites"].size() == 0);

  CHECK(run("martinetti irreducible -", pappus).out == "true\n");
  CHECK(run("martinetti irreducible -", ext.out).out == "false\n");

  json red = json::parse(run("martinetti reduce - --json", ext.out).out);
  CHECK(red["reductions"].size() > 0);
}

TEST_CASE("witnesses emits validated pairs") {
  json j = json::parse(run("witnesses --family d --n 11").out);
  CHECK(j["from_template"] == true);
  CHECK(j["hamiltonian"]["circuit_count"] == 1);
  CHECK(j["disconnected"]["circuit_count"] == 2);
  CHECK(j["disconnected"]["lengths"][0] == 6);
  json t = json::parse(run("witnesses --family t --n 1 --variant 2").out);
  CHECK(t["variant"] == 2);
  CHECK(t["hamiltonian"]["lengths"][0] == 20);
}

TEST_CASE("verify-paper gates on claim results") {
  RunResult r = run("verify-paper --nmax 8");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("PASS") != std::string::npos);
  CHECK(r.out.find("FAIL") == std::string::npos);
  json j = json::parse(run("verify-paper --nmax 8 --json --claims star").out);
  CHECK(j["all_pass"] == true);
  CHECK(j["claims"].size() == 6);
}

TEST_CASE("exit codes distinguish usage from domain errors") {
  CHECK(run("definitely-not-a-command 2>/dev/null").exit_code == 2);
  CHECK(run("2>/dev/null").exit_code == 2);
  CHECK(run("--help").exit_code == 0);
  CHECK(run("classify zz 2>/dev/null").exit_code == 1);
  CHECK(run("gen --family cyclic --n 6 --base 0,1,3 2>/dev/null").exit_code == 1);
  CHECK(run("gen --family d --n 6 2>/dev/null").exit_code == 1);
  CHECK(run("--threads 0 gen --family k33 2>/dev/null").exit_code == 2);
}

TEST_CASE("reports are byte identical across runs and thread settings") {
  std::string pappus = run("gen --family pappus").out;
  std::string a = run("classify -", pappus).out;
  std::string b = run("classify -", pappus).out;
  std::string c = run("--threads 4 classify -", pappus).out;
  CHECK(a == b);
  CHECK(a == c);
  std::string v1 = run("verify-paper --nmax 8 --json").out;
  std::string v2 = run("--threads 8 verify-paper --nmax 8 --json").out;
  CHECK(v1 == v2);
}
