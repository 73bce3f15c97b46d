// Runs the dglevel binary: exit codes, report shape and byte-identical reruns.

#include <doctest.h>
#include <json.hpp>

#include <array>
#include <cstdio>
#include <string>
#include <sys/wait.h>

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(DGLEVEL_BIN) + " " + args + " 2>/dev/null";
  Run r;
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  std::array<char, 4096> buf{};
  while (const std::size_t n = fread(buf.data(), 1, buf.size(), p)) r.out.append(buf.data(), n);
  const int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

nlohmann::ordered_json run_json(const std::string& args, int expected_code = 0) {
  const Run r = run(args);
  CHECK_MESSAGE(r.code == expected_code, args);
  return nlohmann::ordered_json::parse(r.out);
}

const std::string data = DGLEVEL_DATA;

}  // namespace

TEST_CASE("reports are ordered and deterministic") {
  const std::string cmds[] = {
      "molecule --d 4 --l 3 --m 2",
      "decompose --d 4 --dims 0:1,3:1,7:1,10:1",
      "emss --d 4 --top s7 --hopf 1",
      "p-tower --l 2 --d 3",
      "bundle-level --gens 4,6",
      "tor --d 4 --field f2 --window 0:40",
  };
  for (const auto& c : cmds) {
    const Run a = run(c), b = run(c);
    CHECK_MESSAGE(a.code == 0, c);
    CHECK_MESSAGE(a.out == b.out, c);
    const auto j = nlohmann::ordered_json::parse(a.out);
    std::vector<std::string> keys;
    for (const auto& [k, v] : j.items()) keys.push_back(k);
    CHECK(keys == std::vector<std::string>{"command", "inputs", "claim", "result"});
  }
}

TEST_CASE("subcommand results") {
  auto j = run_json("molecule --d 4 --l 3 --m 2");
  CHECK(j["result"]["cohomology"] == nlohmann::ordered_json{{"-3", 1}, {"7", 1}});
  CHECK(j["result"]["level"] == 3);

  j = run_json("level --d 4 --dims 0:1,3:1,7:1,10:1");
  CHECK(j["result"]["kind"] == "interval");
  CHECK(j["result"]["lower"] == 2);
  CHECK(j["result"]["upper"] == 3);

  j = run_json("level --module " + data + "/molecule_l3_m1.json");
  CHECK(j["result"]["level"] == 2);
  CHECK(j["result"]["filtrationBound"] == 2);

  j = run_json("phi --module " + data + "/molecule_l3_m1.json");
  CHECK(j["result"]["compactness"] == "compact");

  j = run_json("phi --d 4 --dims 0:1 --window 0:60");
  CHECK(j["result"]["verdict"] == "InfiniteCertified");
  CHECK(j["result"]["period"] == 6);

  j = run_json("emss --d 4 --top s7 --hopf 1");
  CHECK(j["result"]["total"] == nlohmann::ordered_json{{"0", 1}, {"3", 1}});
  j = run_json("emss --d 4 --top s7 --hopf 0");
  CHECK(j["result"]["finiteness"]["verdict"] == "InfiniteCertified");

  j = run_json("hopf --model " + data + "/hopf_s4.json");
  CHECK(j["result"]["hopf"] == "1/1");

  j = run_json("p-tower --l 3 --d 3");
  CHECK(j["result"]["lower"] == 3);

  j = run_json("pile --stages 2");
  CHECK(j["result"]["upperBound"] == 3);

  j = run_json("bundle-level --gens 4,6 --f4 zero");
  CHECK(j["result"]["level"] == 1);

  const Run dot = run("quiver --d 3 --format dot");
  CHECK(dot.code == 0);
  CHECK(dot.out.find("has 2 components") != std::string::npos);
  CHECK(dot.out.find("digraph") != std::string::npos);
}

TEST_CASE("exit codes") {
  auto j = run_json("molecule --d 4 --l 1 --m -1", 1);
  CHECK(j["error"] == "InvalidInput");
  j = run_json("emss --d 3 --top s5 --hopf 1", 1);
  CHECK(j["error"] == "OddDimensionNonzeroHopf");
  j = run_json("p-tower --l 2 --d 4 --m 3", 1);
  CHECK(j["error"] == "MTooSmall");
  CHECK(run("").code == 2);
  CHECK(run("molecule --d 4").code == 2);
  CHECK(run("decompose --d 4 --dims 0:1 --format dot").code == 2);
  CHECK(run("tor --d 4 --strategy magic").code == 2);
}

TEST_CASE("window from the environment") {
  const Run a = run("tor --d 4 --window 0:20");
  const std::string env = "DG_LEVEL_WINDOW=0:20 ";
  FILE* p = popen((env + DGLEVEL_BIN + " tor --d 4").c_str(), "r");
  REQUIRE(p != nullptr);
  std::string out;
  std::array<char, 4096> buf{};
  while (const std::size_t n = fread(buf.data(), 1, buf.size(), p)) out.append(buf.data(), n);
  pclose(p);
  CHECK(out == a.out);
}
