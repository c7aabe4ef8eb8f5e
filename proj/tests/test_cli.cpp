#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <sys/wait.h>

#include <cstdio>
#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"

namespace {

struct RunResult {
  int code = -1;
  std::string out;
};

RunResult run(const std::string& args, bool keep_stderr = false) {
  std::string cmd = std::string(COX_CLI_PATH) + " " + args +
                    (keep_stderr ? " 2>&1" : " 2>/dev/null");
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  std::string out;
  char buf[4096];
  size_t n;
  while ((n = fread(buf, 1, sizeof buf, p)) > 0) out.append(buf, n);
  int st = pclose(p);
  RunResult r;
  r.code = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  r.out = out;
  return r;
}

std::string sys_file(const std::string& name) {
  return std::string(COX_DATA_DIR) + "/systems/" + name;
}

std::string act_file(const std::string& name) {
  return std::string(COX_DATA_DIR) + "/actions/" + name;
}

bool contains(const std::string& hay, const std::string& needle) {
  return hay.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("classify and components render the partition") {
  RunResult r = run("classify --system " + sys_file("a2t.cox"));
  CHECK(r.code == 0);
  CHECK(r.out == "component {1,2,3}: Affine(A~2)\n");

  r = run("components --system " + sys_file("a2xa2.cox"));
  CHECK(r.code == 0);
  CHECK(contains(r.out, "rank 4, components 2"));
  CHECK(contains(r.out, "component {1,2}"));
  CHECK(contains(r.out, "component {3,4}"));

  r = run("classify --system " + sys_file("x3_433.cox"));
  CHECK(r.code == 0);
  CHECK(contains(r.out, "CompactHyperbolic(X3(4,3,3))"));
}

TEST_CASE("word verbs reduce, measure and bound") {
  RunResult r = run("reduce --system " + sys_file("b2.cox") +
                    " --word \"2 1 2 1 2 1\"");
  CHECK(r.code == 0);
  CHECK(r.out == "1 2\n");

  r = run("length --system " + sys_file("b2.cox") + " --word \"2 1 2 1 2 1\"");
  CHECK(r.code == 0);
  CHECK(r.out == "length 2\n");

  r = run("reduce --system " + sys_file("b2.cox") + " --word \"1 1\"");
  CHECK(r.code == 0);
  CHECK(r.out == "e\n");

  r = run("longest --system " + sys_file("b2.cox"));
  CHECK(r.code == 0);
  CHECK(contains(r.out, "word 1 2 1 2"));
  CHECK(contains(r.out, "length 4"));

  r = run("longest --system " + sys_file("a3.cox") + " --subset \"1 3\"");
  CHECK(r.code == 0);
  CHECK(contains(r.out, "length 2"));

  r = run("longest --system " + sys_file("aii.cox"), true);
  CHECK(r.code == 1);  // no longest element in infinite type
}

TEST_CASE("order reports exact, certified or undecided") {
  RunResult r = run("order --system " + sys_file("b2.cox") + " --word \"1 2\"");
  CHECK(r.code == 0);
  CHECK(r.out == "order 4\n");

  r = run("order --system " + sys_file("aii.cox") + " --word \"1 2\"");
  CHECK(r.code == 0);
  CHECK(contains(r.out, "infinite (certified)"));

  r = run("order --system " + sys_file("i7.cox") + " --word \"1 2\" --cap 3");
  CHECK(r.code == 1);
  CHECK(contains(r.out, "undecided (cap 3)"));
}

TEST_CASE("roots enumerates or lists inversions") {
  RunResult r = run("roots --system " + sys_file("a2.cox"));
  CHECK(r.code == 0);
  CHECK(contains(r.out, "enumerated 3 positive roots"));
  CHECK(contains(r.out, "closed"));

  r = run("roots --system " + sys_file("b2.cox") + " --word \"1 2 1\"");
  CHECK(r.code == 0);
  CHECK(contains(r.out, "length 3"));
  int lines = 0;
  for (char ch : r.out)
    if (ch == '\n') ++lines;
  CHECK(lines == 4);  // header plus one inversion per unit of length
}

TEST_CASE("fixed subgroup data matches the folding") {
  RunResult r = run("fixed --system " + sys_file("a3.cox") + " --tau \"(1 3)\"");
  CHECK(r.code == 0);
  CHECK(contains(r.out, "orbit {1,3}: finite type, generator 1 3"));
  CHECK(contains(r.out, "orbit {2}: finite type, generator 2"));
  CHECK(contains(r.out, "m(1,2) = 4"));
  CHECK(contains(r.out, "fixed system type: B2"));

  r = run("fixed --system " + sys_file("aii.cox") + " --tau \"(1 2)\"");
  CHECK(r.code == 0);
  CHECK(contains(r.out, "orbit {1,2}: infinite type, no generator"));
}

TEST_CASE("finite-index follows the component criterion") {
  RunResult r = run("finite-index --system " + sys_file("a2t.cox") +
                    " --tau \"(1 2 3)\"");
  CHECK(r.code == 1);
  CHECK(r.out == "finite index: no\n");

  r = run("finite-index --system " + sys_file("a2xa2.cox") +
          " --tau \"(1 3)(2 4)\"");
  CHECK(r.code == 0);
  CHECK(r.out == "finite index: yes\n");

  r = run("finite-index --system " + sys_file("a2t.cox") + " --tau \"id\"");
  CHECK(r.code == 0);
}

TEST_CASE("essential certifies Coxeter elements") {
  RunResult r = run("essential --system " + sys_file("a2t.cox") +
                    " --word \"1 2 3\"");
  CHECK(r.code == 0);
  CHECK(contains(r.out, "essential: yes"));

  r = run("essential --system " + sys_file("aii.cox") + " --word \"1\"");
  CHECK(r.code == 1);
  CHECK(contains(r.out, "essential: undecided"));
}

TEST_CASE("aci reports the subgroup and answers queries") {
  std::string base = "aci --system " + sys_file("aiixa1.cox");
  RunResult r = run(base);
  CHECK(r.code == 0);
  CHECK(contains(r.out, "O_rho components: {3}"));
  CHECK(contains(r.out, "G_rho: none"));

  r = run(base + " --query \"3 ; 0\"");
  CHECK(r.code == 0);
  CHECK(contains(r.out, "verdict: ACI"));

  r = run(base + " --query \"1 ; 0\"");
  CHECK(r.code == 1);
  CHECK(contains(r.out, "verdict: NotACI"));
  CHECK(contains(r.out, "w-clause"));
  CHECK(contains(r.out, "distinct conjugates: 25"));

  r = run("aci --system " + sys_file("aii.cox") + " --action " +
          act_file("swap2.act") + " --query \"e ; 1\"");
  CHECK(r.code == 1);
  CHECK(contains(r.out, "g-clause"));

  r = run("aci --system " + sys_file("b2.cox") + " --query \"1 2 1 2 ; 0\"");
  CHECK(r.code == 0);
  CHECK(contains(r.out, "verdict: ACI"));
}

TEST_CASE("verify-tables passes on the shipped data") {
  RunResult r = run("verify-tables");
  CHECK(r.code == 0);
  CHECK(contains(r.out, "28 rows: 28 passed, 0 failed"));
  CHECK(contains(r.out, "PASS A~2"));
  CHECK(contains(r.out, "PASS Y6(5,5)"));
  CHECK(!contains(r.out, "FAIL"));
}

TEST_CASE("oracle cross-checks") {
  RunResult r = run("oracle --system " + sys_file("a2xa2.cox") + " --action " +
                    act_file("swap22.act"));
  CHECK(r.code == 0);
  CHECK(contains(r.out, "group size 72"));
  CHECK(contains(r.out, "matches criterion description: yes"));

  r = run("oracle --system " + sys_file("aii.cox") +
          " --mode growth --query \"1 ; 0\"");
  CHECK(r.code == 0);
  CHECK(contains(r.out, "distinct conjugates: 25"));

  r = run("oracle --system " + sys_file("aii.cox") +
          " --mode growth --query \"1 ; 0\" --target 10000 --radius 6");
  CHECK(r.code == 1);
}

TEST_CASE("json reports round-trip byte for byte") {
  std::vector<std::string> cmds = {
      "classify --system " + sys_file("a2t.cox") + " --json",
      "order --system " + sys_file("aii.cox") + " --word \"1 2\" --json",
      "fixed --system " + sys_file("a3.cox") + " --tau \"(1 3)\" --json",
      "roots --system " + sys_file("b2.cox") + " --word \"1 2 1\" --json "
      "--approx",
      "aci --system " + sys_file("aiixa1.cox") + " --query \"3 ; 0\" --json",
      "verify-tables --json",
      "essential --system " + sys_file("a2t.cox") + " --word \"1 2 3\" --json",
  };
  for (const std::string& cmd : cmds) {
    CAPTURE(cmd);
    RunResult r = run(cmd);
    auto parsed = nlohmann::ordered_json::parse(r.out);
    CHECK(parsed.dump(2) + "\n" == r.out);
    std::vector<std::string> keys;
    for (auto it = parsed.begin(); it != parsed.end(); ++it)
      keys.push_back(it.key());
    CHECK(keys == std::vector<std::string>{"verb", "inputs", "result",
                                           "certificates", "undecided"});
  }
}

TEST_CASE("approx hints are marked and stringly typed") {
  RunResult r = run("roots --system " + sys_file("b2.cox") +
                    " --word \"1 2\" --json --approx");
  auto parsed = nlohmann::ordered_json::parse(r.out);
  const auto& inv = parsed["result"]["inversions"];
  REQUIRE(inv.size() == 2);
  const auto& first = inv[0][0];
  REQUIRE(first.is_object());
  CHECK(first.contains("exact"));
  CHECK(first.contains("approx"));
  CHECK(first["approx"].is_string());
  // without the flag the same value is a bare exact string
  r = run("roots --system " + sys_file("b2.cox") + " --word \"1 2\" --json");
  parsed = nlohmann::ordered_json::parse(r.out);
  CHECK(parsed["result"]["inversions"][0][0].is_string());
}

TEST_CASE("caps are always stated in cap-bearing reports") {
  RunResult r = run("order --system " + sys_file("b2.cox") +
                    " --word \"1\" --json");
  auto parsed = nlohmann::ordered_json::parse(r.out);
  CHECK(parsed["inputs"]["caps"]["cap"] == 200);

  r = run("essential --system " + sys_file("a2t.cox") +
          " --word \"1 2 3\" --depth 6 --cap 120 --json");
  parsed = nlohmann::ordered_json::parse(r.out);
  CHECK(parsed["inputs"]["caps"]["depth"] == 6);
  CHECK(parsed["inputs"]["caps"]["cap"] == 120);

  r = run("aci --system " + sys_file("aii.cox") +
          " --query \"1 ; 0\" --radius 40 --json");
  CHECK(r.code == 1);
  parsed = nlohmann::ordered_json::parse(r.out);
  CHECK(parsed["inputs"]["caps"]["radius"] == 40);
  CHECK(parsed["undecided"] == false);
}

TEST_CASE("exit codes separate usage errors from domain failures") {
  CHECK(run("frobnicate", true).code == 2);        // unknown verb
  CHECK(run("classify", true).code == 2);          // missing --system
  CHECK(run("classify --system /nonexistent.cox", true).code == 2);
  RunResult r = run("length --system " + sys_file("a2.cox") +
                    " --word \"9\"", true);
  CHECK(r.code == 1);  // out-of-range generator is a domain failure
  r = run("aci --system " + sys_file("b2.cox") + " --query \"1 2 ; 0\"", true);
  CHECK(r.code == 1);  // not an involution
  CHECK(contains(r.out, "involution"));
  CHECK(run("--help", true).code == 0);
}
