#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "heyting/cli.hpp"

using namespace heyting;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string fnv1a(const std::string& s) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  std::ostringstream o;
  o << std::hex << std::setw(16) << std::setfill('0') << h;
  return o.str();
}

}  // namespace

TEST_CASE("show") {
  const Run z3 = run({"show", "Z(3)"});
  CHECK(z3.code == 0);
  CHECK(z3.out.find("size: 3\n") != std::string::npos);
  CHECK(z3.out.find("subdirectly irreducible: yes\n") != std::string::npos);
  CHECK(z3.out.find("opremum: g\n") != std::string::npos);
  CHECK(run({"show", "Z(6)+Z(2)+Z(2)"}).out.find("size: 8\n") != std::string::npos);
  CHECK(run({"show", "Z(2) x"}).code == 2);
  CHECK(run({"show", "C(9999)"}).code == 3);
  const Run big = run({"show", "Z(8)"});
  CHECK(big.out.find("note:") != std::string::npos);
  CHECK(z3.out.find("note:") == std::string::npos);
}

TEST_CASE("show --json round trips") {
  const Run r = run({"--json", "show", "Z(3)+B(2)"});
  REQUIRE(r.code == 0);
  const std::string path = "cli_roundtrip.json";
  std::ofstream(path) << r.out;
  CHECK(r.out.find("\"leq\"") != std::string::npos);
  std::remove(path.c_str());
}

TEST_CASE("valid") {
  CHECK(run({"valid", "C(2)", "p1 | ~p1"}).out == "VALID\n");
  const Run z3 = run({"valid", "Z(3)", "p1 | ~p1"});
  CHECK(z3.code == 1);
  CHECK(z3.out == "REFUTED p1=g\n");
  const std::string a =
      "~(p1 & p2) & (~~p2 -> p2) & ((~~p1 -> p1) -> p2 | ~p2) & (((~~p1 -> p1) -> p1 | ~p1) -> p2 | ~p2)";
  const Run at = run({"valid", "trunc(Zprime,12)", a, "--at", "p1=<g,0>,p2=<0,1>"});
  CHECK(at.code == 0);
  CHECK(at.out == "value: 1 (top)\n");
  CHECK(run({"valid", "Z(3)", "p1 |"}).code == 2);
  CHECK(run({"valid", "Z(3)", "[]p1"}).code == 2);
  for (const char* engine : {"naive", "propagate", "both"}) {
    CHECK(run({"--engine", engine, "valid", "Z(5)", "~p1 | ~~p1"}).code == 1);
  }
}

TEST_CASE("jankov") {
  const Run z3 = run({"jankov", "Z(3)", "--style", "dejongh"});
  CHECK(z3.code == 0);
  CHECK(z3.out.find("variables: 1\n") != std::string::npos);
  CHECK(run({"jankov", "B(2)"}).code == 4);
}

TEST_CASE("jankov output for Z(6)+Z(2)+Z(2) matches the golden file") {
  const Run r = run({"jankov", "Z(6)+Z(2)+Z(2)"});
  REQUIRE(r.code == 0);
  CHECK(r.out.find("variables: 8\n") != std::string::npos);
  const std::string golden = slurp(std::string(HEYTING_GOLDEN_DIR) + "/jankov_z6_z2_z2.txt");
  const std::string hash = slurp(std::string(HEYTING_GOLDEN_DIR) + "/jankov_z6_z2_z2.fnv");
  CHECK(r.out == golden);
  CHECK(fnv1a(r.out) + "\n" == hash);
}

TEST_CASE("embeds") {
  const Run yes = run({"embeds", "Z(2)", "Z(3)"});
  CHECK(yes.code == 0);
  CHECK(yes.out.rfind("YES\n", 0) == 0);
  CHECK(run({"embeds", "Z(6)+Z(2)+Z(2)", "Z(8)+Z(2)+Z(2)"}).out == "NO\n");
  CHECK(run({"embeds", "Z(2)+Z(7)+Z(2)", "trunc(KG,10)"}).code == 0);
  // Z(7) is Z(6) with a new top, and Z(6) does not sit inside the Z part.
  CHECK(run({"embeds", "Z(7)+Z(2)", "trunc(KG,10)"}).code == 1);
  CHECK(run({"--size-limit", "4", "embeds", "Z(2)", "Z(8)"}).code == 3);
}

TEST_CASE("present-verify and charf") {
  const Run ok = run({"present-verify", "--builtin", "zprime", "--k", "10"});
  CHECK(ok.code == 0);
  CHECK(ok.out == "VERIFIED-UP-TO-BOUND(8)\n");
  const std::string path = "mutated_presentation.json";
  std::ofstream(path) << R"J({"formula": "~(p1 & p2) & (~~p2 -> p2)", "vars": ["p1", "p2"],
    "target": "trunc(Zprime,10)", "valuation": [2, 1],
    "variety": {"generators": ["trunc(Zstar,10)"], "bound": 8}})J";
  const Run bad = run({"present-verify", path});
  CHECK(bad.code == 1);
  CHECK(bad.out.rfind("REFUTED(algebra ", 0) == 0);
  std::remove(path.c_str());
  CHECK(run({"present-verify", "missing.json"}).code == 2);
  CHECK(run({"present-verify", "--builtin", "zprime", "--k", "4"}).code == 4);
  const Run chi = run({"charf", "--builtin", "zprime", "--k", "10"});
  CHECK(chi.code == 0);
  CHECK(chi.out.find("variables: 2\n") != std::string::npos);
}

TEST_CASE("gmt and span") {
  CHECK(run({"gmt", "p1 -> p2"}).out == "[]([]p1 -> []p2)\n");
  const Run s = run({"span", "Z(3)"});
  CHECK(s.code == 0);
  CHECK(s.out.find("atoms: 2") != std::string::npos);
  CHECK(s.out.find("carcass isomorphic: yes\n") != std::string::npos);
  CHECK(run({"--json", "span", "Z(3)"}).out.find("\"box\"") != std::string::npos);
}

TEST_CASE("suite runs selected criteria") {
  const Run r = run({"suite", "acceptance", "--criterion", "2"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("criterion 2 PASS", 0) == 0);
  CHECK(r.err.find("time") != std::string::npos);
  CHECK(run({"suite", "nothing"}).code == 2);
}

TEST_CASE("bad command lines") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"--engine", "magic", "valid", "C(2)", "p1"}).code == 2);
}
