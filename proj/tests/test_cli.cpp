#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "ghom/errors.hpp"
#include "ghom/families.hpp"
#include "ghom/runner.hpp"
#include "ghom/script.hpp"
#include "json.hpp"

using namespace ghom;
using nlohmann::json;

namespace {

RunResult run(const std::string& text) { return run_script(text, RunFlags{}); }

const std::string PREAMBLE =
    "ring R = QQ[x,y];\n"
    "module K = coker R [[x, y]];\n"
    "module m = coker R [[y],[-x]] twists target (1,1) source (2);\n";

#ifdef GHOM_CLI_PATH
struct CliRun {
  int exit_code = -1;
  std::string out;
};

CliRun run_binary(const std::string& args, const std::string& stdin_text = "") {
  std::string cmd;
  if (!stdin_text.empty()) {
    std::string file = "/tmp/ghom_cli_test_input.ghom";
    std::ofstream(file) << stdin_text;
    cmd = std::string(GHOM_CLI_PATH) + " " + args + " < " + file + " 2>/dev/null";
  } else {
    cmd = std::string(GHOM_CLI_PATH) + " " + args + " 2>/dev/null";
  }
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  CliRun r;
  char buf[4096];
  size_t n;
  while ((n = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, n);
  int status = pclose(p);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}
#endif

}  // namespace

TEST_CASE("flag parsing for fields and orders") {
  CHECK(field_from_flag("QQ").describe() == "QQ");
  CHECK(field_from_flag("Fp:7").describe() == "Fp:7");
  CHECK(field_from_flag("F31").describe() == "Fp:31");
  CHECK_THROWS_AS(field_from_flag("Fp:6"), InputError);
  CHECK_THROWS_AS(field_from_flag("GF(7)"), InputError);
  CHECK(order_from_flag("grevlex").kind == OrderKind::GrevLex);
  CHECK(order_from_flag("grlex").kind == OrderKind::GrLex);
  CHECK_THROWS_AS(order_from_flag("lex"), InputError);
}

TEST_CASE("gdim report for the residue field") {
  RunResult r = run(PREAMBLE + "compute gdim K;\n");
  REQUIRE(r.exit_code == 0);
  REQUIRE(r.report.size() == 1);
  const auto& j = r.report[0];
  CHECK(j["command"] == "gdim");
  CHECK(j["verdict"] == "finite");
  CHECK(j["g"] == 2);
  CHECK(j["abf"] == true);
  CHECK(j["witnesses"]["nonzero_ext"] == json::array({2}));
  CHECK(j["witnesses"]["depth_module"] == 0);
  CHECK(j["witnesses"]["depth_ring"] == 2);
  CHECK(j["witnesses"]["syzygy_test"]["ok"] == true);
  CHECK(j["bound"] == 4);
  CHECK(j["inputs"]["statement"] == "compute gdim K;");
}

TEST_CASE("module reports carry printable presentations") {
  RunResult r = run(PREAMBLE + "compute transpose K;\ncompute hilbert K;\n");
  REQUIRE(r.exit_code == 0);
  const auto& tr = r.report[0];
  CHECK(tr["verdict"] == "presented");
  CHECK(tr["module"]["generators"] == json::array({-1, -1}));
  CHECK(tr["module"]["relations"] == json::parse(R"([["x"],["y"]])"));
  CHECK(tr["module"]["relation_twists"] == json::array({0}));
  CHECK(tr["module"]["hilbert"] == "(2*t^-1 - 1)/(1-t)(1-t)");
  CHECK(tr["module"]["dsl"] == "coker R [[x],[y]] twists target (-1,-1) source (0)");
  CHECK(r.report[1]["verdict"] == "(1 - 2*t + t^2)/(1-t)(1-t)");
}

TEST_CASE("sigma, ext and torsionless verdicts on the standard pair") {
  RunResult r = run(PREAMBLE +
                    "compute sigma K;\ncompute sigma m;\ncompute ext 1 K R;\n"
                    "compute ext 2 K R;\ncompute torsionless K;\ncompute embed m 2;\n");
  REQUIRE(r.exit_code == 0);
  CHECK(r.report[0]["verdict"] == "neither");
  CHECK(r.report[0]["witnesses"]["kernel_hilbert"] == "(1 - 2*t + t^2)/(1-t)(1-t)");
  CHECK(r.report[0]["witnesses"]["dual"]["dsl"] == "free R ()");
  CHECK(r.report[1]["verdict"] == "torsionless");
  CHECK(r.report[1]["witnesses"]["cokernel_hilbert"] == "(1 - 2*t + t^2)/(1-t)(1-t)");
  CHECK(r.report[1]["witnesses"]["double_dual"]["dsl"] == "free R (0)");
  CHECK(r.report[2]["verdict"] == "zero");
  CHECK(r.report[3]["verdict"] == "presented");
  CHECK(r.report[3]["module"]["hilbert"] == "(t^-2 - 2*t^-1 + 1)/(1-t)(1-t)");
  CHECK(r.report[3]["module"]["generators"] == json::array({-2}));
  CHECK(r.report[4]["result"] == false);
  CHECK(r.report[4]["witness"]["i"] == 1);
  CHECK(r.report[5]["verdict"] == "obstructed");
  CHECK(r.report[5]["witnesses"]["failed_at"] == 2);
  CHECK(r.report[5]["witnesses"]["steps_completed"] == 1);
}

TEST_CASE("ring-level commands") {
  RunResult r = run(
      "ring F = QQ[x,y]/(x^2, x*y);\n"
      "module kf = coker F [[x, y]];\n"
      "compute gorenstein F;\ncompute gdim kf;\ncompute depth F;\ncompute dim F;\n");
  REQUIRE(r.exit_code == 0);
  CHECK(r.report[0]["verdict"] == "not-gorenstein");
  CHECK(r.report[0]["result"] == false);
  CHECK(r.report[0]["witnesses"]["depth"] == 0);
  CHECK(r.report[0]["witnesses"]["dim"] == 1);
  CHECK(r.report[1]["verdict"] == "infinite-up-to-bound");
  CHECK(r.report[1]["witnesses"]["nonzero_ext"] == json::array({1, 2, 3}));
  CHECK(!r.report[1].contains("g"));
  CHECK(r.report[2]["depth"] == 0);
  CHECK(r.report[3]["dim"] == 1);
}

TEST_CASE("input errors abort with code two and a position") {
  RunResult bad1 = run("ring R = QQ[x]/(x+1);\n");
  CHECK(bad1.exit_code == 2);
  CHECK(bad1.report.back()["error"]["type"] == "input");
  CHECK(bad1.report.back()["error"]["message"] ==
        "ring 'R': inhomogeneous generator 'x+1'");

  RunResult bad2 = run("ring R = QQ[x,y];\nmodule M = coker R [[x,\n");
  CHECK(bad2.exit_code == 2);
  CHECK(bad2.report.back()["error"]["message"] ==
        "parse error at 3:1: expected an expression");

  RunResult bad3 = run("compute gdim M;\n");
  CHECK(bad3.exit_code == 2);
  CHECK(bad3.report.back()["error"]["message"] ==
        "parse error at 1:15: unknown name 'M'");

  RunResult bad4 = run(PREAMBLE + "compute frobnicate K;\n");
  CHECK(bad4.exit_code == 2);
  CHECK(bad4.report.back()["error"]["type"] == "input");
}

TEST_CASE("reports are byte-deterministic") {
  std::string script = PREAMBLE + "compute gdim K;\ncompute sigma m;\nverify thm17e;\n";
  RunResult a = run(script);
  RunResult b = run(script);
  CHECK(a.exit_code == 0);
  CHECK(a.report.dump(2) == b.report.dump(2));

  RunFlags flags;
  flags.seed = 9;
  RunResult s1 = run_suites({"prop8", "cor43"}, flags);
  RunResult s2 = run_suites({"prop8", "cor43"}, flags);
  CHECK(s1.exit_code == 0);
  CHECK(s1.report.dump(2) == s2.report.dump(2));
}

TEST_CASE("verify statements embed suite reports") {
  RunResult r = run("verify thm17e;\n");
  CHECK(r.exit_code == 0);
  const auto& j = r.report[0];
  CHECK(j["command"] == "verify");
  CHECK(j["suite"] == "thm17e");
  CHECK(j["verdict"] == "pass");
  CHECK(j["passed"] == 4);
  CHECK(j["total"] == 4);
  CHECK(j["assertions"].size() == 4);
  for (const auto& a : j["assertions"]) CHECK(a["pass"] == true);
}

TEST_CASE("suite runner rejects unknown suites") {
  RunResult r = run_suites({"bogus"}, RunFlags{});
  CHECK(r.exit_code == 2);
  CHECK(r.report.back()["error"]["message"] == "unknown suite 'bogus'");
  RunResult s = run_script("verify bogus;\n", RunFlags{});
  CHECK(s.exit_code == 2);
  CHECK(s.report.back()["error"]["message"] == "unknown suite 'bogus'");
}

TEST_CASE("family listings are frozen by seed") {
  RunFlags flags;
  flags.seed = 5;
  RunResult r = list_family("xonly", 2, flags);
  REQUIRE(r.exit_code == 0);
  const auto& j = r.report[0];
  CHECK(j["command"] == "family");
  CHECK(j["family"] == "xonly");
  CHECK(j["seed"] == 5);
  REQUIRE(j["instances"].size() == 2);
  CHECK(j["instances"][0]["script"] ==
        "ring R = QQ[x,y];\nmodule M = coker R [[x],[0]] twists target (1,2) source (2);\n");
  CHECK(j["instances"][1]["script"] ==
        "ring R = QQ[x,y];\nmodule M = coker R [[x,x^2],[-1,0]] twists target (1,2) source (2,3);\n");
  RunResult again = list_family("xonly", 2, flags);
  CHECK(r.report.dump() == again.report.dump());
  CHECK(list_family("nope", 2, flags).exit_code == 2);
}

TEST_CASE("printed presentations re-parse to the same module") {
  for (const char* family : {"mixed", "gorenstein"}) {
    auto instances = generate_family(family, 6, 11, CoefficientField::rationals());
    for (const auto& inst : instances) {
      Script parsed = parse_script(inst.script);
      Environment env = build_environment(parsed, MonomialOrder{});
      std::string ring_line = inst.script.substr(0, inst.script.find('\n') + 1);
      for (const auto& name : inst.module_names) {
        const FPModule& M = env.modules.at(name);
        std::string round = ring_line + "module M2 = " +
                            module_to_dsl("R", M) + ";\n";
        Environment env2 = build_environment(parse_script(round), MonomialOrder{});
        INFO(inst.description);
        CHECK(same_presentation(env2.modules.at("M2"), M));
      }
    }
  }
}

TEST_CASE("every suite accepts a nonzero seed") {
  RunFlags flags;
  flags.seed = 7;
  for (const auto& name : suite_names()) {
    SuiteResult s = run_suite(name, flags.seed, field_from_flag(flags.field),
                              order_from_flag(flags.order));
    INFO(name);
    CHECK(s.ok());
    CHECK(!s.assertions.empty());
  }
}

#ifdef GHOM_CLI_PATH

TEST_CASE("binary: suite run produces machine-readable JSON") {
  CliRun r = run_binary("--suite prop8 --seed 3");
  CHECK(r.exit_code == 0);
  json j = json::parse(r.out);
  REQUIRE(j.is_array());
  CHECK(j[0]["command"] == "verify");
  CHECK(j[0]["passed"] == 12);
  CHECK(j[0]["total"] == 12);
  CliRun again = run_binary("--suite prop8 --seed 3");
  CHECK(r.out == again.out);
}

TEST_CASE("binary: scripts flow through stdin") {
  CliRun r = run_binary("-", PREAMBLE + "compute grade K;\n");
  CHECK(r.exit_code == 0);
  json j = json::parse(r.out);
  CHECK(j[0]["grade"] == 2);
}

TEST_CASE("binary: malformed input exits with code two") {
  CliRun r = run_binary("-", "ring R = QQ[x]/(x+1);\n");
  CHECK(r.exit_code == 2);
  json j = json::parse(r.out);
  CHECK(j[0]["error"]["type"] == "input");
  CliRun noinput = run_binary("");
  CHECK(noinput.exit_code == 2);
}

TEST_CASE("binary: family listing") {
  CliRun r = run_binary("--family xonly --count 1 --seed 5");
  CHECK(r.exit_code == 0);
  json j = json::parse(r.out);
  CHECK(j[0]["instances"].size() == 1);
}

#endif  // GHOM_CLI_PATH
