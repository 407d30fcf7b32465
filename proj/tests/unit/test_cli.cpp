#include <sstream>

#include "doctest.h"
#include "modrep/cli/runner.hpp"

using namespace modrep;
using namespace modrep::cli;

namespace {

Scenario parse(const std::string& text) {
  std::istringstream in(text);
  return parse_scenario(in, "test.ini");
}

std::size_t error_line(const std::string& text) {
  try {
    parse(text);
  } catch (const ScenarioError& e) {
    return e.line();
  }
  return 0;
}

const char* kMinimal =
    "# comment\n"
    "[scenario]\nname = tiny\n"
    "[field]\np = 3\nn = 1\n"
    "[group]\nspec = s3\n"
    "[line]\nalpha = 1\n"
    "[checks]\nrun = blocks, simples\n";

}  // namespace

TEST_CASE("scenario files parse and report errors with line numbers") {
  const Scenario s = parse(kMinimal);
  CHECK(s.name == "tiny");
  CHECK(s.field.p == 3);
  CHECK(s.checks == std::vector<std::string>{"blocks", "simples"});
  CHECK(s.options.seed == kDefaultSeed);

  CHECK(error_line(std::string(kMinimal) + "[options]\nsed = 3\n") == 14);
  CHECK(error_line(std::string(kMinimal) + "[options]\nseed = x\n") == 14);
  CHECK(error_line(std::string(kMinimal) + "oops\n") == 13);
  CHECK(error_line("[scenario\n") == 1);
  std::string bad_check = kMinimal;
  bad_check.replace(bad_check.find("simples"), 7, "nonsense");
  CHECK(error_line(bad_check) == 12);
  std::string bad_alpha = kMinimal;
  bad_alpha.replace(bad_alpha.find("alpha = 1"), 9, "alpha = 1, 1");
  CHECK(error_line(bad_alpha) == 10);
  CHECK_THROWS_AS(load_scenario("/nonexistent/file.ini"), ScenarioError);
}

TEST_CASE("built-in scenarios survive a round trip through the file format") {
  for (const auto& name : builtin_names()) {
    const Scenario s = builtin(name);
    const Scenario t = parse(to_ini(s));
    CHECK(to_ini(t) == to_ini(s));
    CHECK(t.checks == s.checks);
    CHECK(t.expect.ext_blocks == s.expect.ext_blocks);
  }
  CHECK_THROWS_AS(builtin("nope"), InvalidArgument);
}

TEST_CASE("group specs resolve") {
  CHECK(resolve_group("g84").group->order() == 84);
  CHECK(resolve_group("elementary:2:3").group->order() == 8);
  CHECK(resolve_group("cyclic:6").group->order() == 6);
  CHECK_THROWS_AS(resolve_group("mystery"), InvalidArgument);
}

TEST_CASE("reports are deterministic and the graph has one node per family member") {
  Scenario s = builtin("p3");
  const Report a = run_scenario(s);
  const Report b = run_scenario(s);
  CHECK(a.passed());
  CHECK(emit(a, Format::Json) == emit(b, Format::Json));
  REQUIRE(a.ext);
  const std::string dot = emit(a, Format::Dot);
  std::size_t nodes = 0;
  std::istringstream lines(dot);
  for (std::string l; std::getline(lines, l);) nodes += l.find("group=") != std::string::npos;
  CHECK(nodes == a.ext->family.size());
  const std::string text = emit(a, Format::Text);
  CHECK(text.find("FAIL") == std::string::npos);

  s.checks = {"blocks"};
  const Report c = run_scenario(s);
  CHECK_THROWS_AS(emit(c, Format::Dot), InvalidArgument);
  CHECK_THROWS_AS(parse_format("yaml"), InvalidArgument);
}

TEST_CASE("an empty check list gives the summary only") {
  Scenario s = parse(std::string(kMinimal).replace(std::string(kMinimal).find("blocks, simples"), 15, ""));
  CHECK(s.checks.empty());
  const Report r = run_scenario(s);
  CHECK(r.checks.empty());
  CHECK(r.passed());
  CHECK(r.summary["group_order"] == 6);
  CHECK(r.summary["orbit_stabilizer"] == true);
}

TEST_CASE("unmet expectations fail the check") {
  Scenario s = builtin("s3-sanity");
  s.checks = {"blocks"};
  s.expect.kg_blocks = 2;
  const Report r = run_scenario(s);
  CHECK_FALSE(r.passed());
  CHECK(r.check("blocks")->summary.find("expected") != std::string::npos);
}

TEST_CASE("lemma suite refuses a line that is not G-stable") {
  Scenario s = builtin("p3");
  s.checks = {"lemma_suite"};
  const Report r = run_scenario(s);
  CHECK_FALSE(r.check("lemma_suite")->passed);
}
