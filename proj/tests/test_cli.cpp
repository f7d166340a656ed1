#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "monoidgeom/cli.hpp"

using nlohmann::json;
namespace cli = monoidgeom::cli;

namespace {

const std::string fx = MONOIDGEOM_FIXTURES;

std::string path(const std::string& name) { return fx + "/" + name + ".json"; }

struct Run {
  int code;
  std::string out;
  json value() const { return json::parse(out); }
};

Run run(std::vector<std::string> args) {
  std::ostringstream out;
  int code = cli::run(args, out);
  return {code, out.str()};
}

std::string temp_file(const std::string& name, const std::string& content) {
  auto p = std::filesystem::temp_directory_path() / ("monoidgeom_" + name);
  std::ofstream(p) << content;
  return p.string();
}

}  // namespace

TEST_CASE("monoid info") {
  auto r = run({"monoid", "info", path("nn2")});
  REQUIRE(r.code == 0);
  auto v = r.value();
  CHECK(v["dim"] == 2);
  CHECK(v["faces"] == 4);
  CHECK(v["toric"] == true);
  CHECK(v["sharp"] == true);
  CHECK(v["dull"] == false);
  CHECK(v["gp"]["free_rank"] == 2);
}

TEST_CASE("monoid saturate") {
  auto r = run({"monoid", "saturate", path("n23")});
  REQUIRE(r.code == 0);
  CHECK(r.value()["generators"] == json::parse("[[1]]"));
  auto g = run({"monoid", "saturate", path("ngeq2")});
  CHECK(g.value()["generators"] == json::parse("[[1]]"));
}

TEST_CASE("monoid contains") {
  auto yes = run({"monoid", "contains", path("p2"), "--element", "[2,0]"});
  REQUIRE(yes.code == 0);
  auto no = run({"monoid", "contains", path("n23"), "--element", "[1]"});
  REQUIRE(no.code == 0);
  CHECK(yes.out != no.out);
}

TEST_CASE("spec dot has one node per prime") {
  auto r = run({"spec", "dot", path("a1cone")});
  REQUIRE(r.code == 0);
  CHECK(r.out.rfind("digraph", 0) == 0);
  std::size_t nodes = 0;
  for (std::size_t pos = 0; (pos = r.out.find("[label=", pos)) != std::string::npos; ++pos) ++nodes;
  CHECK(nodes == 4);
}

TEST_CASE("presentation commands") {
  auto e = run({"pres", "equal", path("idempotent_pres"), "--x", "[3]", "--y", "[1]"});
  REQUIRE(e.code == 0);
  CHECK(e.value()["verdict"] == "equal");
  CHECK(e.value()["witness"]["steps"].size() >= 1);

  auto d = run({"pres", "equal", path("z_pres"), "--x", "[1,0]", "--y", "[0,2]"});
  REQUIRE(d.code == 0);

  auto i = run({"pres", "integral", path("idempotent_pres")});
  REQUIRE(i.code == 0);
  CHECK(i.value()["integral"] == "false");

  auto g = run({"pres", "groupify", path("p2_pres")});
  REQUIRE(g.code == 0);
  CHECK(g.out.find("\"torsion\":[2]") != std::string::npos);

  auto po = run({"pres", "pushout", path("pushout_n")});
  CHECK(po.code == 0);
  auto co = run({"pres", "coequalizer", path("coeq_nn2")});
  CHECK(co.code == 0);
}

TEST_CASE("algebra and series commands") {
  auto m = run({"algebra", "mul", path("p2"), path("p2_f"), path("p2_g")});
  REQUIRE(m.code == 0);
  CHECK(m.value()["terms"].empty());
  auto s = run({"series", "truncate", path("n"), "--order", "4"});
  CHECK(s.code == 0);
  auto b = run({"rees", "build", path("n"), "--ideal", "[[2],[3]]"});
  REQUIRE(b.code == 0);
  CHECK(b.value()["generators"] == json::parse("[[0,1],[1,2],[1,3]]"));
}

TEST_CASE("precondition and validation failures exit 2 with an error object") {
  auto a = run({"monoid", "irreducibles", path("z")});
  CHECK(a.code == cli::exit_invalid);
  CHECK(a.value()["error"]["code"] == "NotSharp");

  auto b = run({"monoid", "info", "/nonexistent/monoid.json"});
  CHECK(b.code == cli::exit_invalid);
  CHECK(b.value()["error"].contains("message"));

  auto bad = temp_file("bad.json", R"({"ambient":{"free_rank":1,"torsion":[4,2]},"generators":[[1,0]]})");
  auto c = run({"monoid", "info", bad});
  CHECK(c.code == cli::exit_invalid);
  CHECK(c.value()["error"]["code"] == "Validation");

  auto d = run({"monoid", "frobnicate", path("n")});
  CHECK(d.code == cli::exit_invalid);
  CHECK(run({}).code == cli::exit_invalid);
  CHECK(run({"--help"}).code == cli::exit_ok);
  CHECK(run({"pres", "equal", path("idempotent_pres"), "--bogus", "1"}).code == cli::exit_invalid);
}

TEST_CASE("unknown answers exit 3 only under strict mode") {
  std::vector<std::string> args = {"pres", "equal", path("deep_pres"), "--x", "[3,0]", "--y", "[2,1]", "--bound", "0"};
  auto lax = run(args);
  CHECK(lax.code == cli::exit_ok);
  CHECK(lax.value()["verdict"] == "unknown");
  args.push_back("--strict");
  CHECK(run(args).code == cli::exit_unknown);
  args.pop_back();
  setenv("MONOIDGEOM_STRICT", "1", 1);
  CHECK(run(args).code == cli::exit_unknown);
  unsetenv("MONOIDGEOM_STRICT");

  // with the default bound the same query is settled
  auto settled = run({"pres", "equal", path("deep_pres"), "--x", "[3,0]", "--y", "[2,1]", "--strict"});
  CHECK(settled.code == cli::exit_ok);
  CHECK(settled.value()["verdict"] == "equal");
}

TEST_CASE("output is deterministic") {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"monoid", "info", path("a1cone")},
           {"spec", "primes", path("nn3")},
           {"dual", "dual", path("cone12")},
           {"pres", "tautological", path("a1cone")}}) {
    auto a = run(args), b = run(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
  }
}

TEST_CASE("monoid JSON round-trips through the CLI") {
  for (const auto& name : {"nn2", "a1cone", "p2", "cone12"}) {
    auto once = run({"monoid", "saturate", path(name)});
    REQUIRE(once.code == 0);
    auto file = temp_file(std::string(name) + "_sat.json", once.out);
    auto twice = run({"monoid", "saturate", file});
    REQUIRE(twice.code == 0);
    CHECK(once.value() == twice.value());
  }
}

TEST_CASE("large integers survive as strings") {
  auto big = temp_file("big.json", R"({"ambient":{"free_rank":1,"torsion":[]},"generators":[["123456789012345678901234567890"]]})");
  auto r = run({"monoid", "irreducibles", big});
  REQUIRE(r.code == 0);
  CHECK(r.out.find("\"123456789012345678901234567890\"") != std::string::npos);
}
