#include <catch_amalgamated.hpp>

#include <cstdlib>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "polylift/cli.hpp"
#include "polylift/finite_algebra.hpp"
#include "polylift/relation.hpp"

namespace {

  struct Outcome {
    int         code = 0;
    std::string out;
    std::string err;
  };

  Outcome run(std::vector<std::string> args) {
    args.insert(args.begin(), "polylift");
    std::vector<char const*> argv;
    for (auto const& a : args) {
      argv.push_back(a.c_str());
    }
    std::ostringstream out, err;
    int const code = polylift::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
  }

  bool contains(std::string const& hay, std::string const& needle) {
    return hay.find(needle) != std::string::npos;
  }

}  // namespace

TEST_CASE("exit codes", "[cli]") {
  CHECK(run({"validate", "c 0 x = c 0 (c 0 x)", "--alpha", "2"}).code == 0);
  CHECK(run({"validate", "s 0 1 x0 = x0", "--alpha", "2"}).code == 1);
  CHECK(run({"validate", "(c 9 x) = x", "--alpha", "2"}).code == 2);
  CHECK(run({"validate", "(c 0 x = x"}).code == 2);
  CHECK(run({}).code == 2);
  CHECK(run({"--help"}).code == 0);
  CHECK(run({"nonsense"}).code == 2);
  CHECK(run({"axioms", "--alpha", "2", "--exhaustive", "--sampled", "5"}).code == 2);
  CHECK(run({"decompose", "1 0 0"}).code == 0);
  CHECK(run({"decompose", "1 0"}).code == 0);
  CHECK(run({"decompose", "1 5"}).code == 2);
  CHECK(run({"sat", "(R0 v0 v1)", "--model", "alpha=2 base=2 R0={(0,1)}", "--assignment", "0 1"})
            .code
        == 0);
  CHECK(run({"sat", "(R1 v0 v1)", "--model", "alpha=2 base=2 R0={(0,1)}", "--assignment", "0 1"})
            .code
        == 2);
  CHECK(run({"equiv", "(E 0 (R0 v0 v1))", "(E 1 (R0 v0 v1))", "--alpha", "2"}).code == 1);
  CHECK(run({"equiv", "(R0 v0 v1)", "(not (not (R0 v0 v1)))", "--alpha", "2"}).code == 0);
}

TEST_CASE("validate reports and confirms witnesses", "[cli]") {
  auto const r = run({"validate", "s 0 1 x0 = x0", "--alpha", "2", "--json"});
  REQUIRE(r.code == 1);
  auto const j = nlohmann::json::parse(r.out);
  CHECK(j.at("status") == "counterexample");
  CHECK(j.at("carrier") == "alpha=2 base=2");
  auto const witness = j.at("results").at(0).at("witness").get<std::string>();
  CHECK(witness == "x0={(0,0)}");

  auto const back = run({"validate", "s 0 1 x0 = x0", "--alpha", "2", "--check-witness", witness});
  CHECK(back.code == 1);
  CHECK(contains(back.out, "witness confirmed"));

  auto const other = run({"validate", "s 0 1 x0 = x0", "--alpha", "2", "--check-witness", "x0={(1,1)}"});
  CHECK(other.code == 1);
  auto const no = run({"validate", "s 0 1 x0 = x0", "--alpha", "2", "--check-witness", "x0={}"});
  CHECK(no.code == 0);

  auto const one = run({"validate", "s 0 1 x0 = x0", "p 0 1 x0 = x0", "--alpha", "2", "--base", "1"});
  CHECK(one.code == 0);

  auto const two = run({"validate", "(and x y) = x", "--alpha", "1", "--json"});
  REQUIRE(two.code == 1);
  auto const w2 = nlohmann::json::parse(two.out)["results"][0]["witness"].get<std::string>();
  CHECK(run({"validate", "(and x y) = x", "--alpha", "1", "--check-witness", w2}).code == 1);
}

TEST_CASE("json output is deterministic and independent of jobs", "[cli]") {
  std::vector<std::string> const base{"axioms", "--alpha", "2", "--json"};
  auto const                     a = run(base);
  auto const                     b = run(base);
  REQUIRE(a.code == 0);
  CHECK(a.out == b.out);
  auto with_jobs = base;
  with_jobs.insert(with_jobs.end(), {"--jobs", "3"});
  CHECK(run(with_jobs).out == a.out);

  std::vector<std::string> const sampled{"validate", "(c 0 x) = (c 1 x)", "--alpha", "3",
                                         "--base", "3", "--sampled", "200", "--seed", "4", "--json"};
  auto const s1 = run(sampled);
  auto const s2 = run(sampled);
  REQUIRE(s1.code == 1);
  CHECK(s1.out == s2.out);
  auto sj = sampled;
  sj.insert(sj.end(), {"--jobs", "4"});
  CHECK(run(sj).out == s1.out);
  auto const j = nlohmann::json::parse(s1.out);
  CHECK(j.at("strategy") == "sampled");
  CHECK(j.at("samples") == 200);
  CHECK(j.at("seed") == 4);
}

TEST_CASE("budget comes from the environment when set", "[cli]") {
  CHECK(run({"axioms", "--alpha", "2", "--budget", "10"}).code == 2);
  ::setenv("POLYLIFT_BUDGET", "10", 1);
  auto const r = run({"axioms", "--alpha", "2"});
  ::unsetenv("POLYLIFT_BUDGET");
  CHECK(r.code == 2);
  CHECK(contains(r.err, "10"));
  CHECK(run({"axioms", "--alpha", "2"}).code == 0);
}

TEST_CASE("axioms over a supplied algebra", "[cli]") {
  auto const path = std::string("polylift_test_algebra.json");
  {
    std::ofstream f(path);
    f << polylift::to_json(polylift::two_element_algebra(2));
  }
  auto const ok = run({"axioms", "--alpha", "2", "--algebra", path});
  CHECK(ok.code == 0);
  auto bad               = polylift::two_element_algebra(2);
  bad.transp_tables[1]   = {1, 0};
  {
    std::ofstream f(path);
    f << polylift::to_json(bad);
  }
  auto const fails = run({"axioms", "--alpha", "2", "--algebra", path});
  CHECK(fails.code == 1);
  {
    std::ofstream f(path);
    f << "{\"alpha\": 2}";
  }
  CHECK(run({"axioms", "--alpha", "2", "--algebra", path}).code == 2);
  std::remove(path.c_str());
}

TEST_CASE("other subcommands", "[cli]") {
  auto const d = run({"decompose", "1 0 0"});
  CHECK(contains(d.out, "[0,1] ∘ [2/1]"));
  CHECK(contains(d.out, "[2/0] ∘ [0/1] ∘ [1/2]"));
  CHECK(run({"decompose", "--all", "--alpha", "3"}).code == 0);

  auto const s = run({"subst", "(E 1 (R0 v0 v1))", "--alpha", "2", "--i", "0", "--j", "1"});
  CHECK(s.code == 0);
  CHECK(contains(s.out, "(E 0 (R0 v1 v0))"));
  CHECK(contains(s.out, "(E 1 (R0 v1 v1))"));

  auto const l = run({"lift", "--alpha", "2", "--relation", "{(0,1)}"});
  CHECK(l.code == 0);
  CHECK(contains(l.out, "CLAIM3"));
  auto const lj = run({"lift", "--alpha", "2", "--count", "1", "--seed", "3", "--json"});
  CHECK(lj.code == 0);
  CHECK(nlohmann::json::parse(lj.out).at("status") == "pass");

  auto const demo = run({"demo", "counterexample", "--alpha", "2"});
  CHECK(demo.code == 0);
  CHECK(contains(demo.out, "result: PASS"));
}

TEST_CASE("the installed binary runs", "[cli]") {
  auto const cmd = std::string(POLYLIFT_BINARY) + " validate \"s 0 1 x0 = x0\" --alpha 2 > /dev/null";
  int const  rc  = std::system(cmd.c_str());
  REQUIRE(WIFEXITED(rc));
  CHECK(WEXITSTATUS(rc) == 1);
}
