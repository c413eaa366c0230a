#include <doctest.h>

#include <sstream>
#include <vector>

#include "suq2/cli.hpp"
#include "suq2/errors.hpp"

using namespace suq2;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "suq2cli");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::main(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("configuration validation") {
  cli::RunConfig cfg;
  CHECK_NOTHROW(cli::validate(cfg));
  cfg.q = 1.0;
  CHECK_THROWS_AS(cli::validate(cfg), QOutOfRange);
  cfg = {};
  cfg.twolmax = 3;
  CHECK_THROWS_AS(cli::validate(cfg), CutoffTooSmall);
  cfg = {};
  cfg.tolerance = 0.0;
  CHECK_THROWS_AS(cli::validate(cfg), Error);
}

TEST_CASE("passing commands exit with 0") {
  for (const std::vector<std::string>& args :
       {std::vector<std::string>{"duality", "--arange", "-5..5"}, {"ds-double"}, {"check-relations", "--cutoff", "8"},
        {"spectrum", "--cutoff", "8"}, {"check-hopf", "--degree", "2"}, {"q-grid", "--qs", "0.3,0.5"}}) {
    const Result r = invoke(args);
    INFO(args.front() << ": " << r.err);
    CHECK(r.code == 0);
    const Json j = Json::parse(r.out);
    CHECK(j["pass"] == true);
    CHECK(j["command"] == args.front());
    for (const char* key : {"command", "params", "conventions", "checks", "pass"}) CHECK(j.contains(key));
  }
}

TEST_CASE("failing checks exit with 1") {
  const Result r = invoke({"drinfeld-commutators", "--generator", "alpha", "--decay-threshold", "1e-300"});
  CHECK(r.code == 1);
  CHECK(Json::parse(r.out)["pass"] == false);
}

TEST_CASE("invalid configuration exits with 2") {
  CHECK(invoke({"spectrum", "--q", "1.5"}).code == 2);
  CHECK(invoke({"spectrum", "--cutoff", "2"}).code == 2);
  CHECK(invoke({"duality", "--arange", "5..-5"}).code == 2);
  CHECK(invoke({"no-such-command"}).code == 2);
  CHECK(invoke({"commutators", "--cutoff", "10"}).code == 2);  // cutoff L0 = 20 is outside the band
  CHECK(invoke({"haar", "--element", "garbage"}).code == 2);
}

TEST_CASE("index table CSV has 81 rows") {
  const Result r = invoke({"index-table", "--kmin", "-4", "--kmax", "4", "--lmin", "-4", "--lmax", "4", "--output",
                           "csv"});
  CHECK(r.code == 0);
  CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 82);
  CHECK(r.out.rfind("k,l,result\n", 0) == 0);
  CHECK(r.out.find("\n0,1,-1*V[0]\n") != std::string::npos);
}

TEST_CASE("JSON output is byte-identical across runs") {
  for (const std::vector<std::string>& args :
       {std::vector<std::string>{"haar", "--cutoff", "8"}, {"index-table"}, {"duality"}}) {
    CHECK(invoke(args).out == invoke(args).out);
  }
}

TEST_CASE("text and csv renderings") {
  const Result t = invoke({"ds-double", "--output", "text"});
  CHECK(t.out.rfind("ds-double: PASS", 0) == 0);
  const Result c = invoke({"ds-double", "--output", "csv"});
  CHECK(c.out.rfind("name,pass,measured,expected\n", 0) == 0);
}

TEST_CASE("the seed enters the report") {
  const Json a = Json::parse(invoke({"haar", "--cutoff", "8", "--seed", "1"}).out);
  CHECK(a["params"]["seed"] == 1);
}
