#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>
#include <sstream>

#include "qosc/cli.hpp"

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = qosc::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

nlohmann::json strip_elapsed(nlohmann::json j) {
  if (j.is_array()) {
    for (auto& e : j) e.erase("elapsed_ms");
  } else {
    j.erase("elapsed_ms");
  }
  return j;
}

}  // namespace

TEST_CASE("hermite text output") {
  const Run r = run({"hermite", "--n", "2", "--format", "text"});
  CHECK(r.code == 0);
  CHECK(r.out == "z^2 + (1+q) + z^-2\n");
}

TEST_CASE("hermite json output") {
  const Run r = run({"hermite", "--n", "1", "--format", "json"});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["object"] == "hermite");
  CHECK(j["params"]["n"] == 1);
  CHECK(j["value"] == "z + z^-1");
}

TEST_CASE("verify eq31 as json") {
  const Run r = run({"verify", "--identity", "eq31", "--n-max", "12", "--format", "json"});
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["identity"] == "eq31");
  CHECK(j["status"] == "pass");
  CHECK(j["params"]["n_max"] == 12);
  CHECK_FALSE(j.contains("counterexample"));
}

TEST_CASE("usage errors exit 2 and name the flag") {
  Run r = run({"verify", "--identity", "eq31", "--n-max", "-1"});
  CHECK(r.code == 2);
  CHECK(r.err.find("--n-max") != std::string::npos);
  r = run({"matrix-element", "--m", "1", "--n", "0", "--mu", "0.3"});
  CHECK(r.code == 2);
  CHECK(r.err.find("--mu") != std::string::npos);
  r = run({"verify", "--identity", "eq99"});
  CHECK(r.code == 2);
  CHECK(r.err.find("--identity") != std::string::npos);
  r = run({"hermite"});
  CHECK(r.code == 2);
  CHECK(r.err.find("--n") != std::string::npos);
  r = run({"hermite", "--n", "2", "--q", "1.5"});
  CHECK(r.code == 2);
  CHECK(r.err.find("--q") != std::string::npos);
  CHECK(run({}).code == 2);
}

TEST_CASE("help exits 0") {
  const Run r = run({"--help"});
  CHECK(r.code == 0);
  CHECK(r.out.find("verify") != std::string::npos);
}

TEST_CASE("text and json verdicts agree") {
  for (const std::string id : {"eq1", "eq9", "eq16", "eq19", "eq21", "eq27", "eq29", "eq31", "eq37", "eq40", "eigen"}) {
    const Run text = run({"verify", "--identity", id, "--n-max", "3", "--order", "4", "--dim", "8"});
    const Run json = run({"verify", "--identity", id, "--n-max", "3", "--order", "4", "--dim", "8", "--format", "json"});
    INFO(id);
    CHECK(text.code == json.code);
    const bool text_pass = text.out.rfind(id + ": pass", 0) == 0;
    CHECK(text_pass == (nlohmann::json::parse(json.out)["status"] == "pass"));
  }
}

TEST_CASE("json output is deterministic apart from timing") {
  const std::vector<std::string> args{"all", "--n-max", "3", "--order", "4", "--jobs", "3", "--format", "json"};
  const Run a = run(args);
  const Run b = run(args);
  CHECK(a.code == 0);
  CHECK(strip_elapsed(nlohmann::json::parse(a.out)).dump(2) == strip_elapsed(nlohmann::json::parse(b.out)).dump(2));
}

TEST_CASE("limit subcommand") {
  Run r = run({"limit", "--identity", "eq6", "--n", "3", "--format", "json"});
  CHECK(r.code == 0);
  CHECK(nlohmann::json::parse(r.out)["status"] == "pass");
  r = run({"limit", "--identity", "qexp_limit", "--mu", "1/4"});
  CHECK(r.code == 0);
}

TEST_CASE("matrix element text") {
  const Run r = run({"matrix-element", "--m", "0", "--n", "0"});
  CHECK(r.code == 0);
  CHECK(r.out == "1\n");
}
