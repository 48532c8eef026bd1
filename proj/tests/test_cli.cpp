#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "zroupoid/algebra.hpp"
#include "zroupoid/chain.hpp"
#include "zroupoid/cli.hpp"
#include "zroupoid/json_io.hpp"

using namespace zroupoid;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args, const std::string& stdin_text = "") {
  std::ostringstream out, err;
  std::istringstream in(stdin_text);
  const int code = run_cli(args, out, err, in);
  return {code, out.str(), err.str()};
}

// Writes an algebra file that is removed when the guard goes out of scope.
struct TempAlgebra {
  std::string path;
  TempAlgebra(const std::string& name, const FiniteZroupoid& a) : path(name) {
    std::ofstream(path) << to_json(a).dump();
  }
  ~TempAlgebra() { std::remove(path.c_str()); }
};

}  // namespace

TEST_CASE("chain table") {
  const auto r = run({"chain", "--neg", "2", "--pos", "3", "--emit", "table"});
  CHECK(r.code == 0);
  CHECK(r.out ==
        "=> -2 -1  0  1  2  3\n"
        "-2 -2 -2 -2 -2 -2 -2\n"
        "-1 -2 -1 -1 -1 -1 -1\n"
        " 0 -2 -1  3  3  3  3\n"
        " 1 -2 -1  2  2  2  3\n"
        " 2 -2 -1  1  1  2  3\n"
        " 3 -2 -1  0  1  2  3\n");
}

TEST_CASE("chain json round-trips") {
  const auto r = run({"--emit", "json", "chain", "--neg", "1", "--pos", "1"});
  CHECK(r.code == 0);
  const auto j = parse_json(r.out);
  CHECK(j["schema"] == "zroupoid-v1");
  CHECK(algebra_from_json(j) == build_chain(1, 1));
  CHECK(j["labels"] == Json::array({"-1", "0", "1"}));
}

TEST_CASE("enumerate count") {
  const auto r = run({"enumerate", "--size", "3", "--chains", "--emit", "count"});
  CHECK(r.code == 0);
  CHECK(r.out == "3\n");
  CHECK(run({"enumerate", "--size", "4", "--all-i20", "--emit", "count"}).out == "18\n");
}

TEST_CASE("enumerate json is identical for any worker count") {
  const auto one = run({"enumerate", "--size", "5", "--all-i20", "--emit", "json", "--workers", "1"});
  const auto three = run({"enumerate", "--size", "5", "--all-i20", "--emit", "json", "--workers", "3"});
  CHECK(one.code == 0);
  CHECK(one.out == three.out);
  const auto j = parse_json(one.out);
  CHECK(j["schema"] == "enumeration-v1");
  CHECK(j["count"] == 61);
  CHECK(j["algebras"].size() == 61);
  CHECK(j["complete"] == true);
}

TEST_CASE("enumerate with a budget reports a partial result") {
  const auto r = run({"enumerate", "--size", "6", "--all-i20", "--budget", "3", "--emit", "json"});
  CHECK(r.code == 0);
  CHECK(parse_json(r.out)["complete"] == false);
  CHECK(r.err.find("partial") != std::string::npos);
}

TEST_CASE("check exit codes and witnesses") {
  TempAlgebra alg("cli_check.json", build_chain(2, 3));
  CHECK(run({"check", alg.path, "--statement", "x = x"}).code == 0);
  const auto fails = run({"check", alg.path, "--statement", "x -> y = y -> x"});
  CHECK(fails.code == 1);
  // Text output shows labels; JSON witnesses are indices (label 0 is index 2).
  CHECK(fails.out == "fails at x = 0, y = 1\n");

  const auto json = run({"check", alg.path, "--statement", "x -> y = y -> x", "--emit", "json"});
  CHECK(json.code == 1);
  const auto j = parse_json(json.out);
  CHECK(j["schema"] == "check-result-v1");
  CHECK(j["holds"] == false);
  CHECK(j["witness"]["x"] == 2);
  CHECK(j["witness"]["y"] == 3);

  const auto bad = run({"check", alg.path, "--statement", "x -> = y", "--emit", "json"});
  CHECK(bad.code == 2);
  CHECK(bad.out.empty());
  CHECK(bad.err.find("syntax error") != std::string::npos);
}

TEST_CASE("check reads the algebra from standard input") {
  const std::string text = to_json(constant_zero_algebra()).dump();
  const auto r = run({"check", "-", "--statement", "x'' = x"}, text);
  CHECK(r.code == 1);
  CHECK(r.out == "fails at x = 1\n");
}

TEST_CASE("check with a statement file") {
  TempAlgebra alg("cli_check_file.json", build_chain(1, 2));
  {
    std::ofstream("cli_statement.txt") << "# transitivity\nx <= y & y <= z => x <= z\n";
  }
  const auto r = run({"check", alg.path, "--statement-file", "cli_statement.txt"});
  std::remove("cli_statement.txt");
  CHECK(r.code == 0);
  CHECK(r.out == "holds\n");
  CHECK(run({"check", alg.path}).code == 2);
}

TEST_CASE("order") {
  TempAlgebra chain("cli_order.json", build_chain(1, 1));
  const auto r = run({"order", chain.path});
  CHECK(r.code == 0);
  CHECK(r.out.find("-1 < 0 < 1\n") != std::string::npos);
  CHECK(r.out.find("greatest: 1\n") != std::string::npos);

  TempAlgebra cz("cli_order_cz.json", constant_zero_algebra());
  const auto bad = run({"order", cz.path, "--emit", "json"});
  CHECK(bad.code == 1);
  const auto j = parse_json(bad.out);
  CHECK(j["schema"] == "order-report-v1");
  CHECK(j["reflexive"]["holds"] == false);
  CHECK(j["reflexive"]["witness"] == Json::array({1}));
  CHECK(j["greatest"].is_null());
}

TEST_CASE("iso") {
  TempAlgebra a("cli_iso_a.json", build_chain(0, 1));
  TempAlgebra b("cli_iso_b.json", build_chain(1, 0));
  CHECK(run({"iso", a.path, a.path}).code == 0);
  const auto r = run({"iso", a.path, b.path, "--emit", "json"});
  CHECK(r.code == 1);
  CHECK(parse_json(r.out)["isomorphic"] == false);
}

TEST_CASE("lemmas") {
  const auto r = run({"lemmas", "--universe", "chains:4", "--only", "L2.7-1,L5.5"});
  CHECK(r.code == 0);
  CHECK(r.out.find("L2.7-1") != std::string::npos);
  CHECK(r.out.find("10 algebras, 2 checks: 20 applied, 20 passed, 0 failed, 0 out of scope") != std::string::npos);

  const auto j = parse_json(run({"lemmas", "--universe", "i20:3", "--emit", "json"}).out);
  CHECK(j["schema"] == "suite-report-v1");
  CHECK(j["summary"]["failed"] == 0);

  CHECK(run({"lemmas", "--universe", "chains:3", "--emit", "count"}).out == "0\n");
  CHECK(run({"lemmas", "--universe", "nope"}).code == 2);
  CHECK(run({"lemmas", "--universe", "chains:3", "--only", "L0"}).code == 2);

  {
    std::ofstream("cli_catalog.txt") << "C1 | I20 | x -> y = y -> x | deliberately false\n";
  }
  const auto f = run({"lemmas", "--universe", "chains:2", "--catalog", "cli_catalog.txt"});
  std::remove("cli_catalog.txt");
  CHECK(f.code == 1);
  CHECK(f.out.find("C1 fails on algebra") != std::string::npos);
}

TEST_CASE("lemmas over a file universe from standard input") {
  Json arr = Json::array({to_json(build_chain(2, 1)), to_json(constant_zero_algebra())});
  const auto r = run({"lemmas", "--universe", "file:-", "--emit", "json"}, arr.dump());
  CHECK(r.code == 0);
  const auto j = parse_json(r.out);
  CHECK(j["summary"]["algebras"] == 2);
  CHECK(j["scopes"][1]["I20"] == false);
}

TEST_CASE("usage errors exit with 2 and leave standard output empty") {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {},
           {"frobnicate"},
           {"chain", "--neg", "1"},
           {"chain", "--neg", "1", "--pos", "1", "--emit", "count"},
           {"chain", "--neg", "x", "--pos", "1"},
           {"--emit", "yaml", "chain", "--neg", "1", "--pos", "1"},
           {"enumerate", "--size", "9"},
           {"enumerate", "--size", "3", "--chains", "--all-i20"},
           {"check", "missing.json", "--statement", "x = x"},
       }) {
    const auto r = run(args);
    CHECK(r.code == 2);
    CHECK(r.out.empty());
    CHECK_FALSE(r.err.empty());
  }
  const auto malformed = run({"order", "-"}, "{\"schema\": \"zroupoid-v1\", \"size\": 2, \"zero\": 0, \"table\": [[0, 5], [0, 0]]}");
  CHECK(malformed.code == 2);
  CHECK(malformed.err.find("table[0][1]") != std::string::npos);
  CHECK(run({"order", "-"}, "{\"size\": 1}").code == 2);
  CHECK(run({"order", "-"}, "not json").code == 2);
}

TEST_CASE("help") {
  const auto r = run({"--help"});
  CHECK(r.code == 0);
  CHECK(r.out.find("enumerate") != std::string::npos);
}
