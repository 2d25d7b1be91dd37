#include <doctest.h>

#include <nlohmann/json.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "../support/oracles.hpp"
#include "zeta_forge/serialize.hpp"
#include "zeta_forge_cli/cli.hpp"

using nlohmann::json;
using zeta_forge::cli::main_entry;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = main_entry(args, out, err);
  return {code, out.str(), err.str()};
}

// Every leaf value other than booleans, nulls, and counters must be a string.
void require_decimal_strings(const json& value, const std::string& key = "") {
  if (value.is_object()) {
    for (const auto& [k, v] : value.items()) {
      require_decimal_strings(v, k);
    }
  } else if (value.is_array()) {
    for (const auto& v : value) {
      require_decimal_strings(v, key);
    }
  } else if (value.is_number()) {
    REQUIRE_MESSAGE(value.is_number_integer(), key);
    REQUIRE_MESSAGE((key == "terms" || key == "digits" || key == "checked" || key == "n" || key == "k" ||
                     key == "truncation" || key == "proposition" || key == "required_factor"),
                    key);
  }
}

}  // namespace

TEST_CASE("verify a single pair") {
  Result r = invoke({"verify", "--pair", "thm1", "--nmax", "10", "--kmax", "10", "--a", "0", "--a", "1/3"});
  CHECK(r.code == 0);
  json doc = json::parse(r.out);
  CHECK(doc["pair"] == "thm1");
  CHECK(doc["checked"] == 2 * 11 * 11);
  CHECK(doc["failures"].empty());
  require_decimal_strings(doc);
}

TEST_CASE("verify all pairs") {
  Result r = invoke({"verify", "--nmax", "5", "--kmax", "5"});
  CHECK(r.code == 0);
  json doc = json::parse(r.out);
  REQUIRE(doc.is_array());
  CHECK(doc.size() == 7);
}

TEST_CASE("verify rejects a nonzero integer a") {
  Result r = invoke({"verify", "--pair", "koecher", "--nmax", "3", "--kmax", "3", "--a", "1/1"});
  CHECK(r.code == 2);
  CHECK(r.err.find("nonzero integer") != std::string::npos);
}

TEST_CASE("verify with certification") {
  Result r = invoke({"verify", "--pair", "koecher", "--nmax", "4", "--kmax", "4", "--a", "0", "--certify"});
  CHECK(r.code == 0);
  json doc = json::parse(r.out);
  REQUIRE(doc["certification"].size() == 1);
  CHECK(doc["certification"][0]["doubling"]["shrinking"] == true);
  CHECK(doc["certification"][0]["doubling"]["steps"].size() == 3);
  require_decimal_strings(doc);
}

TEST_CASE("zeta command") {
  Result r = invoke({"zeta", "--formula", "az-z3", "--digits", "50"});
  CHECK(r.code == 0);
  json doc = json::parse(r.out);
  CHECK(doc["digits"] == 50);
  CHECK(doc["value"] == "1.20205690315959428539973816151144999076498629234050");
  require_decimal_strings(doc);
}

TEST_CASE("gf command") {
  Result r = invoke({"gf", "--identity", "bbb", "--a", "1/2", "--digits", "20"});
  CHECK(r.code == 0);
  json doc = json::parse(r.out);
  CHECK(doc["value"] == "2.00000000000000000000");
  require_decimal_strings(doc);

  Result checked = invoke({"gf", "--identity", "thm4", "--a", "1/3", "--digits", "25", "--check"});
  CHECK(checked.code == 0);
  CHECK(json::parse(checked.out)["agrees"] == true);
}

TEST_CASE("coeffs command") {
  Result r = invoke({"coeffs", "--identity", "koecher", "--order", "2", "--digits", "30"});
  CHECK(r.code == 0);
  json doc = json::parse(r.out);
  REQUIRE(doc["coefficients"].size() == 3);
  CHECK(doc["tail_bounds"].size() == 3);
  CHECK(doc["coefficients"][1] == "1.036927755143369926331365486457");
  require_decimal_strings(doc);

  Result csv = invoke({"coeffs", "--identity", "bbb", "--order", "1", "--digits", "20", "--format", "csv"});
  CHECK(csv.code == 0);
  CHECK(csv.out.rfind("j,value,tail_bound\n0,1.64493406684822643647,", 0) == 0);

  Result corollary = invoke({"coeffs", "--formula", "thm2-z4", "--digits", "30"});
  CHECK(corollary.code == 0);
  CHECK(json::parse(corollary.out)["agrees"] == true);
}

TEST_CASE("bench command") {
  Result r = invoke({"bench", "--identity", "thm4", "--nmax", "30", "--format", "csv"});
  CHECK(r.code == 0);
  std::istringstream lines(r.out);
  std::string line;
  std::getline(lines, line);
  CHECK(line == "n,term_magnitude,ratio");
  std::string last;
  int rows = 0;
  while (std::getline(lines, line)) {
    last = line;
    ++rows;
  }
  CHECK(rows == 30);
  const std::string ratio = last.substr(last.rfind(',') + 1);
  CHECK(std::abs(std::stod(ratio) * 1024 - 1) < 0.1);

  Result doc = invoke({"bench", "--identity", "thm1", "--nmax", "5"});
  CHECK(doc.code == 0);
  json parsed = json::parse(doc.out);
  CHECK(parsed["ratio"] == "1/27");
  CHECK(parsed["rows"].size() == 5);
}

TEST_CASE("usage errors exit with 2") {
  CHECK(invoke({"zeta", "--formula", "nope"}).code == 2);
  CHECK(invoke({"zeta", "--formula", "az-z3", "--digits", "0"}).code == 2);
  CHECK(invoke({"gf", "--identity", "koecher", "--a", "x/y"}).code == 2);
  CHECK(invoke({"gf", "--identity", "koecher", "--a", "3"}).code == 2);
  CHECK(invoke({"gf"}).code == 2);
  CHECK(invoke({"frobnicate"}).code == 2);
  CHECK(invoke({}).code == 2);
  CHECK(invoke({"zeta", "--formula", "az-z3", "--format", "csv"}).code == 2);
  CHECK(invoke({"bench", "--identity", "thm1", "--format", "xml"}).code == 2);
  Result r = invoke({"zeta", "--formula", "nope"});
  CHECK_FALSE(r.err.empty());
  CHECK(r.out.empty());
}

TEST_CASE("help exits cleanly") {
  Result r = invoke({"--help"});
  CHECK(r.code == 0);
  CHECK(r.out.find("verify") != std::string::npos);
}

TEST_CASE("output is deterministic and meta is separate") {
  const std::vector<std::string> args = {"zeta", "--formula", "markov-z3", "--digits", "25"};
  CHECK(invoke(args).out == invoke(args).out);
  std::vector<std::string> with_meta = args;
  with_meta.push_back("--meta");
  json doc = json::parse(invoke(with_meta).out);
  CHECK(doc["data"] == json::parse(invoke(args).out));
  CHECK(doc["meta"]["command"] == "zeta");
}

TEST_CASE("--out writes to a file") {
  const std::string path = "zeta_forge_cli_test_out.json";
  Result r = invoke({"zeta", "--formula", "eq065-z2", "--digits", "20", "--out", path});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream file(path);
  json doc = json::parse(file);
  CHECK(doc["value"] == "1.64493406684822643647");
  std::remove(path.c_str());
}

TEST_CASE("serialized grid failures carry exact values") {
  using namespace zeta_forge;
  auto mutants = single_coefficient_mutations(pair_definition(PairId::Koecher));
  GridReport report = check_pair(mutants.front(), 3, 3, {make_rational(1, 3)});
  REQUIRE_FALSE(report.passed());
  json doc = to_json(report);
  const auto& failure = doc["failures"][0];
  CHECK(failure["a"] == "1/3");
  CHECK(parse_rational(failure["lhs"].get<std::string>()) == report.failures[0].lhs);
  CHECK(parse_rational(failure["rhs"].get<std::string>()) == report.failures[0].rhs);
}

TEST_CASE("ZETA_FORGE_MAX_TERMS caps summation") {
  setenv("ZETA_FORGE_MAX_TERMS", "2", 1);
  Result capped = invoke({"zeta", "--formula", "markov-z3", "--digits", "40"});
  setenv("ZETA_FORGE_MAX_TERMS", "many", 1);
  Result invalid = invoke({"zeta", "--formula", "markov-z3", "--digits", "40"});
  unsetenv("ZETA_FORGE_MAX_TERMS");
  CHECK(capped.code == 1);
  CHECK(capped.err.find("no contracting tail") != std::string::npos);
  CHECK(invalid.code == 2);
  CHECK(invoke({"zeta", "--formula", "markov-z3", "--digits", "40"}).code == 0);
}
