#include <cstdio>
#include <filesystem>
#include <sstream>
#include <string>
#include <vector>

#include "bgf/ensembles.hpp"
#include "bgf/spec_io.hpp"
#include "commands.hpp"
#include "doctest.h"

using namespace bgf;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "bgf");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream is(text);
  for (std::string line; std::getline(is, line);) out.push_back(line);
  return out;
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("parsers") {
  CHECK(cli::parse_int_list("2,4,6") == std::vector<int>{2, 4, 6});
  CHECK_THROWS_AS(cli::parse_int_list("2,,4"), cli::UsageError);
  CHECK_THROWS_AS(cli::parse_int_list("2,"), cli::UsageError);
  CHECK_THROWS_AS(cli::parse_int_list("a"), cli::UsageError);
  CHECK(cli::parse_range("3..9") == std::pair{3, 9});
  CHECK_THROWS_AS(cli::parse_range("9..3"), cli::UsageError);
  CHECK_THROWS_AS(cli::parse_range("0..3"), cli::UsageError);
  CHECK(cli::parse_rational_flag("--theta", "2/4") == Rational(1, 2));
}

TEST_CASE("moments prints Catalan numbers") {
  const auto r = invoke({"moments", "--builtin", "hermite", "--theta", "1/2", "--max-order", "6"});
  CHECK(r.code == cli::kSuccess);
  const std::vector<std::string> expected{"k,m_k", "1,0/1", "2,1/1", "3,0/1",
                                          "4,2/1", "5,0/1", "6,5/1"};
  CHECK(lines(r.out) == expected);
}

TEST_CASE("moments from a spec file") {
  const auto path = (std::filesystem::temp_directory_path() / "bgf_cli_spec.json").string();
  CumulantSpec spec;
  spec.theta = 2;
  spec.c[Partition{1}] = 3;
  save_spec(spec, path);
  const auto r = invoke({"moments", "--spec", path, "--max-order", "2"});
  CHECK(r.code == cli::kSuccess);
  CHECK(lines(r.out) == std::vector<std::string>{"k,m_k", "1,3/1", "2,9/1"});
  CHECK(invoke({"moments", "--spec", path, "--theta", "1"}).code == cli::kUsageError);
  std::remove(path.c_str());
  CHECK(invoke({"moments", "--spec", path}).code == cli::kUsageError);
}

TEST_CASE("converge rows") {
  const auto r = invoke({"converge", "--builtin", "hermite", "--lambda", "4", "--n-range", "1..3"});
  CHECK(r.code == cli::kSuccess);
  const auto rows = lines(r.out);
  REQUIRE(rows.size() == 4);
  CHECK(rows[0] == "N,value,limit,gap");
  CHECK(rows[1] == "1,3/1,2/1,1");
  CHECK(rows[2] == "2,9/4,2/1,0.25");
  CHECK(rows[3] == "3,19/9,2/1,0.111111111111");
}

TEST_CASE("converge with the canonical polynomial of a spec") {
  const auto path = (std::filesystem::temp_directory_path() / "bgf_cli_converge.json").string();
  save_spec(hermite_spec(1), path);
  const auto a = invoke({"converge", "--spec", path, "--lambda", "2,2", "--n", "3"});
  const auto b = invoke({"converge", "--builtin", "hermite", "--lambda", "2,2", "--n", "3"});
  CHECK(a.code == cli::kSuccess);
  CHECK(a.out == b.out);
  std::remove(path.c_str());
}

TEST_CASE("budget refusal happens before any output") {
  const auto r = invoke({"converge", "--builtin", "hermite", "--lambda", "2,2", "--n-range",
                         "1..50", "--budget", "1000"});
  CHECK(r.code == cli::kBudgetRefusal);
  CHECK(r.out.empty());
}

TEST_CASE("usage errors") {
  CHECK(invoke({}).code == cli::kUsageError);
  CHECK(invoke({"frobnicate"}).code == cli::kUsageError);
  CHECK(invoke({"moments"}).code == cli::kUsageError);
  CHECK(invoke({"moments", "--builtin", "laguerre"}).code == cli::kUsageError);
  CHECK(invoke({"moments", "--builtin", "hermite", "--theta", "-1"}).code == cli::kUsageError);
  CHECK(invoke({"converge", "--lambda", "2,x"}).code == cli::kUsageError);
  CHECK(invoke({"converge", "--n", "3", "--n-range", "1..2"}).code == cli::kUsageError);
  CHECK(invoke({"sample", "--trials", "1"}).code == cli::kUsageError);
  CHECK(invoke({"sample", "--beta", "0"}).code == cli::kUsageError);
  CHECK(invoke({"verify"}).code == cli::kUsageError);
  CHECK(invoke({"verify", "--suite", "nonsense"}).code == cli::kUsageError);
}

TEST_CASE("verify suites pass and the fault is caught") {
  const auto ok = invoke({"verify", "--suite", "appendix"});
  CHECK(ok.code == cli::kSuccess);
  CHECK(ok.out.find("FAIL") == std::string::npos);
  const auto bad = invoke({"verify", "--suite", "appendix", "--inject-fault", "binom"});
  CHECK(bad.code == cli::kVerificationFailure);
  CHECK(bad.out.find("FAIL binom_identity") != std::string::npos);
}

TEST_CASE("sample output is reproducible") {
  const std::vector<std::string> args{"sample", "--n", "20", "--trials", "30",
                                      "--orders", "1,2", "--seed", "5"};
  const auto a = invoke(args);
  const auto b = invoke(args);
  CHECK(a.code == cli::kSuccess);
  CHECK(a.out == b.out);
  const auto rows = lines(a.out);
  REQUIRE(rows.size() == 3);
  CHECK(rows[0] == "order,mean,stderr,trials,N,beta,seed,limit");
  CHECK(rows[2].substr(rows[2].rfind(',')) == ",1/1");
}

}  // TEST_SUITE
