#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

#include <json.hpp>

#include "symvar/cli.hpp"

using nlohmann::json;
using symvar::run_cli;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

json result_of(const Run& r) {
  REQUIRE(r.code == symvar::kExitOk);
  return json::parse(r.out).at("result");
}

}  // namespace

TEST_CASE("bounds command") {
  const auto r = run({"bounds", "4", "10"});
  const auto j = json::parse(r.out);
  CHECK(j.at("result") == json::parse(R"({"ccez":8,"ccdz":16,"optm":161414428})"));
  CHECK(j.at("toolkit") == "symvar");
  CHECK(j.at("command") == "bounds");
  CHECK_FALSE(j.contains("wall_clock_ms"));
  CHECK(run({"bounds", "4", "10", "--format", "csv"}).out == "ccez,ccdz,optm\n8,16,161414428\n");
  CHECK(run({"--format", "pretty", "bounds", "3", "2"}).out.find("b0 <= 2^(d-1) = 4") != std::string::npos);
  CHECK(run({"bounds", "0", "3"}).code == symvar::kExitValidation);
  CHECK(run({"bounds", "3"}).code == symvar::kExitValidation);
  CHECK(run({"bounds", "3", "2", "--format", "xml"}).code == symvar::kExitValidation);
}

TEST_CASE("json output is deterministic") {
  CHECK(run({"symmetric-b0", "--coeffs", "0,-1,0,1", "--n", "5"}).out ==
        run({"symmetric-b0", "--coeffs", "0,-1,0,1", "--n", "5"}).out);
  const auto timed = json::parse(run({"--timing", "bounds", "2", "2"}).out);
  CHECK(timed.contains("wall_clock_ms"));
}

TEST_CASE("components and complement commands") {
  const auto j = result_of(run({"components", "--poly", "sharpness:2", "--box", "-2,2", "--res", "16"}));
  CHECK(j.at("count") == 2);
  CHECK(j.at("certified") == "resolution-converged");
  CHECK(j.at("bounds").at("ccez") == 2);

  const std::string path = "cli_test_prod4.json";
  std::ofstream(path) << R"({"n":4,"terms":[{"vars":[1,2,3,4],"coeff":"1"}]})";
  CHECK(result_of(run({"complement", "--poly", path, "--box", "-1,1", "--res", "8"})).at("count") == 16);

  const std::string sphere = "cli_test_sphere.json";
  std::ofstream(sphere) << R"({"n":2,"terms":[{"exps":[2,0],"coeff":"1"},{"exps":[0,2],"coeff":"1"},{"exps":[0,0],"coeff":"-2"}]})";
  CHECK(result_of(run({"components", "--poly", sphere, "--box", "-1,1", "--res", "8"})).at("count") == 4);

  const auto csv = run({"components", "--poly", "sigma:-1,0,1", "--n", "3", "--box", "-4,4", "--res", "16",
                        "--format", "csv"});
  CHECK(csv.out.rfind("resolution,count\n16,", 0) == 0);

  CHECK(run({"components", "--poly", "sigma:-1,0,1", "--box", "-1,1"}).code == symvar::kExitValidation);
  CHECK(run({"components", "--poly", "missing.json"}).code == symvar::kExitValidation);
  CHECK(run({"components", "--poly", "sharpness:2", "--box", "2,1"}).code == symvar::kExitValidation);
  CHECK(run({"components", "--poly", "sharpness:2", "--box", "-1,1;0,1;0,1"}).code == symvar::kExitValidation);
  CHECK(run({"components", "--poly", "example3:2"}).code == symvar::kExitValidation);
  CHECK(run({"components", "--poly", "sharpness:3", "--box", "-2,2", "--res", "1000"}).code ==
        symvar::kExitValidation);
}

TEST_CASE("system command") {
  const auto j =
      result_of(run({"system", "--family", "example3:1", "--n", "4", "--box", "-1/2,3/2", "--res", "32"}));
  CHECK(j.at("certified") == "upper-structure-only");
  CHECK(j.at("trail").at(0).at(1) == 4);
  CHECK(run({"system", "--n", "4"}).code == symvar::kExitValidation);
}

TEST_CASE("symmetric and stability commands") {
  const auto j = result_of(run({"symmetric-b0", "--coeffs", "-1,0,1", "--n", "6", "--samples", "100"}));
  CHECK(j.at("count") == 2);
  CHECK(j.at("certified") == "sample-certified");
  CHECK(j.at("seed") == 0x5eed2024);
  const auto csv = run({"stability", "--coeffs", "0,-1,0,1", "--n-max", "6", "--samples", "50", "--format", "csv"});
  CHECK(csv.out == "n,count,certified\n3,3,sample-certified\n4,3,sample-certified\n5,3,sample-certified\n"
                   "6,3,sample-certified\n");
  CHECK(run({"symmetric-b0", "--coeffs", "-1,0,1", "--n", "2"}).code == symvar::kExitValidation);
  CHECK(run({"symmetric-b0", "--coeffs", "1,x", "--n", "4"}).code == symvar::kExitValidation);
}

TEST_CASE("representation commands") {
  CHECK(result_of(run({"specht", "--partition", "3,3"})).at("dim") == 5);
  CHECK(result_of(run({"specht", "--two-row-max", "7"})).at("dim") == 14);
  CHECK(run({"specht", "--partition", "1,2"}).code == symvar::kExitValidation);
  CHECK(run({"specht"}).code == symvar::kExitValidation);
  const auto y = result_of(run({"young", "--n", "8", "--k", "3"}));
  CHECK(y.at("total_dimension") == 56);
  CHECK(y.at("table").size() == 4);
  CHECK(run({"young", "--n", "5", "--k", "3"}).code == symvar::kExitValidation);
}

TEST_CASE("verify command") {
  for (const char* suite : {"newton", "example3", "hooks", "aux-ineq"}) {
    const auto j = result_of(run({"verify", "--suite", suite, "--samples", "200"}));
    CHECK(j.at("passed") == true);
  }
  CHECK(run({"verify", "--suite", "bogus"}).code == symvar::kExitValidation);
}

TEST_CASE("installed binary exit codes") {
  const std::string bin = SYMVAR_CLI_PATH;
  auto status = [&](const std::string& args) {
    const int raw = std::system((bin + " " + args + " > /dev/null 2>&1").c_str());
    return WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  };
  CHECK(status("bounds 4 10") == 0);
  CHECK(status("bounds x 10") == 2);
  CHECK(status("--help") == 0);
}
