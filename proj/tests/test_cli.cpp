#include "doctest.h"

#include <filesystem>
#include <sstream>

#include "hodge/cli.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = hodge::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

} // namespace

TEST_CASE("xi") {
  auto r = run({"xi", "2"});
  CHECK(r.code == 0);
  CHECK(r.out == "3*t^5 + -5*t^4 + 2*t^3\n");
}

TEST_CASE("hurwitz") {
  auto r = run({"hurwitz", "0", "3"});
  CHECK(r.code == 0);
  CHECK(r.out.find("\"h\":\"1\"") != std::string::npos);
  r = run({"hurwitz", "1", "1", "1"});
  CHECK(r.out == "{\"g\":1,\"mu\":[1,1],\"h\":\"1/2\",\"provenance\":\"oracle\"}\n");
  r = run({"hurwitz", "1", "2", "--source", "elsv"});
  CHECK(r.out == "{\"g\":1,\"mu\":[2],\"h\":\"1/2\",\"provenance\":\"elsv\"}\n");
  r = run({"hurwitz", "2", "2", "2", "--budget", "1000"});
  CHECK(r.code == hodge::cli::kInfeasible);
  CHECK(r.out.empty());
}

TEST_CASE("psi and hodge") {
  CHECK(run({"psi", "2", "4"}).out == "{\"g\":2,\"n\":[4],\"value\":\"1/1152\"}\n");
  auto r = run({"hodge", "1", "1", "--format", "csv"});
  CHECK(r.out == "g,ell,n,j,value\n1,1,\"1\",0,1/24\n1,1,\"0\",1,1/24\n");
  CHECK(run({"hodge", "1", "1", "--poly"}).out == "1/24*t^3 + -1/24*t^2 + -1/24*t + 1/24\n");
}

TEST_CASE("usage errors") {
  CHECK(run({}).code == hodge::cli::kUsage);
  CHECK(run({"frobnicate"}).code == hodge::cli::kUsage);
  CHECK(run({"xi"}).code == hodge::cli::kUsage);
  CHECK(run({"xi", "-1"}).code == hodge::cli::kUsage);
  CHECK(run({"hodge", "0", "2"}).code == hodge::cli::kUsage);
  CHECK(run({"table", "--max-euler", "0"}).code == hodge::cli::kUsage);
  CHECK(run({"hurwitz", "0", "3", "--budget", "10"}).code == hodge::cli::kUsage);
  CHECK(run({"table", "--max-euler", "2", "--format", "xml"}).code == hodge::cli::kUsage);
  CHECK(run({"verify"}).code == hodge::cli::kUsage);
  CHECK(run({"--help"}).code == hodge::cli::kOk);
}

TEST_CASE("verification exit codes") {
  CHECK(run({"verify", "lambda-g", "--gmax", "1"}).code == 0);
  CHECK(run({"verify", "caj", "--gmax", "0", "--dmax", "4"}).code == 0);
  auto bad = run({"verify", "caj", "--gmax", "0", "--dmax", "4", "--split-counting", "multiset"});
  CHECK(bad.code == hodge::cli::kCheckFailed);
  CHECK(bad.out.find("\"status\":\"fail\"") != std::string::npos);
  auto tight = run({"verify", "caj", "--gmax", "2", "--dmax", "3", "--budget", "1000"});
  CHECK(tight.code == hodge::cli::kInfeasible);
  CHECK(run({"verify", "dvv", "--max-euler", "3"}).code == 0);
  CHECK(run({"verify", "dual", "--max-euler", "3"}).code == 0);
  CHECK(run({"verify", "cross", "--dmax", "3", "--rmax", "5"}).code == 0);
  CHECK(run({"verify", "lambert", "--n-max", "2", "--w", "1,2"}).code == 0);
  CHECK(run({"verify", "lambert", "--w", "0,1"}).code == hodge::cli::kUsage);
}

TEST_CASE("lambert floats carry 17 significant digits") {
  auto r = run({"verify", "lambert", "--n-max", "0", "--w", "1"});
  CHECK(r.out.find("\"limit\":1e-08") != std::string::npos);
  CHECK(r.out.find("\"limit\":9.9999999999999998e-13") != std::string::npos);
}

TEST_CASE("table with a cache is byte-identical and recomputes nothing") {
  const auto path = std::filesystem::temp_directory_path() / "hodge_cli_cache_test.json";
  std::filesystem::remove(path);
  auto first = run({"table", "--max-euler", "3", "--cache", path.string()});
  auto second = run({"table", "--max-euler", "3", "--cache", path.string()});
  CHECK(first.code == 0);
  CHECK(second.code == 0);
  CHECK(first.out == second.out);
  CHECK(first.err.find("computed 5 polynomials") != std::string::npos);
  CHECK(second.err.find("computed 0 polynomials") != std::string::npos);
  CHECK(run({"table", "--max-euler", "3"}).out == first.out);
  std::filesystem::remove(path);
}

TEST_CASE("thread count does not change output") {
  CHECK(run({"table", "--max-euler", "4", "--threads", "1"}).out ==
        run({"table", "--max-euler", "4", "--threads", "4"}).out);
}
