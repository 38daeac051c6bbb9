#include <array>
#include <cstdio>
#include <string>

#include "doctest.h"
#include "json.hpp"

#ifndef FANO_CLI_PATH
#error "FANO_CLI_PATH must point at the fano binary"
#endif

namespace {

struct RunResult {
  int exit_code = -1;
  std::string output;
};

RunResult run(const std::string& args) {
  RunResult result;
  std::string command = std::string(FANO_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = ::popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buffer;
  std::size_t got;
  while ((got = ::fread(buffer.data(), 1, buffer.size(), pipe)) > 0) {
    result.output.append(buffer.data(), got);
  }
  int status = ::pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

nlohmann::json parse(const RunResult& r) {
  auto j = nlohmann::json::parse(r.output, nullptr, false);
  REQUIRE_FALSE(j.is_discarded());
  return j;
}

}  // namespace

TEST_CASE("degree subcommand emits the plane count as a decimal string") {
  auto r = run("degree --d 5 --n 4 --r 1");
  CHECK(r.exit_code == 0);
  auto j = parse(r);
  CHECK(j["N"] == "2875");
  CHECK(j["method"] == "naive");
}

TEST_CASE("degree subcommand canonicalizes the multidegree") {
  auto r = run("degree --d 3,2 --n 14 --r 4 --method kronecker");
  CHECK(r.exit_code == 0);
  auto j = parse(r);
  CHECK(j["problem"]["d"] == nlohmann::json::array({2, 3}));
  CHECK(j["method"] == "kronecker");
  CHECK(j["base"] == 16);
}

TEST_CASE("modular degree") {
  auto r = run("degree --d 3 --n 11 --r 4 --mod 1000");
  CHECK(r.exit_code == 0);
  auto j = parse(r);
  CHECK(j["residue"] == 836);
  CHECK(j["modulus"] == 1000);
}

TEST_CASE("invalid input exits with 2") {
  CHECK(run("degree --d 1,3 --n 3 --r 1").exit_code == 2);
  CHECK(run("degree --d 3 --n 4 --r 1").exit_code == 2);   // delta != 0
  CHECK(run("degree --d 3 --n 3").exit_code == 2);          // missing flag
  CHECK(run("nonsense").exit_code == 2);
}

TEST_CASE("resource guard exits with 3") {
  CHECK(run("degree --d 3 --n 8 --r 3 --term-limit 5").exit_code == 3);
}

TEST_CASE("long-running computations are refused without --long") {
  CHECK(run("degree --d 3 --n 18 --r 6").exit_code == 2);
}

TEST_CASE("classify subcommand") {
  auto r = run("classify --d 2,2 --n 4 --r 1");
  CHECK(r.exit_code == 0);
  auto j = parse(r);
  CHECK(j["kind"] == "WeylD");
  CHECK(j["parameters"]["k"] == 1);
  CHECK(j["N"] == "16");

  auto q = run("classify --d 5 --n 4 --r 1");
  auto qj = parse(q);
  CHECK(qj["kind"] == "ContainsAlternating");
  CHECK(qj["cfsg_branch"] == 1);
}

TEST_CASE("classify --all summarizes") {
  auto r = run("classify --all --max-r 2 --max-d 3 --max-s 2 --max-n 9");
  CHECK(r.exit_code == 0);
  auto j = parse(r);
  CHECK(j["total"].get<long long>() > 0);
  CHECK(j["counts"].contains("WeylE6"));
  CHECK(j["undetermined"].empty());
}

TEST_CASE("table1 reproduces the twelve rows") {
  auto r = run("table1");
  CHECK(r.exit_code == 0);
  auto j = parse(r);
  REQUIRE(j["rows"].size() == 12);
  CHECK(j["rows"][2]["d"] == nlohmann::json::array({3}));
  CHECK(j["rows"][2]["n"] == 3);
  CHECK(j["rows"][2]["sections_ambient"][0] == "20");
  CHECK(j["rows"][2]["sections_plane"][0] == "4");
}

TEST_CASE("known-degrees passes on the default set") {
  auto r = run("known-degrees");
  CHECK(r.exit_code == 0);
  auto j = parse(r);
  CHECK(j["all_pass"] == true);
  CHECK(j["rows"].size() == 5);  // the sixth row needs --long
  for (const auto& row : j["rows"]) CHECK(row["pass"] == true);
}

TEST_CASE("enumerate respects bounds and flags") {
  auto r = run("enumerate --max-r 12 --max-d 12 --n-le-4r --some-d-ge-3");
  CHECK(r.exit_code == 0);
  auto j = parse(r);
  CHECK(j["count"] == 12);
  CHECK(j["problems"].size() == 12);
}

TEST_CASE("quadrics profile output") {
  auto r = run("quadrics --k 2 --trials 50");
  CHECK(r.exit_code == 0);
  auto j = parse(r);
  CHECK(j["points"] == "64");
  CHECK(j["weyl_order"] == "322560");
  REQUIRE(j["profile"].size() == 3);
  CHECK(j["profile"][0]["dimension"] == 1);
  CHECK(j["profile"][0]["count"] == 7);
  CHECK(j["invariance_ok"] == true);
}

TEST_CASE("json output is byte-deterministic") {
  auto a = run("classify --d 2,3 --n 14 --r 4");
  auto b = run("classify --d 2,3 --n 14 --r 4");
  CHECK(a.exit_code == 0);
  CHECK(a.output == b.output);
  auto c = run("degree --d 3 --n 8 --r 3");
  auto d = run("degree --d 3 --n 8 --r 3");
  CHECK(c.output == d.output);
}
