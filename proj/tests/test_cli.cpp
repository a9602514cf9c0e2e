// End-to-end tests that drive the installed binary through a shell, the same
// way a user would. The test runner passes the binary path in OCTACOUNT_BIN.

#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <string>

#include <json.hpp>

namespace {

struct CmdResult {
  int status = -1;
  std::string out;
};

CmdResult run_cli(const std::string& args, bool merge_stderr = false) {
  const char* bin = std::getenv("OCTACOUNT_BIN");
  REQUIRE_MESSAGE(bin != nullptr, "OCTACOUNT_BIN must point at the binary");
  const std::string cmd = "\"" + std::string(bin) + "\" " + args +
                          (merge_stderr ? " 2>&1" : " 2>/dev/null");
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  CmdResult result;
  char buf[4096];
  std::size_t n;
  while ((n = std::fread(buf, 1, sizeof buf, pipe)) > 0) {
    result.out.append(buf, n);
  }
  const int rc = pclose(pipe);
  result.status = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
  return result;
}

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("count prints the exact value") {
  const CmdResult r = run_cli("count 1 1 1 1");
  CHECK(r.status == 0);
  CHECK(contains(r.out, "count: 8\n"));
  CHECK(contains(r.out, "tiles: 6\n"));
  CHECK(contains(r.out, "method: det\n"));
}

TEST_CASE("count agrees across methods") {
  const CmdResult det = run_cli("count 2 1 2 1");
  const CmdResult closed = run_cli("count 2 1 2 1 --method elnitsky");
  const CmdResult oracle = run_cli("count 2 1 2 1 --method oracle");
  CHECK(det.status == 0);
  CHECK(closed.status == 0);
  CHECK(oracle.status == 0);
  CHECK(contains(det.out, "count: 76\n"));
  CHECK(contains(closed.out, "count: 76\n"));
  CHECK(contains(closed.out, "method: elnitsky-a1c1\n"));
  CHECK(contains(oracle.out, "count: 76\n"));
  CHECK(contains(oracle.out, "method: oracle\n"));
}

TEST_CASE("json output for a known count") {
  const CmdResult r = run_cli("count 3 3 3 3 --json");
  CHECK(r.status == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["count"] == "273976272");
  CHECK(j["tiles"] == 54);
  CHECK(j["terms"] == "960400");
  CHECK(j["sides"] == nlohmann::json::array({3, 3, 3, 3}));
  // Idempotent re-serialization with sorted keys.
  CHECK(j.dump() + "\n" == r.out);
}

TEST_CASE("worker count does not change the reported count") {
  const CmdResult one = run_cli("count 2 2 2 2 --workers 1 --json");
  const CmdResult many = run_cli("count 2 2 2 2 --workers 5 --json");
  REQUIRE(one.status == 0);
  REQUIRE(many.status == 0);
  const auto ja = nlohmann::json::parse(one.out);
  const auto jb = nlohmann::json::parse(many.out);
  CHECK(ja["count"] == jb["count"]);
  CHECK(ja["count"] == "5383");
  CHECK(jb["workers"] == 5);
}

TEST_CASE("workers default comes from the environment") {
  const char* bin = std::getenv("OCTACOUNT_BIN");
  REQUIRE(bin != nullptr);
  const std::string cmd = std::string("OCTACOUNT_WORKERS=3 \"") + bin +
                          "\" count 2 2 2 2 --json 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  std::size_t n;
  while ((n = std::fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
  const int rc = pclose(pipe);
  REQUIRE(WIFEXITED(rc));
  REQUIRE(WEXITSTATUS(rc) == 0);
  const auto j = nlohmann::json::parse(out);
  CHECK(j["workers"] == 3);
  CHECK(j["count"] == "5383");
}

TEST_CASE("progress goes to standard error") {
  const CmdResult quiet = run_cli("count 2 2 2 2 --progress");
  CHECK(quiet.status == 0);
  CHECK_FALSE(contains(quiet.out, "progress:"));
  const CmdResult merged = run_cli("count 2 2 2 2 --progress", true);
  CHECK(merged.status == 0);
  CHECK(contains(merged.out, "progress: 400/400 terms\n"));
}

TEST_CASE("usage errors exit with code 2") {
  CHECK(run_cli("count 0 1 1 1", true).status == 2);
  CHECK(run_cli("count -- -3 1 1 1", true).status == 2);
  CHECK(run_cli("count 1 1 1", true).status == 2);
  CHECK(run_cli("count 1 1 1 1 --method bogus", true).status == 2);
  CHECK(run_cli("frobnicate", true).status == 2);
  CHECK(run_cli("", true).status == 2);
  CHECK(run_cli("hex 1 1", true).status == 2);
  CHECK(run_cli("hex 1 1 1 --bound 1 1 1 1", true).status == 2);
}

TEST_CASE("inapplicable closed form exits with code 3") {
  const CmdResult r = run_cli("count 2 2 2 1 --method elnitsky", true);
  CHECK(r.status == 3);
  CHECK(contains(r.out, "method inapplicable"));
}

TEST_CASE("oracle budget exits with code 4") {
  const CmdResult r = run_cli("count 3 3 3 3 --method oracle", true);
  CHECK(r.status == 4);
  CHECK(contains(r.out, "oracle scale exceeded"));
}

TEST_CASE("verify runs its suites") {
  const CmdResult r = run_cli("verify --max-side 1");
  CHECK(r.status == 0);
  CHECK(contains(r.out, "known-counts: pass"));
  CHECK(contains(r.out, "closed-form: pass"));
  CHECK(contains(r.out, "symmetry: pass"));
  CHECK(contains(r.out, "oracle-sweep: pass"));
  CHECK(contains(r.out, "lower-bound: pass"));
}

TEST_CASE("verify default scale passes") {
  const CmdResult r = run_cli("verify");
  CHECK(r.status == 0);
  CHECK_FALSE(contains(r.out, "FAIL"));
}

TEST_CASE("diagonal table") {
  const CmdResult r = run_cli("table --diagonal 2");
  CHECK(r.status == 0);
  CHECK(contains(r.out, "1  8  6  0.3466\n"));
  CHECK(contains(r.out, "2  5383  24  0.3580\n"));

  const CmdResult csv = run_cli("table --diagonal 3 --csv");
  CHECK(csv.status == 0);
  CHECK(contains(csv.out, "n,count,tiles,entropy\n"));
  CHECK(contains(csv.out, "1,8,6,0.3466\n"));
  CHECK(contains(csv.out, "2,5383,24,0.3580\n"));
  CHECK(contains(csv.out, "3,273976272,54,0.3598\n"));

  const CmdResult skip = run_cli("table --diagonal 4 --csv");
  CHECK(skip.status == 0);
  CHECK(contains(skip.out, "4,skipped (budget),96,\n"));
}

TEST_CASE("entropy command") {
  const CmdResult five = run_cli("entropy 5 5 5 5");
  CHECK(five.status == 0);
  CHECK(five.out == "0.360315\n");

  const CmdResult unit = run_cli("entropy 1 1 1 1");
  CHECK(unit.status == 0);
  CHECK(unit.out == "0.346574\n");

  const CmdResult mixed = run_cli("entropy 2 1 2 1");
  CHECK(mixed.status == 0);
  CHECK(mixed.out == "0.333133\n");
}

TEST_CASE("hexagon counts and the lower bound") {
  CHECK(run_cli("hex 1 1 1").out == "2\n");
  CHECK(run_cli("hex 2 2 2").out == "20\n");
  CHECK(run_cli("hex 0 4 9").out == "1\n");
  CHECK(run_cli("hex --bound 2 2 2 2").out == "400\n");
  CHECK(run_cli("hex --bound 1 1 1 1").out == "4\n");
}
