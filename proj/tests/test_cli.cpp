#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

// End-to-end checks of the command-line interface: row schema, printed
// values, exit-code contract, byte determinism, worker-count env var.

#include <json.hpp>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <sstream>
#include <string>
#include <vector>

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + " " + std::string(ADIAGEO_CLI_PATH) + " " + args;
  RunResult r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf;
  size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0)
    r.out.append(buf.data(), got);
  const int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) parts.push_back(item);
  return parts;
}

}  // namespace

TEST_CASE("eval emits the documented CSV schema and values") {
  const auto r = run(
      "eval --model gho --quantity metric --set Y=0,Z=1 --sweep X=1:2:3 "
      "--action 1 --side classical --format csv 2>/dev/null");
  REQUIRE(r.exit_code == 0);
  const auto lines = split(r.out, '\n');
  REQUIRE(lines.size() >= 19);
  CHECK(lines[0] == "param:X,param:Y,param:Z,quantity,i,j,value");
  // 3 sweep points x 6 independent components
  int rows = 0;
  for (size_t i = 1; i < lines.size(); ++i)
    if (!lines[i].empty()) ++rows;
  CHECK(rows == 18);
  // the g_11 row at X = 1
  const auto first = split(lines[1], ',');
  REQUIRE(first.size() == 7);
  CHECK(std::stod(first[0]) == 1.0);
  CHECK(first[3] == "g_ij");
  CHECK(first[4] == "1");
  CHECK(first[5] == "1");
  CHECK(std::stod(first[6]) == 0.03125);
}

TEST_CASE("quantum side scales with n^2 + n + 1") {
  const auto r = run(
      "eval --model gho --quantity metric --set Y=0,Z=1 --sweep X=1:2:3 "
      "--side quantum --level 1 2>/dev/null");
  REQUIRE(r.exit_code == 0);
  const auto first = split(split(r.out, '\n')[1], ',');
  CHECK(std::stod(first[6]) == 0.09375);
}

TEST_CASE("domain violations exit 2 and name the grid point") {
  const auto r =
      run("eval --model gho --quantity metric --sweep X=0.0:1:1 --set Y=1,Z=1 "
          "2>&1 >/dev/null");
  CHECK(r.exit_code == 2);
  CHECK(r.out.find("X=0") != std::string::npos);
}

TEST_CASE("usage errors exit 3") {
  CHECK(run("eval --model gho --quantity bogus --sweep X=1:2:2 --set Y=0,Z=1 "
            "2>/dev/null")
            .exit_code == 3);
  CHECK(run("eval --model nosuch --quantity metric --sweep X=1:2:2 2>/dev/null")
            .exit_code == 3);
  CHECK(run("eval --model quartic --quantity curvature --sweep m=1:2:2 "
            "--set k=1,lambda=0 2>/dev/null")
            .exit_code == 3);
  CHECK(run("eval --model quartic --quantity metric --side quantum --level 2 "
            "--sweep m=1:2:2 --set k=1,lambda=0 2>/dev/null")
            .exit_code == 3);
  CHECK(run("eval --model gho --quantity metric --set X=1,Y=0,Z=1 2>/dev/null")
            .exit_code == 3);  // nothing swept
  CHECK(run("verify --suite nonsense 2>/dev/null").exit_code == 3);
  CHECK(run("series --target nope 2>/dev/null").exit_code == 3);
}

TEST_CASE("verify reports per-check lines on stderr and exits 0") {
  const auto r = run("verify --suite gamma-beta 2>&1 >/dev/null");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("[PASS]") != std::string::npos);
  CHECK(r.out.find("gamma") != std::string::npos);
}

TEST_CASE("series dump is deterministic and carries the printed entry") {
  const auto a = run("series --target W 2>/dev/null");
  const auto b = run("series --target W 2>/dev/null");
  REQUIRE(a.exit_code == 0);
  CHECK(a.out == b.out);

  const auto doc = nlohmann::json::parse(a.out);
  CHECK(doc["target"] == "W");
  bool found = false;
  for (const auto& s : doc["series"])
    for (const auto& t : s["terms"])
      if (s["name"] == "W1" && t["order"] == 1 && t["harmonic"] == 2 &&
          t["trig"] == "sin") {
        // 8/192 in canonical reduced form
        CHECK(t["num"] == 1);
        CHECK(t["den"] == 24);
        found = true;
      }
  CHECK(found);
}

TEST_CASE("metric dump carries the printed lambda^2 coefficient of g11") {
  const auto r = run("series --target metric 2>/dev/null");
  REQUIRE(r.exit_code == 0);
  const auto doc = nlohmann::json::parse(r.out);
  bool found = false;
  for (const auto& s : doc["series"])
    if (s["name"] == "g11")
      for (const auto& t : s["terms"])
        if (t["order"] == 2) {
          CHECK(t["num"] == 47);
          CHECK(t["den"] == 32768);
          found = true;
        }
  CHECK(found);
}

TEST_CASE("worker count does not change the bytes") {
  const std::string args =
      "eval --model gholin --quantity metric --set W=1,Y=0 "
      "--sweep X=1:2:5 --sweep Z=1:1.5:3 --format json 2>/dev/null";
  const auto serial = run(args);
  const auto parallel = run(args, "ADIAGEO_THREADS=4");
  REQUIRE(serial.exit_code == 0);
  REQUIRE(parallel.exit_code == 0);
  CHECK(serial.out == parallel.out);
  CHECK(!serial.out.empty());
}

TEST_CASE("json rows mirror the csv columns") {
  const auto csv = run(
      "eval --model quartic --quantity metric --set k=1,lambda=0.01 "
      "--sweep m=1:2:2 --format csv 2>/dev/null");
  const auto json = run(
      "eval --model quartic --quantity metric --set k=1,lambda=0.01 "
      "--sweep m=1:2:2 --format json 2>/dev/null");
  REQUIRE(csv.exit_code == 0);
  REQUIRE(json.exit_code == 0);
  const auto doc = nlohmann::json::parse(json.out);
  const auto lines = split(csv.out, '\n');
  // data rows match array entries, field by field (split eats the last \n)
  REQUIRE(doc.size() == lines.size() - 1);
  const auto row0 = split(lines[1], ',');
  CHECK(doc[0]["param:m"].get<double>() == std::stod(row0[0]));
  CHECK(doc[0]["quantity"].get<std::string>() == row0[3]);
  CHECK(doc[0]["value"].get<double>() == std::stod(row0[6]));
}

TEST_CASE("connection rows carry one index, det and rank none") {
  const auto conn = run(
      "eval --model gho --quantity connection --set Y=0,Z=1 --sweep X=1:1:1 "
      "2>/dev/null");
  REQUIRE(conn.exit_code == 0);
  const auto lines = split(conn.out, '\n');
  const auto row = split(lines[1], ',');
  CHECK(row[3] == "A_i");
  CHECK(row[4] == "1");
  CHECK(row[5].empty());

  const auto rank = run(
      "eval --model gho --quantity rank --set Y=0,Z=1 --sweep X=1:1:1 "
      "2>/dev/null");
  const auto rrow = split(split(rank.out, '\n')[1], ',');
  CHECK(rrow[3] == "rank");
  CHECK(rrow[4].empty());
  CHECK(rrow[5].empty());
  CHECK(rrow[6] == "2");
}
