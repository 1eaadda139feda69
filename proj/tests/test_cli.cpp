#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <sys/wait.h>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

namespace {

std::string binary() {
  const char* p = std::getenv("EXTKOSZUL_BIN");
  REQUIRE_MESSAGE(p != nullptr, "EXTKOSZUL_BIN must point at the command line binary");
  return p;
}

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run(const std::string& args) {
  std::string cmd = binary() + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult r;
  char buf[4096];
  while (size_t got = fread(buf, 1, sizeof buf, pipe)) r.out.append(buf, got);
  int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

}  // namespace

TEST_CASE("hilbert of a path preset") {
  RunResult r = run("hilbert --graph path:7");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("1 + 7*t + 15*t^2 + 10*t^3 + t^4") != std::string::npos);
}

TEST_CASE("groebner output lists the initial ideal") {
  RunResult r = run("gb --n 4 --gen \"e1*e2 + e3*e4\"");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("initial ideal:") != std::string::npos);
  CHECK(r.out.find("e1*e3*e4") != std::string::npos);
}

TEST_CASE("inverse series test drives the exit code") {
  RunResult neg = run("froberg --hs 1,4,5 --N 6");
  CHECK(neg.exit_code == 1);
  CHECK(neg.out.find("-29") != std::string::npos);
  CHECK(neg.out.find("NOT Koszul") != std::string::npos);
  RunResult open = run("froberg --hs 1,2,1 --N 8");
  CHECK(open.exit_code == 2);
}

TEST_CASE("usage errors exit with code 64") {
  CHECK(run("hilbert --graph blob:9").exit_code == 64);
  CHECK(run("gb --n 3 --gen \"e9\"").exit_code == 64);
  CHECK(run("no-such-command").exit_code == 64);
  CHECK(run("rank --q \"e1*e2\"").exit_code == 64);  // missing --n
}

TEST_CASE("regularity and depth commands") {
  CHECK(run("regular --graph path:7 --form \"e1+e4+e7\"").exit_code == 0);
  CHECK(run("regular --graph path:7 --form \"e1\"").exit_code == 1);
  RunResult q = run("quotient --graph path:7 --form \"e1+e4+e7\"");
  CHECK(q.exit_code == 0);
  CHECK(q.out.find("1 + 6*t + 9*t^2 + t^3") != std::string::npos);
}

TEST_CASE("quadric commands") {
  RunResult r = run("rank --n 4 --q \"e1*e2 + e3*e4\"");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("rank 4") != std::string::npos);
  RunResult p = run("pencil --q1 \"e1*e2 + e3*e4\" --q2 \"e1*e3 + e2*e4\"");
  CHECK(p.exit_code == 0);
  CHECK(p.out.find("rank-2 witness") != std::string::npos);
}

TEST_CASE("json reports are schema conformant and deterministic") {
  std::string path1 = "cli_report_a.json", path2 = "cli_report_b.json";
  CHECK(run("hilbert --graph path:5 --json " + path1).exit_code == 0);
  CHECK(run("hilbert --graph path:5 --json " + path2).exit_code == 0);
  auto load = [](const std::string& p) {
    std::ifstream in(p);
    REQUIRE(in.good());
    nlohmann::json j;
    in >> j;
    return j;
  };
  nlohmann::json a = load(path1), b = load(path2);
  REQUIRE(a.contains("session"));
  REQUIRE(a.contains("checks"));
  REQUIRE(a["checks"].is_array());
  for (auto& c : a["checks"]) {
    CHECK(c.contains("name"));
    CHECK(c.contains("paper_ref"));
    CHECK(c.contains("status"));
    CHECK(c.contains("expected"));
    CHECK(c.contains("actual"));
    CHECK(c.contains("runtime_ms"));
  }
  for (auto* j : {&a, &b})
    for (auto& c : (*j)["checks"]) c["runtime_ms"] = 0;
  CHECK(a == b);
  std::remove(path1.c_str());
  std::remove(path2.c_str());
}

TEST_CASE("negative control makes the verifier fail") {
  RunResult bad = run("verify-paper --skip-slow --corrupt");
  CHECK(bad.exit_code == 1);
  CHECK(bad.out.find("FAIL") != std::string::npos);
}
