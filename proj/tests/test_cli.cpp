#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"

namespace {

struct RunResult {
  int code = -1;
  std::string out;
};

RunResult run(const std::string& args) {
  static int n = 0;
  std::string path = "cli_out_" + std::to_string(n++) + ".txt";
  std::string cmd = std::string(GSP4CLI_PATH) + " " + args + " > " + path + " 2>&1";
  int rc = std::system(cmd.c_str());
  RunResult r;
  r.code = (rc >= 0) ? WEXITSTATUS(rc) : -1;
  std::ifstream f(path);
  std::stringstream ss;
  ss << f.rdbuf();
  r.out = ss.str();
  std::remove(path.c_str());
  return r;
}

size_t count_lines(const std::string& s) {
  size_t n = 0;
  for (char c : s)
    if (c == '\n') ++n;
  return n;
}

}  // namespace

TEST_CASE("verify cosets summary and exit code") {
  auto r = run("verify cosets --p 3");
  CHECK(r.code == 0);
  CHECK(r.out.find("160 representatives, 12720 distinct-pair checks") !=
        std::string::npos);
}

TEST_CASE("config errors exit 2") {
  CHECK(run("verify all --p 11 --d 5").code == 2);
  CHECK(run("verify zeta --p 9").code == 2);
  CHECK(run("verify zeta --p 3 --wp 2").code == 2);
  CHECK(run("verify nosuch --p 3").code == 2);
  CHECK(run("table volumes --p 3 --format xml").code == 2);
  CHECK(run("verify zeta --p 3 --order 5").code == 2);
}

TEST_CASE("volume table row count") {
  auto r = run("table volumes --p 3 --lmax 1 --mmax 1");
  CHECK(r.code == 0);
  CHECK(count_lines(r.out) == 13);  // header + 4 rows at m=0 + 8 at m=1
}

TEST_CASE("whittaker table shows only supported rows") {
  auto r = run("table whittaker --case st-unram --p 3 --lmax 1 --mmax 2");
  CHECK(r.code == 0);
  CHECK(r.out.find("0\tt5") == std::string::npos);  // default format is text
  CHECK(r.out.find("0  t5") != std::string::npos);
  CHECK(r.out.find("t1") == std::string::npos);
  CHECK(r.out.find("t4") == std::string::npos);
  CHECK(count_lines(r.out) == 6);  // header + (0,t5) + (m,t3),(m,t5) for m=1,2
}

TEST_CASE("zeta suite runs all four sign combinations") {
  auto r = run("verify zeta --p 3 --case st-st --order 40 --lmax 2 --mmax 2");
  CHECK(r.code == 0);
  size_t pos = 0, hits = 0;
  while ((pos = r.out.find("zeta-theorem", pos)) != std::string::npos) {
    ++hits;
    pos += 1;
  }
  CHECK(hits == 4);
}

TEST_CASE("reports are byte-identical across runs") {
  auto a = run("verify bessel --p 3 --lmax 2 --mmax 2 --format json");
  auto b = run("verify bessel --p 3 --lmax 2 --mmax 2 --format json");
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out.find("\"millis\": 0") != std::string::npos);
}
