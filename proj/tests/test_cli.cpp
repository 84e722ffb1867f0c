#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "json.hpp"

namespace {

struct RunResult {
  int code;
  std::string out;
  std::string err;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int run_counter = 0;

RunResult run_cli(const std::string& args) {
  std::string err_path = "/tmp/fproots_cli_err_" + std::to_string(run_counter++) + ".txt";
  std::string cmd = std::string(FPROOTS_CLI_PATH) + " " + args + " 2>" + err_path;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof(buf), pipe)) > 0) out.append(buf, n);
  int status = pclose(pipe);
  int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  RunResult r{code, out, slurp(err_path)};
  std::remove(err_path.c_str());
  return r;
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : text) {
    if (c == '\n') {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> f;
  std::string cur;
  for (char c : line) {
    if (c == ',') {
      f.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  f.push_back(cur);
  return f;
}

std::string tmp_path(const std::string& name) { return "/tmp/fproots_test_" + name; }

} // namespace

TEST_CASE("roots subcommand") {
  RunResult r = run_cli("roots --modulus 7 --poly 6,0,0,1");
  CHECK(r.code == 0);
  CHECK(r.out == "1\n2\n4\n");

  CHECK(run_cli("roots --modulus 7 --poly 6,1").out == "1\n");

  RunResult j = run_cli("roots --modulus 7 --poly 6,0,0,1 --json");
  CHECK(j.code == 0);
  CHECK(j.out == "[1,2,4]\n");

  RunResult serial = run_cli("roots --modulus 10007 --poly 0,0,0,1,1 --serial");
  RunResult parallel = run_cli("roots --modulus 10007 --poly 0,0,0,1,1");
  CHECK(serial.code == 0);
  CHECK(serial.out == parallel.out);
}

TEST_CASE("input errors exit with 2") {
  RunResult r = run_cli("roots --modulus 9 --poly 1,1");
  CHECK(r.code == 2);
  CHECK(r.err.find("modulus not prime") != std::string::npos);

  CHECK(run_cli("roots --modulus 7 --poly abc").code == 2);
  CHECK(run_cli("roots --modulus 7").code == 2);       // missing --poly
  CHECK(run_cli("roots --modulus 7 --poly 0").code == 2); // zero polynomial
  CHECK(run_cli("nonsense").code == 2);
  CHECK(run_cli("root --modulus 7 --poly 1,1 --delta 0.7").code == 2);
}

TEST_CASE("root subcommand") {
  RunResult r = run_cli("root --modulus 7 --poly 6,0,0,1");
  CHECK(r.code == 0);
  CHECK((r.out == "1\n" || r.out == "2\n" || r.out == "4\n"));

  RunResult nr = run_cli("root --modulus 7 --poly 1,0,1");
  CHECK(nr.code == 0);
  CHECK(nr.out == "no-root\n");

  CHECK(run_cli("root --modulus 7 --poly 5,1").out == "2\n");

  RunResult big = run_cli("root --modulus 100003 --poly " +
                          std::string("0,1,1")); // X(X+1): roots 0 and 100002
  CHECK(big.code == 0);
  CHECK((big.out == "0\n" || big.out == "100002\n"));
}

TEST_CASE("refine subcommand emits verified JSON") {
  RunResult r = run_cli("refine --modulus 7 --poly 6,0,1 --poly 3,4,1");
  REQUIRE(r.code == 0);
  nlohmann::json j = nlohmann::json::parse(r.out);
  CHECK(j["modulus"] == 7);
  CHECK(j["units"] == nlohmann::json::parse("[1,1]"));
  CHECK(j["basis"] == nlohmann::json::parse("[[1,1],[3,1],[6,1]]"));
  CHECK(j["exponents"] == nlohmann::json::parse("[[1,0,1],[1,1,0]]"));

  // Single and repeated inputs.
  nlohmann::json one = nlohmann::json::parse(run_cli("refine --modulus 7 --poly 3,4,1").out);
  CHECK(one["basis"] == nlohmann::json::parse("[[3,4,1]]"));
  nlohmann::json dup =
      nlohmann::json::parse(run_cli("refine --modulus 7 --poly 3,4,1 --poly 3,4,1").out);
  CHECK(dup["basis"] == nlohmann::json::parse("[[3,4,1]]"));
  CHECK(dup["exponents"] == nlohmann::json::parse("[[1],[1]]"));
}

TEST_CASE("tchi experiment CSV is pinned and reproducible") {
  std::string f1 = tmp_path("tchi1.csv"), f2 = tmp_path("tchi2.csv");
  RunResult r1 = run_cli("experiment tchi --p-list 1009 --trials 3 --seed 5 --out " + f1);
  REQUIRE(r1.code == 0);
  auto ls = lines_of(slurp(f1));
  REQUIRE(ls.size() == 5); // metadata + header + 3 rows
  CHECK(ls[0][0] == '#');
  CHECK(ls[0].find("rng=mt19937_64") != std::string::npos);
  CHECK(ls[0].find("seed=5") != std::string::npos);
  CHECK(ls[1] == "p,h,set_size,trial,T,ratio");
  for (int i = 2; i < 5; ++i) {
    auto f = split_csv(ls[i]);
    REQUIRE(f.size() == 6);
    CHECK(f[0] == "1009");
    CHECK(f[3] == std::to_string(i - 2));
  }

  RunResult r2 = run_cli("experiment tchi --p-list 1009 --trials 3 --seed 5 --out " + f2);
  REQUIRE(r2.code == 0);
  CHECK(slurp(f1) == slurp(f2)); // byte identical

  RunResult r3 =
      run_cli("--threads 2 experiment tchi --p-list 1009 --trials 3 --seed 5 --out " + f2);
  REQUIRE(r3.code == 0);
  CHECK(slurp(f1) == slurp(f2)); // thread count cannot change output

  RunResult r4 = run_cli("experiment tchi --p-list 1009 --trials 3 --seed 6 --out " + f2);
  REQUIRE(r4.code == 0);
  CHECK(slurp(f1) != slurp(f2)); // but the seed does

  std::remove(f1.c_str());
  std::remove(f2.c_str());
}

TEST_CASE("tchi with an empty set prints zero rows") {
  RunResult r = run_cli("experiment tchi --p-list 101 --trials 2 --set-size 0");
  REQUIRE(r.code == 0);
  auto ls = lines_of(r.out);
  REQUIRE(ls.size() == 4);
  for (int i = 2; i < 4; ++i) {
    auto f = split_csv(ls[i]);
    CHECK(f[2] == "0"); // set_size
    CHECK(f[4] == "0"); // T
    CHECK(f[5] == "0"); // ratio
  }
}

TEST_CASE("energy experiment with oracle verification") {
  RunResult r = run_cli("experiment energy --p-list 101,1009 --verify");
  REQUIRE(r.code == 0);
  auto ls = lines_of(r.out);
  REQUIRE(ls.size() == 4);
  CHECK(ls[1] == "p,h,L,set_size,count_W,sum_W_sq,ratio22,ratio23");
  auto f = split_csv(ls[2]);
  REQUIRE(f.size() == 8);
  CHECK(f[0] == "101");
  CHECK(std::stoull(f[4]) > 0);
  CHECK(std::stoull(f[5]) > 0);
}

TEST_CASE("weil experiment rows always satisfy the bound") {
  RunResult r = run_cli("experiment weil --p-list 101,1009 --trials 5 --seed 2");
  REQUIRE(r.code == 0);
  auto ls = lines_of(r.out);
  REQUIRE(ls.size() == 12); // meta + header + 2*5 rows
  CHECK(ls[1] == "p,deg,N,abs_sum,bound,ok");
  for (std::size_t i = 2; i < ls.size(); ++i) {
    auto f = split_csv(ls[i]);
    REQUIRE(f.size() == 6);
    CHECK(f[5] == "true");
  }
}

TEST_CASE("oversized fields exit with the resource code") {
  CHECK(run_cli("experiment weil --p-list 2147483647 --trials 1").code == 3);
}

TEST_CASE("bench CSV counters are deterministic, wall times aside") {
  std::string f1 = tmp_path("bench1.csv"), f2 = tmp_path("bench2.csv");
  std::string args = "bench roots --modulus 10007 --degrees 8,16 --trials 2 --seed 3 --out ";
  REQUIRE(run_cli(args + f1).code == 0);
  REQUIRE(run_cli(args + f2).code == 0);
  auto l1 = lines_of(slurp(f1)), l2 = lines_of(slurp(f2));
  REQUIRE(l1.size() == 6); // meta + header + 4 rows
  REQUIRE(l2.size() == 6);
  CHECK(l1[1] ==
        "command,p,degree,trial,wall_ms,sweep_powmods,setup_powmods,gcds,"
        "fallback_doublings,iterations");
  for (std::size_t i = 0; i < l1.size(); ++i) {
    auto a = split_csv(l1[i]), b = split_csv(l2[i]);
    REQUIRE(a.size() == b.size());
    for (std::size_t k = 0; k < a.size(); ++k)
      if (i < 2 || k != 4) CHECK(a[k] == b[k]); // column 4 is wall_ms
  }
  // The sweep powmod count does not depend on the degree.
  auto r8 = split_csv(l1[2]), r16 = split_csv(l1[4]);
  CHECK(r8[2] == "8");
  CHECK(r16[2] == "16");
  CHECK(r8[5] == r16[5]);
  std::remove(f1.c_str());
  std::remove(f2.c_str());
}

TEST_CASE("bench with zero trials prints headers only") {
  RunResult r = run_cli("bench root --modulus 101 --degrees 4 --trials 0");
  REQUIRE(r.code == 0);
  auto ls = lines_of(r.out);
  REQUIRE(ls.size() == 2);
  CHECK(ls[0][0] == '#');
  CHECK(ls[1].substr(0, 8) == "command,");
}
