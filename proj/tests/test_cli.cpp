#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "commands.hpp"

using namespace dropk::cli;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run_cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

}  // namespace

TEST_CASE("solve") {
  CHECK(run_cli({"solve", "--k", "3", "--algo", "linear", "6782334"}).out == "8334\n");
  CHECK(run_cli({"solve", "--k", "0", "--algo", "greedy", "abc"}).out == "abc\n");
  CHECK(run_cli({"solve", "--k", "7", "--algo", "linear", "6782334"}).out == "\n");
  CHECK(run_cli({"solve", "--k", "0", ""}).out == "\n");

  for (const char* algo : {"naive", "greedy", "linear"}) {
    const auto r = run_cli({"solve", "--k", "2", "--algo", algo, "194234"});
    CHECK(r.code == kExitOk);
    CHECK(r.out == "9434\n");
  }

  // ordering by scalar value, beyond ASCII
  CHECK(run_cli({"solve", "--k", "1", "αγβ"}).out == "γβ\n");
}

TEST_CASE("solve errors") {
  const auto big = run_cli({"solve", "--k", "8", "6782334"});
  CHECK(big.code == kExitUsage);
  CHECK(big.err.find("cannot drop more elements") != std::string::npos);

  CHECK(run_cli({"solve", "--k", "7", "--algo", "naive", "12345678"}).code == kExitUsage);
  CHECK(run_cli({"solve", "--k", "1", "--algo", "naive", "123456789012345678901"}).code ==
        kExitUsage);
  CHECK(run_cli({"solve", "--k", "1", "--algo", "bogus", "12"}).code == kExitUsage);
  CHECK(run_cli({"solve", "12"}).code == kExitUsage);
  CHECK(run_cli({"solve", "--k", "1"}).code == kExitUsage);
  CHECK(run_cli({"solve", "--k", "1", "\xff"}).code == kExitUsage);
  CHECK(run_cli({}).code == kExitUsage);
}

TEST_CASE("solve from a file strips the trailing newline") {
  const std::string path = "dropk_cli_input.txt";
  {
    std::ofstream f(path);
    f << "6782334\n";
  }
  CHECK(run_cli({"solve", "--k", "3", "--file", path}).out == "8334\n");
  std::remove(path.c_str());
  CHECK(run_cli({"solve", "--k", "3", "--file", "no/such/file"}).code == kExitUsage);
}

TEST_CASE("trace") {
  const auto r = run_cli({"trace", "--k", "1", "19"});
  CHECK(r.code == kExitOk);
  CHECK(lines(r.out) == std::vector<std::string>{
                           "k=1 acc=\"\" rest=\"19\" PUSH '1'",
                           "k=1 acc=\"1\" rest=\"9\" POP '1' (k->0)",
                           "k=0 acc=\"\" rest=\"9\" FINISH",
                           "9",
                       });
  CHECK(lines(run_cli({"trace", "--k", "0", "abc"}).out) ==
        std::vector<std::string>{"k=0 acc=\"\" rest=\"abc\" FINISH", "abc"});
  CHECK(lines(run_cli({"trace", "--k", "3", "6782334"}).out).back() == "8334");
  CHECK(run_cli({"trace", "--k", "4", "abc"}).code == kExitUsage);
}

TEST_CASE("verify") {
  const auto r = run_cli({"verify", "--max-len", "4", "--alphabet", "ab"});
  CHECK(r.code == kExitOk);
  CHECK(lines(r.out).back() == "violations: 0");
  CHECK(r.out.find("counterexample confirmed") != std::string::npos);

  const auto tiny = run_cli({"verify", "--max-len", "1", "--alphabet", "a"});
  CHECK(tiny.code == kExitOk);
  CHECK(lines(tiny.out).back() == "violations: 0");

  CHECK(run_cli({"verify", "--max-len", "10", "--alphabet", "123"}).code == kExitUsage);
  CHECK(run_cli({"verify", "--max-len", "0", "--alphabet", "123"}).code == kExitUsage);
  CHECK(run_cli({"verify", "--max-len", "3", "--alphabet", "113"}).code == kExitUsage);
  CHECK(run_cli({"verify", "--max-len", "3", "--alphabet", ""}).code == kExitUsage);
}

TEST_CASE("bench CSV contract") {
  const auto r = run_cli({"bench", "--sizes", "1000,2000,4000", "--seed", "42"});
  REQUIRE(r.code == kExitOk);
  const auto rows = lines(r.out);
  REQUIRE(rows.size() == 1 + 2 * 3);
  CHECK(rows[0] == "algo,n,k,wall_nanos,steps");

  const auto records = run_bench({1000, 2000, 4000}, 42);
  REQUIRE(records.size() == 6);
  for (const auto& rec : records) {
    CHECK(rec.k == rec.n / 2);
    CHECK(rec.wall_nanos > 0);
    if (rec.algo == "linear") CHECK(rec.steps <= rec.n + rec.k + 1);
  }

  // small sizes include the naive engine
  const auto small = run_bench({8}, 1);
  REQUIRE(small.size() == 3);
  CHECK(small[0].algo == "naive");
  CHECK(small[0].steps == 8 * 7 * 6 * 5);

  CHECK(run_cli({"bench", "--sizes", "0", "--seed", "1"}).code == kExitUsage);
  CHECK(run_cli({"bench", "--seed", "1"}).code == kExitUsage);
}

TEST_CASE("bench rows are deterministic apart from timing") {
  const auto a = run_bench({50, 500}, 9);
  const auto b = run_bench({50, 500}, 9);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].algo == b[i].algo);
    CHECK(a[i].steps == b[i].steps);
  }
}
