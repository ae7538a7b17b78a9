#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <initializer_list>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include "apcover/cli.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::initializer_list<std::string> args) {
  const std::vector<std::string> v(args);
  std::ostringstream out, err;
  const int code = apcover::run(v, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("member") {
  auto r = run({"member", "26"});
  CHECK(r.code == 0);
  CHECK(r.out == "26 in A: l=2 u=1 v=[2,2]\n");
  r = run({"member", "19"});
  CHECK(r.code == 0);
  CHECK(r.out == "19 not in A\n");
}

TEST_CASE("count and nth") {
  CHECK(run({"count", "26"}).out == "A(26) = 16\n");
  CHECK(run({"nth", "16"}).out == "n_16 = 26\n");
  CHECK(run({"nth", "0"}).code == apcover::exit_code::kUsage);
}

TEST_CASE("witness") {
  auto r = run({"witness", "100"});
  CHECK(r.code == 0);
  CHECK(r.out == "a=6 b=53 n=100 ok\n");
  r = run({"witness", "31"});
  CHECK(r.code == apcover::exit_code::kUsage);
  CHECK(r.err.find("n >= 32") != std::string::npos);
}

TEST_CASE("large naturals print in decimal") {
  const std::string big = "1" + std::string(60, '0');
  const auto r = run({"count", big});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("A(" + big + ") = ", 0) == 0);
  CHECK(r.out.find('e') == std::string::npos);
}

TEST_CASE("verify-covering") {
  auto r = run({"verify-covering", "--from", "32", "--to", "5000"});
  CHECK(r.code == 0);
  CHECK(r.out == "verify-covering [32, 5000]: checked 4969, 0 failures\n");
  CHECK(run({"verify-covering", "--from", "32", "--to", "5000", "--jobs", "3"}).out == r.out);
  CHECK(run({"verify-covering", "--from", "5", "--to", "50"}).code == apcover::exit_code::kUsage);
  CHECK(run({"verify-covering", "--from", "32"}).code == apcover::exit_code::kUsage);
  CHECK(run({"verify-covering", "--from", "32", "--to", "40", "--jobs", "0"}).code ==
        apcover::exit_code::kUsage);
}

TEST_CASE("min-n0") {
  const auto r = run({"min-n0", "--upto", "1000"});
  CHECK(r.code == 0);
  CHECK(r.out == "largest n <= 1000 not AP_3-covered by A: 2\n");
}

TEST_CASE("stanley") {
  auto r = run({"stanley", "--order", "3", "--seed", "0,1", "--count", "8"});
  CHECK(r.code == 0);
  CHECK(r.out == "0,1,3,4,9,10,12,13\n");
  CHECK(run({"stanley", "--order", "3", "--seed", "0,1,2", "--count", "8"}).code ==
        apcover::exit_code::kUsage);
  CHECK(run({"stanley", "--order", "3", "--seed", "0,x", "--count", "8"}).code ==
        apcover::exit_code::kUsage);
}

TEST_CASE("density output formats") {
  auto r = run({"density", "--max-level", "0"});
  CHECK(r.code == 0);
  CHECK(r.out == "n,count,ratio\n1,1,1\n2,2,1.41421356237\n3,3,1.73205080757\n4,4,2\n");
  CHECK(run({"density", "--max-level", "0", "--csv"}).out == r.out);

  r = run({"density", "--max-level", "1", "--jsonl"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("{\"n\":1,\"count\":1,\"ratio_num\":1,\"ratio_den\":1,\"ratio\":1}\n", 0) == 0);

  CHECK(run({"density", "--max-level", "1", "--csv", "--jsonl"}).code ==
        apcover::exit_code::kUsage);
}

TEST_CASE("density --out writes a byte-stable file") {
  const auto path = std::filesystem::temp_directory_path() / "apcover_density_test.csv";
  const auto r = run({"density", "--max-level", "3", "--out", path.string()});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream in(path, std::ios::binary);
  const std::string file((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  CHECK(file == run({"density", "--max-level", "3"}).out);
  std::filesystem::remove(path);
}

TEST_CASE("argmax") {
  const auto r = run({"argmax", "--upto", "30"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("argmax n=26 A(n)=16 ratio=3.1378581622", 0) == 0);
}

TEST_CASE("explore-problem1") {
  auto r = run({"explore-problem1", "--order", "3", "--seed", "0,1", "--upto", "1000"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("Stanley sequence of order 4 from {0,1}: ", 0) == 0);
  CHECK(r.out == run({"explore-problem1", "--order", "3", "--seed", "0,1", "--upto", "1000"}).out);

  r = run({"explore-problem1", "--order", "3", "--seed", "0", "--upto", "100"});
  CHECK(r.code == 0);

  // Order 2 covering would need a 3-AP-free seed of order 3; rejected either way.
  CHECK(run({"explore-problem1", "--order", "2", "--seed", "0,1,2", "--upto", "100"}).code ==
        apcover::exit_code::kUsage);
  CHECK(run({"explore-problem1", "--order", "3", "--seed", "0,1,2,3", "--upto", "100"}).code ==
        apcover::exit_code::kUsage);
}

TEST_CASE("explore_problem1 report") {
  const auto rep = apcover::explore_problem1(3, {0, 1}, 200);
  CHECK(rep.k == 3);
  CHECK(rep.stanley_terms.front() == 0);
  CHECK(rep.stanley_terms.back() <= 200);
  // 0 and 1 can never be covered: no two smaller naturals exist.
  REQUIRE(rep.uncovered.size() >= 2);
  CHECK(rep.uncovered[0] == 0);
  CHECK(rep.uncovered[1] == 1);
}

TEST_CASE("usage errors") {
  CHECK(run({}).code == apcover::exit_code::kUsage);
  CHECK(run({"frobnicate"}).code == apcover::exit_code::kUsage);
  CHECK(run({"member", "-3"}).code == apcover::exit_code::kUsage);
  CHECK(run({"--help"}).code == apcover::exit_code::kOk);
}
