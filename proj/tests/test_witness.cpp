#include <doctest.h>

#include <stdexcept>

#include "apcover/covering_sequence.hpp"
#include "apcover/witness.hpp"

using apcover::kCaseTables;
using apcover::Natural;
using apcover::Witness;

TEST_CASE("case table identities") {
  for (unsigned m = 2; m <= 7; ++m) {
    const auto [u1, u2] = kCaseTables.lead[m];
    CHECK(u2 + m == 2 * u1);
    CHECK(u1 >= 1);
    CHECK(u1 <= 4);
    CHECK(u2 <= 4);
  }
  for (unsigned d = 0; d <= 3; ++d) {
    const auto [v1, v2] = kCaseTables.digit[d];
    CHECK(v2 + d == 2 * v1);
    CHECK((v1 == 1 || v1 == 2));
    CHECK((v2 == 1 || v2 == 2));
  }
}

TEST_CASE("level_for examples") {
  CHECK(apcover::level_for(32) == 2);
  CHECK(apcover::level_for(100) == 2);
  CHECK(apcover::level_for(1000) == 4);
  CHECK_THROWS_AS(apcover::level_for(31), std::invalid_argument);
}

TEST_CASE("level_for tiles [32, 10^6]") {
  for (unsigned n = 32; n <= 1'000'000; ++n) {
    const std::size_t l = apcover::level_for(n);
    REQUIRE(2 * apcover::pow4(l) <= n);
    REQUIRE(n < 8 * apcover::pow4(l));
    REQUIRE(l >= 2);
  }
}

TEST_CASE("find_witness examples") {
  auto w = apcover::find_witness(32);
  CHECK(w.a == 10);
  CHECK(w.b == 21);
  CHECK(w.m == 2);

  w = apcover::find_witness(100);
  CHECK(w.a == 6);
  CHECK(w.b == 53);
  CHECK(w.m == 6);

  w = apcover::find_witness(1000);
  CHECK(w.a == 362);
  CHECK(w.b == 681);
  CHECK(w.level == 4);
  CHECK(w.m == 3);

  CHECK_THROWS_AS(apcover::find_witness(31), std::invalid_argument);
}

TEST_CASE("validate examples") {
  CHECK(apcover::validate(Witness{10, 21, 32, 2, 2}));
  CHECK(apcover::validate(Witness{6, 53, 100, 2, 6}));
  CHECK_FALSE(apcover::validate(Witness{5, 6, 100, 2, 6}));
  // Right progression, wrong membership: 20 is not in A.
  CHECK_FALSE(apcover::validate(Witness{20, 60, 100, 2, 6}));
  // Members of A, but from a level far below.
  CHECK_FALSE(apcover::validate(Witness{1, 2, 3, 2, 2}));
}

TEST_CASE("witness levels are l or l-1 for b and a") {
  for (unsigned n = 32; n <= 200'000; ++n) {
    const Witness w = apcover::find_witness(n);
    const auto ea = apcover::decompose(w.a);
    const auto eb = apcover::decompose(w.b);
    REQUIRE(ea.has_value());
    REQUIRE(eb.has_value());
    REQUIRE(eb->level == w.level);
    REQUIRE((ea->level == w.level || ea->level + 1 == w.level));
    // u2 = 0 exactly when a lands one level down.
    REQUIRE((ea->level + 1 == w.level) == (kCaseTables.lead[w.m].u2 == 0));
  }
}

TEST_CASE("sweep summary is independent of job count") {
  const auto one = apcover::verify_covering(32, 50'000, 1);
  const auto four = apcover::verify_covering(32, 50'000, 4);
  CHECK(one.checked == 50'000 - 31);
  CHECK(one.failures == 0);
  CHECK(four.checked == one.checked);
  CHECK(four.failures == one.failures);
  CHECK_FALSE(four.first_failure.has_value());
  // More jobs than values.
  CHECK(apcover::verify_covering(32, 34, 8).checked == 3);
  CHECK_THROWS_AS(apcover::verify_covering(10, 100), std::invalid_argument);
  CHECK_THROWS_AS(apcover::verify_covering(100, 99), std::invalid_argument);
  CHECK_THROWS_AS(apcover::verify_covering(32, 99, 0), std::invalid_argument);
}

TEST_CASE("witness on huge n") {
  const Natural n = apcover::pow4(400) * 5 + 12345;
  const Witness w = apcover::find_witness(n);
  CHECK(w.level == 400);
  CHECK(w.m == 5);
  CHECK(apcover::validate(w));
}
