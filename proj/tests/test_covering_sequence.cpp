#include <doctest.h>

#include <stdexcept>
#include <vector>

#include "apcover/base4.hpp"
#include "apcover/covering_sequence.hpp"
#include "support/brute_force.hpp"

using apcover::Natural;
using apcover::Rank;
using apcover::TElement;

namespace {

std::vector<Natural> collect(const Natural& lo, const Natural& hi) {
  std::vector<Natural> out;
  for (const Natural& x : apcover::iter_range(lo, hi)) out.push_back(x);
  return out;
}

}  // namespace

TEST_CASE("encode examples") {
  CHECK(apcover::encode({0, 1, {}}) == 1);
  CHECK(apcover::encode({2, 1, {2, 2}}) == 26);
  CHECK(apcover::encode({1, 4, {1}}) == 17);
}

TEST_CASE("encode rejects malformed elements") {
  CHECK_THROWS_AS(apcover::encode({0, 5, {}}), std::invalid_argument);
  CHECK_THROWS_AS(apcover::encode({0, 0, {}}), std::invalid_argument);
  CHECK_THROWS_AS(apcover::encode({1, 2, {3}}), std::invalid_argument);
  CHECK_THROWS_AS(apcover::encode({2, 2, {1}}), std::invalid_argument);
}

TEST_CASE("decompose examples") {
  CHECK(apcover::decompose(1) == TElement{0, 1, {}});
  CHECK(apcover::decompose(17) == TElement{1, 4, {1}});
  CHECK_FALSE(apcover::decompose(20).has_value());
  CHECK_FALSE(apcover::decompose(0).has_value());
}

TEST_CASE("member examples") {
  CHECK(apcover::member(4));
  CHECK_FALSE(apcover::member(19));
  CHECK(apcover::member(26));
}

TEST_CASE("count_leq examples") {
  CHECK(apcover::count_leq(0) == 0);
  CHECK(apcover::count_leq(5) == 5);
  CHECK(apcover::count_leq(26) == 16);
  CHECK(apcover::count_leq(19) == 12);
}

TEST_CASE("element_at examples") {
  CHECK(apcover::element_at(Rank(1)) == 1);
  CHECK(apcover::element_at(Rank(5)) == 5);
  CHECK(apcover::element_at(Rank(16)) == 26);
  CHECK_THROWS_AS(Rank(0), std::invalid_argument);
}

TEST_CASE("iter_range examples") {
  CHECK(collect(1, 6) == std::vector<Natural>{1, 2, 3, 4, 5, 6});
  CHECK(collect(19, 20).empty());
  CHECK(collect(25, 27) == std::vector<Natural>{25, 26});
  CHECK_THROWS_AS(apcover::iter_range(5, 4), std::invalid_argument);
}

TEST_CASE("membership and decomposition agree with enumeration up to 10^6") {
  const auto elems = apcover::testing::enumerate_covering_sequence(1'000'000);
  std::size_t j = 0;
  for (std::uint64_t n = 0; n <= 1'000'000; ++n) {
    const bool expected = j < elems.size() && elems[j] == n;
    if (expected) ++j;
    const auto e = apcover::decompose(n);
    REQUIRE(e.has_value() == expected);
    if (e) REQUIRE(apcover::encode(*e) == n);
  }
}

TEST_CASE("every member has exactly one (l, u, v) representation") {
  // The enumeration lists each (l, u, v) once; equal neighbours would mean two
  // representations of one value.
  const auto elems = apcover::testing::enumerate_covering_sequence(1'000'000);
  for (std::size_t i = 1; i < elems.size(); ++i) REQUIRE(elems[i - 1] < elems[i]);
  for (unsigned n = 1; n <= 1'000'000; ++n) {
    const auto e = apcover::decompose(n);
    if (!e) continue;
    // The competing candidate level would need the digit right below the
    // leading digit to be 0 (for u < 4) or in {1,2} (for u = 4).
    const std::size_t l = e->level;
    if (e->u == 4) {
      REQUIRE(apcover::digit_at(n, l).value() == 0);
    } else if (l >= 1) {
      REQUIRE(apcover::digit_at(n, l - 1).value() != 0);
    }
  }
}

TEST_CASE("count_leq matches brute-force counts up to 2*10^5") {
  const std::uint64_t bound = 200'000;
  const auto counts =
      apcover::testing::prefix_counts(apcover::testing::enumerate_covering_sequence(bound), bound);
  for (std::uint64_t n = 0; n <= bound; ++n) REQUIRE(apcover::count_leq(n) == counts[n]);
}

TEST_CASE("rank and unrank are inverse on elements up to 10^6") {
  const auto elems = apcover::testing::enumerate_covering_sequence(1'000'000);
  for (std::size_t i = 0; i < elems.size() && elems[i] <= 1'000'000; ++i) {
    const Natural j = apcover::count_leq(elems[i]);
    REQUIRE(j == i + 1);
    REQUIRE(apcover::element_at(Rank(j)) == elems[i]);
  }
  Natural prev = 0;
  for (unsigned j = 1; j <= 10'000; ++j) {
    const Natural x = apcover::element_at(Rank(j));
    REQUIRE(x > prev);
    prev = x;
  }
}

TEST_CASE("levels have 4*2^l elements, are disjoint and ordered") {
  for (std::size_t l = 0; l <= 8; ++l) {
    const auto span = collect(apcover::level_min(l), apcover::level_max(l));
    CHECK(span.size() == 4u << l);
    CHECK(Natural(span.size()) == apcover::level_size(l));
    for (const auto& x : span) CHECK(apcover::decompose(x)->level == l);
    CHECK(apcover::level_max(l) < apcover::level_min(l + 1));
  }
}

TEST_CASE("count_leq matches the per-element closed form at large levels") {
  // A(encode(l,u,v)) = (u-1)2^l + sum (v_i - 1)2^i + 1 + 4(2^l - 1).
  for (std::size_t l : {10u, 33u, 64u, 200u}) {
    for (unsigned u = 1; u <= 4; ++u) {
      TElement e{l, u, std::vector<std::uint8_t>(l, 1)};
      for (std::size_t i = 0; i < l; i += 3) e.v[i] = 2;
      Natural expected = Natural(u - 1) * apcover::pow2(l) + 1 + 4 * (apcover::pow2(l) - 1);
      for (std::size_t i = 0; i < l; ++i) expected += Natural(e.v[i] - 1) * apcover::pow2(i);
      const Natural n = apcover::encode(e);
      CHECK(apcover::count_leq(n) == expected);
      CHECK(apcover::count_leq(n - 1) == expected - 1);
      CHECK(apcover::element_at(Rank(expected)) == n);
      CHECK(apcover::decompose(n) == e);
    }
  }
}
