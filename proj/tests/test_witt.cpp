#include "doctest.h"
#include "liedim/oracle.hpp"
#include "liedim/witt.hpp"
#include "support/independent.hpp"

using namespace liedim;

TEST_CASE("witt_dim examples") {
  for (unsigned long n = 1; n <= 6; ++n) CHECK(witt_dim(n, 1) == n);
  CHECK(witt_dim(2, 3) == 2);  // 001, 011
  CHECK(witt_dim(2, 6) == 9);
  CHECK(witt_dim(4, 3) == 20);
  CHECK(witt_dim(2, 12) == 335);
  CHECK_THROWS_AS(witt_dim(2, 0), DomainError);
  CHECK_THROWS_AS(witt_dim(0, 3), DomainError);
}

TEST_CASE("witt_dim agrees with enumeration of aperiodic words") {
  for (std::uint32_t n = 1; n <= 3; ++n)
    for (std::uint32_t r = 1; r <= 10; ++r) {
      CAPTURE(n);
      CAPTURE(r);
      REQUIRE(witt_dim(n, r) == testing::witt_by_enumeration(n, r));
      REQUIRE(aperiodic_word_count({n, r}) ==
              static_cast<unsigned long>(testing::count_aperiodic(n, r)));
    }
  CHECK(witt_dim(4, 3) == testing::witt_by_enumeration(4, 3));
}

TEST_CASE("witt_dim counts Lyndon words") {
  for (std::uint32_t n = 1; n <= 4; ++n)
    for (std::uint32_t r = 1; r <= 12; ++r)
      REQUIRE(witt_dim(n, r) == static_cast<unsigned long>(oracle::lyndon_words(n, r).size()));
}

TEST_CASE("aperiodic_word_count examples") {
  CHECK(aperiodic_word_count({2, 2}) == 2);
  CHECK(aperiodic_word_count({1, 2}) == 0);
  CHECK(aperiodic_word_count({3, 1}) == 3);
}

TEST_CASE("alphabet of one letter") {
  CHECK(witt_dim(1, 1) == 1);
  for (std::uint64_t r = 2; r <= 100; ++r) REQUIRE(witt_dim(1, r) == 0);
}

TEST_CASE("check_witt_bounds witnesses") {
  SUBCASE("n=2 r=2 is tight") {
    const auto wb = check_witt_bounds({2, 2});
    CHECK(wb.w == 1);
    CHECK(wb.upper_lhs == 2);
    CHECK(wb.upper_rhs == 4);
    CHECK(wb.lower_lhs == 4);
    CHECK(wb.lower_lhs_squared == 16);
    CHECK(wb.lower_rhs_squared == 16);
    CHECK(wb.holds());
  }
  SUBCASE("n=1 r=2 degenerate") {
    const auto wb = check_witt_bounds({1, 2});
    CHECK(wb.w == 0);
    CHECK(wb.lower_lhs == 2);  // 2*1 - 0, compared squared: 4 <= 4
    CHECK(wb.lower_lhs_squared == 4);
    CHECK(wb.lower_rhs_squared == 4);
    CHECK(wb.holds());
  }
  SUBCASE("n=2 r=3 odd exponent") {
    const auto wb = check_witt_bounds({2, 3});
    CHECK(wb.upper_lhs == 6);
    CHECK(wb.upper_rhs == 8);
    CHECK(wb.lower_lhs == 4);
    CHECK(wb.lower_lhs_squared == 16);
    CHECK(wb.lower_rhs_squared == 72);
    CHECK(wb.holds());
  }
}

TEST_CASE("witt bounds hold on the full grid") {
  for (unsigned long n = 1; n <= 10; ++n)
    for (std::uint64_t r = 1; r <= 64; ++r) REQUIRE(check_witt_bounds({n, r}).holds());
}

TEST_CASE("witt_dim handles huge alphabets") {
  // w(n^{p^m}, k) with n^{p^m} far beyond 64 bits
  const Natural big = power(Natural(3), 512);
  const Natural w = witt_dim(big, 6);
  CHECK(w * 6 == power(big, 6) - power(big, 3) - power(big, 2) + big);
}
