#include <doctest.h>

#include <cmath>

#include "ladderne/blocks.hpp"
#include "ladderne/closed_forms.hpp"
#include "ladderne/errors.hpp"

using namespace ladderne;

namespace {

long double as_float(const BigInt& v) { return v.convert_to<long double>(); }

double rel_error(long double approx, const BigInt& exact) {
  return static_cast<double>(std::fabs(approx - as_float(exact)) / as_float(exact));
}

}  // namespace

TEST_CASE("fibonacci and lucas") {
  CHECK(fib(0) == 0);
  CHECK(fib(1) == 1);
  CHECK(fib(10) == 55);
  CHECK(fib(90) == BigInt("2880067194370816120"));
  CHECK(fib(-1) == 1);
  CHECK(fib(-2) == -1);
  CHECK(fib(-7) == 13);
  CHECK(lucas(0) == 2);
  CHECK(lucas(1) == 1);
  CHECK(lucas(8) == 47);
  CHECK_THROWS_AS(lucas(-1), Error);
  for (long m = 2; m <= 300; ++m) {
    CHECK(fib(m) == fib(m - 1) + fib(m - 2));
    CHECK(lucas(m) == fib(m - 1) + fib(m + 1));
  }
}

TEST_CASE("binet form agrees with exact fibonacci") {
  const long double phi = closed_form_params().phi;
  for (int m = 1; m <= 80; ++m) {
    const long double binet = (std::pow(phi, m) - std::pow(-1 / phi, m)) / std::sqrt(5.0L);
    CHECK(std::llround(binet) == fib(m).convert_to<long long>());
  }
}

TEST_CASE("golden-ratio constants") {
  const auto& c = closed_form_params();
  CHECK(std::fabs(static_cast<double>(c.phi) - 1.6180339887498949) < 1e-15);
  CHECK(std::fabs(static_cast<double>(c.r1 * c.r2) - 1) < 1e-15);
  CHECK(std::fabs(static_cast<double>(c.r1 + c.r2) - 3) < 1e-15);
  CHECK(std::fabs(2 / std::sqrt(5.0) - 0.894427) < 1e-6);
}

TEST_CASE("block index bookkeeping") {
  CHECK(block_index_for_rungs(6).k == 3);
  CHECK_FALSE(block_index_for_rungs(6).semi_block);
  CHECK(block_index_for_rungs(5).k == 2);
  CHECK(block_index_for_rungs(5).semi_block);
  CHECK(rungs_for_players(14) == 7);
  CHECK_THROWS_AS(rungs_for_players(7), Error);
  CHECK_THROWS_AS(rungs_for_players(0), Error);
}

TEST_CASE("ladder closed form small values") {
  const std::vector<int> expected{2, 3, 4, 7, 10, 17, 26, 43, 68};
  for (int n = 2; n <= 10; ++n) CHECK(ladder_closed(BlockCase::case1, n) == expected[static_cast<std::size_t>(n - 2)]);
  CHECK(ladder_closed(BlockCase::case2, 2) == 2);
  CHECK(ladder_closed(BlockCase::case2, 4) == 6);
  CHECK(ladder_closed(BlockCase::case2, 10) == 110);
  CHECK_THROWS_AS(ladder_closed(BlockCase::case2, 5), UnsupportedParity);
}

TEST_CASE("closed forms equal the block engine") {
  for (int n = 2; n <= 80; ++n) {
    CHECK(ladder_closed(BlockCase::case1, n) == ladder_count_blocks(BlockCase::case1, n));
    if (n % 2 == 0) CHECK(ladder_closed(BlockCase::case2, n) == ladder_count_blocks(BlockCase::case2, n));
  }
  for (int k = 1; k <= 60; ++k) {
    for (BlockCase c : {BlockCase::case1, BlockCase::case2}) {
      CHECK(unrestricted_closed(c, k) == unrestricted_count_blocks(c, k));
      CHECK(unrestricted_extended(c, k) == unrestricted_closed(c, k));
    }
  }
}

TEST_CASE("unrestricted and circular examples") {
  CHECK(unrestricted_closed(BlockCase::case1, 1) == 4);
  CHECK(unrestricted_closed(BlockCase::case1, 2) == 10);
  CHECK(unrestricted_closed(BlockCase::case2, 1) == 6);
  CHECK(unrestricted_closed(BlockCase::case2, 2) == 16);
  CHECK(circular_closed(BlockCase::case1, 2) == 9);
  CHECK(circular_closed(BlockCase::case2, 2) == 7);
  CHECK(circular_closed(BlockCase::case2, 3) == 18);
  CHECK_THROWS_AS(circular_closed(BlockCase::case1, 1), Error);
}

TEST_CASE("floating forms track the exact integers") {
  for (int n = 2; n <= 60; ++n) {
    CHECK(rel_error(ladder_closed_float(BlockCase::case1, n), ladder_closed(BlockCase::case1, n)) < 1e-9);
    if (n % 2 == 0) {
      CHECK(rel_error(ladder_closed_float(BlockCase::case2, n), ladder_closed(BlockCase::case2, n)) < 1e-9);
    }
  }
  for (int k = 2; k <= 30; ++k) {
    for (BlockCase c : {BlockCase::case1, BlockCase::case2}) {
      CHECK(rel_error(unrestricted_closed_float(c, k), unrestricted_closed(c, k)) < 1e-9);
      CHECK(rel_error(circular_closed_float(c, k), circular_closed(c, k)) < 1e-9);
    }
  }
}

TEST_CASE("recursive circular formulas equal the closed circular forms") {
  for (int k = 2; k <= 200; ++k) {
    CHECK(circular_recursive(BlockCase::case1, k) == circular_closed(BlockCase::case1, k));
    CHECK(circular_recursive(BlockCase::case2, k) == circular_closed(BlockCase::case2, k));
  }
  // An odd value under the halving is reported, not truncated.
  CHECK_THROWS_AS(circular_recursive(BlockCase::case1, 3, [](long) { return BigInt(3); }), NonIntegerResult);
}

TEST_CASE("growth rate approaches log phi per rung") {
  const double log_phi = std::log(static_cast<double>(closed_form_params().phi));
  for (Family f : {Family::ladder, Family::circular, Family::unrestricted}) {
    for (BlockCase c : {BlockCase::case1, BlockCase::case2}) {
      const FamilyRef ref{f, c};
      const double slope =
          (std::log(family_count(ref, 202).convert_to<double>()) - std::log(family_count(ref, 200).convert_to<double>())) / 2;
      CHECK(std::fabs(slope - log_phi) / log_phi < 1e-3);
    }
  }
}

TEST_CASE("family counts and ratios") {
  const FamilyRef ladd1{Family::ladder, BlockCase::case1};
  const FamilyRef ladd2{Family::ladder, BlockCase::case2};
  const FamilyRef circ1{Family::circular, BlockCase::case1};
  const FamilyRef unres1{Family::unrestricted, BlockCase::case1};
  CHECK(family_count(ladd1, 10) == 68);
  CHECK(family_count(ladd2, 8) == 42);
  CHECK(family_count(circ1, 8) == circular_count_blocks(BlockCase::case1, 4));
  CHECK(family_count(unres1, 6) == unrestricted_closed(BlockCase::case1, 3));
  CHECK_THROWS_AS(family_count(ladd1, 7), Error);
  CHECK(std::fabs(asymptotic_ratio(ladd2, ladd1) - 1.618) < 1e-3);
  CHECK(std::fabs(asymptotic_ratio(ladd1, unres1) - 0.382) < 1e-3);
}

TEST_CASE("three-term recurrence") {
  for (BlockCase c : {BlockCase::case1, BlockCase::case2}) {
    std::vector<BigInt> unres;
    for (int k = 1; k <= 100; ++k) unres.push_back(unrestricted_closed(c, k));
    CHECK(recurrence_check(unres));
    std::vector<BigInt> ladd;
    for (int k = 1; k <= 100; ++k) ladd.push_back(ladder_closed(c, 2 * k));
    CHECK(recurrence_check(ladd));
  }
  std::vector<BigInt> odd;
  for (int k = 1; k <= 20; ++k) odd.push_back(ladder_closed(BlockCase::case1, 2 * k + 1) - 1);
  CHECK(recurrence_check(odd));
}
