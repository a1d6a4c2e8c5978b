#include <doctest.h>

#include <random>
#include <vector>

#include "ladderne/errors.hpp"
#include "ladderne/game.hpp"
#include "test_support.hpp"

using namespace ladderne;

namespace {

constexpr Strategy A = Strategy::a;
constexpr Strategy B = Strategy::b;

// Every ordered opponent sequence of length 2 and 3.
std::vector<std::vector<Strategy>> all_opponent_sequences() {
  std::vector<std::vector<Strategy>> out;
  for (int size : {2, 3}) {
    for (int bits = 0; bits < (1 << size); ++bits) {
      std::vector<Strategy> seq;
      for (int i = 0; i < size; ++i) seq.push_back((bits >> i) & 1 ? B : A);
      out.push_back(seq);
    }
  }
  return out;
}

Strategy argmax(const std::vector<Strategy>& opponents, const PayoffParams& params) {
  const Rational pa = averaged_payoff(A, opponents, params);
  const Rational pb = averaged_payoff(B, opponents, params);
  REQUIRE(pa != pb);
  return pa > pb ? A : B;
}

}  // namespace

TEST_CASE("reduce subtracts and rejects boundary parameters") {
  const ReducedParams rp = reduce({0, 2, 3, 0});
  CHECK(rp.x() == 3);
  CHECK(rp.y() == 2);
  CHECK(reduce({0, 1, 3, 0}) == ReducedParams::make(3, 1));

  CHECK_THROWS_AS(reduce({1, 1, 2, 0}), NonGenericParameters);  // y = x
  CHECK_THROWS_AS(reduce({0, 2, 1, 0}), NonGenericParameters);  // y = 2x
  CHECK_THROWS_AS(reduce({0, 1, 2, 0}), NonGenericParameters);  // 2y = x
  CHECK_THROWS_AS(reduce({3, 2, 3, 0}), InvalidGame);           // r = p
  CHECK_THROWS_AS(reduce({0, 0, 3, 1}), InvalidGame);           // q < s
}

TEST_CASE("regime_of") {
  CHECK(regime_of(ReducedParams::make(3, 2)) == Regime::minority_a);
  CHECK(regime_of(ReducedParams::make(3, 1)) == Regime::lone_a);
  CHECK(regime_of(ReducedParams::make(1, 3)) == Regime::lone_b);
  CHECK(regime_of(ReducedParams::make(2, 3)) == Regime::minority_b);
}

TEST_CASE("regime signature signs") {
  const auto sig = signature_of(ReducedParams::make(3, 2));
  CHECK(sig.f == Sign::negative);
  CHECK(sig.g == Sign::positive);
  CHECK(sig.h == Sign::negative);
  CHECK(signature_of(ReducedParams::make(1, 3)) ==
        RegimeSignature{Sign::positive, Sign::positive, Sign::positive});
}

TEST_CASE("averaged payoff table entries") {
  const PayoffParams params{0, 2, 3, 0};
  CHECK(averaged_payoff(A, std::vector{A, A, B}, params) == Rational(2, 3));
  CHECK(averaged_payoff(A, std::vector{A, B}, params) == 1);
  const PayoffParams other{Rational(1, 7), 5, 9, Rational(-2, 3)};
  CHECK(averaged_payoff(B, std::vector{A, A, A}, other) == other.r);
  CHECK(averaged_payoff(B, std::vector{A, B, B}, other) == (2 * other.s + other.r) / 3);

  CHECK_THROWS_AS(averaged_payoff(A, std::vector{A}, params), BadDegree);
  CHECK_THROWS_AS(averaged_payoff(A, std::vector{A, A, A, A}, params), BadDegree);
}

TEST_CASE("best_response examples") {
  CHECK(best_response(Regime::minority_a, std::vector{A, A, B}) == B);
  CHECK(best_response(Regime::lone_a, std::vector{B, B, B}) == A);
  CHECK(best_response(Regime::minority_a, std::vector{A, B}) == B);
  CHECK(best_response(Regime::minority_a, std::vector{A, B, B}) == A);
  CHECK(best_response(Regime::lone_a, std::vector{A, B, B}) == B);
  CHECK_THROWS_AS(best_response(Regime::lone_a, std::vector<Strategy>{}), BadDegree);
}

TEST_CASE("best_response agrees with the payoff argmax for random generic payoffs") {
  std::mt19937 rng(20240611);
  const auto sequences = all_opponent_sequences();
  for (Regime regime : {Regime::lone_a, Regime::minority_a, Regime::minority_b, Regime::lone_b}) {
    for (int trial = 0; trial < 1000; ++trial) {
      const PayoffParams params = testing::random_payoffs(regime, rng);
      REQUIRE(regime_of(reduce(params)) == regime);
      for (const auto& opponents : sequences) {
        CHECK(best_response(regime, opponents) == argmax(opponents, params));
      }
    }
  }
}

TEST_CASE("mirror regimes swap a and b") {
  for (auto opponents : all_opponent_sequences()) {
    std::vector<Strategy> swapped = opponents;
    for (auto& s : swapped) s = swap(s);
    CHECK(best_response(Regime::minority_b, opponents) == swap(best_response(Regime::minority_a, swapped)));
    CHECK(best_response(Regime::lone_b, opponents) == swap(best_response(Regime::lone_a, swapped)));
  }
  CHECK(mirror(Regime::minority_a) == Regime::minority_b);
  CHECK(mirror(mirror(Regime::lone_a)) == Regime::lone_a);
}

TEST_CASE("averaged payoff ignores opponent order") {
  const PayoffParams params{Rational(-1, 2), 4, 3, Rational(1, 3)};
  const std::vector<std::vector<Strategy>> perms = {{A, A, B}, {A, B, A}, {B, A, A}};
  for (Strategy own : {A, B}) {
    for (const auto& p : perms) CHECK(averaged_payoff(own, p, params) == averaged_payoff(own, perms[0], params));
  }
}

TEST_CASE("regime depends only on y/x") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> d(1, 50);
  for (int i = 0; i < 200; ++i) {
    Rational x(d(rng), d(rng));
    Rational y(d(rng), d(rng));
    if (y == x || y == 2 * x || 2 * y == x) continue;
    const Rational scale(d(rng), d(rng));
    CHECK(regime_of(ReducedParams::make(x, y)) == regime_of(ReducedParams::make(x * scale, y * scale)));
  }
}

TEST_CASE("regime names round trip") {
  for (Regime r : {Regime::lone_a, Regime::minority_a, Regime::minority_b, Regime::lone_b}) {
    CHECK(parse_regime(regime_name(r)) == r);
  }
  CHECK_THROWS_AS(parse_regime("minority_a"), ParseError);
}

TEST_CASE("parse_rational") {
  CHECK(parse_rational("3") == 3);
  CHECK(parse_rational("-3/4") == Rational(-3, 4));
  CHECK(parse_rational("2.25") == Rational(9, 4));
  CHECK(parse_rational("-0.5") == Rational(-1, 2));
  CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
  CHECK_THROWS_AS(parse_rational("x"), ParseError);
  CHECK_THROWS_AS(parse_rational("1.5.2"), ParseError);
}
