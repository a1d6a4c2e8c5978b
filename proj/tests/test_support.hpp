#pragma once

#include <random>

#include "ladderne/game.hpp"

namespace ladderne::testing {

// Random generic payoffs whose (x, y) fall in `regime`. y/x is drawn from the
// open interval of the regime with a rational of denominator up to 97.
inline PayoffParams random_payoffs(Regime regime, std::mt19937& rng) {
  std::uniform_int_distribution<int> small(-20, 20);
  std::uniform_int_distribution<int> positive(1, 40);
  std::uniform_int_distribution<int> den_dist(2, 97);
  Rational lo, hi;
  switch (regime) {
    case Regime::lone_a: lo = Rational(1, 100); hi = Rational(1, 2); break;
    case Regime::minority_a: lo = Rational(1, 2); hi = 1; break;
    case Regime::minority_b: lo = 1; hi = 2; break;
    case Regime::lone_b: lo = 2; hi = 7; break;
  }
  Rational ratio;
  do {
    const int den = den_dist(rng);
    std::uniform_int_distribution<int> num(1, 7 * den);
    ratio = Rational(num(rng), den);
  } while (ratio <= lo || ratio >= hi);
  const Rational x(positive(rng), den_dist(rng));
  const Rational y = ratio * x;
  const Rational p(small(rng), 3);
  const Rational s(small(rng), 5);
  return {p, s + y, p + x, s};
}

}  // namespace ladderne::testing
