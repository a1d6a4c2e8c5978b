#include "ladderne/closed_forms.hpp"

#include <cmath>
#include <utility>

#include "ladderne/errors.hpp"

namespace ladderne {
namespace {

// Fast doubling: returns (F(m), F(m+1)).
std::pair<BigInt, BigInt> fib_pair(unsigned long m) {
  if (m == 0) return {0, 1};
  auto [a, b] = fib_pair(m / 2);
  BigInt c = a * (2 * b - a);
  BigInt d = a * a + b * b;
  if (m % 2 == 0) return {std::move(c), std::move(d)};
  BigInt next = c + d;
  return {std::move(d), std::move(next)};
}

long double phi_pow(long double exponent) { return std::pow(closed_form_params().phi, exponent); }

long double two_over_sqrt5() { return 2.0L / std::sqrt(5.0L); }

BigInt halve_exact(const BigInt& value) {
  if (value % 2 != 0) throw NonIntegerResult(value.str() + " is odd; check the index convention");
  return value / 2;
}

}  // namespace

const ClosedFormParams& closed_form_params() {
  static const ClosedFormParams params = [] {
    const long double phi = (1.0L + std::sqrt(5.0L)) / 2.0L;
    return ClosedFormParams{phi, phi * phi, 1.0L / (phi * phi)};
  }();
  return params;
}

BigInt fib(long m) {
  if (m >= 0) return fib_pair(static_cast<unsigned long>(m)).first;
  BigInt v = fib_pair(static_cast<unsigned long>(-m)).first;
  return (-m) % 2 == 0 ? BigInt(-v) : v;
}

BigInt lucas(long m) {
  if (m < 0) throw Error("lucas needs m >= 0");
  auto [f, f1] = fib_pair(static_cast<unsigned long>(m));
  return 2 * f1 - f;
}

BlockIndex block_index_for_rungs(int n) {
  if (n < 1) throw TooSmall("need at least one rung");
  return {n / 2, n % 2 == 1};
}

int rungs_for_players(int players) {
  if (players < 2 || players % 2 != 0) {
    throw Error("player count must be even and positive, got " + std::to_string(players));
  }
  return players / 2;
}

BigInt ladder_closed(BlockCase which, int n) {
  if (n < 2) throw TooSmall("ladder needs at least 2 rungs");
  if (which == BlockCase::case1) {
    const BigInt base = 2 * fib(n - 1);
    return n % 2 == 0 ? base : base + 1;
  }
  if (n % 2 != 0) throw UnsupportedParity("case 2 closed form covers even n only");
  return 2 * fib(n);
}

BigInt unrestricted_closed(BlockCase which, int k) {
  if (k < 1) throw TooSmall("need at least one block");
  return unrestricted_extended(which, k);
}

BigInt unrestricted_extended(BlockCase which, long k) {
  return which == BlockCase::case1 ? 2 * fib(2 * k + 1) : 2 * fib(2 * k + 2);
}

BigInt circular_closed(BlockCase which, int k) {
  if (k < 2) throw TooSmall("circular closed form needs k >= 2");
  const BigInt l = lucas(2L * k);
  return which == BlockCase::case1 ? l + 2 : l;
}

BigInt circular_recursive(BlockCase which, int k, const std::function<BigInt(long)>& unrestricted) {
  if (k < 2) throw TooSmall("circular recursion needs k >= 2");
  if (which == BlockCase::case1) {
    return 2 * unrestricted(k - 1) - halve_exact(unrestricted(k - 2)) + 2;
  }
  return 3 * unrestricted(k - 2) - halve_exact(unrestricted(k - 4));
}

BigInt circular_recursive(BlockCase which, int k) {
  return circular_recursive(which, k, [which](long i) { return unrestricted_extended(which, i); });
}

long double ladder_closed_float(BlockCase which, int n) {
  if (which == BlockCase::case1) {
    const long double m = n - 1;
    if (n % 2 == 0) return two_over_sqrt5() * (phi_pow(m) + phi_pow(-m));
    return two_over_sqrt5() * (phi_pow(m) - phi_pow(-m)) + 1.0L;
  }
  const long double twice_k = n;
  return two_over_sqrt5() * (phi_pow(twice_k) - phi_pow(-twice_k));
}

long double unrestricted_closed_float(BlockCase which, int k) {
  if (which == BlockCase::case1) {
    const long double e = 2.0L * k + 1;
    return two_over_sqrt5() * (phi_pow(e) + phi_pow(-e));
  }
  const long double e = 2.0L * k + 2;
  return two_over_sqrt5() * (phi_pow(e) - phi_pow(-e));
}

long double circular_closed_float(BlockCase which, int k) {
  const long double e = 2.0L * k;
  const long double v = phi_pow(e) + phi_pow(-e);
  return which == BlockCase::case1 ? v + 2.0L : v;
}

BigInt family_count(FamilyRef family, int n) {
  if (n < 2 || n % 2 != 0) throw UnsupportedParity("family counts are taken at even n");
  switch (family.family) {
    case Family::ladder: return ladder_count_blocks(family.which, n);
    case Family::circular: return circular_count_blocks(family.which, n / 2);
    case Family::unrestricted: return unrestricted_count_blocks(family.which, n / 2);
  }
  return 0;
}

double asymptotic_ratio(FamilyRef numerator, FamilyRef denominator, int n) {
  const Rational ratio(family_count(numerator, n), family_count(denominator, n));
  return static_cast<double>(ratio);
}

}  // namespace ladderne
