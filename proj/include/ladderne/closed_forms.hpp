#pragma once

#include <functional>

#include "ladderne/blocks.hpp"
#include "ladderne/numeric.hpp"

namespace ladderne {

/// Golden-ratio constants, floating point, for display and cross-checks.
/// r1 = phi^2 and r2 = phi^-2 are the roots of t^2 - 3t + 1.
struct ClosedFormParams {
  long double phi;
  long double r1;
  long double r2;
};

const ClosedFormParams& closed_form_params();

BigInt fib(long m);    // also defined for negative m: F(-m) = (-1)^(m+1) F(m)
BigInt lucas(long m);  // m >= 0

// Index bookkeeping between rungs n, players 2n and block counts k.
struct BlockIndex {
  int k;           // full 4-player blocks
  bool semi_block; // n odd: a trailing 2-player column
};

BlockIndex block_index_for_rungs(int n);
int rungs_for_players(int players);  // throws unless players is even and positive

/// Exact ladder count: 2F(n-1) (case1, n even), 2F(n-1)+1 (case1, n odd),
/// 2F(n) (case2, n even). UnsupportedParity for case2 with odd n.
BigInt ladder_closed(BlockCase which, int n);

/// Exact unrestricted chain count: 2F(2k+1) (case1), 2F(2k+2) (case2), k >= 1.
BigInt unrestricted_closed(BlockCase which, int k);

/// Circular closed forms: L(2k)+2 (case1), L(2k) (case2), k >= 2.
/// These differ from the exact counts by +1 or -2 depending on k mod 3.
BigInt circular_closed(BlockCase which, int k);

/// Evaluates the recursive circular formulas,
///   case1: 2N(k-1) - N(k-2)/2 + 2
///   case2: 3N(k-2) - N(k-4)/2
/// with N taken from `unrestricted`, which must accept any index the formula
/// touches (k-4 may be negative for small k). Throws NonIntegerResult when the
/// halving leaves a remainder.
BigInt circular_recursive(BlockCase which, int k, const std::function<BigInt(long)>& unrestricted);

/// Same, with N the unrestricted closed form continued to all integer k.
BigInt circular_recursive(BlockCase which, int k);

/// The unrestricted closed form continued to any integer index.
BigInt unrestricted_extended(BlockCase which, long k);

// Floating evaluations of the golden-ratio expressions.
long double ladder_closed_float(BlockCase which, int n);
long double unrestricted_closed_float(BlockCase which, int k);
long double circular_closed_float(BlockCase which, int k);

enum class Family : std::uint8_t { ladder, circular, unrestricted };

struct FamilyRef {
  Family family;
  BlockCase which;
};

/// Exact count of a family at even rung count n (k = n/2 for the block families).
BigInt family_count(FamilyRef family, int n);

/// Ratio of exact counts at even n, as a floating value.
double asymptotic_ratio(FamilyRef numerator, FamilyRef denominator, int n = 40);

}  // namespace ladderne
