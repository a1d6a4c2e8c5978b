#pragma once

#include <cstdint>
#include <span>
#include <string_view>

#include "ladderne/numeric.hpp"

namespace ladderne {

enum class Strategy : std::uint8_t { a = 0, b = 1 };

constexpr Strategy swap(Strategy s) noexcept {
  return s == Strategy::a ? Strategy::b : Strategy::a;
}

constexpr char to_char(Strategy s) noexcept { return s == Strategy::a ? 'a' : 'b'; }

/// Symmetric 2x2 game. Row player's payoff: (a,a)=p, (a,b)=q, (b,a)=r, (b,b)=s.
/// Anti-coordination requires r > p and q > s.
struct PayoffParams {
  Rational p{0};
  Rational q{0};
  Rational r{0};
  Rational s{0};

  bool operator==(const PayoffParams&) const = default;
};

/// Payoff of playing `own` against a single opponent playing `other`.
const Rational& edge_payoff(const PayoffParams& params, Strategy own, Strategy other);

/// Throws InvalidGame unless r > p and q > s.
void validate(const PayoffParams& params);

/// The pair x = r - p, y = q - s. Only generic pairs are representable:
/// x > 0, y > 0 and none of y = x, y = 2x, 2y = x.
class ReducedParams {
 public:
  static ReducedParams make(Rational x, Rational y);

  const Rational& x() const noexcept { return x_; }
  const Rational& y() const noexcept { return y_; }

  bool operator==(const ReducedParams&) const = default;

 private:
  ReducedParams(Rational x, Rational y) : x_(std::move(x)), y_(std::move(y)) {}

  Rational x_;
  Rational y_;
};

ReducedParams reduce(const PayoffParams& params);

enum class Sign : std::uint8_t { negative, positive };

// Signs of f = y - 2x (aab), g = 2y - x (abb) and h = y - x (ab).
// A positive sign means `a` is the strict best response against that mix.
struct RegimeSignature {
  Sign f;
  Sign g;
  Sign h;

  bool operator==(const RegimeSignature&) const = default;
};

RegimeSignature signature_of(const ReducedParams& rp);

enum class Regime : std::uint8_t {
  lone_a,      // x/2 > y
  minority_a,  // x > y > x/2
  minority_b,  // 2x > y > x
  lone_b,      // y > 2x
};

Regime regime_of(const ReducedParams& rp);

/// MINORITY_A <-> MINORITY_B, LONE_A <-> LONE_B.
Regime mirror(Regime regime) noexcept;

std::string_view regime_name(Regime regime) noexcept;

/// Accepts the names produced by regime_name. Throws ParseError otherwise.
Regime parse_regime(std::string_view name);

/// Mean payoff of `own` over the opponents (Table of averaged payoffs for
/// middle and end players). Throws BadDegree unless 2 or 3 opponents.
Rational averaged_payoff(Strategy own, std::span<const Strategy> opponents,
                         const PayoffParams& params);

/// Strict best response under the given regime. Throws BadDegree unless 2 or
/// 3 opponents.
Strategy best_response(Regime regime, std::span<const Strategy> opponents);

}  // namespace ladderne
