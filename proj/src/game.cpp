#include "ladderne/game.hpp"

#include <algorithm>

#include "ladderne/errors.hpp"

namespace ladderne {
namespace {

void check_degree(std::span<const Strategy> opponents) {
  if (opponents.size() != 2 && opponents.size() != 3) {
    throw BadDegree("expected 2 or 3 opponents, got " + std::to_string(opponents.size()));
  }
}

Sign sign_of(const Rational& v) { return v > 0 ? Sign::positive : Sign::negative; }

}  // namespace

const Rational& edge_payoff(const PayoffParams& params, Strategy own, Strategy other) {
  if (own == Strategy::a) return other == Strategy::a ? params.p : params.q;
  return other == Strategy::a ? params.r : params.s;
}

void validate(const PayoffParams& params) {
  if (params.r <= params.p) throw InvalidGame("anti-coordination requires r > p");
  if (params.q <= params.s) throw InvalidGame("anti-coordination requires q > s");
}

ReducedParams ReducedParams::make(Rational x, Rational y) {
  if (x <= 0 || y <= 0) throw InvalidGame("reduced parameters must be positive");
  if (y == x) throw NonGenericParameters("y = x");
  if (y == 2 * x) throw NonGenericParameters("y = 2x");
  if (2 * y == x) throw NonGenericParameters("2y = x");
  return ReducedParams(std::move(x), std::move(y));
}

ReducedParams reduce(const PayoffParams& params) {
  validate(params);
  return ReducedParams::make(params.r - params.p, params.q - params.s);
}

RegimeSignature signature_of(const ReducedParams& rp) {
  const Rational& x = rp.x();
  const Rational& y = rp.y();
  return {sign_of(y - 2 * x), sign_of(2 * y - x), sign_of(y - x)};
}

Regime regime_of(const ReducedParams& rp) {
  const RegimeSignature sig = signature_of(rp);
  // f > 0 forces g > 0 and h > 0 (and g < 0 forces the rest negative), so the
  // three signs take only four combinations.
  if (sig.g == Sign::negative) return Regime::lone_a;
  if (sig.h == Sign::negative) return Regime::minority_a;
  if (sig.f == Sign::negative) return Regime::minority_b;
  return Regime::lone_b;
}

Regime mirror(Regime regime) noexcept {
  switch (regime) {
    case Regime::lone_a: return Regime::lone_b;
    case Regime::minority_a: return Regime::minority_b;
    case Regime::minority_b: return Regime::minority_a;
    case Regime::lone_b: return Regime::lone_a;
  }
  return regime;
}

std::string_view regime_name(Regime regime) noexcept {
  switch (regime) {
    case Regime::lone_a: return "LONE_A";
    case Regime::minority_a: return "MINORITY_A";
    case Regime::minority_b: return "MINORITY_B";
    case Regime::lone_b: return "LONE_B";
  }
  return "?";
}

Regime parse_regime(std::string_view name) {
  for (Regime r : {Regime::lone_a, Regime::minority_a, Regime::minority_b, Regime::lone_b}) {
    if (regime_name(r) == name) return r;
  }
  throw ParseError("unknown regime '" + std::string(name) + "'", 0);
}

Rational averaged_payoff(Strategy own, std::span<const Strategy> opponents,
                         const PayoffParams& params) {
  check_degree(opponents);
  Rational total = 0;
  for (Strategy other : opponents) total += edge_payoff(params, own, other);
  return total / static_cast<int>(opponents.size());
}

Strategy best_response(Regime regime, std::span<const Strategy> opponents) {
  check_degree(opponents);
  const auto playing_b = std::count(opponents.begin(), opponents.end(), Strategy::b);
  const auto playing_a = static_cast<std::ptrdiff_t>(opponents.size()) - playing_b;
  const auto all = static_cast<std::ptrdiff_t>(opponents.size());
  switch (regime) {
    case Regime::minority_a: return playing_b >= 2 ? Strategy::a : Strategy::b;
    case Regime::lone_a: return playing_b == all ? Strategy::a : Strategy::b;
    case Regime::minority_b: return playing_a >= 2 ? Strategy::b : Strategy::a;
    case Regime::lone_b: return playing_a == all ? Strategy::b : Strategy::a;
  }
  return Strategy::b;
}

}  // namespace ladderne
