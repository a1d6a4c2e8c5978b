#include "ladderne/numeric.hpp"

#include <cctype>

#include "ladderne/errors.hpp"

namespace ladderne {
namespace {

// Parses an optionally signed run of digits starting at `pos`; advances pos.
BigInt parse_integer(std::string_view text, std::size_t& pos, bool allow_sign) {
  const std::size_t start = pos;
  bool negative = false;
  if (allow_sign && pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
    negative = text[pos] == '-';
    ++pos;
  }
  const std::size_t digits_start = pos;
  BigInt value = 0;
  while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
    value = value * 10 + (text[pos] - '0');
    ++pos;
  }
  if (pos == digits_start) throw ParseError("expected digits", pos == start ? start : pos);
  return negative ? BigInt(-value) : value;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  if (text.empty()) throw ParseError("empty number", 0);
  std::size_t pos = 0;
  const bool negative = text[0] == '-';
  BigInt whole = parse_integer(text, pos, true);
  if (pos == text.size()) return Rational(whole);

  if (text[pos] == '/') {
    ++pos;
    BigInt den = parse_integer(text, pos, false);
    if (pos != text.size()) throw ParseError("trailing characters", pos);
    if (den == 0) throw ParseError("zero denominator", pos - 1);
    return Rational(whole, den);
  }
  if (text[pos] == '.') {
    ++pos;
    const std::size_t frac_start = pos;
    BigInt frac = parse_integer(text, pos, false);
    if (pos != text.size()) throw ParseError("trailing characters", pos);
    BigInt scale = boost::multiprecision::pow(BigInt(10), static_cast<unsigned>(pos - frac_start));
    Rational magnitude = Rational(abs(whole)) + Rational(frac, scale);
    return negative ? Rational(-magnitude) : magnitude;
  }
  throw ParseError("unexpected character", pos);
}

std::string to_string(const Rational& value) { return value.str(); }

std::string to_string(const BigInt& value) { return value.str(); }

}  // namespace ladderne
