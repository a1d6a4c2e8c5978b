#pragma once

#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace ladderne {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Accepts "7", "-3/4" and "2.25". Throws ParseError on anything else.
Rational parse_rational(std::string_view text);

// "3", "-3/4"
std::string to_string(const Rational& value);
std::string to_string(const BigInt& value);

}  // namespace ladderne
