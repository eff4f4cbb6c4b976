#pragma once

#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace qpw {

using Rational = boost::multiprecision::cpp_rational;

// Parses "p/q" or "p" (optional leading sign). Decimal points and exponents
// are rejected: documents never carry floating point.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& value);

}  // namespace qpw
