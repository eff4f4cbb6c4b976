#include "qpw/rational.hpp"

#include <cctype>

#include "qpw/error.hpp"

namespace qpw {

namespace {

bool is_integer_literal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char ch : s)
    if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
  return true;
}

boost::multiprecision::cpp_int parse_integer(std::string_view s) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  return boost::multiprecision::cpp_int(std::string(s));
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  const auto num = text.substr(0, slash);
  if (!is_integer_literal(num)) throw ParseError("", "not an exact rational: \"" + std::string(text) + "\"");
  if (slash == std::string_view::npos) return Rational(parse_integer(num));

  const auto den = text.substr(slash + 1);
  if (!is_integer_literal(den) || den.front() == '-' || den.front() == '+')
    throw ParseError("", "not an exact rational: \"" + std::string(text) + "\"");
  const auto d = parse_integer(den);
  if (d == 0) throw ParseError("", "zero denominator in \"" + std::string(text) + "\"");
  return Rational(parse_integer(num), d);
}

std::string to_string(const Rational& value) {
  const auto den = boost::multiprecision::denominator(value);
  if (den == 1) return boost::multiprecision::numerator(value).str();
  return boost::multiprecision::numerator(value).str() + "/" + den.str();
}

}  // namespace qpw
