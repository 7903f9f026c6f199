#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cctype>
#include <iomanip>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace dimerk {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Exact text form "p/q"; integers are printed without a denominator.
inline std::string to_string(const Rational& q) {
  const Integer num = boost::multiprecision::numerator(q);
  const Integer den = boost::multiprecision::denominator(q);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

namespace detail {

inline bool is_integer_literal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace detail

/// Parses "p/q" or "p". Throws std::invalid_argument on malformed text or q = 0.
inline Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  const std::string_view num_text = text.substr(0, slash);
  const std::string_view den_text =
      slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
  if (!detail::is_integer_literal(num_text) || !detail::is_integer_literal(den_text)) {
    throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
  }
  auto strip_plus = [](std::string_view s) {
    return std::string(!s.empty() && s.front() == '+' ? s.substr(1) : s);
  };
  const Integer num(strip_plus(num_text));
  const Integer den(strip_plus(den_text));
  if (den == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  return Rational(num, den);
}

/// Approximate decimal rendering, for human-readable output only.
inline std::string to_decimal(const Rational& q, int digits = 12) {
  std::ostringstream os;
  os << std::setprecision(digits) << q.convert_to<double>();
  return os.str();
}

inline Rational pow(const Rational& base, int exponent) {
  Rational result = 1;
  const bool invert = exponent < 0;
  for (int i = 0; i < (invert ? -exponent : exponent); ++i) result *= base;
  return invert ? Rational(1) / result : result;
}

}  // namespace dimerk
