#include "metaplex/rational.hpp"

#include "metaplex/error.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>

namespace metaplex {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  const std::string_view num = body.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view("1")
                                                               : body.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den)) {
    throw MetaplexError(ErrorCode::ParseError, "not a rational literal: '" + std::string(text) + "'");
  }
  const Rational d{std::string(den)};
  if (d == 0) {
    throw MetaplexError(ErrorCode::ParseError, "zero denominator in '" + std::string(text) + "'");
  }
  Rational value = Rational{std::string(num)} / d;
  return negative ? Rational(-value) : value;
}

std::string to_string(const Rational& value) {
  const auto num = boost::multiprecision::numerator(value);
  const auto den = boost::multiprecision::denominator(value);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

std::string format_real(double value) {
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  if (std::isnan(value)) return "nan";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", value);
  return buf;
}

}  // namespace metaplex
