#include "netmaint/rational.hpp"

#include <cctype>
#include <limits>
#include <stdexcept>

namespace netmaint {

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
  if (!body.empty() && body.front() == '-') {
    negative = true;
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  std::string_view num = body.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1")
                                                          : body.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den)) {
    throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
  }
  Integer n{std::string(num)};
  Integer d{std::string(den)};
  if (d == 0) {
    throw std::invalid_argument("zero denominator: '" + std::string(text) + "'");
  }
  Rational r(n, d);
  return negative ? Rational(-r) : r;
}

std::string to_string(const Rational& value) {
  const Integer num = boost::multiprecision::numerator(value);
  const Integer den = boost::multiprecision::denominator(value);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

bool is_integer(const Rational& value) {
  return boost::multiprecision::denominator(value) == 1;
}

Integer floor(const Rational& value) {
  const Integer num = boost::multiprecision::numerator(value);
  const Integer den = boost::multiprecision::denominator(value);
  Integer q = num / den;  // truncates toward zero
  if (num < 0 && q * den != num) q -= 1;
  return q;
}

Integer ceil(const Rational& value) {
  const Integer f = floor(value);
  return Rational(f) == value ? f : Integer(f + 1);
}

long long to_int64(const Rational& value) {
  if (!is_integer(value)) {
    throw std::out_of_range("value is not integral: " + to_string(value));
  }
  const Integer num = boost::multiprecision::numerator(value);
  if (num > std::numeric_limits<long long>::max() ||
      num < std::numeric_limits<long long>::min()) {
    throw std::out_of_range("value does not fit in 64 bits: " + to_string(value));
  }
  return num.convert_to<long long>();
}

double to_double(const Rational& value) { return value.convert_to<double>(); }

}  // namespace netmaint
