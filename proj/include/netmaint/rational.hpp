#ifndef NETMAINT_RATIONAL_HPP_
#define NETMAINT_RATIONAL_HPP_

#include <string>
#include <string_view>

#include <boost/multiprecision/gmp.hpp>

namespace netmaint {

// Exact rational backed by GMP. Expression templates are disabled so that
// `auto` always yields a value.
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;
using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;

// Parses "n" or "n/d" (optional leading '-'); throws std::invalid_argument on
// anything else, including decimal points and zero denominators.
Rational parse_rational(std::string_view text);

// Canonical decimal form: "n" when the denominator is one, otherwise "n/d".
std::string to_string(const Rational& value);

bool is_integer(const Rational& value);
Integer floor(const Rational& value);
Integer ceil(const Rational& value);

// Converts an integral rational to int64; throws std::out_of_range when the
// value is fractional or does not fit.
long long to_int64(const Rational& value);

double to_double(const Rational& value);

}  // namespace netmaint

#endif  // NETMAINT_RATIONAL_HPP_
