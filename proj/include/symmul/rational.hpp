#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace symmul {

using BigInt = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>, boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::cpp_rational_backend, boost::multiprecision::et_off>;

/// Reduced "num/den", or just "num" for integers.
std::string to_string(const Rational& r);
/// Parses the format written by to_string; throws std::invalid_argument.
Rational parse_rational(const std::string& s);

BigInt floor(const Rational& r);
BigInt ceil(const Rational& r);
/// floor(sqrt(n)) for n >= 0.
BigInt isqrt(const BigInt& n);
bool is_square(const BigInt& n);
BigInt pow(const BigInt& base, unsigned e);

}  // namespace symmul
