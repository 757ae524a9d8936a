#ifndef KPARETO_RATIONAL_HPP
#define KPARETO_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <string_view>

namespace kpareto {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Parses "num/den", a plain integer, or a base-10 decimal ("2.5") into an
/// exact rational. Throws std::invalid_argument on malformed input.
Rational parse_rational(std::string_view text);

/// Canonical "num/den" form: reduced, denominator positive.
std::string fraction_string(const Rational& value);

/// base^exponent with exact rational arithmetic.
Rational rational_pow(const Rational& base, unsigned exponent);

/// Exact binary value of a finite double.
Rational rational_from_double(double value);

/// Nearest double.
double to_double(const Rational& value);

/// Smallest representable double >= value.
double to_double_round_up(const Rational& value);

/// Largest representable double <= value.
double to_double_round_down(const Rational& value);

BigInt rational_ceil(const Rational& value);

/// Narrowing conversion that throws when `value` does not fit in 64 bits.
std::int64_t checked_int64(const BigInt& value, const char* what);

}  // namespace kpareto

#endif  // KPARETO_RATIONAL_HPP
