#include "kpareto/rational.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace kpareto {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) {
    return false;
  }
  for (char c : s) {
    if (c < '0' || c > '9') {
      return false;
    }
  }
  return true;
}

[[noreturn]] void bad_rational(std::string_view text) {
  throw std::invalid_argument("invalid rational literal: '" + std::string(text) + "'");
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string s(text);
  std::size_t pos = 0;
  bool negative = false;
  if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
    negative = s[pos] == '-';
    ++pos;
  }
  const std::string body = s.substr(pos);
  Rational value;
  if (const auto slash = body.find('/'); slash != std::string::npos) {
    const std::string num = body.substr(0, slash);
    const std::string den = body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) {
      bad_rational(text);
    }
    const BigInt d(den);
    if (d == 0) {
      throw std::invalid_argument("invalid rational literal (zero denominator): '" + s + "'");
    }
    value = Rational(BigInt(num), d);
  } else if (const auto dot = body.find('.'); dot != std::string::npos) {
    std::string whole = body.substr(0, dot);
    const std::string frac = body.substr(dot + 1);
    if (whole.empty()) {
      whole = "0";
    }
    if (!all_digits(whole) || !all_digits(frac)) {
      bad_rational(text);
    }
    BigInt scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) {
      scale *= 10;
    }
    value = Rational(BigInt(whole) * scale + BigInt(frac), scale);
  } else {
    if (!all_digits(body)) {
      bad_rational(text);
    }
    value = Rational(BigInt(body));
  }
  return negative ? Rational(-value) : value;
}

std::string fraction_string(const Rational& value) {
  return numerator(value).str() + "/" + denominator(value).str();
}

Rational rational_pow(const Rational& base, unsigned exponent) {
  return Rational(pow(numerator(base), exponent), pow(denominator(base), exponent));
}

Rational rational_from_double(double value) {
  if (!std::isfinite(value)) {
    throw std::invalid_argument("cannot convert non-finite double to rational");
  }
  return Rational(value);
}

double to_double(const Rational& value) {
  return value.convert_to<double>();
}

double to_double_round_up(const Rational& value) {
  double d = to_double(value);
  int guard = 0;
  while (std::isfinite(d) && Rational(d) < value) {
    d = std::nextafter(d, std::numeric_limits<double>::infinity());
    if (++guard > 8) {
      throw std::runtime_error("directed rounding failed to converge");
    }
  }
  return d;
}

double to_double_round_down(const Rational& value) {
  double d = to_double(value);
  int guard = 0;
  while (std::isfinite(d) && Rational(d) > value) {
    d = std::nextafter(d, -std::numeric_limits<double>::infinity());
    if (++guard > 8) {
      throw std::runtime_error("directed rounding failed to converge");
    }
  }
  return d;
}

BigInt rational_ceil(const Rational& value) {
  const BigInt num = numerator(value);
  const BigInt den = denominator(value);
  BigInt q = num / den;  // truncates toward zero
  if (num > 0 && q * den != num) {
    ++q;
  }
  return q;
}

std::int64_t checked_int64(const BigInt& value, const char* what) {
  static const BigInt lo = std::numeric_limits<std::int64_t>::min();
  static const BigInt hi = std::numeric_limits<std::int64_t>::max();
  if (value < lo || value > hi) {
    throw std::overflow_error(std::string(what) + " does not fit in 64 bits");
  }
  return value.convert_to<std::int64_t>();
}

}  // namespace kpareto
