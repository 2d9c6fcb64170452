#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace sfmlab {

// Exact arbitrary-precision fraction. gmpxx keeps mpq_class values canonical
// (lowest terms, positive denominator) through every arithmetic operator.
using Rational = mpq_class;

// Always "p/q", including integers ("3/1", "0/1").
std::string to_string(const Rational& value);

// Accepts "p/q" or a bare integer "p". Throws InvalidArgumentError on malformed
// input or a zero denominator. The result is canonicalized.
Rational parse_rational(std::string_view text);

inline Rational make_rational(long numerator, long denominator = 1) {
  Rational r(numerator, denominator);
  r.canonicalize();
  return r;
}

}  // namespace sfmlab
