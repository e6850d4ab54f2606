#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace germ {

using Integer = mpz_class;
using Rational = mpq_class;

// Always "a/b", denominator included even when it is 1.
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

// Accepts "a", "-a", "a/b". Throws InputError.
Rational parse_rational(std::string_view text);

inline Rational rat(long num, long den = 1) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational min(const Rational& a, const Rational& b);
Rational max(const Rational& a, const Rational& b);
Integer floor_of(const Rational& q);
Rational frac(const Rational& q);

// gcd of two non-negative rationals: the largest g with a/g and b/g integers.
Rational rational_gcd(const Rational& a, const Rational& b);

}  // namespace germ
