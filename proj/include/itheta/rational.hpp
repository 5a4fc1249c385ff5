// Exact rational scalars backed by GMP, plus integer square-root bounds.
#pragma once

#include <gmpxx.h>

#include <string>

namespace itheta {

using Integer = mpz_class;
using Rational = mpq_class;

// num/den in canonical form; den must be nonzero.
Rational make_rational(const Integer& num, const Integer& den);

inline int sign_of(const Rational& x) { return sgn(x); }
inline int sign_of(const Integer& x) { return sgn(x); }
inline bool is_integer(const Rational& x) { return x.get_den() == 1; }

Integer floor_int(const Rational& x);
Integer ceil_int(const Rational& x);
Integer to_integer(const Rational& x);  // requires is_integer(x)

Integer isqrt(const Integer& n);      // floor(sqrt(n)), n >= 0
Integer ceil_sqrt(const Integer& n);  // least s >= 0 with s^2 >= n

// Least integer s >= 0 with s^2 >= x (x >= 0).
Integer ceil_sqrt_rational(const Rational& x);

// True iff x is the square of a rational; fills *root with the nonnegative root.
bool is_square(const Rational& x, Rational* root = nullptr);

// Rational brackets lo <= sqrt(x) <= up for x = P/Q >= 0; error < 1/Q.
Rational sqrt_lower(const Rational& x);
Rational sqrt_upper(const Rational& x);

std::string to_string(const Rational& x);             // "n" or "n/d"
Rational rational_from_string(const std::string& s);  // throws ParseError

long mod_long(long v, long n);            // representative in [0, n)
long mod_long(const Integer& v, long n);  // representative in [0, n)

Integer lcm_int(const Integer& a, const Integer& b);
Integer gcd_int(const Integer& a, const Integer& b);

}  // namespace itheta
