#include "itheta/rational.hpp"

#include <cctype>

#include "itheta/errors.hpp"

namespace itheta {

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw ParseError("zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Integer floor_int(const Rational& x) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return q;
}

Integer ceil_int(const Rational& x) {
  Integer q;
  mpz_cdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return q;
}

Integer to_integer(const Rational& x) {
  if (!is_integer(x)) throw ParseError("not an integer: " + to_string(x));
  return x.get_num();
}

Integer isqrt(const Integer& n) {
  Integer r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

Integer ceil_sqrt(const Integer& n) {
  Integer r = isqrt(n);
  if (r * r < n) r += 1;
  return r;
}

Integer ceil_sqrt_rational(const Rational& x) {
  Integer s = isqrt(floor_int(x));
  while (Rational(s * s) < x) s += 1;
  return s;
}

bool is_square(const Rational& x, Rational* root) {
  if (sign_of(x) < 0) return false;
  const Integer& num = x.get_num();
  const Integer& den = x.get_den();
  if (!mpz_perfect_square_p(num.get_mpz_t())) return false;
  if (!mpz_perfect_square_p(den.get_mpz_t())) return false;
  if (root) *root = make_rational(isqrt(num), isqrt(den));
  return true;
}

// sqrt(P/Q) = sqrt(P*Q)/Q, so floor/ceil of the integer sqrt bracket it within 1/Q.
Rational sqrt_lower(const Rational& x) {
  if (sign_of(x) < 0) throw ParseError("sqrt of negative: " + to_string(x));
  return make_rational(isqrt(x.get_num() * x.get_den()), x.get_den());
}

Rational sqrt_upper(const Rational& x) {
  if (sign_of(x) < 0) throw ParseError("sqrt of negative: " + to_string(x));
  return make_rational(ceil_sqrt(x.get_num() * x.get_den()), x.get_den());
}

std::string to_string(const Rational& x) {
  if (is_integer(x)) return x.get_num().get_str();
  return x.get_num().get_str() + "/" + x.get_den().get_str();
}

Rational rational_from_string(const std::string& s) {
  auto is_digits = [](const std::string& t) {
    if (t.empty()) return false;
    for (char c : t)
      if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
  };
  std::string body = s;
  bool negative = false;
  if (!body.empty() && body[0] == '-') {
    negative = true;
    body = body.substr(1);
  }
  std::string num = body, den = "1";
  auto slash = body.find('/');
  if (slash != std::string::npos) {
    num = body.substr(0, slash);
    den = body.substr(slash + 1);
  }
  if (!is_digits(num) || !is_digits(den))
    throw ParseError("bad rational literal \"" + s + "\"");
  Integer n(num), d(den);
  if (d == 0) throw ParseError("zero denominator in \"" + s + "\"");
  if (negative) n = -n;
  return make_rational(n, d);
}

long mod_long(long v, long n) {
  long r = v % n;
  return r < 0 ? r + n : r;
}

long mod_long(const Integer& v, long n) {
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), v.get_mpz_t(), Integer(n).get_mpz_t());
  return static_cast<long>(r.get_si());
}

Integer lcm_int(const Integer& a, const Integer& b) {
  Integer r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

Integer gcd_int(const Integer& a, const Integer& b) {
  Integer r;
  mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

}  // namespace itheta
