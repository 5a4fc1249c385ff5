#include "itheta/quadform.hpp"

#include "itheta/errors.hpp"

namespace itheta {

IMat2 imat_mul(const IMat2& X, const IMat2& Y) {
  IMat2 Z;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      Z[i][j] = X[i][0] * Y[0][j] + X[i][1] * Y[1][j];
  return Z;
}

bool imat_eq(const IMat2& X, const IMat2& Y) {
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      if (X[i][j] != Y[i][j]) return false;
  return true;
}

std::pair<Integer, Integer> imat_apply(const IMat2& X, const Integer& m,
                                       const Integer& n) {
  return {X[0][0] * m + X[0][1] * n, X[1][0] * m + X[1][1] * n};
}

QuadForm qf_new(const Rational& a_in, const Rational& b_in,
                const Rational& c_in) {
  // two-argument mpq_class construction skips canonicalization; scrub once
  Rational a = a_in, b = b_in, c = c_in;
  a.canonicalize();
  b.canonicalize();
  c.canonicalize();
  if (sign_of(a) <= 0 || sign_of(b) <= 0 || sign_of(c) <= 0)
    throw NotPositiveCoefficients("a = " + to_string(a) + ", b = " +
                                  to_string(b) + ", c = " + to_string(c));
  Rational D = b * b - a * c;
  if (sign_of(D) <= 0)
    throw NotIndefinite("b^2 - ac = " + to_string(D));
  Rational p = -2 * b / a;
  Rational r = -2 * b / c;
  if (!is_integer(p))
    throw NonIntegralReflection("p = -2b/a = " + to_string(p));
  if (!is_integer(r))
    throw NonIntegralReflection("r = -2b/c = " + to_string(r));
  QuadForm Q;
  Q.a = a;
  Q.b = b;
  Q.c = c;
  Q.D = D;
  Q.p = to_integer(p);
  Q.r = to_integer(r);
  Q.A = {{{Integer(-1), Q.p}, {Integer(0), Integer(1)}}};
  Q.B = {{{Integer(1), Integer(0)}, {Q.r, Integer(-1)}}};
  return Q;
}

Rational qf_eval(const QuadForm& Q, const Integer& m, const Integer& n) {
  return Q.a * m * m + 2 * Q.b * m * n + Q.c * n * n;
}

QuadFieldElem qf_embed(const QuadForm& Q, const Integer& m, const Integer& n) {
  return qfe_make(Q.b * m + Q.c * n, Rational(m), Q.D);
}

QuadForm qf_rescale(const QuadForm& Q, const Rational& t1, const Rational& t2) {
  return qf_new(Q.a * t1 * t1, Q.b * t1 * t2, Q.c * t2 * t2);
}

QuadFieldElem qf_epsilon(const QuadForm& Q) {
  Rational ac = Q.a * Q.c;
  return qfe_make((Q.b * Q.b + Q.D) / ac, 2 * Q.b / ac, Q.D);
}

std::pair<Integer, Integer> qf_apply_A(const QuadForm& Q, const Integer& m,
                                       const Integer& n) {
  return {Q.p * n - m, n};
}

std::pair<Integer, Integer> qf_apply_B(const QuadForm& Q, const Integer& m,
                                       const Integer& n) {
  return {m, Q.r * m - n};
}

}  // namespace itheta
