// Indefinite binary quadratic forms Q(m,n) = a m^2 + 2b mn + c n^2 with
// a, b, c > 0 and D = b^2 - ac > 0, carrying the integral reflections
//   A(m,n) = (p n - m, n),  B(m,n) = (m, r m - n)
// where p = -2b/a and r = -2b/c.  Both reflections preserve Q.
#pragma once

#include <array>
#include <utility>

#include "itheta/quadfield.hpp"
#include "itheta/rational.hpp"

namespace itheta {

// Row-major 2x2 integer matrix acting on column vectors (m, n).
using IMat2 = std::array<std::array<Integer, 2>, 2>;

IMat2 imat_mul(const IMat2& X, const IMat2& Y);
bool imat_eq(const IMat2& X, const IMat2& Y);
std::pair<Integer, Integer> imat_apply(const IMat2& X, const Integer& m,
                                       const Integer& n);

struct QuadForm {
  Rational a, b, c;  // coefficients, all positive
  Rational D;        // b^2 - ac, positive
  Integer p, r;      // p = -2b/a, r = -2b/c, both integers
  IMat2 A, B;        // A = [[-1,p],[0,1]], B = [[1,0],[r,-1]], A^2 = B^2 = id
};

QuadForm qf_new(const Rational& a, const Rational& b, const Rational& c);

Rational qf_eval(const QuadForm& Q, const Integer& m, const Integer& n);

// (m,n) -> (bm + cn) + m sqrt(D).  Nm(qf_embed(m,n)) = c * Q(m,n).
QuadFieldElem qf_embed(const QuadForm& Q, const Integer& m, const Integer& n);

// The form Q(t1 m, t2 n) = (a t1^2, b t1 t2, c t2^2), revalidated.
QuadForm qf_rescale(const QuadForm& Q, const Rational& t1, const Rational& t2);

// (b + sqrt(D)) / (b - sqrt(D)): norm-one, totally positive.  Multiplication
// by it on embedded coordinates coincides with the action of AB.
QuadFieldElem qf_epsilon(const QuadForm& Q);

std::pair<Integer, Integer> qf_apply_A(const QuadForm& Q, const Integer& m,
                                       const Integer& n);
std::pair<Integer, Integer> qf_apply_B(const QuadForm& Q, const Integer& m,
                                       const Integer& n);

}  // namespace itheta
