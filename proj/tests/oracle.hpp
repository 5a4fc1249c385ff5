// Brute-force reference for the quadrant theta sum.  Deliberately naive:
// one double loop over a generous box, plain rational arithmetic for every
// value of Q, no scaling tricks, no early exits.  Slow but unarguable.
#pragma once

#include <stdexcept>

#include "itheta/periodic.hpp"
#include "itheta/qseries.hpp"
#include "itheta/rational.hpp"

namespace itheta {

// Sum over m, n >= 0 of f(m,n) q^Q(m,n) minus the same sum over m, n < 0,
// truncated at q^M.  Q(m,n) = a m^2 + 2b mn + c n^2.
inline QSeries oracle_quadrant(const Rational& a, const Rational& b,
                               const Rational& c, const PeriodicFunction& f,
                               long M) {
  QSeries out = qs_new(M);
  // On either quadrant all three terms of Q are >= 0, so |m| <= sqrt(M/a)
  // and |n| <= sqrt(M/c) bound every contributing point; pad by 2 anyway.
  long mbox = ceil_sqrt_rational(Rational(M) / a).get_si() + 2;
  long nbox = ceil_sqrt_rational(Rational(M) / c).get_si() + 2;
  for (long m = -mbox; m <= mbox; ++m) {
    for (long n = -nbox; n <= nbox; ++n) {
      bool first = (m >= 0 && n >= 0);
      bool third = (m < 0 && n < 0);
      if (!first && !third) continue;
      Rational v = pf_at(f, m, n);
      if (sign_of(v) == 0) continue;
      Rational qv = a * m * m + 2 * b * m * n + c * n * n;
      if (qv >= M) continue;
      if (!is_integer(qv))
        throw std::logic_error("oracle_quadrant: non-integral exponent " +
                               to_string(qv));
      qs_add_term(out, to_integer(qv).get_si(), first ? v : -v);
    }
  }
  return out;
}

}  // namespace itheta
