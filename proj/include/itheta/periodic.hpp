// Doubly periodic rational-valued functions on Z^2, stored sparsely: only
// nonzero values are kept, keyed by (m mod N, n mod N).  All checks and
// transforms iterate over the support; because the reflections A and B are
// involutions, a violation at an unstored zero point is always visible from
// a stored support point, so support-only scans decide global properties.
#pragma once

#include <map>
#include <string>
#include <utility>

#include "itheta/quadform.hpp"
#include "itheta/rational.hpp"

namespace itheta {

struct PeriodicFunction {
  long N = 1;  // period in both arguments
  std::map<std::pair<long, long>, Rational> vals;  // keys in [0,N)^2, no zeros
};

PeriodicFunction pf_new(long N);
void pf_set(PeriodicFunction& f, long m, long n, const Rational& v);
Rational pf_at(const PeriodicFunction& f, long m, long n);
Rational pf_at(const PeriodicFunction& f, const Integer& m, const Integer& n);

struct AdmissibilityReport {
  bool admissible = true;
  long wm = 0, wn = 0;  // witness point when not admissible
  std::string reason;
};

// f(Ax) = f(Bx) = -f(x) for all x in (Z/N)^2, with A, B reduced mod N.
AdmissibilityReport pf_check_admissible(const QuadForm& Q,
                                        const PeriodicFunction& f);
AdmissibilityReport pf_check_admissible_pr(const Integer& p, const Integer& r,
                                           const PeriodicFunction& f);

// Paired cancellation along residue lines: f(m,n0) + f(p n0 - m, n0) = 0 and
// f(m0,n) + f(m0, r m0 - n) = 0, a self-paired point forcing the value 0.
// Agrees with pf_check_admissible on every input.
bool pf_check_line_sums(const QuadForm& Q, const PeriodicFunction& f);

PeriodicFunction pf_negate_arg(const PeriodicFunction& f);  // f(-m,-n)
PeriodicFunction pf_tau(const PeriodicFunction& f);         // f(n,m)

// f composed with tau_t : (m,n) -> (t n, m / t), extended by 0 where tau_t
// leaves Z^2.  Requires c/a = t^2 so that Q(tau_t x) = Q(x).  The result is
// returned with its smallest period (a divisor of N * num(t) * den(t)).
PeriodicFunction pf_tau_t(const QuadForm& Q, const PeriodicFunction& f,
                          const Rational& t);

// Smallest period: rebuilds f at the least divisor of N that is a period.
PeriodicFunction pf_reduce_period(const PeriodicFunction& f);

// Equality as functions Z^2 -> Q, regardless of declared periods.
bool pf_equal_as_functions(const PeriodicFunction& f,
                           const PeriodicFunction& g);

}  // namespace itheta
