#include "itheta/theta.hpp"

#include <atomic>
#include <exception>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "itheta/errors.hpp"

namespace itheta {

namespace {

// Integer-scaled evaluation: with L = lcm of the denominators of a, 2b, c,
// the value L * Q(m,n) = As m^2 + Bs mn + Cs n^2 is an integer, and Q(m,n)
// is an admissible exponent iff L divides it.
struct ScaledEval {
  Integer As, Bs, Cs, L, ML;
};

ScaledEval make_scaled(const Rational& a, const Rational& b, const Rational& c,
                       long M) {
  ScaledEval s;
  Rational b2 = 2 * b;
  s.L = lcm_int(lcm_int(a.get_den(), b2.get_den()), c.get_den());
  s.As = to_integer(a * s.L);
  s.Bs = to_integer(b2 * s.L);
  s.Cs = to_integer(c * s.L);
  s.ML = Integer(M) * s.L;
  return s;
}

// Exponent of q contributed by (m,n), or -1 when it is >= the precision.
long exponent_of(const ScaledEval& s, const Integer& m, const Integer& n) {
  Integer V = s.As * m * m + s.Bs * m * n + s.Cs * n * n;
  if (V >= s.ML) return -1;
  if (V % s.L != 0)
    throw NonIntegralExponent("Q(" + m.get_str() + "," + n.get_str() +
                              ") = " + to_string(Rational(V) / Rational(s.L)));
  return Integer(V / s.L).get_si();
}

void require_admissible(const QuadForm& Q, const PeriodicFunction& f,
                        Admissibility mode) {
  if (mode == Admissibility::Waive) return;
  AdmissibilityReport rep = pf_check_admissible(Q, f);
  if (!rep.admissible) throw AdmissibilityViolation(rep.reason);
}

// Runs row(m, sink) for every m in [m_lo, m_hi], serially or split across
// workers; exact rational accumulation makes the merge order irrelevant.
template <typename Row>
QSeries scan_rows(long m_lo, long m_hi, long M, bool parallel, Row row) {
  QSeries out = qs_new(M);
  if (!parallel) {
    for (long m = m_lo; m <= m_hi; ++m) row(m, out);
    return out;
  }
#ifdef _OPENMP
  std::atomic<bool> failed{false};
  std::exception_ptr err;
#pragma omp parallel
  {
    QSeries local = qs_new(M);
#pragma omp for schedule(dynamic, 4) nowait
    for (long m = m_lo; m <= m_hi; ++m) {
      if (failed.load(std::memory_order_relaxed)) continue;
      try {
        row(m, local);
      } catch (...) {
#pragma omp critical(theta_scan_err)
        {
          if (!failed.exchange(true)) err = std::current_exception();
        }
      }
    }
#pragma omp critical(theta_scan_merge)
    {
      for (const auto& [e, c] : local.terms) qs_add_term(out, e, c);
    }
  }
  if (err) std::rethrow_exception(err);
  return out;
#else
  for (long m = m_lo; m <= m_hi; ++m) row(m, out);
  return out;
#endif
}

QSeries quadrant_scan(const Rational& a, const Rational& b, const Rational& c,
                      const PeriodicFunction& f, long M, bool parallel) {
  ScaledEval s = make_scaled(a, b, c, M);
  // For m, n >= 0 every term of Q is >= 0, so a m^2 < M and c n^2 < M bound
  // the scan; the inner value is strictly increasing in n, allowing a break.
  long mmax = ceil_sqrt_rational(Rational(M) / a).get_si();
  long nmax = ceil_sqrt_rational(Rational(M) / c).get_si();
  auto row = [&](long m, QSeries& sink) {
    for (long n = 0; n <= nmax; ++n) {
      Integer V = s.As * m * m + s.Bs * m * n + s.Cs * n * n;  // = L Q(m,n)
      if (V >= s.ML) break;  // strictly increasing in n on this quadrant
      // Q(-m,-n) = Q(m,n): the (m<0, n<0) quadrant is scanned in the same
      // pass as (-m,-n) with its contribution subtracted.
      Rational v = pf_at(f, m, n);
      Rational w = (m >= 1 && n >= 1) ? pf_at(f, -m, -n) : Rational(0);
      if (sign_of(v) == 0 && sign_of(w) == 0) continue;
      if (V % s.L != 0)
        throw NonIntegralExponent(
            "Q(" + std::to_string(m) + "," + std::to_string(n) + ") = " +
            to_string(Rational(V) / Rational(s.L)));
      long e = Integer(V / s.L).get_si();
      if (sign_of(v) != 0) qs_add_term(sink, e, v);
      if (sign_of(w) != 0) qs_add_term(sink, e, -w);
    }
  };
  return scan_rows(0, mmax, M, parallel, row);
}

QSeries sector_scan(const QuadForm& Q, const PeriodicFunction& f, long M,
                    bool parallel) {
  ScaledEval s = make_scaled(Q.a, Q.b, Q.c, M);
  const Rational &b = Q.b, &c = Q.c, &D = Q.D;
  // Positive sector <b-sqrt(D), b+sqrt(D)]: edge at b+sqrt(D) closed.
  ConeSector pos = sector_make(qfe_make(b, Rational(-1), D),
                               qfe_make(b, Rational(1), D), false, true);
  // Negative sector [-b+sqrt(D), -b-sqrt(D)>: edge at -b+sqrt(D) closed.
  ConeSector neg = sector_make(qfe_make(-b, Rational(1), D),
                               qfe_make(-b, Rational(-1), D), true, false);
  // Any contributing z = x + m sqrt(D) has |Nm(z)| < cM and component ratio
  // at most rho = (b+sqrt(D))^2/(ac), so both embeddings are bounded by
  // B1 = sqrt(rho c M); their difference 2m sqrt(D) stays below B1 because
  // they share a sign, and x lies in (|m| sqrt(D), B1 - |m| sqrt(D)] or the
  // mirror.  The rational brackets below only widen the box; exact sector
  // membership and the exponent filter decide each candidate.
  Rational lo = sqrt_lower(D);
  Rational up = sqrt_upper(D);
  Rational rho_up = (b * b + D + 2 * b * up) / (Q.a * c);
  Rational B_up = sqrt_upper(c * M * rho_up);
  long mmax = floor_int(B_up / (2 * lo)).get_si();
  auto probe = [&](long m, long n, QSeries& sink) {
    Rational v = pf_at(f, m, n);
    if (sign_of(v) <= 0) return;  // value layers: only f > 0 contributes
    QuadFieldElem z = qfe_make(b * m + c * n, Rational(m), D);
    if (sector_contains(pos, z)) {
      long e = exponent_of(s, m, n);
      if (e >= 0) qs_add_term(sink, e, v);
    } else if (sector_contains(neg, z)) {
      long e = exponent_of(s, m, n);
      if (e >= 0) qs_add_term(sink, e, -v);
    }
  };
  auto row = [&](long m, QSeries& sink) {
    Rational gap = Rational(m < 0 ? -m : m) * lo;
    Rational bm = b * m;
    // x = bm + cn in (gap, B_up - gap] for the positive sector's box
    long n1 = floor_int((gap - bm) / c).get_si() + 1;
    long n2 = floor_int((B_up - gap - bm) / c).get_si();
    for (long n = n1; n <= n2; ++n) probe(m, n, sink);
    // and in [-(B_up - gap), -gap) for the mirror
    long n3 = ceil_int((gap - B_up - bm) / c).get_si();
    long n4 = ceil_int((-gap - bm) / c).get_si() - 1;
    for (long n = n3; n <= n4; ++n) probe(m, n, sink);
  };
  return scan_rows(-mmax, mmax, M, parallel, row);
}

bool openmp_enabled() {
#ifdef _OPENMP
  return true;
#else
  return false;
#endif
}

}  // namespace

QSeries theta_quadrant(const QuadForm& Q, const PeriodicFunction& f, long M,
                       Admissibility mode) {
  require_admissible(Q, f, mode);
  return quadrant_scan(Q.a, Q.b, Q.c, f, M, openmp_enabled());
}

QSeries theta_quadrant_serial(const QuadForm& Q, const PeriodicFunction& f,
                              long M, Admissibility mode) {
  require_admissible(Q, f, mode);
  return quadrant_scan(Q.a, Q.b, Q.c, f, M, false);
}

QSeries theta_sector(const QuadForm& Q, const PeriodicFunction& f, long M,
                     Admissibility mode) {
  require_admissible(Q, f, mode);
  return sector_scan(Q, f, M, openmp_enabled());
}

QSeries theta_sector_serial(const QuadForm& Q, const PeriodicFunction& f,
                            long M, Admissibility mode) {
  require_admissible(Q, f, mode);
  return sector_scan(Q, f, M, false);
}

QSeries theta_quadrant_raw(const Rational& a, const Rational& b,
                           const Rational& c, const PeriodicFunction& f,
                           long M) {
  if (sign_of(a) <= 0 || sign_of(b) <= 0 || sign_of(c) <= 0)
    throw NotPositiveCoefficients("a = " + to_string(a) + ", b = " +
                                  to_string(b) + ", c = " + to_string(c));
  if (sign_of(b * b - a * c) <= 0)
    throw NotIndefinite("b^2 - ac = " + to_string(b * b - a * c));
  return quadrant_scan(a, b, c, f, M, openmp_enabled());
}

bool verify_main_identity(const QuadForm& Q, const PeriodicFunction& f, long M,
                          Admissibility mode, long* first_diff) {
  QSeries quad = theta_quadrant(Q, f, M, mode);
  QSeries sect = theta_sector(Q, f, M, mode);
  if (qs_eq(quad, sect)) return true;
  if (first_diff) {
    for (long e = 0; e < M; ++e) {
      if (qs_coeff(quad, e) != qs_coeff(sect, e)) {
        *first_diff = e;
        break;
      }
    }
  }
  return false;
}

}  // namespace itheta
