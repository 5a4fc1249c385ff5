// The theta series of (Q, f), computed two independent ways:
//   quadrant:  sum_{m,n >= 0} f(m,n) q^Q(m,n)  -  sum_{m<0, n<0} f(m,n) q^Q(m,n)
//   sector:    embedded lattice points in <b-sqrt(D), b+sqrt(D)] count
//              positively, points in [-b+sqrt(D), -b-sqrt(D)> negatively;
//              only points with f > 0 enter, each weighted by its value
//              (the value layers f = sum_w w (1_{f=w} - 1_{f=-w}) reduce the
//              general rational case to the +-1 case).
// Their equality on admissible f is the computational content of the main
// quadrant/sector identity and is checked by verify_main_identity.
#pragma once

#include "itheta/periodic.hpp"
#include "itheta/qseries.hpp"
#include "itheta/quadform.hpp"

namespace itheta {

enum class Admissibility { Require, Waive };

QSeries theta_quadrant(const QuadForm& Q, const PeriodicFunction& f, long M,
                       Admissibility mode = Admissibility::Require);
QSeries theta_sector(const QuadForm& Q, const PeriodicFunction& f, long M,
                     Admissibility mode = Admissibility::Require);

// Serial reference scans: same enumeration, no worker split.  The parallel
// entry points above must agree with these exactly.
QSeries theta_quadrant_serial(const QuadForm& Q, const PeriodicFunction& f,
                              long M,
                              Admissibility mode = Admissibility::Require);
QSeries theta_sector_serial(const QuadForm& Q, const PeriodicFunction& f,
                            long M,
                            Admissibility mode = Admissibility::Require);

// Quadrant sum for a raw coefficient triple (all positive, b^2 > ac) that
// need not satisfy the reflection-integrality invariants; no admissibility
// check.  Used by the lattice round-trip verifier.
QSeries theta_quadrant_raw(const Rational& a, const Rational& b,
                           const Rational& c, const PeriodicFunction& f,
                           long M);

// True iff the two computations agree below M.  On mismatch, *first_diff
// (when non-null) receives the smallest differing exponent.
bool verify_main_identity(const QuadForm& Q, const PeriodicFunction& f, long M,
                          Admissibility mode = Admissibility::Require,
                          long* first_diff = nullptr);

}  // namespace itheta
